"""Named identity checks with a uniform outcome.

Each verifier yields comparisons ``(label, lhs, rhs)``; sides are Elements,
TensorOps, LocalElements or plain values.  Relations of the form
sum_k t_k = 0 are split as t_0 versus -(t_1 + ...), so that every check has
a coefficient that a negative control can perturb.
"""

import time
from dataclasses import dataclass, field
from itertools import combinations, permutations

from . import identities as ids
from . import matrix_algebra as ma
from . import ncalg
from . import pfaffian as pfm
from . import sklyanin as sk
from . import tensorops as to
from .ncalg import Element, LocalElement, make_presentation
from .scalars import ONE, Scalar, q


class VerifierError(ValueError):
    pass


@dataclass
class Outcome:
    name: str
    case: str
    N: int
    params: dict
    holds: bool
    terms: int
    elapsed_ms: int
    notes: list = field(default_factory=list)
    failures: list = field(default_factory=list)

    def report(self):
        return {"identity": self.name, "case": self.case, "N": self.N, "params": self.params,
                "holds": self.holds, "terms": self.terms, "elapsed_ms": self.elapsed_ms,
                "notes": list(self.notes)}


# --- side helpers -----------------------------------------------------------------


def _split_quadratic(tpl, entry, pres, bar=False, raw=False):
    """t_0 and -(rest) for a quadratic template; ``raw`` keeps words unreduced."""
    def term(c, a, b):
        c = c.bar() if bar else c
        ea, eb = entry(*a), entry(*b)
        if raw:
            out = {}
            for wa, ca in ea.terms.items():
                for wb, cb in eb.terms.items():
                    out[wa + wb] = out.get(wa + wb, Scalar()) + c * ca * cb
            return Element.raw(pres, out)
        return (ea * eb).scale(c)

    parts = [term(*t) for t in tpl]
    rest = pres.zero()
    for p in parts[1:]:
        rest = rest - p
    return parts[0], rest


def _split_linear(tpl, entry, pres, bar=False):
    parts = [entry(*a).scale(c.bar() if bar else c) for c, a in tpl]
    rest = pres.zero()
    for p in parts[1:]:
        rest = rest - p
    return parts[0], rest


def _relations(label, case, N, entry, pres, bar=False, raw=False, symmetry=True):
    for name, tpl in ncalg.reflection_templates(case, N):
        yield (f"{label}: {name}",) + _split_quadratic(tpl, entry, pres, bar, raw)
    if symmetry:
        for name, tpl in ncalg.symmetry_templates(case, N):
            yield (f"{label}: {name}",) + _split_linear(tpl, entry, pres, bar)


def _matrix_entries(lhs, rhs, label):
    """Entrywise comparisons of two matrices given as dicts."""
    for key in sorted(set(lhs) | set(rhs)):
        yield f"{label}{list(key)}", lhs[key], rhs[key]


def _all_subsets(N, even=False):
    return [I for r in range(N + 1) for I in combinations(range(1, N + 1), r)
            if not even or r % 2 == 0]


def _parse_set(value):
    if value is None:
        return None
    if isinstance(value, str):
        return tuple(int(x) for x in value.replace(" ", "").split(",") if x)
    return tuple(value)


# --- operator layer ------------------------------------------------------------------


def v_basic_r(case, N, p):
    I2 = to.TensorOp.identity(N, 2)
    yield "R R^- = 1", to.r_matrix(N) @ to.r_minus(N), I2
    yield "R^{t1 t2} = R^+", to.r_t1(N).partial_transpose(2), to.r_plus(N)
    for m in range(2, min(N, 3) + 1):
        A = to.antisymmetrizer(N, m)
        yield f"A_{m}^2 = A_{m}", A @ A, A
        yield f"A_{m} recursion", to.antisymmetrizer_recursive(N, m), A
    S = to.symmetrizer(N, 2)
    yield "S_2^2 = S_2", S @ S, S


def _lm():
    return Scalar.var("l"), Scalar.var("m")


def v_ybe(case, N, p):
    l, m = _lm()

    def R(lam, i, j):
        return to.r_spectral(N, lam).embed(3, (i, j))

    yield "R12(l/m) R13(l) R23(m)", R(l / m, 1, 2) @ R(l, 1, 3) @ R(m, 2, 3), \
        R(m, 2, 3) @ R(l, 1, 3) @ R(l / m, 1, 2)


def v_braid(case, N, p):
    l, m = _lm()

    def H(lam, i, j):
        return to.r_hat(N, lam).embed(3, (i, j))

    yield "Rhat braid", H(l / m, 1, 2) @ H(l, 2, 3) @ H(m, 1, 2), H(m, 2, 3) @ H(l, 1, 2) @ H(l / m, 2, 3)


def v_rtt(case, N, p):
    pres = make_presentation(case, N)
    if case == "Ext":
        y = pres.y
        for i, j in combinations(range(1, N + 1), 2):
            yield f"y_{j} y_{i} = -q y_{i} y_{j}", Element.raw(pres, {(j - 1, i - 1): ONE}), \
                (y(i) * y(j)).scale(-q)
        for i in range(1, N + 1):
            yield f"y_{i}^2 = 0", Element.raw(pres, {(i - 1, i - 1): ONE}), pres.zero()
        return
    T = pres.matrix("t")
    for name, tpl in ncalg.rtt_templates(N):
        yield (f"template: {name}",) + _split_quadratic(tpl, lambda i, j: T[(i, j)], pres, raw=True)
    R = to.r_matrix(N)
    T1, T2 = to.matrix_op(T).embed(2, (1,)), to.matrix_op(T).embed(2, (2,))
    yield "R T1 T2 = T2 T1 R", R @ T1 @ T2, T2 @ T1 @ R


def v_reflection(case, N, p):
    pres = make_presentation(case, N)
    X = pres.matrix("x")
    yield from _relations("listed", case, N, lambda i, j: X[(i, j)], pres, raw=True)
    for name, tpl in ncalg.reflection_delta_templates(N):
        yield (f"uniform {name}",) + _split_quadratic(tpl, lambda i, j: X[(i, j)], pres, raw=True)
    R, Rt = to.r_matrix(N), to.r_t1(N)
    X1, X2 = to.matrix_op(X).embed(2, (1,)), to.matrix_op(X).embed(2, (2,))
    yield "R X1 R^t X2 = X2 R^t X1 R", R @ X1 @ Rt @ X2, X2 @ Rt @ X1 @ R
    J = to.j_matrix(N, case)
    J1, J2 = J.embed(2, (1,)), J.embed(2, (2,))
    yield "J(a) solves the reflection equation", R @ J1 @ Rt @ J2, J2 @ Rt @ J1 @ R
    B = to.bracket(X, m=2)
    H = to.r_hat(N, _lm()[0])
    yield "Rhat(l) <X1 X2> = <X1 X2> Rhat(l)", H @ B, B @ H


# --- embedding ----------------------------------------------------------------------


def _a(case, N, p):
    return ma.default_a(N, case, p.get("symbolic", False))


def v_embedding(case, N, p):
    a = _a(case, N, p)
    mat = make_presentation("Mat", N)
    cache = {}

    def entry(i, j):
        if (i, j) not in cache:
            cache[(i, j)] = ma.phi_generator(case, N, i, j, a, mat)
        return cache[(i, j)]

    yield from _relations("phi", case, N, entry, mat)
    degree = p.get("degree", 3)
    for d, (rank, count) in ma.phi_independence(case, N, degree, p.get("symbolic", False)).items():
        yield f"rank of phi on degree-{d} monomials", rank, count


def v_coideal(case, N, p):
    a = _a(case, N, p)
    mat = make_presentation("Mat", N)
    two = make_presentation("Mat2", N)
    xv = {}

    def v(r, s):
        if (r, s) not in xv:
            xv[(r, s)] = ma.phi_generator(case, N, r, s, a, two, "v")
        return xv[(r, s)]

    for i in range(1, N + 1):
        for j in range(i, N + 1):
            lhs = ma.coproduct(ma.phi_generator(case, N, i, j, a, mat))
            rhs = two.zero()
            if case == "O":
                for r in range(1, N + 1):
                    for s in range(1, N + 1):
                        rhs = rhs + two.generator("u", i, r) * two.generator("u", j, s) * v(r, s)
            else:
                for r, s in combinations(range(1, N + 1), 2):
                    rhs = rhs + ma.quantum_minor((i, j), (r, s), N, two, "u") * v(r, s)
            yield f"Delta phi(x_{i}{j})", lhs, rhs


def _gamma(case, N, a):
    g = ONE
    if case == "O":
        for x in a:
            g = g * x
        return g
    for x in a:
        g = g * x * x
    return g * q ** (3 * (N // 2))


def v_sdet_det2(case, N, p):
    a = _a(case, N, p)
    yield "phi(sdet) = gamma det^2", ma.phi_embed(sk.sdet(case, N), a), \
        (ma.det_q(N) ** 2).scale(_gamma(case, N, a))


def v_sdet_explicit(case, N, p):
    yield "explicit permutation sum", sk.sdet_explicit(case, N), sk.sdet(case, N)


# --- Sklyanin comatrix, Y, omega ------------------------------------------------------


def v_comatrix(case, N, p):
    X = sk.generator_matrix(case, N)
    H = sk.comatrix(case, N)
    d = sk.sdet(case, N)
    zero = d.pres.zero()
    rng = range(1, N + 1)
    for i in rng:
        for k in rng:
            target = d if i == k else zero
            yield f"(Xhat X)[{i},{k}]", sum((H[(i, j)] * X[(j, k)] for j in rng), zero), target
            yield f"(X Xhat)[{i},{k}]", sum((X[(i, j)] * H[(j, k)] for j in rng), zero), target
    for i in rng:
        rest = tuple(j for j in rng if j != i)
        yield f"Xhat[{i},{i}] is the complementary minor", H[(i, i)], sk.principal_sdet(X, rest)
    for m in range(2, N + 1):
        for I, J, c, kind in sk.aux_expansion_cases(N, m):
            val = sk.aux_minor(X, I, J, c)
            if kind == "vanishing":
                yield f"aux{I}{J}{c} vanishes", val, zero
            else:
                cands = sk.aux_expansion_terms(X, I, J, c)
                yield f"aux{I}{J}{c} expansion", val, cands["detailed"]
                yield f"aux{I}{J}{c} signed sum", val, cands[sk.AUX_BRANCH[case]]


def v_y_relations(case, N, p):
    Ynum, d = sk.y_numerators(case, N)
    yield from _relations("Y (q^-1)", case, N, lambda i, j: Ynum[(i, j)], d.pres, bar=True)


def v_omega(case, N, p):
    Ynum, d = sk.y_numerators(case, N)
    pres = d.pres
    yield from _relations("omega(X)", case, N,
                          lambda i, j: Ynum[(N + 1 - i, N + 1 - j)], pres)
    c = sk.omega_of_sdet(case, N)
    yield "omega(sdet) sdet is a scalar", c is not None, True
    if c is None:
        return
    yield "omega(sdet) sdet^(N-1)", sk.omega_numerator(d), (d ** (N - 1)).scale(c)
    for g in pres.gens:
        i, j = N + 1 - g.row, N + 1 - g.col
        yield f"omega^2(x_{g.row}{g.col})", sk.omega_numerator(Ynum[(i, j)]), \
            (d ** (N - 2) * pres.generator("x", g.row, g.col)).scale(c)


def v_jacobi(kind):
    def run(case, N, p):
        I = _parse_set(p.get("I"))
        sets = [I] if I is not None else _all_subsets(N, even=(kind == "pf"))
        for S in sets:
            yield (f"I={list(S)}",) + ids.jacobi_terms(kind, case, N, S)
    return run


# --- meta identities ----------------------------------------------------------------


def _descriptor_sides(d):
    terms = ids.cleared_terms(d)
    rest = terms[0].pres.zero()
    for t in terms[1:]:
        rest = rest - t
    return terms[0], rest


def _catalog(p):
    kinds = [p["kind"]] if p.get("kind") else list(ids.KINDS)
    if p.get("catalog"):
        return [d for d in ids.load_catalog(p["catalog"]) if d.kind in kinds]
    return [d for k in kinds for d in ids.seed_catalog(k)]


def v_cayley(case, N, p):
    for d in _catalog(p):
        yield (f"seed {d}",) + _descriptor_sides(d)
        c = ids.cayley_transform(d)
        yield (f"complement {c}",) + _descriptor_sides(c)
        yield f"double complement of {d}", ids.cayley_is_involution(d), True


def v_muir_law(case, N, p):
    cap = p.get("max_N", 6)
    for d in _catalog(p):
        J = ids.muir_border(d)
        if J[-1] > cap:
            continue
        m = ids.muir_law_transform(d, J)
        yield (f"bordered {m}",) + _descriptor_sides(m)


def v_muir_trace(case, N, p):
    ks = [p["k"]] if p.get("k") else list(range(1, min(N, 3) + 1))
    for k in ks:
        sums = ids.muir_trace_terms(case, N, k)
        for label, parts in zip(("S_r A'", "A_r S'"), sums):
            rest = parts[0].pres.zero()
            for t in parts[1:]:
                rest = rest - t
            yield f"k={k} {label}", parts[0], rest


def v_sylvester(kind):
    def run(case, N, p):
        if kind == "pf":
            n, m = int(p.get("n", 1)), int(p.get("m", 1))
            small, border = 2 * n, 2 * m
            case = "Sp"
        else:
            small, border = N, int(p.get("M", 2))
        Xt, J = ids.sylvester_matrix(kind, case, small, border, p.get("border", "trailing"))
        small_case = "Sp" if kind == "pf" else case
        zero = make_presentation(case, small + border).zero()
        yield from _relations("bordered", small_case, small, lambda i, j: Xt[(i, j)],
                              next(iter(Xt.values())).pres if Xt else zero.pres)
        _, lhs, rhs = ids.sylvester_terms(kind, case, small, border, p.get("border", "trailing"),
                                          p.get("exponent", "degree"))
        yield "determinant of the bordered matrix", lhs, rhs
    return run


def v_gp(case, N, p):
    conv = p.get("convention", "proof")
    pairs = [(int(p["n"]), int(p["m"]))] if p.get("n") else \
        [(n, m) for n in (1, 3, 5) for m in (1, 3, 5) if n + m <= p.get("max_N", 6)]
    for n, m in pairs:
        yield (f"n={n} m={m} ({conv})",) + ids.gp_terms(n, m, conv)


# --- Pfaffians ------------------------------------------------------------------------


def v_pf_orth(case, N, p):
    A = pfm.symplectic_matrix(N)
    C = pfm.pf_comatrix(N)
    P = pfm.pf(N)
    zero = P.pres.zero()
    rng = range(1, N + 1)
    for i in rng:
        for k in rng:
            target = P if i == k else zero
            yield f"(X X*)[{i},{k}]", sum((A[(i, j)] * C[(j, k)] for j in rng), zero), target
            yield f"(X* X)[{k},{i}]", sum((C[(k, j)] * A[(j, i)] for j in rng), zero), target


def v_pf_shuffle_def(case, N, p):
    A = pfm.symplectic_matrix(N)
    size = p.get("size")
    sizes = [int(size)] if size else [s for s in range(2, N + 1, 2) if s <= 4 or N <= 4]
    for s in sizes:
        for I in combinations(range(1, N + 1), s):
            yield f"I={list(I)}", pfm.pf_definition(A, I), pfm.pf_shuffle(A, I)
    for s in sizes:
        for I in combinations(range(1, N + 1), s):
            yield f"first-row I={list(I)}", pfm.pf_laplace(A, I), pfm.pf_shuffle(A, I)


def v_plucker(case, N, p):
    A = pfm.symplectic_matrix(N)
    for i, j, k, l in combinations(range(1, N + 1), 4):
        lhs = A[(i, j)] * A[(k, l)] + (A[(i, k)] * A[(j, l)]).scale(-q) \
            + (A[(i, l)] * A[(j, k)]).scale(q**2)
        rhs = A[(k, l)] * A[(i, j)] + (A[(j, l)] * A[(i, k)]).scale(-q.inverse()) \
            + (A[(j, k)] * A[(i, l)]).scale(q**-2)
        yield f"({i}{j}{k}{l})", lhs, rhs


def v_omega_power(case, N, p):
    from .scalars import q_factorial

    n = N // 2
    yield "Omega^n top coefficient", pfm.omega_power(N), \
        pfm.pf(N).scale((1 + q**2) ** n * q_factorial(n, q**4))


def v_sdet_pf(case, N, p):
    n = N // 2
    P = pfm.pf(N)
    yield "sdet = q^{3n} Pf^2", sk.sdet("Sp", N), (P * P).scale(q ** (3 * n))
    a = ma.default_a(N, "Sp", p.get("symbolic", False))
    g = ONE
    for x in a:
        g = g * x
    yield "phi(Pf) = a_1...a_n det", ma.phi_embed(P, a), ma.det_q(N).scale(g)


def _center(element, label, top=3):
    pres = element.pres
    for k, g in enumerate(pres.generator_elements()):
        yield f"{label} commutes with {ncalg.gen_str(pres.gens[k])}", g * element, element * g
    yield f"{label} powers up to {top} independent", _powers_independent(element, top), True


def _powers_independent(e, top):
    leads = set()
    power = e.pres.one()
    for _ in range(top + 1):
        leads.add(power.sorted_terms()[-1][0])
        power = power * e
    return len(leads) == top + 1


def v_center_sdet(case, N, p):
    yield from _center(sk.sdet(case, N), "sdet")


def v_center_pf(case, N, p):
    yield from _center(pfm.pf(N), "Pf")


def v_quasidet(kind):
    def run(case, N, p):
        sigma = _parse_set(p.get("sigma"))
        if sigma is not None:
            orders = [sigma]
        elif kind == "pf":
            orders = ids.valid_pf_orders(N)
        else:
            orders = list(permutations(range(1, N + 1)))
        for s in orders:
            validated, commuting, lhs, rhs = ids.quasidet_terms(kind, case, N, s)
            yield f"sigma={list(s)} cofactor route", validated, True
            yield f"sigma={list(s)} factors commute", commuting, True
            yield f"sigma={list(s)} telescoping", lhs, rhs
    return run


# --- registry ------------------------------------------------------------------------


@dataclass(frozen=True)
class Verifier:
    func: object
    cases: tuple
    default_N: int
    notes: tuple = ()


NOTE_PI = "explicit sdet formula: pi_2 is the identity (the leftover slot takes the unused value)"
NOTE_AUX = "auxiliary signed sum: O uses leading +, exponent r-1; Sp uses leading -, exponent r+1"
NOTE_GP = "Grassmann-Pluecker: exponent j-n-1 holds; the j-n reading fails already at n=m=1"
NOTE_SYL = "Sylvester: bordering set J={N+1..N+M} used for x~ and for sdet(X_J)"
NOTE_SYLPF = "Pfaffian Sylvester: exponent n-1 on Pf(X_J) (forced by degree); m-1 kept as an option"
NOTE_OMEGA = "omega(sdet) = c / sdet with c = 1 (O) and c = q^(2N) (Sp)"

REGISTRY = {
    "rtt": Verifier(v_rtt, ("Mat", "Ext"), 2),
    "reflection": Verifier(v_reflection, ("O", "Sp"), 2),
    "basic-r": Verifier(v_basic_r, ("Mat",), 2),
    "ybe": Verifier(v_ybe, ("Mat",), 2),
    "braid": Verifier(v_braid, ("Mat",), 2),
    "embedding": Verifier(v_embedding, ("O", "Sp"), 2),
    "coideal": Verifier(v_coideal, ("O", "Sp"), 2),
    "sdet-det2": Verifier(v_sdet_det2, ("O", "Sp"), 2),
    "sdet-explicit": Verifier(v_sdet_explicit, ("O", "Sp"), 2, (NOTE_PI,)),
    "comatrix": Verifier(v_comatrix, ("O", "Sp"), 2, (NOTE_AUX,)),
    "y-relations": Verifier(v_y_relations, ("O", "Sp"), 2),
    "omega": Verifier(v_omega, ("O", "Sp"), 2, (NOTE_OMEGA,)),
    "jacobi-sdet": Verifier(v_jacobi("sdet"), ("O", "Sp"), 3),
    "jacobi-pf": Verifier(v_jacobi("pf"), ("Sp",), 4),
    "cayley": Verifier(v_cayley, ("O", "Sp"), 4),
    "muir-law": Verifier(v_muir_law, ("O", "Sp"), 4),
    "muir-trace": Verifier(v_muir_trace, ("O", "Sp"), 2),
    "sylvester-sdet": Verifier(v_sylvester("sdet"), ("O", "Sp"), 2, (NOTE_SYL,)),
    "sylvester-pf": Verifier(v_sylvester("pf"), ("Sp",), 2, (NOTE_SYLPF,)),
    "gp": Verifier(v_gp, ("Sp",), 2, (NOTE_GP,)),
    "pf-orthogonality": Verifier(v_pf_orth, ("Sp",), 4),
    "pf-shuffle-vs-def": Verifier(v_pf_shuffle_def, ("Sp",), 4),
    "plucker": Verifier(v_plucker, ("Sp",), 4),
    "omega-power": Verifier(v_omega_power, ("Sp",), 4),
    "sdet-pf": Verifier(v_sdet_pf, ("Sp",), 4),
    "center-sdet": Verifier(v_center_sdet, ("O", "Sp"), 2),
    "center-pf": Verifier(v_center_pf, ("Sp",), 4),
    "quasidet-sdet": Verifier(v_quasidet("sdet"), ("O",), 3),
    "quasidet-pf": Verifier(v_quasidet("pf"), ("Sp",), 4),
}

NAMES = tuple(REGISTRY)


# --- running -------------------------------------------------------------------------


def _perturb_element(e):
    if isinstance(e, LocalElement):
        return LocalElement(_perturb_element(e.num), e.power, e.denom)
    if isinstance(e, to.TensorOp):
        for (row, col), c in sorted(e.entries(), key=lambda kv: kv[0]):
            if not to._is_zero(c):
                cols = {v: dict(img) for v, img in e.cols.items()}
                cols[col][row] = _perturb_element(c)
                return to.TensorOp(e.N, e.m, cols)
        return None
    if isinstance(e, Element):
        if not e.terms:
            return None
        w = min(e.terms)
        terms = dict(e.terms)
        terms[w] = terms[w] * q
        return Element.raw(e.pres, terms)
    if isinstance(e, Scalar):
        return e * q if not e.is_zero() else None
    return None


def perturb_comparison(lhs, rhs):
    """Multiply one coefficient of lhs (or of rhs) by q; None if neither side has one."""
    new = _perturb_element(lhs)
    if new is not None:
        return new, rhs
    new = _perturb_element(rhs)
    if new is not None:
        return lhs, new
    return None


def _diff_terms(lhs, rhs):
    if isinstance(lhs, LocalElement) or isinstance(rhs, LocalElement):
        return 0 if lhs == rhs else 1
    if isinstance(lhs, to.TensorOp):
        return sum(len(c._nf().terms) if isinstance(c, Element) else (0 if to._is_zero(c) else 1)
                   for _, c in (lhs - rhs).entries())
    if isinstance(lhs, Element) or isinstance(rhs, Element):
        d = lhs - rhs if isinstance(lhs, Element) else -(rhs - lhs)
        return len(d._nf().terms)
    return 0 if lhs == rhs else 1


def resolve(name, case=None, N=None):
    if name not in REGISTRY:
        raise VerifierError(f"unknown identity {name!r}; choose from {', '.join(NAMES)}")
    v = REGISTRY[name]
    case = case or v.cases[0]
    if case not in v.cases:
        raise VerifierError(f"{name} is defined for case {'/'.join(v.cases)}, not {case}")
    N = int(N or v.default_N)
    if case == "Sp" and N % 2:
        raise VerifierError("symplectic checks need even N")
    return v, case, N


def run_verifier(name, case=None, N=None, params=None, perturb=False):
    """Run one named check; with ``perturb`` the first perturbable comparison is corrupted."""
    v, case, N = resolve(name, case, N)
    params = dict(params or {})
    start = time.perf_counter()
    holds, terms, failures, done = True, 0, [], not perturb
    notes = list(v.notes)
    for label, lhs, rhs in v.func(case, N, params):
        if not done:
            pert = perturb_comparison(lhs, rhs)
            if pert is not None:
                lhs, rhs = pert
                notes.append(f"perturbed: {label}")
                done = True
        ok = lhs == rhs
        terms += _diff_terms(lhs, rhs) if not ok else 0
        if not ok:
            holds = False
            failures.append(label)
    if perturb and not done:
        raise VerifierError(f"{name}: nothing to perturb")
    elapsed = int((time.perf_counter() - start) * 1000)
    return Outcome(name, case, N, params, holds, terms, elapsed, notes, failures)
