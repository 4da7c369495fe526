"""Quantum minors of A_q(Mat_N), the coproduct, and the embedding of the
reflection algebras into A_q(Mat_N)."""

from itertools import combinations, permutations

from .ncalg import (
    PresentationError,
    evaluate_quadratic,
    is_central,
    make_presentation,
    normal_form,
    reflection_templates,
    substitute,
    symmetry_templates,
)
from .scalars import ONE, Scalar, a_var, mqpow
from .tensorops import inversions


class IndexSet(tuple):
    """Strictly increasing tuple of 1-based indices."""

    def __new__(cls, items, N=None):
        items = tuple(int(i) for i in items)
        if any(b <= a for a, b in zip(items, items[1:])):
            raise ValueError(f"index set must be strictly increasing: {items}")
        if items and (items[0] < 1 or (N is not None and items[-1] > N)):
            raise ValueError(f"index out of range: {items}")
        return super().__new__(cls, items)

    def complement(self, N):
        return IndexSet(i for i in range(1, N + 1) if i not in self)


def _mat(N, pres=None):
    return pres or make_presentation("Mat", N)


def quantum_minor(I, J, N=None, pres=None, family="t", columns_first=False):
    """xi^I_J as a sum over S_r.

    Rows and columns are taken in the given order (so a permuted ``I`` is
    allowed); the row-first expansion permutes column indices, the
    column-first one permutes row indices.
    """
    I, J = tuple(I), tuple(J)
    if len(I) != len(J):
        raise ValueError("row and column sets must have the same size")
    N = N or max(I + J + (1,))
    pres = _mat(N, pres)
    total = pres.zero()
    for sigma in permutations(range(len(I))):
        if columns_first:
            word = [pres.generator(family, I[s], J[k]) for k, s in enumerate(sigma)]
        else:
            word = [pres.generator(family, I[k], J[s]) for k, s in enumerate(sigma)]
        term = pres.one()
        for g in word:
            term = term * g
        total = total + term.scale(mqpow(inversions(sigma)))
    return total


def det_q(N, pres=None, family="t"):
    rng = tuple(range(1, N + 1))
    return quantum_minor(rng, rng, N, pres, family)


# --- coproduct ------------------------------------------------------------------


def coproduct(e):
    """Delta(t_ij) = sum_k u_ik v_kj, extended multiplicatively."""
    N = e.pres.N
    target = make_presentation("Mat2", N)
    images = []
    for g in e.pres.gens:
        images.append(sum((target.generator("u", g.row, k) * target.generator("v", k, g.col)
                           for k in range(2, N + 1)),
                          target.generator("u", g.row, 1) * target.generator("v", 1, g.col)))
    return substitute(e, images, target)


def copy_into(e, family):
    """The image of a MatN element in one tensor factor (family u or v) of Mat2."""
    target = make_presentation("Mat2", e.pres.N)
    return substitute(e, [target.generator(family, g.row, g.col) for g in e.pres.gens], target)


# --- embedding -------------------------------------------------------------------


def default_a(N, case, symbolic=False):
    n = N if case == "O" else N // 2
    if symbolic:
        return [a_var(i) for i in range(1, n + 1)]
    return [ONE] * n


def _check_a(a):
    a = [Scalar.coerce(x) for x in a]
    if any(x.is_zero() for x in a):
        raise ValueError("parameters a_k must be nonzero")
    return a


def phi_generator(case, N, i, j, a, pres=None, family="t"):
    """phi(x_ij) for any i, j (not only the canonical generators)."""
    pres = _mat(N, pres)
    a = _check_a(a)
    total = pres.zero()
    if case == "O":
        for k in range(1, N + 1):
            total = total + (pres.generator(family, i, k) * pres.generator(family, j, k)).scale(a[k - 1])
    else:
        for k in range(1, N // 2 + 1):
            minor = quantum_minor((i, j), (2 * k - 1, 2 * k), N, pres, family)
            total = total + minor.scale(a[k - 1])
    return total


def phi_images(case, N, a, pres=None, family="t"):
    src = make_presentation(case, N)
    return [phi_generator(case, N, g.row, g.col, a, pres, family) for g in src.gens]


def phi_embed(e, a=None):
    case, N = e.pres.case, e.pres.N
    if case not in ("O", "Sp"):
        raise PresentationError("phi is defined on the reflection algebras")
    a = default_a(N, case) if a is None else a
    return substitute(e, phi_images(case, N, a), make_presentation("Mat", N))


def phi_relations_check(case, N, a=None):
    """Every listed defining relation (and symmetry relation) maps to zero."""
    a = default_a(N, case) if a is None else a
    pres = _mat(N)
    cache = {}

    def entry(i, j):
        if (i, j) not in cache:
            cache[(i, j)] = phi_generator(case, N, i, j, a, pres)
        return cache[(i, j)]

    for _, tpl in reflection_templates(case, N):
        if not normal_form(evaluate_quadratic(tpl, entry)).is_zero():
            return False
    for _, tpl in symmetry_templates(case, N):
        total = pres.zero()
        for c, idx in tpl:
            total = total + entry(*idx).scale(c)
        if not total.is_zero():
            return False
    return True


def coideal_check(case, N, a=None):
    """Delta(phi(x_ij)) against the left-coideal expansion, for all i, j."""
    a = default_a(N, case) if a is None else a
    mat = _mat(N)
    two = make_presentation("Mat2", N)
    v_images = {}

    def xv(r, s):
        if (r, s) not in v_images:
            v_images[(r, s)] = phi_generator(case, N, r, s, a, two, "v")
        return v_images[(r, s)]

    for i in range(1, N + 1):
        for j in range(1, N + 1):
            lhs = coproduct(phi_generator(case, N, i, j, a, mat))
            rhs = two.zero()
            if case == "O":
                for r in range(1, N + 1):
                    for s in range(1, N + 1):
                        rhs = rhs + two.generator("u", i, r) * two.generator("u", j, s) * xv(r, s)
            else:
                for r, s in combinations(range(1, N + 1), 2):
                    rhs = rhs + quantum_minor((i, j), (r, s), N, two, "u") * xv(r, s)
            if lhs != rhs:
                return False
    return True


def det_central(N):
    return is_central(det_q(N))


def phi_independence(case, N, degree=3, symbolic=True, seed=0):
    """Rank of the phi-images of PBW monomials, degree by degree.

    Coefficients are specialised at a random rational point; full rank there
    implies full rank over the function field.  Returns {d: (rank, count)}.
    """
    import random
    from fractions import Fraction

    from sympy import QQ
    from sympy.polys.matrices import DomainMatrix

    from .ncalg import basis_enumerate
    from .scalars import VARIABLES

    rng = random.Random(seed)
    point = {v: Fraction(rng.randint(2, 97), rng.randint(2, 97)) for v in VARIABLES}
    point["q"] = Fraction(rng.randint(2, 97), 101)
    src = make_presentation(case, N)
    a = default_a(N, case, symbolic)
    images = phi_images(case, N, a)
    target = make_presentation("Mat", N)
    by_degree = {}
    for mono in basis_enumerate(src, degree):
        (w,) = mono.terms
        by_degree.setdefault(len(w), []).append(substitute(mono, images, target))
    out = {}
    for d, elems in sorted(by_degree.items()):
        words = sorted({w for e in elems for w in e.terms})
        col = {w: k for k, w in enumerate(words)}
        rows = []
        for e in elems:
            row = [QQ(0)] * len(words)
            for w, c in e.terms.items():
                v = c.evaluate(point)
                row[col[w]] = QQ(v.numerator, v.denominator)
            rows.append(row)
        M = DomainMatrix(rows, (len(rows), len(words)), QQ) if words else None
        out[d] = (M.rank() if M is not None else 0, len(elems))
    return out
