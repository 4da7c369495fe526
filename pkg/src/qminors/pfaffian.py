"""Quantum Pfaffians of q-antisymmetric matrices and the symplectic
reflection algebra: definition by a full permutation sum, the 2-shuffle and
first-row expansions, cofactors, the exterior-algebra generating element and
the link with the Sklyanin determinant."""

from itertools import combinations, permutations

from .matrix_algebra import default_a, det_q, phi_embed
from .ncalg import Presentation, canonicalize_generator, is_central, make_presentation
from .scalars import ONE, mqpow, q, q_factorial
from .sklyanin import explicit_sum, sdet
from .tensorops import inversions


class PfaffianError(ArithmeticError):
    pass


def shuffles(items):
    """Perfect matchings of ``items`` as 2-shuffle sequences (i1, j1, i2, j2, ...)."""
    items = tuple(items)
    if not items:
        yield ()
        return
    first = items[0]
    for k in range(1, len(items)):
        rest = items[1:k] + items[k + 1:]
        for tail in shuffles(rest):
            yield (first, items[k]) + tail


def symplectic_matrix(N, pres=None):
    pres = pres or make_presentation("Sp", N)
    return {(i, j): canonicalize_generator(pres, "x", i, j)
            for i in range(1, N + 1) for j in range(1, N + 1)}


def _sorted_index(I):
    I = tuple(I)
    if any(b <= a for a, b in zip(I, I[1:])):
        raise ValueError(f"Pfaffian index sets must be increasing: {I}")
    if len(I) % 2:
        raise ValueError("Pfaffian index sets must have even size")
    return I


def _one(A):
    return next(iter(A.values())).pres.one()


def _sign(n, bar):
    s = mqpow(n)
    return s.bar() if bar else s


def pf_definition(A, I=None, bar=False):
    """Full S_{2r} sum divided by (1+q^2)^r [r]_{q^4}!; the division must be exact.

    ``bar`` gives the q^-1 Pfaffian (every scalar of the formula inverted in q).
    """
    I = _sorted_index(I if I is not None else range(1, max(i for i, _ in A) + 1))
    r = len(I) // 2
    total = _one(A).scale(0) if A else None
    if r == 0:
        return _one(A)
    for sigma in permutations(range(2 * r)):
        term = _one(A)
        for k in range(r):
            term = term * A[(I[sigma[2 * k]], I[sigma[2 * k + 1]])]
        total = total + term.scale(_sign(inversions(sigma), bar))
    norm = (1 + q**2) ** r * q_factorial(r, q**4)
    if bar:
        norm = norm.bar()
    result = total.scale(norm.inverse())
    if not all(c.is_laurent() for c in result._nf().terms.values()):
        raise PfaffianError("inexact division: input is not q-antisymmetric")
    return result


def pf_shuffle(A, I=None, bar=False):
    """sum over 2-shuffles of (-q)^{l} [i1,j1] ... [ir,jr]."""
    I = _sorted_index(I if I is not None else range(1, max(i for i, _ in A) + 1))
    total = None
    for s in shuffles(I):
        term = _one(A)
        for k in range(0, len(s), 2):
            term = term * A[(s[k], s[k + 1])]
        term = term.scale(_sign(inversions(s), bar))
        total = term if total is None else total + term
    return total if total is not None else _one(A)


def pf_laplace(A, I=None):
    """First-row expansion sum_j (-q)^{j-2} [i1, ij] [I without i1, ij]."""
    I = _sorted_index(I if I is not None else range(1, max(i for i, _ in A) + 1))
    if not I:
        return _one(A)
    total = None
    for j in range(1, len(I)):
        rest = I[1:j] + I[j + 1:]
        term = (A[(I[0], I[j])] * pf_laplace(A, rest)).scale(mqpow(j - 1))
        total = term if total is None else total + term
    return total


def pf(N, I=None):
    """Pf_q of the symplectic generator matrix (or of its principal part on I)."""
    A = symplectic_matrix(N)
    return pf_shuffle(A, tuple(range(1, N + 1)) if I is None else I)


def plucker_check(N, pres=None, quadruples=None):
    """The four-index exchange condition for every i<j<k<l (or the given ones)."""
    A = symplectic_matrix(N, pres)
    for i, j, k, l in quadruples or combinations(range(1, N + 1), 4):
        lhs = A[(i, j)] * A[(k, l)] + (A[(i, k)] * A[(j, l)]).scale(-q) \
            + (A[(i, l)] * A[(j, k)]).scale(q**2)
        rhs = A[(k, l)] * A[(i, j)] + (A[(j, l)] * A[(i, k)]).scale(-q.inverse()) \
            + (A[(j, k)] * A[(i, l)]).scale(q**-2)
        if lhs != rhs:
            return False
    return True


def corrupted_presentation(N, scale=None):
    """A copy of the symplectic presentation with one swap rule rescaled."""
    base = make_presentation("Sp", N)
    rules = dict(base.rules)
    key = next(k for k in sorted(rules) if len(rules[k]) > 1) if any(
        len(v) > 1 for v in rules.values()) else sorted(rules)[0]
    c, w = rules[key][0]
    rules[key] = ((c * (scale or q**2), w),) + tuple(rules[key][1:])
    return Presentation("Sp-corrupted", N, list(base.gens), rules, case="Sp")


def pf_cofactor(i, j, N):
    pres = make_presentation("Sp", N)
    if i == j:
        return pres.zero()
    a, b = min(i, j), max(i, j)
    rest = tuple(k for k in range(1, N + 1) if k not in (a, b))
    bracket = pf(N, rest) if rest else pres.one()
    return bracket.scale(mqpow(i - j) if i < j else mqpow(i - j - 1))


def pf_comatrix(N):
    return {(i, j): pf_cofactor(i, j, N) for i in range(1, N + 1) for j in range(1, N + 1)}


def pf_orthogonality(N, pairs=None):
    A = symplectic_matrix(N)
    C = pf_comatrix(N)
    P = pf(N)
    zero = P.pres.zero()
    rng = range(1, N + 1)
    for i, k in pairs or [(i, k) for i in rng for k in rng]:
        target = P if i == k else zero
        left = sum((A[(i, j)] * C[(j, k)] for j in rng), zero)
        right = sum((C[(k, j)] * A[(j, i)] for j in rng), zero)
        if left != target or right != target:
            return False
    return True


def omega_element(N):
    pres = make_presentation("SpExt", N)
    x = {(i, j): canonicalize_generator(pres, "x", i, j)
         for i in range(1, N + 1) for j in range(1, N + 1)}
    total = pres.zero()
    for i in range(1, N + 1):
        for j in range(1, N + 1):
            total = total + x[(i, j)] * pres.generator("y", i) * pres.generator("y", j)
    return total


def omega_power(N):
    """Coefficient of y_1 ... y_N in Omega^(N/2), as an element of the x-algebra."""
    n = N // 2
    pres = make_presentation("SpExt", N)
    power = omega_element(N) ** n
    ys = set(k for k, g in enumerate(pres.gens) if g.family == "y")
    target = make_presentation("Sp", N)
    out = {}
    for w, c in power.terms.items():
        ypart = tuple(k for k in w if k in ys)
        if len(ypart) == N:
            out[tuple(k for k in w if k not in ys)] = c
    from .ncalg import Element

    return Element(target, out)


def omega_power_check(N):
    n = N // 2
    return omega_power(N) == pf(N).scale((1 + q**2) ** n * q_factorial(n, q**4))


def sdet_pf_check(N):
    n = N // 2
    P = pf(N)
    if sdet("Sp", N) != (P * P).scale(q ** (3 * n)):
        return False
    return P * P == explicit_sum("Sp", N).scale(mqpow(-n))


def phi_pf_check(N, symbolic=True):
    a = default_a(N, "Sp", symbolic)
    g = ONE
    for x in a:
        g = g * x
    return phi_embed(pf(N), a) == det_q(N).scale(g)


def pf_central(N):
    return is_central(pf(N))


def pf_powers_independent(N, top=3):
    P = pf(N)
    power = P.pres.one()
    leads = set()
    for _ in range(top + 1):
        leads.add(power.sorted_terms()[-1][0])
        power = power * P
    return len(leads) == top + 1
