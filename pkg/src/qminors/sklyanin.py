"""Sklyanin minors, auxiliary minors, the Sklyanin determinant and comatrix,
the explicit permutation formula, the inverse matrix Y and the involution omega.

A matrix is a dict ``{(i, j): value}`` with 1-based indices.  Minors are read
off by pushing one basis column through the bracket and contracting with the
rescaled antisymmetrizer, so nothing of size N^m is ever built.
"""

from functools import lru_cache
from itertools import permutations

from .ncalg import LocalElement, canonicalize_generator, make_presentation
from .scalars import ONE, ZERO, mqpow, q
from .tensorops import antisym_row, apply_bracket, apply_rt, inversions, matrix_size


def _one_of(X):
    sample = next(iter(X.values()))
    return sample.pres.one() if hasattr(sample, "pres") else ONE


def _zero_of(X):
    sample = next(iter(X.values()))
    return sample.pres.zero() if hasattr(sample, "pres") else ZERO


def generator_matrix(case, N):
    return make_presentation(case, N).matrix("x")


def sklyanin_minor(X, I, J, bar=False):
    """Coefficient of e_I in A~_m <X_1 ... X_m> e_J.

    With ``bar`` every scalar of the construction is replaced by its image
    under q -> q^-1, which gives the minors of a matrix obeying the q^-1
    reflection relation.
    """
    I, J = tuple(I), tuple(J)
    if len(I) != len(J):
        raise ValueError("row and column index lists must have equal length")
    m = len(I)
    if m == 0:
        return _one_of(X)
    N = matrix_size(X)
    vec = apply_bracket({J: _one_of(X)}, X, N, m, bar=bar)
    return antisym_row(vec, I, bar, _zero_of(X))


def aux_minor(X, I, J, c, bar=False):
    """Coefficient of e_I in A~_m <X_1 ... X_{m-1}> R^t_{1m} ... R^t_{m-1,m} e_{J,c}."""
    I, J = tuple(I), tuple(J)
    m = len(I)
    if len(J) != m - 1:
        raise ValueError("auxiliary minors take m rows and m-1 columns")
    N = matrix_size(X)
    vec = {J + (c,): _one_of(X)}
    for k in range(m - 1, 0, -1):
        vec = apply_rt(vec, k, m, bar)
    vec = apply_bracket(vec, X, N, m - 1, bar=bar)
    return antisym_row(vec, I, bar, _zero_of(X))


_SDET = {}


def sdet(case, N):
    """Sklyanin determinant of the generator matrix (cached per presentation)."""
    key = (case, N)
    if key not in _SDET:
        rng = tuple(range(1, N + 1))
        _SDET[key] = sklyanin_minor(generator_matrix(case, N), rng, rng)
    return _SDET[key]


def principal_sdet(X, S, bar=False):
    """sdet of the principal submatrix on the sorted index list S."""
    S = tuple(S)
    return sklyanin_minor(X, S, S, bar)


def submatrix(X, rows, cols=None):
    """Relabel X restricted to rows x cols as a 1-based matrix."""
    cols = rows if cols is None else cols
    return {(a + 1, b + 1): X[(r, c)] for a, r in enumerate(rows) for b, c in enumerate(cols)}


# --- explicit formula ---------------------------------------------------------------

def _pair_image(a, b, ground):
    """The pair map on ordered pairs of a sorted ground set (size >= 3)."""
    n = len(ground)
    k, l = ground.index(a), ground.index(b)
    top, sub, subsub = n - 1, n - 2, n - 3
    if k < top and l < top:
        return b, a
    if l == top and k < sub:
        return ground[sub], a
    if k == top and l < sub:
        return b, ground[sub]
    # remaining: (N-1, N) and (N, N-1)
    return ground[sub], ground[subsub]


def pi_map(p, ground=None):
    """p -> p' with p'_N the largest ground element.

    Pairs (p_k, p_{N+1-k}) are pushed through the pair map on the shrinking
    ground set and land on positions (k, N-k).  A slot left over once the
    ground set is down to two elements gets the unused value, so S_2 maps
    entirely to the identity arrangement.
    """
    p = tuple(p)
    N = len(p)
    ground = sorted(ground if ground is not None else p)
    if sorted(p) != ground:
        raise ValueError("p is not a permutation of the ground set")
    out = [None] * N
    out[N - 1] = ground[-1]
    current = list(ground)
    k = 0
    while len(current) >= 3:
        a, b = p[k], p[N - 1 - k]
        x, y = _pair_image(a, b, current)
        out[k], out[N - 2 - k] = x, y
        current.remove(a)
        current.remove(b)
        k += 1
    left = [v for v in ground if v not in out]
    slots = [i for i, v in enumerate(out) if v is None]
    for i, v in zip(slots, sorted(left)):
        out[i] = v
    if sorted(out) != ground:
        raise ValueError(f"pair recursion did not produce a permutation: {out}")
    return tuple(out)


def gamma_explicit(case, N):
    n = N // 2
    return ONE if case == "O" else q ** (2 * n) * (-1) ** n


def explicit_sum(case, N, pi=pi_map):
    """sum_p (-q)^{l(p)-l(p')} x^t_{p1 p1'} ... x^t_{pn pn'} x_{p(n+1) p'(n+1)} ... with n = N // 2."""
    pres = make_presentation(case, N)
    n = N // 2

    def x(i, j):
        return canonicalize_generator(pres, "x", i, j)

    total = pres.zero()
    for p in permutations(range(1, N + 1)):
        pp = pi(p)
        term = pres.one()
        for k in range(N):
            term = term * (x(pp[k], p[k]) if k < n else x(p[k], pp[k]))
        total = total + term.scale(mqpow(inversions(p) - inversions(pp)))
    return total


def sdet_explicit(case, N, pi=pi_map):
    return explicit_sum(case, N, pi).scale(gamma_explicit(case, N))


# --- comatrix, Y, omega ------------------------------------------------------------


def comatrix_entry(X, i, j, bar=False):
    N = matrix_size(X)
    cols = tuple(k for k in range(1, N + 1) if k != i)
    sign = mqpow(i - N)
    if bar:
        sign = sign.bar()
    return aux_minor(X, tuple(range(1, N + 1)), cols, j, bar) * sign


def comatrix(case, N=None, X=None, bar=False):
    X = X if X is not None else generator_matrix(case, N)
    N = matrix_size(X)
    return {(i, j): comatrix_entry(X, i, j, bar)
            for i in range(1, N + 1) for j in range(1, N + 1)}


@lru_cache(maxsize=None)
def y_matrix(case, N):
    """y_ij = (-q)^{j-i} xhat_ij / sdet, as LocalElements over the tag sdet."""
    d = sdet(case, N)
    hat = comatrix(case, N)
    return {(i, j): LocalElement(hat[(i, j)] * mqpow(j - i), 1, d) for (i, j) in hat}


def omega_images(case, N):
    Y = y_matrix(case, N)
    pres = make_presentation(case, N)
    return [Y[(N + 1 - g.row, N + 1 - g.col)] for g in pres.gens]


def omega(e):
    """Image of e under x_ij -> y_{N+1-i, N+1-j}, as a LocalElement."""
    pres = e.pres
    case, N = pres.case, pres.N
    images = omega_images(case, N)
    d = sdet(case, N)
    total = LocalElement(pres.zero(), 0, d)
    for w, c in e.terms.items():
        term = LocalElement(pres.one(), 0, d)
        for g in w:
            term = term * images[g]
        total = total + term * c
    return total



def y_numerators(case, N):
    """Numerator matrix of Y over the single denominator sdet, plus that sdet."""
    Y = y_matrix(case, N)
    return {k: v.num for k, v in Y.items()}, sdet(case, N)


def omega_numerator(e):
    """omega(e) * sdet^deg for a homogeneous element e (an Element again)."""
    pres = e.pres
    N = pres.N
    Ynum, _ = y_numerators(pres.case, N)
    images = [Ynum[(N + 1 - g.row, N + 1 - g.col)] for g in pres.gens]
    from .ncalg import substitute

    return substitute(e, images, pres)


def _leading_ratio(a, b):
    """Scalar c with a == c * b, or None."""
    if b.is_zero():
        return None
    w, cb = b.sorted_terms()[-1]
    c = a.coefficient(w) / cb
    return c if a == b.scale(c) else None


def omega_of_sdet(case, N):
    """The scalar c with omega(sdet) = c * sdet^-1, or None if no such c."""
    d = sdet(case, N)
    return _leading_ratio(omega_numerator(d), d ** (N - 1))


def omega_involution_check(case, N):
    """omega(omega(x_ij)) == x_ij for every generator."""
    c = omega_of_sdet(case, N)
    if c is None:
        return False
    pres = make_presentation(case, N)
    Ynum, d = y_numerators(case, N)
    # omega(y_ij) = omega(Ynum_ij) / omega(d) = omega_numerator(Ynum_ij) / d^(N-1) * d / c
    for g in pres.gens:
        i, j = N + 1 - g.row, N + 1 - g.col
        lhs = omega_numerator(Ynum[(i, j)])
        rhs = (d ** (N - 2) * pres.generator("x", g.row, g.col)).scale(c)
        if lhs != rhs:
            return False
    return True


def commuting_check(case, N, sizes=(2, 3)):
    """x_ab commutes with X^I_I whenever a, b lie in I."""
    from itertools import combinations

    X = generator_matrix(case, N)
    for m in sizes:
        for I in combinations(range(1, N + 1), m):
            M = sklyanin_minor(X, I, I)
            for a in I:
                for b in I:
                    if X[(a, b)] * M != M * X[(a, b)]:
                        return False
    return True


def aux_expansion_terms(X, I, J, c):
    """Candidate right-hand sides for an auxiliary minor with c = i_m.

    Returns the two readings of the compact signed sum (``upper``: leading
    +, exponent r-1; ``lower``: leading -, exponent r+1) together with the
    detailed case formula from the derivation (``detailed``).
    """
    I, J = tuple(I), tuple(J)
    m = len(I)
    head, im, j1, tail = I[:-1], I[-1], J[0], J[1:]
    L = mqpow(2 * inversions(I))
    zero = _zero_of(X)

    def minor(r):
        return sklyanin_minor(X, head[:r - 1] + head[r:], tail)

    def xt(r):
        return X[(j1, head[r - 1])]

    def xx(r):
        return X[(head[r - 1], j1)]

    rs = range(1, m)
    upper = sum((xt(r) * minor(r) * (L * mqpow(r - 1)) for r in rs), zero)
    lower = sum((xt(r) * minor(r) * (-L * mqpow(r + 1)) for r in rs), zero)
    if j1 == im:
        p = sum(1 for x in head if x < j1)
        detailed = sum((xx(r) * minor(r) * (-L * mqpow(r)) for r in rs), zero)
    else:
        p = head.index(j1) + 1
        detailed = xx(p) * minor(p) * (mqpow(p - 1) * L)
        detailed = detailed - sum((xx(r) * minor(r) * (L * mqpow(r)) for r in rs if r != p), zero)
        p -= 1
    d = (q - q.inverse()) * L
    detailed = detailed + sum((xt(r) * minor(r) * (d * mqpow(r)) for r in range(1, p + 1)), zero)
    return {"upper": upper, "lower": lower, "detailed": detailed}


AUX_BRANCH = {"O": "upper", "Sp": "lower"}


def aux_expansion_cases(N, m):
    """Index data (I, J, c, kind) covered by the auxiliary expansion statement."""
    from itertools import combinations

    for head in combinations(range(1, N + 1), m - 1):
        for tail in combinations(range(1, N + 1), m - 2):
            for im in range(1, N + 1):
                if im in head:
                    continue
                I = head + (im,)
                for j1 in I:
                    for c in range(1, N + 1):
                        if c in tail:
                            continue
                        if c not in I:
                            yield I, (j1,) + tail, c, "vanishing"
                        elif c == im:
                            yield I, (j1,) + tail, c, "ii" if j1 == im else "iii"


def aux_expansion_check(case, N, m=None):
    """Tally which readings match direct extraction, per kind of index data."""
    from collections import Counter

    X = generator_matrix(case, N)
    tally = Counter()
    for mm in ([m] if m else range(2, N + 1)):
        for I, J, c, kind in aux_expansion_cases(N, mm):
            val = aux_minor(X, I, J, c)
            if kind == "vanishing":
                tally[(kind, val.is_zero())] += 1
                continue
            cands = aux_expansion_terms(X, I, J, c)
            for name, rhs in cands.items():
                tally[(kind, name, val == rhs)] += 1
    return tally


def jacobi_comatrix_check(case, N, k):
    """X^{a,k+1..N}_{b,k+1..N} * sdet^(k-2) == (-q)^(k-b) * (numerator of the q^-1 auxiliary Y-minor)."""
    X = generator_matrix(case, N)
    Ynum, d = y_numerators(case, N)
    rest = tuple(range(k + 1, N + 1))
    rows = tuple(range(1, k + 1))
    for a in rows:
        for b in rows:
            lhs = sklyanin_minor(X, (a,) + rest, (b,) + rest)
            cols = tuple(x for x in rows if x != a)
            rhs = aux_minor(Ynum, rows, cols, b, bar=True) * mqpow(k - b)
            # lhs = (-q)^(k-b) sdet * Ynum-minor / sdet^(k-1)
            if k >= 2:
                lhs = lhs * d ** (k - 2)
            else:
                rhs = rhs * d
            if lhs != rhs:
                return False
    return True


def sdet_powers_independent(case, N, top=3):
    """1, sdet, ..., sdet^top have distinct leading words (hence are independent)."""
    d = sdet(case, N)
    leads = set()
    power = make_presentation(case, N).one()
    for _ in range(top + 1):
        w, _c = power.sorted_terms()[-1]
        leads.add(w)
        power = power * d
    return len(leads) == top + 1
