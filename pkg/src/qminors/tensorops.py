"""Sparse operators on (C^N)^{(x)m} with Scalar or Element entries.

Operators are stored column by column: ``cols[v]`` is the image of the basis
vector ``e_v`` as a dict ``{row multi-index: coefficient}``.  Indices are
1-based tuples.  Composition and application always put the left operator's
coefficient on the left, which is what noncommutative entries require.
"""

from itertools import permutations, product

from .scalars import ONE, ZERO, Scalar, a_var, mqpow, q, q_factorial, q_number, qinv, qpow


def _is_zero(c):
    return c.is_zero() if hasattr(c, "is_zero") else c == 0


def _vacc(d, key, c):
    if _is_zero(c):
        return
    v = d.get(key)
    if v is None:
        d[key] = c
    else:
        v = v + c
        if _is_zero(v):
            del d[key]
        else:
            d[key] = v


def inversions(seq):
    return sum(1 for a in range(len(seq)) for b in range(a + 1, len(seq)) if seq[a] > seq[b])


class TensorOp:
    __slots__ = ("N", "m", "cols")

    def __init__(self, N, m, cols):
        self.N = N
        self.m = m
        self.cols = cols

    def basis(self):
        return product(range(1, self.N + 1), repeat=self.m)

    @classmethod
    def identity(cls, N, m, one=ONE):
        return cls(N, m, {v: {v: one} for v in product(range(1, N + 1), repeat=m)})

    @classmethod
    def from_entries(cls, N, m, entries):
        """entries: {(row, col): coefficient} with row/col multi-index tuples."""
        cols = {}
        for (row, col), c in entries.items():
            if not _is_zero(c):
                cols.setdefault(col, {})
                _vacc(cols[col], row, c)
        return cls(N, m, cols)

    def entry(self, row, col):
        return self.cols.get(tuple(col), {}).get(tuple(row), ZERO)

    def entries(self):
        for col, image in self.cols.items():
            for row, c in image.items():
                yield (row, col), c

    def apply(self, vec):
        out = {}
        for w, cw in vec.items():
            for u, cu in self.cols.get(w, {}).items():
                _vacc(out, u, cu * cw)
        return out

    def __matmul__(self, other):
        cols = {}
        for v, image in other.cols.items():
            res = self.apply(image)
            if res:
                cols[v] = res
        return TensorOp(self.N, self.m, cols)

    def __add__(self, other):
        cols = {v: dict(img) for v, img in self.cols.items()}
        for v, img in other.cols.items():
            tgt = cols.setdefault(v, {})
            for u, c in img.items():
                _vacc(tgt, u, c)
        return TensorOp(self.N, self.m, {v: i for v, i in cols.items() if i})

    def __neg__(self):
        return self.scale(-ONE)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return TensorOp(self.N, self.m, {v: {u: x * c for u, x in img.items()}
                                         for v, img in self.cols.items()})

    def bar(self):
        return TensorOp(self.N, self.m, {v: {u: x.bar() for u, x in img.items()}
                                         for v, img in self.cols.items()})

    def is_zero(self):
        return all(_is_zero(c) for _, c in self.entries())

    def __eq__(self, other):
        return (self - other).is_zero()

    __hash__ = None

    def embed(self, m, factors):
        """Act on the given factor positions (1-based) of an m-fold product."""
        factors = tuple(f - 1 for f in factors)
        [k for k in range(m) if k not in factors]
        cols = {}
        for v in product(range(1, self.N + 1), repeat=m):
            local = tuple(v[f] for f in factors)
            img = self.cols.get(local)
            if not img:
                continue
            out = {}
            for lrow, c in img.items():
                row = list(v)
                for f, r in zip(factors, lrow):
                    row[f] = r
                out[tuple(row)] = c
            cols[v] = out
        return TensorOp(self.N, m, cols)

    def partial_transpose(self, factor):
        f = factor - 1
        entries = {}
        for (row, col), c in self.entries():
            r, s = list(row), list(col)
            r[f], s[f] = col[f], row[f]
            entries[(tuple(r), tuple(s))] = c
        return TensorOp.from_entries(self.N, self.m, entries)

    def trace(self, zero=ZERO):
        total = zero
        for v, img in self.cols.items():
            c = img.get(v)
            if c is not None:
                total = total + c
        return total


def partial_trace(op, factors=None, zero=ZERO):
    if factors is not None and set(factors) != set(range(1, op.m + 1)):
        raise ValueError("only the full trace is supported")
    return op.trace(zero)


# --- basic operators ----------------------------------------------------------


def r_matrix(N):
    d = q - qinv
    cols = {}
    for a in range(1, N + 1):
        for b in range(1, N + 1):
            if a == b:
                cols[(a, a)] = {(a, a): q}
            else:
                img = {(a, b): ONE}
                if a < b:
                    img[(b, a)] = d
                cols[(a, b)] = img
    return TensorOp(N, 2, cols)


def r_plus(N):
    d = q - qinv
    cols = {}
    for a in range(1, N + 1):
        for b in range(1, N + 1):
            if a == b:
                cols[(a, a)] = {(a, a): q}
            else:
                img = {(a, b): ONE}
                if a > b:
                    img[(b, a)] = d
                cols[(a, b)] = img
    return TensorOp(N, 2, cols)


def r_minus(N):
    return r_matrix(N).bar()


def permutation_op(N):
    return TensorOp(N, 2, {(a, b): {(b, a): ONE}
                           for a in range(1, N + 1) for b in range(1, N + 1)})


def r_t1(N):
    return r_matrix(N).partial_transpose(1)


def r_spectral(N, lam):
    lam = Scalar.coerce(lam)
    return r_plus(N).scale(lam) - r_minus(N).scale(lam.inverse())


def r_hat(N, lam):
    return r_spectral(N, lam) @ permutation_op(N)


def j_matrix(N, case, a=None):
    """J(a) as an m=1 operator; ``a`` defaults to the formal a_1, a_2, ..."""
    if a is None:
        a = [a_var(i) for i in range(1, N + 1)]
    a = [Scalar.coerce(x) for x in a]
    if case == "O":
        return TensorOp(N, 1, {(i,): {(i,): a[i - 1]} for i in range(1, N + 1)})
    if N % 2:
        raise ValueError("symplectic J(a) needs even N")
    cols = {}
    for i in range(1, N // 2 + 1):
        cols[(2 * i,)] = {(2 * i - 1,): a[i - 1]}
        cols[(2 * i - 1,)] = {(2 * i,): -(q * a[i - 1])}
    return TensorOp(N, 1, cols)


def q_diag(N, inverse=False):
    return TensorOp(N, 1, {(i,): {(i,): mqpow(-i if inverse else i)} for i in range(1, N + 1)})


def antidiagonal(N):
    return TensorOp(N, 1, {(i,): {(N + 1 - i,): ONE} for i in range(1, N + 1)})


def matrix_op(X, N=None):
    """An N x N matrix {(i, j): value} as an m=1 operator."""
    N = N or matrix_size(X)
    cols = {}
    for (i, j), c in X.items():
        if not _is_zero(c):
            cols.setdefault((j,), {})[(i,)] = c
    return TensorOp(N, 1, cols)


def build_basic(kind, N, **params):
    if kind == "R":
        return r_matrix(N)
    if kind == "Rplus":
        return r_plus(N)
    if kind == "Rminus":
        return r_minus(N)
    if kind == "P":
        return permutation_op(N)
    if kind == "Rt1":
        return r_t1(N)
    if kind == "Rlambda":
        return r_spectral(N, params["lam"])
    if kind == "Rhat":
        return r_hat(N, params["lam"])
    if kind == "Ja":
        return j_matrix(N, params["case"], params.get("a"))
    if kind == "Qdiag":
        return q_diag(N)
    if kind == "Aanti":
        return antidiagonal(N)
    raise ValueError(f"unknown operator kind {kind!r}")


# --- (anti)symmetrizers -------------------------------------------------------


def antisymmetrizer_tilde(N, m, bar=False):
    """[m]_{q^2}! A_m from the direct double sum (Laurent entries)."""
    cols = {}
    perms = list(permutations(range(m)))
    sign = {p: mqpow(inversions(p)) for p in perms}
    if bar:
        sign = {p: s.bar() for p, s in sign.items()}
    from itertools import combinations

    for c in combinations(range(1, N + 1), m):
        for tau in perms:
            col = tuple(c[t] for t in tau)
            cols[col] = {tuple(c[s] for s in sigma): sign[sigma] * sign[tau] for sigma in perms}
    return TensorOp(N, m, cols)


def antisymmetrizer(N, m, bar=False):
    norm = q_factorial(m, q**2)
    if bar:
        norm = norm.bar()
    return antisymmetrizer_tilde(N, m, bar).scale(norm.inverse())


def antisymmetrizer_recursive(N, m, tilde=False):
    """A_m from A_2 = R^(q^-1)/(q^2-q^-2) and the stated recursion.

    The products run on the Laurent-valued rescaling [k]_{q^2}! A_k, so each
    step needs a single scalar division instead of one per entry.
    """
    if m <= 1:
        return TensorOp.identity(N, max(m, 1))
    # [2]_{q^2}! A_2 = (1 + q^2) R^(q^-1) / (q^2 - q^-2) = q R^(q^-1) / (q - q^-1)
    A = r_hat(N, qinv).scale(q * (q - qinv).inverse())
    for k in range(2, m):
        Ak = A.embed(k + 1, range(1, k + 1))
        Rk = r_hat(N, qpow(-k)).embed(k + 1, (k, k + 1))
        fk = q_factorial(k, q**2)
        c = q_number(k + 1, q**2) / ((qpow(k + 1) - qpow(-k - 1)) * fk)
        A = (Ak @ Rk @ Ak).scale(c)
    return A if tilde else A.scale(q_factorial(m, q**2).inverse())


def symmetrizer(N, m):
    if m <= 1:
        return TensorOp.identity(N, max(m, 1))
    S = r_hat(N, q).scale((q**2 - q**-2).inverse())
    for k in range(2, m):
        Sk = S.embed(k + 1, range(1, k + 1))
        Rk = r_hat(N, qpow(k)).embed(k + 1, (k, k + 1))
        S = (Sk @ Rk @ Sk).scale((qpow(k + 1) - qpow(-k - 1)).inverse())
    return S


def shifted(op, m, start):
    """Place an operator on the factor range start, start+1, ... of an m-fold product."""
    return op.embed(m, range(start, start + op.m))


# --- fast column propagation for minors ----------------------------------------


def apply_rt(vec, i, j, bar=False):
    """R^t acting on factors i, j (1-based) of a sparse vector."""
    qq = qinv if bar else q
    d = qq - qq.inverse()
    out = {}
    i -= 1
    j -= 1
    for v, c in vec.items():
        a = v[i]
        if a != v[j]:
            _vacc(out, v, c)
            continue
        _vacc(out, v, c * qq)
        for l in range(1, a):
            w = list(v)
            w[i] = w[j] = l
            _vacc(out, tuple(w), c * d)
    return out


def apply_matrix(vec, X, N, k):
    """X acting on factor k: e_a -> sum_i X[i, a] e_i, entry multiplied on the left."""
    out = {}
    k -= 1
    for v, c in vec.items():
        a = v[k]
        for i in range(1, N + 1):
            x = X[(i, a)]
            if _is_zero(x):
                continue
            w = v[:k] + (i,) + v[k + 1:]
            _vacc(out, w, x * c)
    return out


def apply_bracket(vec, X, N, m, order=None, bar=False, offset=0):
    """<X_{i1} ... X_{im}> applied to a sparse vector (factors offset+1..offset+m)."""
    order = list(order or range(1, m + 1))
    for p in range(m - 1, -1, -1):
        for s in range(m - 1, p, -1):
            vec = apply_rt(vec, order[p] + offset, order[s] + offset, bar)
        vec = apply_matrix(vec, X, N, order[p] + offset)
    return vec


def antisym_row(vec, rows, bar=False, zero=ZERO):
    """Coefficient of e_rows in A~_m applied to ``vec``."""
    rows = tuple(rows)
    if len(set(rows)) < len(rows):
        return zero
    c = tuple(sorted(rows))
    pos = {x: k for k, x in enumerate(c)}
    s_sigma = mqpow(inversions([pos[x] for x in rows]))
    total = zero
    for v, coeff in vec.items():
        if tuple(sorted(v)) != c or len(set(v)) < len(v):
            continue
        s = s_sigma * mqpow(inversions([pos[x] for x in v]))
        total = total + coeff * (s.bar() if bar else s)
    return total


def matrix_size(X):
    return max(i for i, _ in X)


def bracket(X, order=None, m=None, one=None, bar=False):
    """<X_{i1} ... X_{im}> as a TensorOp (kept for operator identities, m <= 3).

    ``X`` maps (i, j) to entries; ``order`` is a permutation of 1..m.
    """
    N = matrix_size(X)
    m = len(order) if order is not None else m
    if one is None:
        sample = X[(1, 1)]
        one = sample.pres.one() if hasattr(sample, "pres") else ONE
    cols = {}
    for v in product(range(1, N + 1), repeat=m):
        img = apply_bracket({v: one}, X, N, m, order, bar)
        if img:
            cols[v] = img
    return TensorOp(N, m, cols)
