"""Presentations, PBW normal forms and central localization.

Every algebra here is quadratic with a PBW basis of ordered monomials, so a
presentation is a total order on generators plus one rewrite rule per
out-of-order adjacent pair.  The rules are not typed in by hand: the defining
relations are generated from index templates and solved (sparse Gaussian
elimination) for the out-of-order products.  A missing pivot or a relation
among ordered words aborts construction, since either would contradict the
PBW property.

Normal forms are computed by inserting one generator at a time into an
already ordered word, memoized on ``(word, generator)``.
"""

from collections import namedtuple
from functools import lru_cache
from itertools import combinations, combinations_with_replacement

from .scalars import ONE, ZERO, Scalar, mqpow, q, qinv, qpow

Generator = namedtuple("Generator", "family row col")

MAX_REDUCTIONS = 10**7

PRESENTATIONS = ("Mat", "O", "Sp", "Ext", "Mat2", "SpExt")


class RewriteError(RuntimeError):
    """Raised when rewriting exceeds its step budget (broken swap table)."""


class PresentationError(ValueError):
    pass


def gen_str(g):
    if g.col is None:
        return f"{g.family}[{g.row}]"
    return f"{g.family}[{g.row},{g.col}]"


# --- relation templates ---------------------------------------------------
#
# A quadratic template is a list of (coefficient, (i, j), (k, l)) standing for
# sum coefficient * m[i,j] * m[k,l]; a linear one is a list of
# (coefficient, (i, j)).  Templates are evaluated on any matrix, so the same
# lists serve the generators, the embedding images, Y and omega(X).


def _c_orth():
    return qinv * (q**2 - q**-2)


def rtt_templates(N):
    d = q - qinv
    out = []
    for i in range(1, N + 1):
        for k, l in combinations(range(1, N + 1), 2):
            out.append(("t_ik t_il = q t_il t_ik", [(ONE, (i, k), (i, l)), (-q, (i, l), (i, k))]))
            out.append(("t_ki t_li = q t_li t_ki", [(ONE, (k, i), (l, i)), (-q, (l, i), (k, i))]))
    for i, j in combinations(range(1, N + 1), 2):
        for k, l in combinations(range(1, N + 1), 2):
            out.append(("t_il t_jk = t_jk t_il", [(ONE, (i, l), (j, k)), (-ONE, (j, k), (i, l))]))
            out.append(("t_ik t_jl - t_jl t_ik = (q-q^-1) t_il t_jk",
                        [(ONE, (i, k), (j, l)), (-ONE, (j, l), (i, k)), (-d, (i, l), (j, k))]))
    return out


def reflection_templates(case, N):
    """The explicit relation lists for A_q(X_N) (quadratic part)."""
    d = q - qinv
    rng = range(1, N + 1)
    out = []
    if case == "O":
        c = _c_orth()
        for i, j, k in combinations(rng, 3):
            out.append(("x_ik x_jk = q x_jk x_ik", [(ONE, (i, k), (j, k)), (-q, (j, k), (i, k))]))
            out.append(("x_ij x_ik = q x_ik x_ij", [(ONE, (i, j), (i, k)), (-q, (i, k), (i, j))]))
            out.append(("x_ii x_jk - x_jk x_ii = c x_ij x_ik",
                        [(ONE, (i, i), (j, k)), (-ONE, (j, k), (i, i)), (-c, (i, j), (i, k))]))
            out.append(("x_ij x_kk - x_kk x_ij = c x_ik x_jk",
                        [(ONE, (i, j), (k, k)), (-ONE, (k, k), (i, j)), (-c, (i, k), (j, k))]))
            out.append(("x_ij x_jk - q x_jk x_ij = q(q-q^-1) x_jj x_ik",
                        [(ONE, (i, j), (j, k)), (-q, (j, k), (i, j)), (-(q * d), (j, j), (i, k))]))
            out.append(("x_ik x_jj = x_jj x_ik", [(ONE, (i, k), (j, j)), (-ONE, (j, j), (i, k))]))
        for i, j in combinations(rng, 2):
            out.append(("x_ij x_jj = q^2 x_jj x_ij", [(ONE, (i, j), (j, j)), (-qpow(2), (j, j), (i, j))]))
            out.append(("x_ii x_ij = q^2 x_ij x_ii", [(ONE, (i, i), (i, j)), (-qpow(2), (i, j), (i, i))]))
            out.append(("x_ii x_jj - x_jj x_ii = c x_ij^2",
                        [(ONE, (i, i), (j, j)), (-ONE, (j, j), (i, i)), (-c, (i, j), (i, j))]))
        for i, j, k, l in combinations(rng, 4):
            out.append(("x_il x_jk = x_jk x_il", [(ONE, (i, l), (j, k)), (-ONE, (j, k), (i, l))]))
            out.append(("x_ik x_jl - x_jl x_ik = (q-q^-1) x_il x_jk",
                        [(ONE, (i, k), (j, l)), (-ONE, (j, l), (i, k)), (-d, (i, l), (j, k))]))
            out.append(("x_ij x_kl - x_kl x_ij = (q-q^-1)(x_ik x_jl + q^-1 x_il x_jk)",
                        [(ONE, (i, j), (k, l)), (-ONE, (k, l), (i, j)),
                         (-d, (i, k), (j, l)), (-(d * qinv), (i, l), (j, k))]))
            out.append(("x_ij x_kl - x_kl x_ij = q x_ik x_jl - q^-1 x_jl x_ik",
                        [(ONE, (i, j), (k, l)), (-ONE, (k, l), (i, j)),
                         (-q, (i, k), (j, l)), (qinv, (j, l), (i, k))]))
    elif case == "Sp":
        for i in rng:
            for k, l in combinations(rng, 2):
                out.append(("x_ik x_il = q x_il x_ik", [(ONE, (i, k), (i, l)), (-q, (i, l), (i, k))]))
                out.append(("x_ki x_li = q x_li x_ki", [(ONE, (k, i), (l, i)), (-q, (l, i), (k, i))]))
        for i, j, k, l in combinations(rng, 4):
            out.append(("x_il x_jk = x_jk x_il", [(ONE, (i, l), (j, k)), (-ONE, (j, k), (i, l))]))
            out.append(("x_ik x_jl - x_jl x_ik = (q-q^-1) x_il x_jk",
                        [(ONE, (i, k), (j, l)), (-ONE, (j, l), (i, k)), (-d, (i, l), (j, k))]))
            out.append(("x_ij x_kl - x_kl x_ij = (q-q^-1)(x_ik x_jl - q x_il x_jk)",
                        [(ONE, (i, j), (k, l)), (-ONE, (k, l), (i, j)),
                         (-d, (i, k), (j, l)), (d * q, (i, l), (j, k))]))
            out.append(("x_ij x_kl - x_kl x_ij = q x_jl x_ik - q^-1 x_ik x_jl",
                        [(ONE, (i, j), (k, l)), (-ONE, (k, l), (i, j)),
                         (-q, (j, l), (i, k)), (qinv, (i, k), (j, l))]))
    else:
        raise PresentationError(f"no reflection templates for case {case!r}")
    return out


def reflection_delta_templates(N):
    """The uniform delta-form of the reflection relation, all i, j, k, l."""
    d = q - qinv

    def lt(*xs):
        return 1 if all(a < b for a, b in zip(xs, xs[1:])) else 0

    out = []
    rng = range(1, N + 1)
    for i in rng:
        for j in rng:
            for k in rng:
                for l in rng:
                    t = [(qpow((j == k) + (i == j)), (i, k), (j, l)),
                         (-qpow((k == l) + (i == l)), (j, l), (i, k))]
                    if lt(i, l):
                        t.append((-(d * qpow(k == l)), (j, i), (l, k)))
                    if lt(j, k):
                        t.append((d * qpow(i == j), (i, j), (k, l)))
                    s = lt(k, l) - lt(j, i)
                    if s:
                        t.append((-(d * qpow(i == k) * s), (j, k), (i, l)))
                    s = lt(i, k, l) - lt(j, i, k)
                    if s:
                        t.append((-(d * d * s), (j, i), (k, l)))
                    out.append((f"reflection[{i}{j}{k}{l}]", t))
    return out


def symmetry_templates(case, N):
    out = []
    for i, j in combinations(range(1, N + 1), 2):
        if case == "O":
            out.append((f"x_{i}{j} = q x_{j}{i}", [(ONE, (i, j)), (-q, (j, i))]))
        else:
            out.append((f"x_{j}{i} = -q x_{i}{j}", [(ONE, (j, i)), (q, (i, j))]))
    if case == "Sp":
        for k in range(1, N + 1):
            out.append((f"x_{k}{k} = 0", [(ONE, (k, k))]))
    return out


def evaluate_quadratic(template, entry, bar=False):
    total = None
    for c, a, b in template:
        c = c.bar() if bar else c
        term = c * (entry(*a) * entry(*b))
        total = term if total is None else total + term
    return total


def evaluate_linear(template, entry, bar=False):
    total = None
    for c, a in template:
        c = c.bar() if bar else c
        term = c * entry(*a)
        total = term if total is None else total + term
    return total


# --- presentations ----------------------------------------------------------


class Presentation:
    """Generator alphabet, monomial order and swap-rule table of one algebra.

    Immutable after construction apart from the internal memo tables, which
    only ever cache deterministic results.
    """

    def __init__(self, name, N, gens, rules, case=None):
        self.name = name
        self.N = N
        self.gens = tuple(gens)
        self.index = {g: k for k, g in enumerate(self.gens)}
        self.rules = dict(rules)
        self.case = case
        self._insert_memo = {}
        self._mul_memo = {}
        self._steps = 0

    def __repr__(self):
        return f"Presentation({self.name}, N={self.N})"

    def __reduce__(self):
        return (make_presentation, (self.name, self.N))

    # elements
    def zero(self):
        return Element(self, {})

    def one(self):
        return Element(self, {(): ONE})

    def scalar(self, c):
        c = Scalar.coerce(c)
        return Element(self, {(): c} if c else {})

    def generator(self, family, i, j=None):
        g = Generator(family, i, j)
        if g not in self.index:
            raise PresentationError(f"{gen_str(g)} is not a generator of {self.name}(N={self.N})")
        return Element(self, {(self.index[g],): ONE})

    def x(self, i, j):
        """x_{ij} rewritten in canonical generators."""
        return canonicalize_generator(self, "x", i, j)

    def t(self, i, j, family="t"):
        return self.generator(family, i, j)

    def y(self, i):
        return self.generator("y", i)

    def matrix(self, family=None):
        family = family or ("t" if self.case == "Mat" else "x")
        if family == "x":
            return {(i, j): self.x(i, j) for i in range(1, self.N + 1) for j in range(1, self.N + 1)}
        return {(i, j): self.generator(family, i, j)
                for i in range(1, self.N + 1) for j in range(1, self.N + 1)}

    def generator_elements(self, family=None):
        return [Element(self, {(k,): ONE}) for k, g in enumerate(self.gens)
                if family is None or g.family == family]

    # rewriting core
    def _tick(self):
        self._steps += 1
        if self._steps > MAX_REDUCTIONS:
            self._steps = 0
            raise RewriteError(f"rewrite budget exceeded in {self.name}(N={self.N}); swap table is broken")

    def insert(self, w, g):
        """Normal form of (ordered word w) * generator g, as {word: Scalar}."""
        if not w:
            return {(g,): ONE}
        rule = self.rules.get((w[-1], g))
        if rule is None:
            return {w + (g,): ONE}
        key = (w, g)
        hit = self._insert_memo.get(key)
        if hit is not None:
            return hit
        self._tick()
        prefix = w[:-1]
        result = {}
        for c, rhs in rule:
            part = {prefix: ONE}
            for letter in rhs:
                nxt = {}
                for pw, pc in part.items():
                    for iw, ic in self.insert(pw, letter).items():
                        _acc(nxt, iw, pc * ic)
                part = nxt
            for pw, pc in part.items():
                _acc(result, pw, c * pc)
        self._insert_memo[key] = result
        return result

    def mul_words(self, u, v):
        """Normal form of u*v for ordered words u, v."""
        if not v:
            return {u: ONE}
        if not u:
            return {v: ONE}
        if (u[-1], v[0]) not in self.rules:
            return {u + v: ONE}
        key = (u, v)
        hit = self._mul_memo.get(key)
        if hit is not None:
            return hit
        cur = self.mul_words(u, v[:-1])
        g = v[-1]
        result = {}
        for w, c in cur.items():
            for iw, ic in self.insert(w, g).items():
                _acc(result, iw, c * ic)
        self._mul_memo[key] = result
        return result

    def normal_word(self, w):
        cur = {(): ONE}
        for g in w:
            nxt = {}
            for pw, pc in cur.items():
                for iw, ic in self.insert(pw, g).items():
                    _acc(nxt, iw, pc * ic)
            cur = nxt
        return cur

    def is_ordered(self, w):
        return all((a, b) not in self.rules for a, b in zip(w, w[1:]))

    def word_str(self, w):
        if not w:
            return "1"
        parts = []
        k = 0
        while k < len(w):
            n = 1
            while k + n < len(w) and w[k + n] == w[k]:
                n += 1
            s = gen_str(self.gens[w[k]])
            parts.append(s if n == 1 else f"{s}^{n}")
            k += n
        return "*".join(parts)


def _acc(d, key, c):
    if not c:
        return
    v = d.get(key)
    if v is None:
        d[key] = c
    else:
        v = v + c
        if v:
            d[key] = v
        else:
            del d[key]


def _linear_entry(pres, case):
    """Canonical x_{ij} as {word: Scalar} without building Elements."""

    def entry(i, j):
        if i == j and case == "Sp":
            return {}
        if i <= j:
            return {(pres.index[Generator("x", i, j)],): ONE}
        c = qinv if case == "O" else -q
        return {(pres.index[Generator("x", j, i)],): c}

    return entry


def _solve_rules(gens, relations, nilpotent=()):
    """Solve quadratic relations for every out-of-order adjacent pair.

    ``relations`` are dicts word -> Scalar over words of length 2.  Returns
    the rule table {(h, g): ((coeff, word), ...)} with ordered right sides.
    """
    n = len(gens)
    bad = {(h, g) for h in range(n) for g in range(n) if h > g} | set(nilpotent)
    rows = [dict(r) for r in relations if r]
    # pivot order: largest out-of-order word first
    pivots = {}
    for w in sorted(bad, reverse=True):
        for idx, row in enumerate(rows):
            if w in row:
                break
        else:
            raise PresentationError(f"no relation determines the product {w}")
        row = rows.pop(idx)
        inv = row[w].inverse()
        row = {k: v * inv for k, v in row.items()}
        # eliminate w from all remaining rows and existing pivot rows
        for others in (rows, list(pivots.values())):
            for r in others:
                c = r.get(w)
                if c is not None:
                    for k, v in row.items():
                        _acc(r, k, -(c * v))
        pivots[w] = row
    for r in rows:
        if r:
            raise PresentationError(f"relation among ordered words: {r}")
    rules = {}
    for w, row in pivots.items():
        rhs = []
        for k, v in sorted(row.items()):
            if k == w:
                continue
            if k in bad:
                raise PresentationError(f"unreduced right side for {w}")
            rhs.append((-v, k))
        rules[w] = tuple(rhs)
    return rules


def _template_relations(templates, entry):
    rels = []
    for _, tpl in templates:
        r = {}
        for c, a, b in tpl:
            ea, eb = entry(*a), entry(*b)
            for wa, ca in ea.items():
                for wb, cb in eb.items():
                    _acc(r, wa + wb, c * ca * cb)
        rels.append(r)
    return rels


@lru_cache(maxsize=None)
def make_presentation(name, N):
    """Build (and cache) one of the six presentations."""
    if N < 1:
        raise PresentationError("N must be positive")
    rng = range(1, N + 1)
    if name == "Mat":
        gens = [Generator("t", i, j) for i in rng for j in rng]
        idx = {g: k for k, g in enumerate(gens)}
        entry = lambda i, j: {(idx[Generator("t", i, j)],): ONE}  # noqa: E731
        rules = _solve_rules(gens, _template_relations(rtt_templates(N), entry))
        return Presentation(name, N, gens, rules, case="Mat")
    if name in ("O", "Sp"):
        if name == "Sp" and N % 2:
            raise PresentationError("symplectic case needs even N")
        if name == "O":
            gens = [Generator("x", i, j) for i in rng for j in rng if i <= j]
        else:
            gens = [Generator("x", i, j) for i in rng for j in rng if i < j]
        pres = Presentation(name, N, gens, {}, case=name)
        rels = _template_relations(reflection_templates(name, N), _linear_entry(pres, name))
        pres.rules = _solve_rules(gens, rels)
        return pres
    if name == "Ext":
        gens = [Generator("y", i, None) for i in rng]
        rules = {}
        for i in range(N):
            rules[(i, i)] = ()
            for j in range(i + 1, N):
                rules[(j, i)] = ((-q, (i, j)),)
        return Presentation(name, N, gens, rules, case="Ext")
    if name == "Mat2":
        base = make_presentation("Mat", N)
        n = len(base.gens)
        gens = [Generator("u", g.row, g.col) for g in base.gens] + \
               [Generator("v", g.row, g.col) for g in base.gens]
        rules = {}
        for (h, g), rhs in base.rules.items():
            rules[(h, g)] = rhs
            rules[(h + n, g + n)] = tuple((c, tuple(k + n for k in w)) for c, w in rhs)
        for a in range(n):
            for b in range(n):
                rules[(n + b, a)] = ((ONE, (a, n + b)),)
        return Presentation(name, N, gens, rules, case="Mat2")
    if name == "SpExt":
        base = make_presentation("Sp", N)
        ext = make_presentation("Ext", N)
        n = len(base.gens)
        gens = list(base.gens) + list(ext.gens)
        rules = dict(base.rules)
        for (h, g), rhs in ext.rules.items():
            rules[(h + n, g + n)] = tuple((c, tuple(k + n for k in w)) for c, w in rhs)
        for a in range(n):
            for b in range(len(ext.gens)):
                rules[(n + b, a)] = ((ONE, (a, n + b)),)
        return Presentation(name, N, gens, rules, case="Sp")
    raise PresentationError(f"unknown presentation {name!r}")


def canonicalize_generator(pres, family, i, j):
    N = pres.N
    if not (1 <= i <= N and 1 <= j <= N):
        raise PresentationError(f"index ({i},{j}) out of range for N={N}")
    if family != "x" or pres.case not in ("O", "Sp"):
        return pres.generator(family, i, j)
    if pres.case == "Sp":
        if i == j:
            return pres.zero()
        if i > j:
            return pres.generator("x", j, i) * (-q)
        return pres.generator("x", i, j)
    if i > j:
        return pres.generator("x", j, i) * qinv
    return pres.generator("x", i, j)


# --- elements ---------------------------------------------------------------


class Element:
    """Finite combination of words with Scalar coefficients.

    Elements produced by arithmetic are in normal form; ``Element.raw`` builds
    an arbitrary (possibly unordered) combination, see :func:`normal_form`.
    """

    __slots__ = ("pres", "terms", "normal")

    def __init__(self, pres, terms, normal=True):
        self.pres = pres
        self.terms = terms
        self.normal = normal

    @classmethod
    def raw(cls, pres, terms):
        clean = {}
        for w, c in terms.items():
            _acc(clean, tuple(w), Scalar.coerce(c))
        return cls(pres, clean, normal=all(pres.is_ordered(w) for w in clean))

    def _nf(self):
        return self if self.normal else normal_form(self)

    def _coerce(self, other):
        if isinstance(other, Element):
            if other.pres is not self.pres:
                raise PresentationError(f"mixing {self.pres} and {other.pres}")
            return other
        return self.pres.scalar(other)

    def is_zero(self):
        return not self._nf().terms

    def __bool__(self):
        return not self.is_zero()

    def __add__(self, other):
        if not isinstance(other, (Element, Scalar, int)):
            return NotImplemented
        other = self._coerce(other)
        r = dict(self.terms)
        for w, c in other.terms.items():
            _acc(r, w, c)
        return Element(self.pres, r, self.normal and other.normal)

    __radd__ = __add__

    def __neg__(self):
        return Element(self.pres, {w: -c for w, c in self.terms.items()}, self.normal)

    def __sub__(self, other):
        if not isinstance(other, (Element, Scalar, int)):
            return NotImplemented
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def scale(self, c):
        c = Scalar.coerce(c)
        if not c:
            return self.pres.zero()
        return Element(self.pres, {w: v * c for w, v in self.terms.items()}, self.normal)

    def __mul__(self, other):
        if isinstance(other, (Scalar, int)):
            return self.scale(other)
        if not isinstance(other, Element):
            return NotImplemented
        other = self._coerce(other)
        a, b = self._nf(), other._nf()
        pres = self.pres
        r = {}
        for u, cu in a.terms.items():
            for v, cv in b.terms.items():
                c = cu * cv
                for w, cw in pres.mul_words(u, v).items():
                    _acc(r, w, c * cw)
        return Element(pres, r)

    def __rmul__(self, other):
        if isinstance(other, (Scalar, int)):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, c):
        return self.scale(Scalar.coerce(c).inverse())

    def __pow__(self, n):
        result = self.pres.one()
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Scalar)):
            other = self.pres.scalar(other)
        if not isinstance(other, Element):
            return NotImplemented
        return (self - other).is_zero()

    def __hash__(self):
        e = self._nf()
        return hash(frozenset(e.terms.items()))

    def degree(self):
        return max((len(w) for w in self.terms), default=-1)

    def coefficient(self, word):
        return self._nf().terms.get(tuple(word), ZERO)

    def map_scalars(self, f):
        return Element(self.pres, {w: f(c) for w, c in self.terms.items() if f(c)}, self.normal)

    def bar(self):
        return self.map_scalars(lambda c: c.bar())

    def sorted_terms(self):
        e = self._nf()
        return sorted(e.terms.items(), key=lambda wc: (len(wc[0]), wc[0]))

    def __str__(self):
        return element_str(self)

    def __repr__(self):
        return f"Element({self})"


def element_str(e):
    terms = e.sorted_terms()
    if not terms:
        return "0"
    out = []
    for w, c in terms:
        word = e.pres.word_str(w) if w else ""
        neg = False
        if c.den is None and len(c.num) == 1:
            (m, v), = c.num.items()
            if v < 0:
                neg = True
                c = -c
        cs = str(c)
        if not word:
            body = f"({cs})" if c.needs_parens() else cs
        elif c.is_one():
            body = word
        elif c.needs_parens():
            body = f"({cs})*{word}"
        else:
            body = f"{cs}*{word}"
        if not out:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


def normal_form(e):
    """Unique PBW representative of ``e``."""
    pres = e.pres
    pres._steps = 0
    r = {}
    for w, c in e.terms.items():
        for nw, nc in pres.normal_word(w).items():
            _acc(r, nw, c * nc)
    return Element(pres, r)


def substitute(e, images, target):
    """Algebra map sending generator index k to ``images[k]`` (Elements of ``target``)."""
    e = e._nf()
    cache = {(): target.one()}

    def image(w):
        hit = cache.get(w)
        if hit is None:
            hit = image(w[:-1]) * images[w[-1]]
            cache[w] = hit
        return hit

    total = target.zero()
    for w, c in e.terms.items():
        total = total + image(w).scale(c)
    return total


def is_central(c, generators=None):
    gens = c.pres.generator_elements() if generators is None else generators
    return all((c * g - g * c).is_zero() for g in gens)


def basis_enumerate(pres, d):
    """All PBW monomials of degree <= d, by degree and then lexicographically."""
    out = []
    n = len(pres.gens)
    for k in range(d + 1):
        for w in combinations_with_replacement(range(n), k):
            if pres.is_ordered(w):
                out.append(Element(pres, {w: ONE}))
    return out


# --- localization -------------------------------------------------------------


class LocalizationError(ValueError):
    pass


class LocalElement:
    """numerator * denom**(-power) for a declared central ``denom``."""

    __slots__ = ("num", "power", "denom")

    def __init__(self, num, power, denom):
        if power < 0:
            raise LocalizationError("denominator power must be nonnegative")
        self.num = num
        self.power = power
        self.denom = denom

    def _check(self, other):
        if not isinstance(other, LocalElement):
            return LocalElement(self.num.pres.scalar(1) * other if not isinstance(other, Element)
                                else other, 0, self.denom)
        if other.denom is not self.denom and not (other.denom - self.denom).is_zero():
            raise LocalizationError("mismatched denominator tags")
        return other

    def _raise_to(self, p):
        return self.num * self.denom ** (p - self.power) if p > self.power else self.num

    def __add__(self, other):
        other = self._check(other)
        p = max(self.power, other.power)
        return LocalElement(self._raise_to(p) + other._raise_to(p), p, self.denom)

    __radd__ = __add__

    def __neg__(self):
        return LocalElement(-self.num, self.power, self.denom)

    def __sub__(self, other):
        return self + (-self._check(other))

    def __mul__(self, other):
        if isinstance(other, (Scalar, int)):
            return LocalElement(self.num * other, self.power, self.denom)
        other = self._check(other)
        return LocalElement(self.num * other.num, self.power + other.power, self.denom)

    def __rmul__(self, other):
        if isinstance(other, (Scalar, int)):
            return LocalElement(self.num * other, self.power, self.denom)
        return self._check(other) * self

    def __eq__(self, other):
        other = self._check(other)
        return (self.num * self.denom ** other.power
                - other.num * self.denom ** self.power).is_zero()

    __hash__ = None

    def is_zero(self):
        return self.num.is_zero()

    def __repr__(self):
        return f"LocalElement(({self.num}) / denom^{self.power})"


def local_arith(a, b, op):
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")


def local_eq(a, b):
    return a == b


def sign_power(n):
    return mqpow(n)
