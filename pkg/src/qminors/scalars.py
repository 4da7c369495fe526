"""Exact rational functions in a fixed set of commuting variables.

A :class:`Scalar` is a quotient of two Laurent polynomials with rational
coefficients.  The overwhelmingly common case is a plain Laurent polynomial
in ``q``; that case never touches a gcd.  Genuine fractions are reduced with
sympy's sparse polynomial gcd and normalized so that the denominator is a
content-free polynomial (no negative exponents, not divisible by any single
variable) whose lexicographically leading coefficient is 1.

Monomials are exponent tuples over :data:`VARIABLES` with trailing zeros
stripped, so ``q**3`` is ``(3,)`` and the constant monomial is ``()``.
"""

from fractions import Fraction
from functools import lru_cache

VARIABLES = ("q", "l", "m") + tuple(f"a{i}" for i in range(1, 9))
_VARINDEX = {name: k for k, name in enumerate(VARIABLES)}


class ScalarError(ArithmeticError):
    pass


def _norm_coeff(c):
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


def _strip(exps):
    n = len(exps)
    while n and exps[n - 1] == 0:
        n -= 1
    return tuple(exps[:n])


def _mono_mul(a, b):
    if not a:
        return b
    if not b:
        return a
    if len(a) == 1 and len(b) == 1:
        s = a[0] + b[0]
        return (s,) if s else ()
    if len(a) < len(b):
        a, b = b, a
    r = list(a)
    for i, e in enumerate(b):
        r[i] += e
    return _strip(r)


def _mono_neg(a):
    return tuple(-e for e in a)


# --- Laurent polynomials as {monomial: coefficient} dicts -----------------


def _lp_add(a, b, sign=1):
    r = dict(a)
    for m, c in b.items():
        v = r.get(m, 0) + sign * c
        if v:
            r[m] = _norm_coeff(v)
        else:
            r.pop(m, None)
    return r


def _lp_mul(a, b):
    if len(a) == 1 and len(b) == 1:
        (ma, ca), = a.items()
        (mb, cb), = b.items()
        return {_mono_mul(ma, mb): _norm_coeff(ca * cb)}
    r = {}
    for ma, ca in a.items():
        for mb, cb in b.items():
            m = _mono_mul(ma, mb)
            v = r.get(m, 0) + ca * cb
            if v:
                r[m] = v
            else:
                del r[m]
    return {m: _norm_coeff(c) for m, c in r.items()}


def _lp_scale(a, c, mono=()):
    if c == 0:
        return {}
    return {_mono_mul(m, mono): _norm_coeff(v * c) for m, v in a.items()}


def _lp_min_exps(a):
    width = max((len(m) for m in a), default=0)
    mins = [0] * width
    first = True
    for m in a:
        padded = list(m) + [0] * (width - len(m))
        if first:
            mins = padded
            first = False
        else:
            mins = [min(x, y) for x, y in zip(mins, padded)]
    return _strip(mins)


def _lead(a):
    """Lexicographically leading monomial over the padded exponent vector."""
    width = len(VARIABLES)
    return max(a, key=lambda m: tuple(m) + (0,) * (width - len(m)))


@lru_cache(maxsize=1)
def _ring():
    from sympy.polys.domains import QQ
    from sympy.polys.rings import ring

    R, *_ = ring(",".join(VARIABLES), QQ)
    return R


def _to_sympy(a):
    from sympy.polys.domains import QQ

    R = _ring()
    width = len(VARIABLES)
    return R.from_dict(
        {tuple(m) + (0,) * (width - len(m)): QQ(c.numerator, c.denominator)
         if isinstance(c, Fraction) else QQ(c) for m, c in a.items()}
    )


def _from_sympy(p):
    out = {}
    for exps, c in p.items():
        out[_strip(list(exps))] = _norm_coeff(Fraction(int(c.numerator), int(c.denominator)))
    return out


def _canonical(num, den):
    """Reduce num/den and return (num, den) with den None when it is 1."""
    if not num:
        return {}, None
    if not den:
        raise ScalarError("division by zero Scalar")
    if len(den) == 1:
        (m, c), = den.items()
        return _lp_scale(num, Fraction(1) / c, _mono_neg(m)), None
    shift = _mono_neg(_lp_min_exps(den))
    den = _lp_scale(den, 1, shift)
    num = _lp_scale(num, 1, shift)
    nshift = _lp_min_exps(num)
    num_poly = _lp_scale(num, 1, _mono_neg(nshift))
    P, D = _to_sympy(num_poly), _to_sympy(den)
    g = P.gcd(D)
    if not g.is_ground:
        P = P.exquo(g)
        D = D.exquo(g)
    num = _lp_scale(_from_sympy(P), 1, nshift)
    den = _from_sympy(D)
    if len(den) == 1:
        return _canonical(num, den)
    lc = den[_lead(den)]
    if lc != 1:
        inv = Fraction(1) / Fraction(lc)
        num = _lp_scale(num, inv)
        den = _lp_scale(den, inv)
    return num, den


class Scalar:
    """Immutable exact rational function.  Compare with ``==``; hashable."""

    __slots__ = ("num", "den")

    def __init__(self, num=None, den=None, _canon=False):
        num = {} if num is None else num
        if den is not None and not _canon:
            num, den = _canonical(num, den)
        self.num = num
        self.den = den

    # construction
    @classmethod
    def const(cls, c):
        c = _norm_coeff(Fraction(c)) if not isinstance(c, int) else c
        return cls({(): c} if c else {})

    @classmethod
    def var(cls, name, exp=1):
        k = _VARINDEX[name]
        mono = [0] * (k + 1)
        mono[k] = exp
        return cls({_strip(mono): 1})

    @classmethod
    def coerce(cls, x):
        if isinstance(x, Scalar):
            return x
        if isinstance(x, (int, Fraction)):
            return cls.const(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to Scalar")

    # predicates
    def is_zero(self):
        return not self.num

    def __bool__(self):
        return bool(self.num)

    def is_laurent(self):
        return self.den is None

    def is_one(self):
        return self.den is None and self.num == {(): 1}

    def variables(self):
        found = set()
        for part in (self.num, self.den or {}):
            for m in part:
                found.update(VARIABLES[k] for k, e in enumerate(m) if e)
        return found

    # arithmetic
    def __add__(self, other):
        if not isinstance(other, Scalar):
            if isinstance(other, (int, Fraction)):
                other = Scalar.const(other)
            else:
                return NotImplemented
        if self.den is None and other.den is None:
            return Scalar(_lp_add(self.num, other.num))
        if self.den == other.den:
            return Scalar(_lp_add(self.num, other.num), self.den)
        sd = self.den or {(): 1}
        od = other.den or {(): 1}
        return Scalar(_lp_add(_lp_mul(self.num, od), _lp_mul(other.num, sd)), _lp_mul(sd, od))

    __radd__ = __add__

    def __neg__(self):
        return Scalar({m: -c for m, c in self.num.items()}, self.den, _canon=True)

    def __sub__(self, other):
        if not isinstance(other, (Scalar, int, Fraction)):
            return NotImplemented
        return self + (-Scalar.coerce(other))

    def __rsub__(self, other):
        return Scalar.coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Scalar):
            if isinstance(other, (int, Fraction)):
                if other == 0:
                    return ZERO
                return Scalar(_lp_scale(self.num, other), self.den, _canon=True)
            return NotImplemented
        if not self.num or not other.num:
            return ZERO
        if self.den is None and other.den is None:
            return Scalar(_lp_mul(self.num, other.num))
        sd = self.den or {(): 1}
        od = other.den or {(): 1}
        return Scalar(_lp_mul(self.num, other.num), _lp_mul(sd, od))

    __rmul__ = __mul__

    def inverse(self):
        if not self.num:
            raise ScalarError("division by zero Scalar")
        return Scalar(self.den or {(): 1}, self.num)

    def __truediv__(self, other):
        other = Scalar.coerce(other) if not isinstance(other, Scalar) else other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return Scalar.coerce(other) * self.inverse()

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # equality
    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Scalar.const(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((frozenset(self.num.items()),
                     frozenset(self.den.items()) if self.den else None))

    # transformations
    def bar(self):
        """Substitute q -> 1/q; other variables are untouched."""

        def flip(p):
            return {(_strip((-m[0],) + m[1:]) if m else m): c for m, c in p.items()}

        if self.den is None:
            return Scalar(flip(self.num))
        return Scalar(flip(self.num), flip(self.den))

    def evaluate(self, values):
        """Evaluate at a rational point ``values`` (name -> number)."""
        point = [Fraction(values.get(v, 1)) for v in VARIABLES]

        def ev(p):
            total = Fraction(0)
            for m, c in p.items():
                t = Fraction(c)
                for k, e in enumerate(m):
                    if e:
                        t *= point[k] ** e
                total += t
            return total

        d = ev(self.den) if self.den else Fraction(1)
        if d == 0:
            raise ScalarError("denominator vanishes at evaluation point")
        return ev(self.num) / d

    def laurent_terms(self):
        if self.den is not None:
            raise ScalarError("not a Laurent polynomial")
        return dict(self.num)

    # printing
    def __str__(self):
        s = _lp_str(self.num)
        if self.den is None:
            return s
        num = s if len(self.num) == 1 else f"({s})"
        return f"{num}/({_lp_str(self.den)})"

    def __repr__(self):
        return f"Scalar({self})"

    def needs_parens(self):
        return self.den is not None or len(self.num) > 1


def _mono_str(m):
    parts = []
    for k, e in enumerate(m):
        if e == 0:
            continue
        parts.append(VARIABLES[k] if e == 1 else f"{VARIABLES[k]}^{e}")
    return "*".join(parts)


def _term_order(m):
    width = len(VARIABLES)
    padded = tuple(m) + (0,) * (width - len(m))
    return (-sum(m), tuple(-e for e in padded))


def _lp_str(p):
    if not p:
        return "0"
    out = []
    for m in sorted(p, key=_term_order):
        c = p[m]
        neg = c < 0
        a = -c if neg else c
        ms = _mono_str(m)
        if not ms:
            body = str(a)
        elif a == 1:
            body = ms
        elif isinstance(a, Fraction):
            body = f"({a})*{ms}"
        else:
            body = f"{a}*{ms}"
        if not out:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


ZERO = Scalar()
ONE = Scalar({(): 1})
q = Scalar.var("q")
qinv = Scalar.var("q", -1)


def qpow(n):
    return Scalar({(n,) if n else (): 1})


def mqpow(n):
    """(-q)**n as a Laurent monomial."""
    return Scalar({(n,) if n else (): -1 if n % 2 else 1})


def a_var(i):
    return Scalar.var(f"a{i}")


def q_number(n, base):
    """[n]_v = 1 + v + ... + v^(n-1)."""
    base = Scalar.coerce(base)
    total, power = ZERO, ONE
    for _ in range(n):
        total = total + power
        power = power * base
    return total


def q_factorial(n, base):
    result = ONE
    for k in range(1, n + 1):
        result = result * q_number(k, base)
    return result


def gauss_number(n):
    """(q^n - q^-n)/(q - q^-1), a Laurent polynomial for n >= 0."""
    return Scalar({(k,) if k else (): 1 for k in range(-(n - 1), n, 2)}) if n > 0 else ZERO


def bar_involution(a):
    return Scalar.coerce(a).bar()


def scalar_arith(a, b, op):
    a, b = Scalar.coerce(a), Scalar.coerce(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown op {op!r}")
