"""Recursive-descent parser for scalar and algebra-element expressions.

Accepts everything the printers emit: integers, rationals via '/', the
variables q, l, m, a1..a8, generators ``x[i,j]``, ``t[i,j]``, ``u[i,j]``,
``v[i,j]``, ``y[i]``, the operators ``+ - * / ^`` (negative exponents on
scalars) and parentheses.
"""

import re

from .ncalg import Element, PresentationError, canonicalize_generator
from .scalars import VARIABLES, Scalar, ScalarError

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z]\w*)|(\S))")
_FAMILIES = {"x", "t", "u", "v", "y"}


class ParseError(ValueError):
    def __init__(self, msg, src, pos):
        line = src.count("\n", 0, pos) + 1
        col = pos - (src.rfind("\n", 0, pos) + 1) + 1
        super().__init__(f"{msg} at line {line}, column {col}")
        self.line, self.column = line, col


class _Parser:
    def __init__(self, src, pres):
        self.src = src
        self.pres = pres
        self.toks = []
        pos = 0
        while True:
            m = _TOKEN.match(src, pos)
            if not m or m.end() == pos:
                break
            start = m.start(m.lastindex)
            kind = ("num", "name", "op")[m.lastindex - 1]
            self.toks.append((kind, m.group(m.lastindex), start))
            pos = m.end()
        if src[pos:].strip():
            raise ParseError("unexpected character", src, pos)
        self.toks.append(("end", "", len(src)))
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self, value=None):
        tok = self.toks[self.i]
        if value is not None and tok[1] != value:
            self.fail(f"expected {value!r}", tok)
        self.i += 1
        return tok

    def fail(self, msg, tok=None):
        tok = tok or self.peek()
        raise ParseError(f"{msg}, found {tok[1]!r}" if tok[1] else f"{msg}, found end of input",
                         self.src, tok[2])

    # expr := term (('+'|'-') term)*
    def expr(self):
        if self.peek()[1] in "+-" and self.peek()[0] == "op":
            sign = self.take()[1]
            value = self.term()
            if sign == "-":
                value = -value
        else:
            value = self.term()
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            op = self.take()[1]
            rhs = self.term()
            value = _add(value, rhs) if op == "+" else _add(value, -rhs)
        return value

    # term := power (('*'|'/') power)*
    def term(self):
        value = self.power()
        while self.peek()[0] == "op" and self.peek()[1] in "*/":
            tok = self.take()
            rhs = self.power()
            if tok[1] == "*":
                value = _mul(value, rhs)
            else:
                if isinstance(rhs, Element):
                    self.fail("cannot divide by an algebra element", tok)
                if rhs.is_zero():
                    raise ParseError("division by zero", self.src, tok[2])
                value = value / rhs
        return value

    # power := atom ('^' ['-'] nat)?
    def power(self):
        if self.peek()[1] == "-" and self.peek()[0] == "op":
            self.take()
            return -self.power()
        base = self.atom()
        if self.peek()[1] == "^":
            self.take()
            neg = False
            if self.peek()[1] == "-":
                self.take()
                neg = True
            tok = self.take()
            if tok[0] != "num":
                self.fail("expected an integer exponent", tok)
            n = int(tok[1])
            if neg:
                if isinstance(base, Element):
                    self.fail("negative powers of algebra elements are not defined", tok)
                return base ** (-n)
            if isinstance(base, Element):
                out = base.pres.one()
                for _ in range(n):
                    out = _mul(out, base)
                return out
            return base ** n
        return base

    def atom(self):
        kind, val, pos = self.peek()
        if kind == "num":
            self.take()
            return Scalar.const(int(val))
        if kind == "op" and val == "(":
            self.take()
            inner = self.expr()
            self.take(")")
            return inner
        if kind == "name":
            if val in _FAMILIES and self.toks[self.i + 1][1] == "[":
                return self.generator()
            if val in VARIABLES:
                self.take()
                return Scalar.var(val)
            self.fail("unknown name")
        self.fail("unexpected token")

    def generator(self):
        fam_tok = self.take()
        fam = fam_tok[1]
        self.take("[")
        idx = [self._nat()]
        while self.peek()[1] == ",":
            self.take()
            idx.append(self._nat())
        self.take("]")
        if self.pres is None:
            raise ParseError("generators need a presentation", self.src, fam_tok[2])
        if fam == "y" and len(idx) != 1 or fam != "y" and len(idx) != 2:
            raise ParseError(f"wrong number of indices for {fam}", self.src, fam_tok[2])
        if not any(g.family == fam for g in self.pres.gens):
            raise ParseError(f"family {fam!r} does not belong to {self.pres.name}",
                             self.src, fam_tok[2])
        try:
            if fam == "y":
                if not 1 <= idx[0] <= self.pres.N:
                    raise PresentationError(f"index {idx[0]} out of range")
                return self.pres.generator("y", idx[0])
            return canonicalize_generator(self.pres, fam, idx[0], idx[1])
        except (PresentationError, KeyError) as exc:
            raise ParseError(str(exc), self.src, fam_tok[2]) from None

    def _nat(self):
        tok = self.take()
        if tok[0] != "num":
            self.fail("expected an index", tok)
        return int(tok[1])


def _mul(a, b):
    """Product that concatenates words without reordering them."""
    if isinstance(a, Element) and isinstance(b, Element):
        terms = {}
        for u, cu in a.terms.items():
            for v, cv in b.terms.items():
                w = u + v
                c = terms.get(w)
                terms[w] = cu * cv if c is None else c + cu * cv
        return Element.raw(a.pres, {w: c for w, c in terms.items() if not c.is_zero()})
    return a * b


def _add(a, b):
    if isinstance(a, Element) or not isinstance(b, Element):
        return a + b
    return b + a


def parse_expression(src, pres=None):
    """Parse ``src`` into an Element of ``pres`` (or a Scalar if it has no generators).

    Generators are canonicalized but products are kept as written; call
    ``normal_form`` (or compare) to reduce them.
    """
    p = _Parser(src, pres)
    if p.peek()[0] == "end":
        p.fail("empty expression")
    try:
        value = p.expr()
    except ScalarError as exc:
        raise ParseError(str(exc), src, p.peek()[2]) from None
    if p.peek()[0] != "end":
        p.fail("unexpected trailing input")
    if pres is not None and not isinstance(value, Element):
        value = pres.scalar(value)
    return value


def parse_scalar(src):
    value = parse_expression(src, None)
    if isinstance(value, Element):
        raise ParseError("expected a scalar", src, 0)
    return value
