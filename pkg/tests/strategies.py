"""Hypothesis strategies for scalars and algebra elements."""

from hypothesis import strategies as st

from qminors.ncalg import Element, make_presentation
from qminors.scalars import Scalar, qpow

coeffs = st.integers(min_value=-4, max_value=4)
exps = st.integers(min_value=-3, max_value=3)


@st.composite
def laurent(draw, max_terms=3, variables=("q",)):
    total = Scalar()
    for _ in range(draw(st.integers(0, max_terms))):
        term = Scalar.const(draw(coeffs))
        for v in variables:
            e = draw(exps)
            term = term * (qpow(e) if v == "q" else Scalar.var(v) ** abs(e))
        total = total + term
    return total


@st.composite
def scalars(draw, variables=("q",)):
    num = draw(laurent(variables=variables))
    den = draw(laurent(variables=variables).filter(lambda s: not s.is_zero()))
    return num / den


nonzero_scalars = scalars().filter(lambda s: not s.is_zero())


@st.composite
def words(draw, pres, max_len=3):
    n = len(pres.gens)
    return tuple(draw(st.lists(st.integers(0, n - 1), min_size=0, max_size=max_len)))


@st.composite
def elements(draw, pres, max_terms=3, max_len=3):
    terms = {}
    for _ in range(draw(st.integers(1, max_terms))):
        w = draw(words(pres, max_len))
        terms[w] = terms.get(w, Scalar()) + draw(laurent(max_terms=2))
    return Element.raw(pres, terms)


PRESENTATIONS = [("Mat", 2), ("Mat", 3), ("O", 2), ("O", 3), ("Sp", 2), ("Sp", 4), ("Ext", 3)]


def presentation_strategy():
    return st.sampled_from(PRESENTATIONS).map(lambda p: make_presentation(*p))
