import pytest
from hypothesis import given
from hypothesis import strategies as st
from strategies import PRESENTATIONS, elements, presentation_strategy

from qminors.matrix_algebra import default_a, phi_embed, phi_images
from qminors.ncalg import (
    Element,
    LocalElement,
    LocalizationError,
    PresentationError,
    basis_enumerate,
    canonicalize_generator,
    is_central,
    local_arith,
    local_eq,
    make_presentation,
    normal_form,
)
from qminors.parser import parse_expression
from qminors.scalars import q, qinv
from qminors.sklyanin import sdet
from qminors.pfaffian import pf
from qminors.verifiers import run_verifier


def P(name, N):
    return make_presentation(name, N)


def ex(src, pres):
    return parse_expression(src, pres)


def test_mat_same_row_rule():
    M = P("Mat", 2)
    assert normal_form(ex("t[1,2]*t[1,1]", M)) == ex("q^-1*t[1,1]*t[1,2]", M)


def test_mat_diagonal_rule():
    M = P("Mat", 2)
    assert normal_form(ex("t[2,2]*t[1,1]", M)) == \
        ex("t[1,1]*t[2,2] - (q - q^-1)*t[1,2]*t[2,1]", M)


def test_orthogonal_diagonal_rule():
    O = P("O", 2)
    assert normal_form(ex("x[2,2]*x[1,1]", O)) == \
        ex("x[1,1]*x[2,2] - q^-1*(q^2 - q^-2)*x[1,2]^2", O)


def test_mat_commuting_pair():
    M = P("Mat", 2)
    e = normal_form(ex("t[2,1]*t[1,2]", M))
    assert e == ex("t[1,2]*t[2,1]", M)
    assert str(e) == "t[1,2]*t[2,1]"


def test_ordered_word_is_fixed():
    O = P("O", 2)
    e = ex("x[1,1]", O)
    assert normal_form(e) == e and str(normal_form(e)) == "x[1,1]"


def test_symplectic_q_commutation():
    S = P("Sp", 4)
    assert normal_form(ex("x[1,3]*x[1,2]", S)) == ex("q^-1*x[1,2]*x[1,3]", S)


def test_canonicalize_generator():
    O, S = P("O", 3), P("Sp", 4)
    assert canonicalize_generator(O, "x", 2, 1) == O.generator("x", 1, 2) * qinv
    assert canonicalize_generator(S, "x", 3, 3).is_zero()
    assert canonicalize_generator(S, "x", 2, 1) == S.generator("x", 1, 2) * (-q)
    with pytest.raises(PresentationError):
        canonicalize_generator(O, "x", 4, 1)


def test_odd_symplectic_rejected():
    with pytest.raises(PresentationError):
        make_presentation("Sp", 3)


def test_exterior_rules():
    E = P("Ext", 3)
    assert normal_form(ex("y[2]*y[2]", E)).is_zero()
    assert normal_form(ex("y[3]*y[1]", E)) == ex("-q*y[1]*y[3]", E)


@pytest.mark.parametrize("name,N,d,expected", [
    ("Sp", 2, 2, ["1", "x[1,2]", "x[1,2]^2"]),
    ("O", 2, 1, ["1", "x[1,1]", "x[1,2]", "x[2,2]"]),
    ("Mat", 2, 1, ["1", "t[1,1]", "t[1,2]", "t[2,1]", "t[2,2]"]),
])
def test_basis_examples(name, N, d, expected):
    assert [str(b) for b in basis_enumerate(P(name, N), d)] == expected


def test_basis_counts_match_commutative_monomials():
    # a PBW basis has the same Hilbert series as the polynomial ring
    from math import comb
    pres = P("O", 3)
    n = len(pres.gens)
    assert len(basis_enumerate(pres, 3)) == sum(comb(n + k - 1, k) for k in range(4))


def test_is_central_examples():
    O3, S4 = P("O", 3), P("Sp", 4)
    assert is_central(sdet("O", 3))
    assert is_central(pf(4))
    assert not is_central(S4.generator("x", 1, 2), [S4.generator("x", 1, 3)])
    assert not is_central(O3.generator("x", 1, 1))


def test_local_elements():
    O = P("O", 2)
    d = sdet("O", 2)
    x11, x12 = O.generator("x", 1, 1), O.generator("x", 1, 2)
    a, b = LocalElement(x11, 1, d), LocalElement(x12, 1, d)
    prod = local_arith(a, b, "mul")
    assert prod.power == 2 and prod.num == x11 * x12
    assert local_eq(LocalElement(d * x11, 1, d), LocalElement(x11, 0, d))
    assert local_eq(LocalElement(O.zero(), 3, d), LocalElement(O.zero(), 0, d))
    assert local_eq(local_arith(a, a, "add"), LocalElement(x11 * 2, 1, d))
    other = LocalElement(x11, 1, x11)
    with pytest.raises(LocalizationError):
        a + other
    with pytest.raises(LocalizationError):
        LocalElement(x11, -1, d)


@given(st.data())
def test_normal_form_idempotent_and_ordered(data):
    pres = data.draw(presentation_strategy())
    e = data.draw(elements(pres, max_len=4))
    nf = normal_form(e)
    assert normal_form(nf) == nf
    assert all(pres.is_ordered(w) for w in nf.terms)


@given(st.data())
def test_normal_form_linear(data):
    pres = data.draw(presentation_strategy())
    a = data.draw(elements(pres))
    b = data.draw(elements(pres))
    raw_sum = Element.raw(pres, {**a.terms})
    for w, c in b.terms.items():
        raw_sum = Element.raw(pres, {**raw_sum.terms, w: raw_sum.terms.get(w, 0 * q) + c})
    assert normal_form(raw_sum) == normal_form(a) + normal_form(b)


@pytest.mark.parametrize("name,N", PRESENTATIONS)
def test_associativity_on_all_generator_triples(name, N):
    pres = P(name, N)
    gens = pres.generator_elements()
    if len(gens) > 6:
        gens = gens[:3] + gens[-3:]
    for a in gens:
        for b in gens:
            for c in gens:
                assert a * (b * c) == (a * b) * c


@pytest.mark.parametrize("name,N", [("Mat", 2), ("Mat", 3), ("Ext", 3)])
def test_rtt_relations_reduce_to_zero(name, N):
    assert run_verifier("rtt", name, N).holds


@pytest.mark.parametrize("name,N", [("O", 2), ("O", 3), ("Sp", 2), ("Sp", 4)])
def test_reflection_relations_reduce_to_zero(name, N):
    assert run_verifier("reflection", name, N).holds


def _phi_of_raw(e, images, mat):
    total = mat.zero()
    for w, c in e.terms.items():
        term = mat.one()
        for g in w:
            term = term * images[g]
        total = total + term.scale(c)
    return total


@pytest.mark.parametrize("name,N", [("O", 2), ("O", 3), ("Sp", 2), ("Sp", 4)])
@given(data=st.data())
def test_embedding_oracle_agrees_with_rewriting(name, N, data):
    pres = P(name, N)
    images = phi_images(name, N, default_a(N, name, symbolic=True))
    e = data.draw(elements(pres, max_terms=2, max_len=3))
    a = default_a(N, name, symbolic=True)
    assert phi_embed(normal_form(e), a) == _phi_of_raw(e, images, P("Mat", N))
