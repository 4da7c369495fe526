from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st
from strategies import laurent

from qminors import identities as ids
from qminors.identities import IdentityDescriptor, IdentityError, Minor
from qminors.parser import parse_expression
from qminors.scalars import ONE, q


@st.composite
def descriptors(draw):
    kind = draw(st.sampled_from(ids.KINDS))
    N = draw(st.integers(2, 6))
    sizes = [k for k in range(N + 1) if kind == "sdet" or k % 2 == 0]
    subsets = [S for k in sizes for S in combinations(range(1, N + 1), k)]
    den = draw(st.sampled_from(subsets)) if draw(st.booleans()) else None
    terms = []
    for _ in range(draw(st.integers(1, 3))):
        c = draw(laurent().filter(lambda s: not s.is_zero()))
        fs = [Minor(draw(st.sampled_from(subsets))) for _ in range(draw(st.integers(0, 3)))]
        if den is not None and draw(st.booleans()):
            fs.insert(0, Minor(den, True))
        terms.append((c, fs))
    return IdentityDescriptor(kind, N, terms)


@given(descriptors())
def test_descriptor_text_round_trip(d):
    text = ids.format_descriptor(d)
    back = ids.parse_descriptor(text)
    assert ids.format_descriptor(back) == text
    assert back.kind == d.kind or not any(fs for _, fs in d.terms)
    assert [(c, fs) for c, fs in back.terms] == [(c, fs) for c, fs in d.terms]


def test_text_forms():
    d = ids.parse_descriptor("N=3: sdet[1]*sdet[1,2] - sdet[1,2]*sdet[1]")
    assert str(d) == "N=3: sdet[1]*sdet[1,2] - sdet[1,2]*sdet[1]"
    e = ids.parse_descriptor("N=2: sdet[1,2]^-1*sdet[] - (q + 1)*sdet[1] = 0")
    assert e.denominator == (1, 2)
    assert e.terms[1][0] == -(q + 1)
    assert str(e) == "N=2: sdet[1,2]^-1*sdet[] + (-q - 1)*sdet[1]"
    assert str(ids.parse_descriptor(str(e))) == str(e)


@pytest.mark.parametrize("src", [
    "sdet[1]",                                # no N
    "N=2: sdet[1,3]",                         # out of range
    "N=2: sdet[2,1]",                         # not increasing
    "N=4: pf[1,2,3]",                         # odd Pfaffian
    "N=4: pf[1,2] - sdet[1]",                 # mixed kinds
    "N=3: sdet[1]^-1 - sdet[2]^-1",           # two denominators
    "N=3: zz*sdet[1]",                        # bad coefficient
])
def test_malformed_descriptors(src):
    with pytest.raises(IdentityError):
        ids.parse_descriptor(src)


def test_evaluate_examples():
    assert ids.evaluate_identity(ids.parse_descriptor("N=3: sdet[1,2] - sdet[1,2]"), "O")
    nested = ids.parse_descriptor("N=3: sdet[1]*sdet[1,2] - sdet[1,2]*sdet[1]")
    assert ids.evaluate_identity(nested, "O")
    assert not ids.evaluate_identity(ids.perturb(nested), "O")


def test_non_commuting_pair_is_false():
    # x11 and x22 do not commute, so this "identity" must fail
    assert not ids.evaluate_identity(ids.parse_descriptor("N=2: sdet[1]*sdet[2] - sdet[2]*sdet[1]"))


def test_clearing_refuses_non_commuting_denominator():
    d = ids.parse_descriptor("N=3: sdet[1]^-1*sdet[2] - sdet[1]^-1*sdet[2]")
    with pytest.raises(IdentityError):
        ids.evaluate_identity(d)


def test_minor_value_checks_case():
    with pytest.raises(IdentityError):
        ids.minor_value("pf", "O", 4, (1, 2))


def test_catalog_size_and_truth():
    for kind in ids.KINDS:
        seeds = ids.seed_catalog(kind)
        assert len(seeds) >= 3
        for d in seeds:
            assert ids.evaluate_identity(d), str(d)


def test_cayley_examples():
    triv = ids.parse_descriptor("N=3: sdet[1,2] - sdet[1,2]")
    assert str(ids.cayley_transform(triv)) == "N=3: sdet[1,2,3]^-1*sdet[3] - sdet[1,2,3]^-1*sdet[3]"
    nested = ids.parse_descriptor("N=3: sdet[1]*sdet[1,2] - sdet[1,2]*sdet[1]")
    comp = ids.cayley_transform(nested)
    assert comp.index_sets() == [[(2, 3), (3,)], [(3,), (2, 3)]]
    assert ids.evaluate_identity(comp)
    pf_triv = ids.cayley_transform(ids.parse_descriptor("N=4: pf[1,2] - pf[1,2]"))
    assert pf_triv.index_sets() == [[(3, 4)], [(3, 4)]]
    assert ids.evaluate_identity(pf_triv)


def test_cayley_bars_coefficients():
    d = ids.parse_descriptor("N=4: pf[1,2,3,4] - pf[1,2]*pf[3,4] + q*pf[1,3]*pf[2,4] - q^2*pf[1,4]*pf[2,3]")
    c = ids.cayley_transform(d)
    assert [t[0] for t in c.terms] == [ONE, -ONE, q**-1, -q**-2]


def test_cayley_rejects_inverses():
    with pytest.raises(IdentityError):
        ids.cayley_transform(ids.parse_descriptor("N=2: sdet[1,2]^-1*sdet[1] - sdet[1,2]^-1*sdet[1]"))


@pytest.mark.parametrize("d", ids.seed_catalog(), ids=str)
def test_cayley_is_an_involution_on_index_sets(d):
    assert ids.cayley_is_involution(d)


def test_muir_examples():
    triv = ids.parse_descriptor("N=2: pf[1,2] - pf[1,2]")
    with pytest.raises(IdentityError):
        ids.muir_law_transform(triv, (3,))
    with pytest.raises(IdentityError):
        ids.muir_law_transform(triv, (2, 3))
    lifted = ids.muir_law_transform(triv, (3, 4))
    assert str(lifted) == "N=4: pf[3,4]^-1*pf[1,2,3,4] - pf[3,4]^-1*pf[1,2,3,4]"
    assert ids.evaluate_identity(lifted)
    nested = ids.parse_descriptor("N=2: sdet[1]*sdet[1,2] - sdet[1,2]*sdet[1]")
    up = ids.muir_law_transform(nested, (3,))
    assert up.N == 3 and ids.evaluate_identity(up)
    assert ids.muir_border(nested) == (3,)


def test_jacobi_examples():
    assert ids.jacobi_check("sdet", "O", 2, (1,))
    assert ids.jacobi_check("sdet", "Sp", 4, (1, 2))
    assert ids.jacobi_check("pf", "Sp", 4, (1, 2))
    with pytest.raises(IdentityError):
        ids.jacobi_terms("pf", "Sp", 4, (1,))


def test_jacobi_small_example_by_hand():
    from qminors.ncalg import make_presentation
    lhs, rhs = ids.jacobi_terms("sdet", "O", 2, (1,))
    x11 = make_presentation("O", 2).generator("x", 1, 1)
    d = ids.minor_value("sdet", "O", 2, (1, 2))
    assert lhs == rhs == x11 * d


@pytest.mark.parametrize("case,N,k", [("O", 2, 1), ("O", 2, 2), ("Sp", 2, 2)])
def test_trace_identity(case, N, k):
    assert ids.muir_trace_check(case, N, k)


def test_trace_identity_k1_is_trace_minus_trace():
    parts = ids.muir_trace_terms("O", 2, 1)
    for first, second in parts:
        assert first == -second
        assert first == parse_expression("x[1,1] + x[2,2]", first.pres)


def test_trace_identity_negative_control():
    assert not ids.muir_trace_check("O", 2, 2, scale_term=1)
    with pytest.raises(IdentityError):
        ids.muir_trace_check("O", 2, 3)


def test_sylvester_pf_trivial_case():
    Xt, J = ids.sylvester_matrix("pf", "Sp", 2, 2)
    assert J == (3, 4)
    assert Xt[(1, 2)] == ids.minor_value("pf", "Sp", 4, (1, 2, 3, 4))
    assert ids.sylvester_check("pf", "Sp", 2, 2)


def test_sylvester_border_arbitration():
    assert ids.sylvester_check("sdet", "O", 2, 2, border="trailing")
    assert not ids.sylvester_check("sdet", "O", 2, 1, border="literal")
    assert ids.sylvester_check("sdet", "O", 2, 1, border="trailing")


def test_sylvester_parity():
    with pytest.raises(IdentityError):
        ids.sylvester_matrix("pf", "Sp", 2, 1)
    with pytest.raises(IdentityError):
        ids.sylvester_matrix("sdet", "O", 2, 1, border="sideways")


def test_gp_conventions(frozen):
    report = ids.gp_convention_report(1, 1)
    assert report == {"statement": False, "proof": True}
    lhs, rhs = ids.gp_terms(1, 1, "statement")
    factor = parse_expression(frozen["gp_n1m1"]["statement_factor"], lhs.pres)
    assert rhs == factor * lhs
    with pytest.raises(IdentityError):
        ids.gp_terms(2, 1)


@pytest.mark.parametrize("n,m", [(1, 3), (3, 1)])
def test_gp_proof_convention(n, m):
    assert ids.grassmann_plucker_check(n, m, "proof")
    assert not ids.grassmann_plucker_check(n, m, "statement")


def test_theta_values(frozen):
    for key, theta in frozen["theta"].items():
        sigma = tuple(map(int, key.split(",")))
        assert sum(th for _, _, th in ids.quasidet_chain("pf", 4, sigma)) == theta


def test_valid_orders():
    orders = ids.valid_pf_orders(4)
    assert len(orders) == 6
    with pytest.raises(IdentityError):
        ids.quasidet_chain("pf", 4, (2, 1, 3, 4))
    with pytest.raises(IdentityError):
        ids.quasidet_chain("sdet", 3, (1, 1, 2))


def test_quasidet_small():
    assert ids.quasidet_factorization_check("sdet", "O", 2, (1, 2))
    assert ids.quasidet_factorization_check("sdet", "O", 2, (2, 1))
    assert ids.quasidet_factorization_check("pf", "Sp", 4, (1, 2, 3, 4))


def test_quasidet_wrong_theta_rejected():
    S = (1, 2, 3, 4)
    assert ids.quasidet_validate("pf", "Sp", 4, S, (2, 4), 1)
    assert not ids.quasidet_validate("pf", "Sp", 4, S, (2, 4), 0)
