import pytest

from qminors import tensorops as to
from qminors.ncalg import make_presentation
from qminors.parser import parse_expression
from qminors.scalars import ONE, Scalar, q, qinv
from qminors.verifiers import run_verifier

lam, mu = Scalar.var("l"), Scalar.var("m")


def e(*idx):
    return {tuple(idx): ONE}


def test_r_diagonal_entry():
    assert to.build_basic("R", 2).entry((1, 1), (1, 1)) == q


@pytest.mark.parametrize("N", [2, 3])
def test_r_minus_inverts_r(N):
    assert to.build_basic("R", N) @ to.build_basic("Rminus", N) == to.TensorOp.identity(N, 2)


def test_rhat_at_q_inverse():
    out = to.build_basic("Rhat", 2, lam=qinv).apply(e(1, 2))
    assert out == {(1, 2): 1 - q**-2, (2, 1): qinv - q}


def test_unknown_kind():
    with pytest.raises(ValueError):
        to.build_basic("nope", 2)


def test_partial_transpose_twice_gives_rplus():
    assert to.r_t1(3).partial_transpose(2) == to.r_plus(3)


def test_antisymmetrizer_tilde_on_e12():
    assert to.antisymmetrizer_tilde(2, 2).apply(e(1, 2)) == {(1, 2): ONE, (2, 1): -q}


@pytest.mark.parametrize("m", [2, 3])
def test_antisymmetrizer_idempotent(m):
    A = to.antisymmetrizer(3, m)
    assert A @ A == A


@pytest.mark.parametrize("N", [2, 3])
def test_a2_is_normalized_rhat(N):
    assert to.antisymmetrizer(N, 2) == to.r_hat(N, qinv).scale((q**2 - q**-2).inverse())


@pytest.mark.parametrize("N,m", [(N, m) for N in (2, 3, 4) for m in range(2, 5) if m <= N])
def test_antisymmetrizer_recursion_matches_double_sum(N, m):
    assert to.antisymmetrizer_recursive(N, m) == to.antisymmetrizer(N, m)


def test_symmetrizer_idempotent_and_orthogonal():
    S, A = to.symmetrizer(3, 3), to.antisymmetrizer(3, 3)
    assert S @ S == S
    assert (A @ S).is_zero() and (S @ A).is_zero()


def test_tilde_is_factorial_multiple():
    A, At = to.antisymmetrizer(3, 3), to.antisymmetrizer_tilde(3, 3)
    assert A.scale(to.q_factorial(3, q**2)) == At


def test_bracket_m1_is_x():
    O = make_presentation("O", 2)
    X = O.matrix("x")
    B = to.bracket(X, m=1)
    assert all(B.entry((i,), (j,)) == X[(i, j)] for i in (1, 2) for j in (1, 2))


def test_bracket_m2_on_e12():
    M = make_presentation("Mat", 2)
    T = M.matrix("t")
    out = to.bracket(T, m=2).apply({(1, 2): M.one()})
    expected = {(1, 1): "q*t[1,1]*t[1,2]", (1, 2): "t[1,1]*t[2,2]",
                (2, 1): "q*t[2,1]*t[1,2]", (2, 2): "t[2,1]*t[2,2]"}
    assert set(out) == set(expected)
    for k, src in expected.items():
        assert out[k] == parse_expression(src, M)


@pytest.mark.parametrize("case,N,m", [("O", 2, 2), ("O", 3, 2), ("O", 3, 3), ("Sp", 4, 2)])
def test_antisymmetrizer_commutes_with_bracket(case, N, m):
    X = make_presentation(case, N).matrix("x")
    B = to.bracket(X, m=m)
    A = to.antisymmetrizer_tilde(N, m)
    assert A @ B == B @ A


def test_traces():
    assert to.partial_trace(to.TensorOp.identity(2, 2)) == 4
    assert to.partial_trace(to.build_basic("P", 2)) == 2
    O = make_presentation("O", 2)
    tr = to.partial_trace(to.matrix_op(O.matrix("x")), zero=O.zero())
    assert tr == parse_expression("x[1,1] + x[2,2]", O)
    with pytest.raises(ValueError):
        to.partial_trace(to.TensorOp.identity(2, 2), factors=[1])


@pytest.mark.parametrize("N", [2, 3])
def test_ybe_formal(N):
    assert run_verifier("ybe", "Mat", N).holds
    assert run_verifier("braid", "Mat", N).holds


@pytest.mark.parametrize("N", [2, 3])
def test_variant_ybe(N):
    def Rt(i, j):
        return to.r_t1(N).embed(3, (i, j))
    R = lambda i, j: to.r_matrix(N).embed(3, (i, j))  # noqa: E731
    assert R(1, 2) @ Rt(1, 3) @ Rt(2, 3) == Rt(2, 3) @ Rt(1, 3) @ R(1, 2)


@pytest.mark.parametrize("case", ["O", "Sp"])
def test_scalar_reflection_for_j_symbolic(case):
    N = 2 if case == "Sp" else 3
    a = [Scalar.var(f"a{k}") for k in range(1, (N if case == "O" else N // 2) + 1)]
    J = to.j_matrix(N, case, a)
    R, Rt = to.r_matrix(N), to.r_t1(N)
    J1, J2 = J.embed(2, (1,)), J.embed(2, (2,))
    assert R @ J1 @ Rt @ J2 == J2 @ Rt @ J1 @ R


@pytest.mark.parametrize("N", [2, 3])
def test_transpose_rtt_companion(N):
    M = make_presentation("Mat", N)
    T = to.matrix_op(M.matrix("t"))
    Tt1 = T.partial_transpose(1).embed(2, (1,))
    T2 = T.embed(2, (2,))
    Rt = to.r_t1(N)
    assert Tt1 @ Rt @ T2 == T2 @ Rt @ Tt1
