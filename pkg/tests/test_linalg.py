from fractions import Fraction

from hypothesis import given, settings, strategies as st

from ppw import linalg as la


def test_field_parsing():
    assert la.field_from_spec("rat") is la.QQ
    F = la.field_from_spec("gfp:7")
    assert F.p == 7 and F.coerce(Fraction(1, 2)) == 4


def test_rref_and_nullspace():
    a = la.mat([[1, 2, 3], [2, 4, 6], [1, 0, 1]])
    r, piv = la.rref(la.QQ, a)
    assert piv == [0, 1]
    K = la.nullspace(la.QQ, a)
    assert K.shape == (3, 1)
    assert la.is_zero(la.mul(la.QQ, a, K))


def test_solve_and_inverse():
    a = la.mat([[2, 1], [1, 1]])
    inv = la.inverse(la.QQ, a)
    assert (la.mul(la.QQ, a, inv) == la.eye(2)).all()
    assert la.solve(la.QQ, a, la.mat([[3], [2]]))[:, 0].tolist() == [1, 1]
    assert la.solve(la.QQ, la.mat([[1], [1]]), la.mat([[1], [2]])) is None


def test_subspace_operations():
    S = la.Subspace.span(la.QQ, 3, la.mat([[1, 1, 0], [2, 2, 0]]))
    assert S.dim == 1
    assert S.contains(la.QQ, la.mat([[3], [3], [0]]))
    assert len(S.quotient_coords()) == 2


def test_prime_field_rank_differs_from_rationals():
    a = la.mat([[1, 1], [1, 3]])
    assert la.rank(la.QQ, a) == 2
    assert la.rank(la.PrimeField(2), la.reduce_array(la.PrimeField(2), a)) == 1


@st.composite
def low_rank(draw):
    r = draw(st.integers(1, 24))
    c = draw(st.integers(1, 24))
    k = draw(st.integers(0, min(r, c)))
    ent = st.fractions(min_value=-4, max_value=4, max_denominator=5)
    A = [[draw(ent) for _ in range(k)] for _ in range(r)]
    B = [[draw(ent) for _ in range(c)] for _ in range(k)]
    if not k:
        return la.zeros(r, c)
    return la.mul(la.QQ, la.mat(A), la.mat(B))


@settings(max_examples=60, deadline=None)
@given(low_rank())
def test_rank_fast_path_matches_elimination(m):
    # the modular shortcut must agree with plain elimination
    assert la.rank(la.QQ, m) == len(la.rref(la.QQ, m if m.shape[0] <= m.shape[1] else m.T)[1])


@settings(max_examples=40, deadline=None)
@given(low_rank())
def test_nullspace_dimension(m):
    K = la.nullspace(la.QQ, m)
    assert K.shape[1] == m.shape[1] - la.rank(la.QQ, m)
    if K.shape[1]:
        assert la.is_zero(la.mul(la.QQ, m, K))
