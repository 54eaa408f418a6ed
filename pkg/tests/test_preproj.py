import pytest
from hypothesis import given, settings, strategies as st

from ppw.coxeter import CoxeterGroup, sortable_factorize
from ppw.preproj import (WordAlgebra, build_truncated_preprojective, ideal_for_word, ideal_product,
                         ideal_vertex, power_of_c_vs_radical, preprojective_dim_oracle,
                         quotient_algebra, radical_power, truncate_prefix_check)
from ppw.quiver import builtin_quiver

TRIANGLE = builtin_quiver("triangle")
KRON = builtin_quiver("kronecker")


def test_a2_basis():
    A = build_truncated_preprojective(builtin_quiver("A2"), 2)
    assert [A.dim(d) for d in range(3)] == [3, 1, 0]


def test_kronecker_column_dimensions():
    A = build_truncated_preprojective(KRON, 6)
    assert [A.dim_column(1, d) for d in range(7)] == [4 * d + 1 for d in range(7)]
    assert [A.dim_column(2, d) for d in range(7)] == [4 * d + 3 for d in range(7)]


def test_kronecker_path_length_layers():
    # paths of length L from a vertex: L + 1 of them
    A = build_truncated_preprojective(KRON, 2)
    lengths = {}
    for key in A.keys():
        a, b, L, d = key
        if b == 1:
            lengths[L] = lengths.get(L, 0) + A.cdim(key)
    assert [lengths[L] for L in range(5)] == [1, 2, 3, 4, 5]


@pytest.mark.parametrize("name", ["A2", "A3", "D4", "kronecker"])
def test_dimension_oracle(name):
    q = builtin_quiver(name)
    A = build_truncated_preprojective(q, 5)
    for u in q.vertices:
        assert [A.dim_column(u, d) for d in range(6)] == [preprojective_dim_oracle(q, d, u) for d in range(6)]


def test_dynkin_sequences_vanish():
    q = builtin_quiver("A3")
    assert [preprojective_dim_oracle(q, d, 1) for d in range(6)] == [1, 1, 1, 0, 0, 0]


def test_vertex_ideal_and_product():
    A = build_truncated_preprojective(builtin_quiver("A2"), 3)
    I1 = ideal_vertex(A, 1)
    I2 = ideal_vertex(A, 2)
    assert I1.closed_under_arrows() and I2.closed_under_arrows()
    I12 = ideal_product(I1, I2)
    assert I12.same_as(ideal_for_word(A, (1, 2)))
    assert I1.contains(I12)


PAIRS = [
    ("triangle", (1, 2, 3, 1, 2, 1), (1, 2, 3, 2, 1, 2)),
    ("A3", (1, 2, 1), (2, 1, 2)),
    ("A3", (1, 3), (3, 1)),
    ("A3", (1, 2, 3, 1), (1, 2, 1, 3)),
    ("triangle", (2, 3, 2), (3, 2, 3)),
    ("A4", (1, 2, 3, 2), (1, 3, 2, 3)),
    ("D4", (2, 1, 2), (1, 2, 1)),
]


@pytest.mark.parametrize("name, w1, w2", PAIRS)
def test_ideal_independent_of_expression(name, w1, w2):
    q = builtin_quiver(name)
    G = CoxeterGroup(q)
    assert w1 != w2 and (G.element(w1) == G.element(w2)).all()
    A = build_truncated_preprojective(q, len(w1) + 1)
    assert ideal_for_word(A, w1).same_as(ideal_for_word(A, w2))


def test_ideal_distinguishes_elements():
    A = build_truncated_preprojective(builtin_quiver("A3"), 4)
    assert not ideal_for_word(A, (1, 2)).same_as(ideal_for_word(A, (2, 1)))


def _reduced_expressions(G, w):
    """All reduced words for the element of w (small groups only)."""
    target = tuple(G.element(w).flat)
    out = []

    def walk(prefix):
        if len(prefix) == len(w):
            if tuple(G.element(prefix).flat) == target:
                out.append(prefix)
            return
        for u in G.vertices:
            x = prefix + (u,)
            if G.is_reduced(x):
                walk(x)
    walk(())
    return out


@settings(max_examples=25, deadline=None)
@given(st.lists(st.sampled_from([1, 2, 3]), max_size=6), st.data())
def test_random_expressions_give_equal_ideals(letters, data):
    q = builtin_quiver("triangle")
    G = CoxeterGroup(q)
    w = ()
    for u in letters:
        if G.is_reduced(w + (u,)):
            w += (u,)
    exprs = _reduced_expressions(G, w)
    other = data.draw(st.sampled_from(exprs))
    A = build_truncated_preprojective(q, len(w) + 1)
    assert ideal_for_word(A, w).same_as(ideal_for_word(A, other))


def test_word_algebra_running_example():
    W = WordAlgebra(TRIANGLE, (1, 2, 3, 1, 2, 1))
    assert W.bound == 2
    assert W.p == {1: 6, 2: 5, 3: 3}
    assert W.algebra.dim() == 8 + 9 + 4


def test_prefix_truncation():
    W = WordAlgebra(TRIANGLE, (1, 2, 3, 1, 2, 1))
    rep = truncate_prefix_check(W.factorization, W.pi)
    assert rep["pass"]
    assert [len(r["dims"]) for r in rep["table"]] == [1, 2, 3]


def test_quotient_dimension_sums_components():
    W = WordAlgebra(KRON, (1, 2, 1, 2))
    Q = quotient_algebra(W.pi, W.ideal)
    assert Q.dim() == W.pi.dim() - W.ideal.dim()


@pytest.mark.parametrize("n", [1, 2, 3])
def test_powers_of_c_are_radical_powers(n):
    W = WordAlgebra(KRON, (1, 2) * (n + 1))
    rep = power_of_c_vs_radical(W)
    assert rep["passed"]
    # paths of length < k ending at a vertex: k (k + 1) / 2
    for row in rep["rows"]:
        i = row["i"]
        assert row["dim_s"] == [i * (2 * i - 1)] * 2
        assert row["dim_t"] == [i * (2 * i + 1)] * 2


def test_radical_power_mismatch_detected():
    W = WordAlgebra(KRON, (1, 2, 1, 2))
    from ppw.preproj import column_agrees
    assert not column_agrees(W.ideal_of((1, 2)), radical_power(W.pi, 2), 1)


def test_not_reduced_word_rejected():
    with pytest.raises(ValueError):
        WordAlgebra(TRIANGLE, (1, 1))
