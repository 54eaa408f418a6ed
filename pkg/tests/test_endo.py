import itertools

import pytest

from ppw.endo import (algebra_invariants, build_Qw, compare_F, global_dimension,
                      hereditary_quotient_Bw, negative_arrow_audit, negative_degree_factoring,
                      presentation_from_table, presented_dimension, qw_matches_end_quiver,
                      radical_layers, reflection_reduction_check, same_algebra,
                      stable_endomorphism_algebra)
from ppw.preproj import WordAlgebra
from ppw.quiver import builtin_quiver

TRIANGLE = builtin_quiver("triangle")
KRON = builtin_quiver("kronecker")
RUNNING = (1, 2, 3, 1, 2, 1)


@pytest.fixture(scope="module")
def W():
    return WordAlgebra(TRIANGLE, RUNNING)


@pytest.fixture(scope="module")
def A(W):
    return stable_endomorphism_algebra(W)


def commuting_word_classes(L):
    """Words in {a,b}^L up to the moves aa <-> bb at adjacent positions."""
    seen, classes = set(), 0
    for w in itertools.product("ab", repeat=L):
        if w in seen:
            continue
        classes += 1
        todo = [w]
        while todo:
            x = todo.pop()
            if x in seen:
                continue
            seen.add(x)
            for i in range(L - 1):
                if x[i] == x[i + 1]:
                    y = "b" if x[i] == "a" else "a"
                    todo.append(x[:i] + (y, y) + x[i + 2:])
    return classes


def doubled_chain_dim(n):
    # 2n vertices, two arrows between neighbours, relations a_k a_{k+1} = b_k b_{k+1}
    return sum((2 * n - L) * commuting_word_classes(L) for L in range(2 * n))


def test_qw_running_word():
    P = build_Qw(TRIANGLE, RUNNING)
    audit = negative_arrow_audit(P, TRIANGLE)
    assert audit["passed"] and audit["sortable"]
    assert audit["negative"] == [(3, 6, -1)]


def test_qw_audit_flags_non_sorting_word():
    audit = negative_arrow_audit(build_Qw(TRIANGLE, (1, 2, 3, 2, 1, 2)), TRIANGLE)
    assert not audit["passed"] and not audit["sortable"]
    assert audit["violations"]


def test_qw_matches_gabriel_quiver(W):
    assert qw_matches_end_quiver(W)["passed"]


def test_running_word_algebra(A):
    assert A.dim == 5
    P = presentation_from_table(A)
    assert P.relation_strings() == ["a*b"]
    assert presented_dimension(P) == 5
    assert global_dimension(A) == 2
    assert radical_layers(A) == [3, 2]


def test_running_word_equals_hereditary_quotient(W, A):
    r = same_algebra(A, hereditary_quotient_Bw(W))
    assert r["same"]
    assert r["invariants_a"] == algebra_invariants(A)


def test_functor_F_is_an_isomorphism(W):
    r = compare_F(W)
    assert r["passed"] and r["stable_dim"] == r["quotient_dim"] == 5


def test_negative_degree_maps_factor(W):
    r = negative_degree_factoring(W)
    assert r["passed"] and r["negative_maps"] > 0


def test_reflection_reduction_dimensions():
    r = reflection_reduction_check(TRIANGLE, RUNNING)
    assert r["passed"]
    assert (r["end"], r["quotient"], r["reduced"]) == (29, 17, 17)


def test_word_class_oracle():
    assert [commuting_word_classes(L) for L in range(5)] == [1, 2, 3, 4, 5]


@pytest.mark.parametrize("n", [1, 2, 3])
def test_kronecker_power_algebras(n):
    Wk = WordAlgebra(KRON, (1, 2) * (n + 1))
    Ak = stable_endomorphism_algebra(Wk)
    assert Ak.dim == doubled_chain_dim(n)
    P = presentation_from_table(Ak)
    assert P.relation_strings() == [f"a_{k}*a_{k + 1} - b_{k}*b_{k + 1}" for k in range(1, 2 * n - 1)]
    assert presented_dimension(P) == Ak.dim
    # no relations at n = 1, so the algebra is hereditary there
    assert global_dimension(Ak) == (1 if n == 1 else 2)
