import pytest
from hypothesis import given, settings, strategies as st

from ppw.coxeter import (CoxeterGroup, brute_force_elements, brute_force_sortable_count, element_of,
                         is_reduced, parse_word, sortable_factorize, sortable_words, support,
                         word_stats)
from ppw.quiver import admissible_coxeter_word, builtin_quiver

A3 = builtin_quiver("A3")
TRIANGLE = builtin_quiver("triangle")
KRON = builtin_quiver("kronecker")


def test_parse_word():
    assert parse_word("1 2, 3") == (1, 2, 3)
    with pytest.raises(ValueError):
        parse_word("1 x")


def test_reduced_words():
    assert is_reduced(A3, (1, 2, 3, 1, 2, 1))
    assert not is_reduced(A3, (1, 1))
    assert not is_reduced(A3, (1, 2, 1, 2))
    assert is_reduced(KRON, (1, 2) * 5)


def test_braid_relation_gives_same_element():
    assert (element_of(A3, (1, 2, 1)) == element_of(A3, (2, 1, 2))).all()
    assert (element_of(A3, (1, 3)) == element_of(A3, (3, 1))).all()
    assert not (element_of(A3, (1, 2)) == element_of(A3, (2, 1))).all()


def test_support():
    assert support((1, 2, 1)) == frozenset({1, 2})
    assert support(()) == frozenset()


def test_factorization_of_running_example():
    f = sortable_factorize(TRIANGLE, (1, 2, 3, 1, 2, 1), (1, 2, 3))
    assert f.blocks == ((1, 2, 3), (1, 2), (1,))
    assert f.m == 2
    assert str(f) == "c0=1 2 3 | c1=1 2 | c2=1"
    assert f.prefix_word(1) == (1, 2, 3, 1, 2)


def test_other_expression_sorts_to_same_blocks():
    f = sortable_factorize(TRIANGLE, (1, 2, 3, 2, 1, 2), (1, 2, 3))
    assert f.word == (1, 2, 3, 1, 2, 1)


def test_single_block_and_failure():
    assert sortable_factorize(A3, (2, 3), (1, 2, 3)).blocks == ((2, 3),)
    fail = sortable_factorize(A3, (2, 1), (1, 2, 3))
    assert not fail and fail.block == 1 and fail.blocks == ((2,), (1,))


def test_not_reduced_raises():
    with pytest.raises(ValueError, match="not reduced"):
        sortable_factorize(A3, (1, 1), (1, 2, 3))


def test_word_stats():
    p, m = word_stats((1, 2, 3, 1, 2, 1))
    assert p == {1: 6, 2: 5, 3: 3}
    assert m == (0, 0, 0, 1, 1, 2)


def test_sortable_counts_are_catalan():
    # with the identity, c-sortable elements of A_n number Catalan(n + 1)
    assert len(sortable_words(builtin_quiver("A2"), (1, 2), 3)) + 1 == 5
    assert len(sortable_words(A3, (1, 2, 3), 6)) + 1 == 14
    assert len(sortable_words(builtin_quiver("A4"), (1, 2, 3, 4), 10)) + 1 == 42


@pytest.mark.parametrize("name, L", [("A2", 3), ("A3", 6), ("kronecker", 8), ("D4", 5)])
def test_sortable_enumeration_matches_brute_force(name, L):
    q = builtin_quiver(name)
    c = admissible_coxeter_word(q)
    assert len(sortable_words(q, c, L)) == brute_force_sortable_count(q, c, L)


def test_group_orders():
    assert brute_force_elements(builtin_quiver("A2"), 3) == 6
    assert brute_force_elements(A3, 6) == 24


def test_kronecker_sortable_words_are_prefixes_of_powers():
    words = [f.word for f in sortable_words(KRON, (1, 2), 8)]
    assert all(w == ((1, 2) * 4)[:len(w)] or w == (2,) for w in words)
    assert ((1, 2) * 4) in words


@st.composite
def reduced_words(draw, q, max_len=8):
    G = CoxeterGroup(q)
    w = ()
    for _ in range(draw(st.integers(0, max_len))):
        u = draw(st.sampled_from(q.vertices))
        if G.is_reduced(w + (u,)):
            w += (u,)
    return w


@settings(max_examples=80, deadline=None)
@given(st.sampled_from(["A3", "triangle", "kronecker", "D4"]).flatmap(
    lambda n: st.tuples(st.just(n), reduced_words(builtin_quiver(n)))))
def test_sorting_word_represents_element(data):
    name, w = data
    q = builtin_quiver(name)
    c = admissible_coxeter_word(q)
    f = sortable_factorize(q, w, c)
    blocks = f.blocks
    word = tuple(u for b in blocks for u in b)
    assert len(word) == len(w)
    assert (element_of(q, word) == element_of(q, w)).all()
    # each block is a subword of c
    for b in blocks:
        it = iter(c)
        assert all(u in it for u in b)
    if f:
        assert all(set(blocks[i]) <= set(blocks[i - 1]) for i in range(1, len(blocks)))
