import pytest
from hypothesis import given, settings, strategies as st

from ppw.quiver import (QuiverError, admissible_coxeter_word, builtin_quiver, enumerate_paths,
                        parse_quiver, reflect_at, support_subquiver, Quiver)


def test_parse_minimal():
    q = parse_quiver("vertices: 1 2; arrows: a: 1 -> 2")
    assert q.vertices == (1, 2)
    assert [(a.name, a.source, a.target) for a in q.arrows] == [("a", 1, 2)]


def test_parse_three_vertex_quiver():
    q = parse_quiver("vertices: 1 2 3; arrows: a: 1->2; b: 2->3; c: 1->3")
    assert q.signature() == builtin_quiver("triangle").signature()


def test_parse_rejects_loop():
    with pytest.raises(QuiverError, match="loop"):
        parse_quiver("vertices: 1; arrows: a: 1 -> 1")


def test_parse_rejects_cycle():
    with pytest.raises(QuiverError, match="cycle"):
        parse_quiver("vertices: 1 2; arrows: a: 1 -> 2; b: 2 -> 1")


def test_parse_error_has_position():
    with pytest.raises(QuiverError, match="line 2, column"):
        parse_quiver("vertices: 1 2\narrows: a: 1 => 2")


def test_quiver_files_load():
    from pathlib import Path
    root = Path(__file__).resolve().parents[1] / "quivers"
    for name, builtin in [("triangle", "triangle"), ("a3", "A3"), ("kronecker", "kronecker")]:
        q = parse_quiver((root / f"{name}.quiver").read_text())
        assert q.signature() == builtin_quiver(builtin).signature()


@pytest.mark.parametrize("name, word", [("triangle", (1, 2, 3)), ("kronecker", (1, 2)), ("A1", (1,)),
                                        ("D4", (1, 3, 4, 2))])
def test_admissible_word(name, word):
    assert admissible_coxeter_word(builtin_quiver(name)) == word


def _names(dq, paths):
    return sorted(p.names(dq) for p in paths)


def test_enumerate_paths_a2():
    dq = builtin_quiver("A2").double
    assert len(enumerate_paths(dq, 1, 1, 1)) == 2
    assert len(enumerate_paths(dq, 1, 2, 0)) == 1


def test_enumerate_paths_kronecker_loops():
    dq = builtin_quiver("kronecker").double
    ps = enumerate_paths(dq, 1, 1, 1)
    assert len(ps) == 5
    assert sorted(p.degree for p in ps) == [0, 1, 1, 1, 1]


def test_support_subquiver():
    q = builtin_quiver("triangle")
    assert support_subquiver(q, {1, 2, 3}).signature() == q.signature()
    assert [(a.source, a.target) for a in support_subquiver(q, {1, 2}).arrows] == [(1, 2)]
    assert [(a.name, a.source, a.target) for a in support_subquiver(q, {1, 3}).arrows] == [("c", 1, 3)]
    with pytest.raises(QuiverError):
        support_subquiver(q, {7})


def test_reflect_at_source():
    q = reflect_at(builtin_quiver("A3"), 1)
    assert sorted((a.source, a.target) for a in q.arrows) == [(2, 1), (2, 3)]


@st.composite
def acyclic_quivers(draw):
    n = draw(st.integers(1, 5))
    perm = draw(st.permutations(list(range(1, n + 1))))
    pairs = [(perm[i], perm[j]) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), max_size=6)) if pairs else []
    arrows = [(f"x{k}", s, t) for k, (s, t) in enumerate(chosen)]
    return Quiver.build(range(1, n + 1), arrows)


@settings(max_examples=60, deadline=None)
@given(acyclic_quivers())
def test_admissible_order_has_no_backward_arrow(q):
    w = admissible_coxeter_word(q)
    pos = {u: i for i, u in enumerate(w)}
    assert sorted(w) == list(q.vertices)
    assert all(pos[a.source] < pos[a.target] for a in q.arrows)


@settings(max_examples=40, deadline=None)
@given(acyclic_quivers(), st.integers(0, 2))
def test_path_degree_counts_starred_arrows(q, d):
    dq = q.double
    for u in q.vertices:
        for v in q.vertices:
            for p in enumerate_paths(dq, u, v, d):
                assert p.degree == sum(dq.arrows[i].deg for i in p.arrows) <= d
                for r in enumerate_paths(dq, v, v, 1)[:3]:
                    pr = p.compose(r)
                    assert pr.degree == p.degree + r.degree
