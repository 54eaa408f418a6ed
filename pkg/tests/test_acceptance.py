"""End-to-end acceptance runs; each test records one PASS/FAIL line for the summary."""
from collections import Counter

import pytest

from conftest import CRITERIA
from ppw import diagram
from ppw.coxeter import CoxeterGroup, sortable_factorize, sortable_words
from ppw.endo import (compare_F, global_dimension, hereditary_quotient_Bw, presentation_from_table,
                      presented_dimension, reflection_reduction_check, stable_endomorphism_algebra)
from ppw.hereditary import (gldim_bound_check, layer_identification, reduction_functor_check,
                            tilting_modules, word_tilting_check)
from ppw.preproj import (WordAlgebra, build_truncated_preprojective, ideal_for_word,
                         power_of_c_vs_radical, preprojective_dim_oracle)
from ppw.quiver import DYNKIN, admissible_coxeter_word, builtin_quiver
from ppw.thick import certify_thick_generation, tilting_vanishing

TRIANGLE = builtin_quiver("triangle")
RUNNING = (1, 2, 3, 1, 2, 1)
CORPUS = (("A2", 6), ("A3", 6), ("kronecker", 8))
ORACLE_QUIVERS = ("A2", "A3", "A4", "D4", "kronecker", "triangle")
PAIRS = [
    ("triangle", (1, 2, 3, 1, 2, 1), (1, 2, 3, 2, 1, 2)),
    ("A3", (1, 2, 1), (2, 1, 2)),
    ("A3", (1, 3), (3, 1)),
    ("A3", (1, 2, 3, 1), (1, 2, 1, 3)),
    ("triangle", (2, 3, 2), (3, 2, 3)),
    ("A4", (1, 2, 3, 2), (1, 3, 2, 3)),
    ("D4", (2, 1, 2), (1, 2, 1)),
]


def corpus_words():
    for name, L in CORPUS:
        q = builtin_quiver(name)
        for f in sortable_words(q, admissible_coxeter_word(q), L):
            yield name, q, tuple(f.word)


def record(n, problems, detail):
    ok = not problems
    CRITERIA[n] = (ok, detail if ok else "; ".join(problems[:4]))
    assert ok, problems


def test_criterion_1_running_word(triangle_golden):
    problems = []
    f = sortable_factorize(TRIANGLE, RUNNING, admissible_coxeter_word(TRIANGLE))
    if not f or [tuple(b) for b in f.blocks] != [(1, 2, 3), (1, 2), (1,)]:
        problems.append("factorization")
    W = WordAlgebra(TRIANGLE, RUNNING)
    for u, X in diagram.piw_projectives(W).items():
        layers = [Counter({(v, d): n for v, d, n in layer}) for layer in diagram.layers_of(X)]
        if layers != triangle_golden[u]:
            problems.append(f"diagram e{u}")
    T = word_tilting_check(W)
    if not T["passed"]:
        problems.append("T not tilting")
    lid = layer_identification(W)
    if not lid["passed"] or sorted(v["position"] for v in lid["vertices"].values()) != [3, 5, 6]:
        problems.append("T summands are not L3, L5, L6")
    A, B = stable_endomorphism_algebra(W), hereditary_quotient_Bw(W)
    if (A.dim, B.dim) != (5, 5):
        problems.append(f"dims {A.dim}, {B.dim}")
    if not compare_F(W)["passed"]:
        problems.append("F not an isomorphism")
    line = "quiver { v1 v2 v3; a: v1 -> v2 deg 0; b: v2 -> v3 deg 0; } relations { a*b; }"
    for name, X in (("A_w", A), ("B_w", B)):
        if presentation_from_table(X).to_text() != line:
            problems.append(f"{name} presentation")
    g = global_dimension(A)
    if g != 2:
        problems.append(f"gl.dim {g}")
    record(1, problems, "factorization, diagrams, T, A_w = B_w = 1->2->3 / ab, gl.dim 2")


def test_criterion_2_kronecker_family():
    problems = []
    q = builtin_quiver("kronecker")
    for n in (1, 2, 3):
        W = WordAlgebra(q, (1, 2) * (n + 1))
        cols = power_of_c_vs_radical(W)
        if not cols["passed"]:
            problems.append(f"n={n}: columns differ from radical powers")
        A = stable_endomorphism_algebra(W)
        P = presentation_from_table(A)
        arrows = sorted(a[0] for a in P.arrows)
        want_arrows = sorted([f"a_{k}" for k in range(1, 2 * n)] + [f"b_{k}" for k in range(1, 2 * n)])
        want_rel = [f"a_{k}*a_{k + 1} - b_{k}*b_{k + 1}" for k in range(1, 2 * n - 1)]
        if len(P.vertices) != 2 * n or arrows != want_arrows or P.relation_strings() != want_rel:
            problems.append(f"n={n}: presentation {P.to_text()}")
        if presented_dimension(P) != A.dim:
            problems.append(f"n={n}: presented dim")
        g = global_dimension(A)
        if g != 2:
            problems.append(f"n={n}: gl.dim {g}")
    record(2, problems, "n = 1, 2, 3: columns, doubled-arrow presentations, gl.dim 2")


def test_criterion_3_tilting_axioms():
    problems, count = [], 0
    for name, q, w in corpus_words():
        W = WordAlgebra(q, w)
        if not tilting_vanishing(W)["passed"]:
            problems.append(f"{name} {w}: stable Hom nonzero")
        if not certify_thick_generation(W)["passed"]:
            problems.append(f"{name} {w}: not certified")
        count += 1
    record(3, problems, f"{count} corpus words: vanishing and thick generation")


def test_criterion_4_ideal_independence():
    problems = []
    for name, w1, w2 in PAIRS:
        q = builtin_quiver(name)
        G = CoxeterGroup(q)
        if w1 == w2 or not (G.element(w1) == G.element(w2)).all():
            problems.append(f"{name} {w1} {w2}: not the same element")
            continue
        A = build_truncated_preprojective(q, len(w1) + 1)
        if not ideal_for_word(A, w1).same_as(ideal_for_word(A, w2)):
            problems.append(f"{name} {w1} {w2}: ideals differ")
    record(4, problems, f"{len(PAIRS)} pairs give identical ideals")


def test_criterion_5_dimension_oracle():
    problems = []
    for name in ORACLE_QUIVERS:
        q = builtin_quiver(name)
        A = build_truncated_preprojective(q, 8)
        for u in q.vertices:
            got = [A.dim_column(u, d) for d in range(9)]
            want = [preprojective_dim_oracle(q, d, u) for d in range(9)]
            if got != want:
                problems.append(f"{name} e{u}: {got} vs {want}")
            if name in DYNKIN:
                first = got.index(0) if 0 in got else None
                if first is None or any(got[first:]):
                    problems.append(f"{name} e{u}: does not vanish")
    record(5, problems, f"d <= 8 on {', '.join(ORACLE_QUIVERS)}")


def test_criterion_6_word_tilting():
    problems, count = [], 0
    for name, q, w in [("triangle", TRIANGLE, RUNNING)] + list(corpus_words()):
        W = WordAlgebra(q, w)
        if not word_tilting_check(W)["passed"]:
            problems.append(f"{name} {w}: T")
        if not layer_identification(W)["passed"]:
            problems.append(f"{name} {w}: layer")
        count += 1
    record(6, problems, f"{count} words: Ext^1(T,T) = 0, |Supp w| summands, layer isomorphisms")


def test_criterion_7_reduction():
    problems, count = [], 0
    for name, q, w in [("triangle", TRIANGLE, RUNNING)] + list(corpus_words()):
        if len(w) < 2:
            continue
        if not reflection_reduction_check(q, w)["passed"]:
            problems.append(f"{name} {w}: dimensions")
        if not reduction_functor_check(q, w)["passed"]:
            problems.append(f"{name} {w}: functor")
        count += 1
    record(7, problems, f"{count} words: quotient dimensions, G(M^1) = 0, G(M^j), square")


def test_criterion_8_cotilting_bound():
    problems, count = [], 0
    for name in ("A2", "A3"):
        q = builtin_quiver(name)
        for T in tilting_modules(q):
            r = gldim_bound_check(q, T, randoms=20)
            if not r["passed"] or r["gldim"] > 2:
                problems.append(f"{name} T={[X.total_dim for X in T]}: {r}")
            count += 1
    record(8, problems, f"{count} tilting modules over A2, A3")
