import pytest

from ppw import modules as md
from ppw.preproj import WordAlgebra
from ppw.quiver import builtin_quiver
from ppw.thick import CertificateError, certify_thick_generation, check_ses, tilting_vanishing

TRIANGLE = builtin_quiver("triangle")
RUNNING = (1, 2, 3, 1, 2, 1)


def _simple(W, u, d=0):
    return md.GradedModule(W.algebra, {(u, d): 1}, {}, f"S{u}({d})")


def test_certificate_running_word():
    r = certify_thick_generation(WordAlgebra(TRIANGLE, RUNNING))
    assert r["passed"] and r["kq_certified"]
    assert r["window"] == [-3, 3]
    # only S1 lies in Sub here; the other simples are reported, not certified
    assert all(s.startswith("S1(") for s in r["simples_certified"])
    assert len(r["simples_not_in_sub"]) == 14


@pytest.mark.parametrize("name,w", [("A2", (1, 2, 1)), ("A3", (2, 3, 2)), ("kronecker", (1, 2, 1, 2))])
def test_certificate_small_words(name, w):
    assert certify_thick_generation(WordAlgebra(builtin_quiver(name), w))["passed"]


@pytest.mark.parametrize("name,w", [("triangle", RUNNING), ("A3", (1, 2, 3, 1, 2, 1)),
                                    ("kronecker", (1, 2, 1, 2, 1))])
def test_vanishing_for_M(name, w):
    r = tilting_vanishing(WordAlgebra(builtin_quiver(name), w))
    assert r["passed"] and r["nonzero"] == []


def test_vanishing_detects_extensions():
    # one degree-0 arrow between 1 and 2 gives one extension between the simples
    W = WordAlgebra(builtin_quiver("A3"), (1, 2, 3, 1, 2, 1))
    M = md.direct_sum([_simple(W, 1), _simple(W, 2)], "M").module
    r = tilting_vanishing(W, M)
    assert not r["passed"]
    first = r["nonzero"][0]
    assert first["j"] == 1 and first["to"] + first["from"] == 1


def test_check_ses_accepts_projective_cover():
    W = WordAlgebra(TRIANGLE, RUNNING)
    X = md.summand_Mi(W, 1)
    P, p = md.projective_cover(X)
    K, k = md.kernel(p)
    assert not K.is_zero()
    check_ses(k, p, K, P, X)


def test_check_ses_rejects_wrong_order():
    W = WordAlgebra(TRIANGLE, RUNNING)
    X = md.summand_Mi(W, 1)
    P, p = md.projective_cover(X)
    K, k = md.kernel(p)
    with pytest.raises(CertificateError):
        check_ses(k, md.zero_map(P, X), K, P, X)
    with pytest.raises(CertificateError):
        check_ses(p, k, P, X, K)
