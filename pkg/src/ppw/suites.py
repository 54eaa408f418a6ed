"""Verification suites run by ``ppw verify`` and ``ppw corpus``.

Each check yields a Verdict with status PASS, FAIL or SKIP and a short
machine-readable reason.  Data payloads are plain JSON-ready values.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from . import modules as md
from .coxeter import sortable_factorize
from .endo import (build_Qw, compare_F, global_dimension, hereditary_quotient_Bw,
                   negative_arrow_audit, negative_degree_factoring, presentation_from_table,
                   presented_dimension, qw_matches_end_quiver, reflection_reduction_check,
                   same_algebra, stable_endomorphism_algebra)
from .hereditary import layer_identification, reduction_functor_check, word_tilting_check
from .linalg import QQ, Field
from .preproj import WordAlgebra
from .quiver import Quiver, admissible_coxeter_word
from .thick import certify_thick_generation, tilting_vanishing

SUITES = ("tilting", "endalg", "gldim")
PASS, FAIL, SKIP = "PASS", "FAIL", "SKIP"


@dataclass
class Verdict:
    name: str
    status: str
    reason: str
    data: dict = field(default_factory=dict)
    seconds: float = 0.0

    def to_dict(self) -> dict:
        return {"name": self.name, "status": self.status, "reason": self.reason,
                "data": jsonable(self.data)}


def jsonable(x, F: Field = QQ):
    """Integers stay integers; other scalars become "num/den" strings."""
    if isinstance(x, bool) or x is None or isinstance(x, str):
        return x
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    if hasattr(x, "item") and not hasattr(x, "__len__"):  # numpy scalar
        return jsonable(x.item(), F)
    if isinstance(x, dict):
        return {str(k): jsonable(v, F) for k, v in x.items()}
    if isinstance(x, (list, tuple, set, frozenset)):
        items = sorted(x) if isinstance(x, (set, frozenset)) else x
        return [jsonable(v, F) for v in items]
    return str(x)


def _verdict(name: str, data: dict, ok_reason="ok", bad_reason="check-failed") -> Verdict:
    ok = bool(data.get("passed"))
    return Verdict(name, PASS if ok else FAIL, ok_reason if ok else bad_reason, data)


def _timed(fn: Callable[[], Verdict]) -> Verdict:
    t = time.perf_counter()
    try:
        v = fn()
    except Exception as exc:  # a crashed check is a failed check with its message
        v = Verdict(getattr(fn, "__name__", "check"), FAIL, "exception", {"error": repr(exc)})
    v.seconds = time.perf_counter() - t
    return v


class Context:
    """Shared, lazily built objects for one (quiver, word) pair."""

    def __init__(self, q: Quiver, w, F: Field = QQ, seed: int = 0):
        self.q, self.input_word, self.F, self.seed = q, tuple(w), F, seed
        self.c = admissible_coxeter_word(q)
        self.factorization = sortable_factorize(q, self.input_word, self.c)
        self._W = self._A = None

    @property
    def sortable(self) -> bool:
        return bool(self.factorization)

    @property
    def word(self) -> tuple:
        """The c-sorting word of the element (M is built from it)."""
        return tuple(self.factorization.word) if self.sortable else self.input_word

    @property
    def W(self) -> WordAlgebra:
        if self._W is None:
            self._W = WordAlgebra(self.q, self.word, self.F)
        return self._W

    @property
    def A(self):
        if self._A is None:
            self._A = stable_endomorphism_algebra(self.W)
        return self._A


# ------------------------------------------------------------------ suites

def suite_tilting(ctx: Context) -> list[Verdict]:
    W = ctx.W

    def vanishing():
        return _verdict("stable_hom_vanishing", tilting_vanishing(W), bad_reason="stable-hom-nonzero")

    def thick():
        r = certify_thick_generation(W, ctx.seed)
        r = {k: v for k, v in r.items() if k != "simples_certified"}
        return _verdict("thick_generation", r, bad_reason="not-certified")

    def hereditary_T():
        return _verdict("T_tilting_over_kQ", word_tilting_check(W, ctx.seed), bad_reason="not-tilting")

    def layers():
        return _verdict("layer_identification", layer_identification(W, ctx.seed), bad_reason="no-isomorphism")

    return [_timed(f) for f in (vanishing, thick, hereditary_T, layers)]


def suite_endalg(ctx: Context) -> list[Verdict]:
    W = ctx.W

    def presentation():
        A = ctx.A
        P = presentation_from_table(A)
        pd = presented_dimension(P)
        data = {"dim": A.dim, "presented_dim": pd, "presentation": P.to_text(),
                "relations": P.relation_strings(), "passed": pd == A.dim}
        return _verdict("A_w_presentation", data, bad_reason="presentation-dimension-mismatch")

    def functor_F():
        r = compare_F(W)
        return _verdict("F_isomorphism", r, bad_reason="F-not-bijective")

    def same():
        r = same_algebra(ctx.A, hereditary_quotient_Bw(W))
        r["passed"] = r["same"]
        return _verdict("A_w_equals_B_w", r, bad_reason="different-algebras")

    def qw():
        P = build_Qw(ctx.q, W.word)
        audit = negative_arrow_audit(P, ctx.q)
        match = qw_matches_end_quiver(W)
        data = {"Qw": P.to_text(), "audit": audit, "gabriel_match": match["passed"],
                "passed": audit["passed"] and match["passed"]}
        return _verdict("Qw_quiver", data, bad_reason="Qw-mismatch")

    def negative():
        return _verdict("negative_degrees_factor", negative_degree_factoring(W),
                        bad_reason="negative-map-not-factoring")

    def reduction():
        if len(W.word) < 2:
            return Verdict("reflection_reduction", SKIP, "single-letter-word")
        a = reflection_reduction_check(ctx.q, W.word, ctx.F)
        b = reduction_functor_check(ctx.q, W.word, ctx.F, ctx.seed)
        return _verdict("reflection_reduction", {"dimensions": a, "functor": b,
                                                 "passed": a["passed"] and b["passed"]},
                        bad_reason="reduction-mismatch")

    return [_timed(f) for f in (presentation, functor_F, same, qw, negative, reduction)]


def suite_gldim(ctx: Context) -> list[Verdict]:
    def gldim():
        A = ctx.A
        g = global_dimension(A)
        data = {"dim": A.dim, "gldim": g, "bound": 2, "passed": g is not None and g <= 2}
        reason = "ok" if data["passed"] else ("exceeds-cap" if g is None else "above-bound")
        return Verdict("gldim_A_w", PASS if data["passed"] else FAIL, reason, data)

    return [_timed(gldim)]


RUNNERS = {"tilting": suite_tilting, "endalg": suite_endalg, "gldim": suite_gldim}


def run_suites(ctx: Context, suites=SUITES) -> list[Verdict]:
    out = []
    for s in suites:
        if not ctx.sortable:
            out.append(Verdict(s, SKIP, "not c-sortable",
                               {"blocks": [list(b) for b in ctx.factorization.blocks]}))
            continue
        out.extend(RUNNERS[s](ctx))
    return out


def verify_word(q: Quiver, w, suites=SUITES, F: Field = QQ, seed: int = 0) -> tuple[Context, list[Verdict]]:
    ctx = Context(q, w, F, seed)
    return ctx, run_suites(ctx, suites)


def md_module_summary(X: md.GradedModule) -> dict:
    return {"name": X.name, "dim": X.total_dim,
            "pieces": [[v, d, n] for (v, d), n in sorted(X.dims.items(), key=lambda t: (t[0][1], t[0][0]))]}
