"""Command-line front end: ``ppw sortable|piw|module|qw|endo|gldim|verify|corpus``.

Exit codes: 0 pass, 1 error, 2 semantic negative (not sortable, a FAIL, or only SKIPs).
"""
from __future__ import annotations

import argparse
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import modules as md
from .coxeter import parse_word, sortable_factorize, sortable_words
from .diagram import layers_json, piw_projectives, render_module
from .linalg import field_from_spec
from .quiver import BUILTIN, QuiverError, admissible_coxeter_word, builtin_quiver, parse_quiver
from .report import RunReport
from .suites import SUITES, Context, jsonable, md_module_summary, run_suites

OK, ERROR, NEGATIVE = 0, 1, 2


class UsageError(ValueError):
    pass


def load_quiver(spec: str):
    if spec.startswith("builtin:"):
        return builtin_quiver(spec.split(":", 1)[1])
    if spec in BUILTIN and not Path(spec).exists():
        return builtin_quiver(spec)
    return parse_quiver(Path(spec).read_text(encoding="utf-8"))


def _input(args, q) -> dict:
    return {"quiver": args.quiver, "quiver_text": q.to_text(),
            "word": list(parse_word(args.word)) if getattr(args, "word", None) else None,
            "field": args.field}


def _word(args, q):
    if not args.word:
        raise UsageError("--word is required")
    w = parse_word(args.word)
    return w


def _emit(args, report: RunReport, lines: list[str]) -> None:
    print("\n".join(lines))
    if args.json:
        Path(args.json).write_text(report.to_json() + "\n", encoding="utf-8")


# ------------------------------------------------------------------ commands

def cmd_sortable(args) -> int:
    q = load_quiver(args.quiver)
    w = _word(args, q)
    c = admissible_coxeter_word(q)
    f = sortable_factorize(q, w, c)
    res = {"c": list(c), "sortable": bool(f), "blocks": [list(b) for b in f.blocks]}
    if f:
        res["m"] = f.m
        lines = [str(f)]
    else:
        res["reason"] = f.reason
        blocks = " | ".join(f"c{i}=" + " ".join(map(str, b)) for i, b in enumerate(f.blocks))
        lines = [f"not c-sortable: {f.reason} at block {f.block} ({blocks})"]
    status = "PASS" if f else "FAIL"
    rep = RunReport("sortable", _input(args, q),
                    [{"name": "sortable", "status": status, "reason": "ok" if f else "not c-sortable"}],
                    jsonable(res), args.seed)
    _emit(args, rep, lines)
    return OK if f else NEGATIVE


def _context(args):
    q = load_quiver(args.quiver)
    w = _word(args, q)
    return q, Context(q, w, field_from_spec(args.field), args.seed)


def cmd_piw(args) -> int:
    q, ctx = _context(args)
    W = ctx.W if ctx.sortable else None
    if W is None:
        from .preproj import WordAlgebra
        W = WordAlgebra(q, ctx.input_word, ctx.F)
    lines = [f"Pi_w for w = {' '.join(map(str, W.word))}  (dim {W.algebra.dim()})"]
    res = {"dim": W.algebra.dim(), "projectives": {}}
    for u, X in piw_projectives(W).items():
        per_degree = {d: sum(n for (v, e), n in X.dims.items() if e == d) for d in X.degrees()}
        lines.append(f"Pi_w e_{u}: dim {X.total_dim}, by degree "
                     + ", ".join(f"{d}:{n}" for d, n in sorted(per_degree.items())))
        res["projectives"][u] = {"dim": X.total_dim, "by_degree": per_degree, "layers": layers_json(X)}
        if args.diagram:
            lines.append(render_module(X, f"Pi_w e_{u}"))
    rep = RunReport("piw", _input(args, q), [], jsonable(res), args.seed)
    _emit(args, rep, lines)
    return OK


def cmd_module(args) -> int:
    q, ctx = _context(args)
    W = ctx.W
    kind, i = args.kind, args.index
    if kind == "L":
        X = md.layer_module(W, i)
    elif kind == "M":
        X = md.summand_Mi(W, i)
    elif kind == "P":
        X = md.projective_module(W.algebra, i, 0, name=f"Pi_w e_{i}")
    else:
        if not ctx.sortable:
            raise UsageError("the tilting object needs a c-sortable word")
        X = md.tilting_object(W)
    info = md_module_summary(X)
    info["in_sub"] = md.in_sub_category(X)
    lines = [f"{X.name}: dim {X.total_dim}, in Sub: {info['in_sub']}",
             "pieces (vertex, degree, dim): " + " ".join(f"({v},{d},{n})" for v, d, n in info["pieces"])]
    if args.diagram:
        lines.append(render_module(X))
        info["layers"] = layers_json(X)
    rep = RunReport("module", _input(args, q), [], jsonable(info), args.seed)
    _emit(args, rep, lines)
    return OK


def cmd_qw(args) -> int:
    from .endo import build_Qw, negative_arrow_audit
    q, ctx = _context(args)
    P = build_Qw(q, ctx.input_word)
    audit = negative_arrow_audit(P, q)
    lines = [P.to_text(), f"negative arrows: {audit['negative']}",
             f"audit: {'PASS' if audit['passed'] else 'FAIL'} (sorting word: {audit['sortable']})"]
    status = "PASS" if audit["passed"] else "FAIL"
    rep = RunReport("qw", _input(args, q),
                    [{"name": "negative_arrow_audit", "status": status,
                      "reason": "ok" if audit["passed"] else "misplaced-degrees"}],
                    jsonable({"qw": P.to_text(), "audit": audit}), args.seed)
    _emit(args, rep, lines)
    return OK if audit["passed"] else NEGATIVE


def _needs_sortable(args, q, ctx, command) -> int | None:
    if ctx.sortable:
        return None
    rep = RunReport(command, _input(args, q),
                    [{"name": command, "status": "SKIP", "reason": "not c-sortable"}], {}, args.seed)
    _emit(args, rep, ["SKIP: not c-sortable"])
    return NEGATIVE


def cmd_endo(args) -> int:
    from .endo import compare_F, hereditary_quotient_Bw, presentation_from_table
    q, ctx = _context(args)
    if (rc := _needs_sortable(args, q, ctx, "endo")) is not None:
        return rc
    A = ctx.A
    B = hereditary_quotient_Bw(ctx.W)
    P = presentation_from_table(A)
    F = compare_F(ctx.W)
    res = {"A_w_dim": A.dim, "B_w_dim": B.dim, "presentation": P.to_text(),
           "relations": P.relation_strings(), "F": F}
    lines = [f"A_w: dim {A.dim}", f"B_w: dim {B.dim}", P.to_text(),
             f"F: {'isomorphism' if F['passed'] else 'not an isomorphism'}"]
    status = "PASS" if F["passed"] else "FAIL"
    rep = RunReport("endo", _input(args, q),
                    [{"name": "F_isomorphism", "status": status, "reason": "ok" if F["passed"] else "F-not-bijective"}],
                    jsonable(res), args.seed)
    _emit(args, rep, lines)
    return OK if F["passed"] else NEGATIVE


def cmd_gldim(args) -> int:
    from .endo import global_dimension
    q, ctx = _context(args)
    if (rc := _needs_sortable(args, q, ctx, "gldim")) is not None:
        return rc
    g = global_dimension(ctx.A, cap=args.cap)
    ok = g is not None
    lines = [f"gl.dim A_w = {g if ok else f'> {args.cap}'}  (dim A_w = {ctx.A.dim})"]
    rep = RunReport("gldim", _input(args, q),
                    [{"name": "gldim", "status": "PASS" if ok else "FAIL", "reason": "ok" if ok else "exceeds-cap"}],
                    {"gldim": g, "dim": ctx.A.dim, "cap": args.cap}, args.seed)
    _emit(args, rep, lines)
    return OK if ok else NEGATIVE


def _suites(name: str) -> tuple:
    return SUITES if name == "all" else (name,)


def _verify_one(q, w, suites, field_spec, seed) -> tuple[list[dict], dict]:
    t = time.perf_counter()
    ctx = Context(q, w, field_from_spec(field_spec), seed)
    vs = run_suites(ctx, suites)
    out = []
    for v in vs:
        d = v.to_dict()
        d["word"] = list(ctx.input_word)
        out.append(d)
    timing = {v.name: round(v.seconds, 3) for v in vs}
    timing["total"] = round(time.perf_counter() - t, 3)
    return out, timing


def cmd_verify(args) -> int:
    q = load_quiver(args.quiver)
    w = _word(args, q)
    verdicts, timing = _verify_one(q, w, _suites(args.suite), args.field, args.seed)
    rep = RunReport("verify", _input(args, q), verdicts, {"suites": list(_suites(args.suite))},
                    args.seed, timing)
    _emit(args, rep, rep.summary_lines())
    return rep.exit_code()


def cmd_corpus(args) -> int:
    from .coxeter import brute_force_sortable_count
    q = builtin_quiver(args.type)
    c = admissible_coxeter_word(q)
    words = [f.word for f in sortable_words(q, c, args.max_len)]
    oracle = brute_force_sortable_count(q, c, args.max_len)
    suites = _suites(args.suite)
    t = time.perf_counter()
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as ex:
            runs = list(ex.map(_verify_one, [q] * len(words), words, [suites] * len(words),
                               [args.field] * len(words), [args.seed] * len(words)))
    else:
        runs = [_verify_one(q, w, suites, args.field, args.seed) for w in words]
    verdicts = [v for vs, _ in runs for v in vs]
    count_ok = oracle == len(words)
    verdicts.insert(0, {"name": "sortable_count", "status": "PASS" if count_ok else "FAIL",
                        "reason": "ok" if count_ok else "count-mismatch",
                        "data": {"enumerated": len(words), "brute_force": oracle}})
    timing = {" ".join(map(str, w)): tm["total"] for w, (_, tm) in zip(words, runs)}
    timing["total"] = round(time.perf_counter() - t, 3)
    res = {"type": args.type, "max_len": args.max_len, "words": [list(w) for w in words],
           "suites": list(suites)}
    rep = RunReport("corpus", {"quiver": f"builtin:{args.type}", "quiver_text": q.to_text(),
                               "field": args.field}, verdicts, res, args.seed, timing)
    counts = {s: rep.statuses.count(s) for s in ("PASS", "FAIL", "SKIP")}
    lines = rep.summary_lines() + [f"{len(words)} sortable words; " +
                                   ", ".join(f"{k} {n}" for k, n in counts.items())]
    _emit(args, rep, lines)
    return rep.exit_code()


# ------------------------------------------------------------------ parser

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ppw", description="Preprojective algebras of Coxeter words.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, word=True):
        sp.add_argument("--quiver", default="builtin:triangle",
                        help="quiver file, or builtin:NAME (" + ", ".join(sorted(BUILTIN)) + ")")
        if word:
            sp.add_argument("--word", help='letters, e.g. "1 2 3 1 2 1"')
        sp.add_argument("--field", default="rat", help="rat or gfp:P")
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--json", metavar="PATH", help="write a JSON report")

    for name, fn, helptext in [
        ("sortable", cmd_sortable, "c-sortable factorization"),
        ("piw", cmd_piw, "tables and diagrams of Pi_w"),
        ("module", cmd_module, "a word module (L^i, M^i, Pi_w e_u or the tilting object)"),
        ("qw", cmd_qw, "the graded quiver Q_w and its degree audit"),
        ("endo", cmd_endo, "A_w, B_w and the functor F"),
        ("gldim", cmd_gldim, "global dimension of A_w"),
        ("verify", cmd_verify, "run verification suites"),
    ]:
        sp = sub.add_parser(name, help=helptext)
        common(sp)
        sp.set_defaults(func=fn)
        if name in ("piw", "module"):
            sp.add_argument("--diagram", action="store_true", help="print radical layer diagrams")
        if name == "module":
            sp.add_argument("--kind", choices=["L", "M", "P", "T"], default="M")
            sp.add_argument("--index", type=int, default=1)
        if name == "gldim":
            sp.add_argument("--cap", type=int, default=8)
        if name == "verify":
            sp.add_argument("--suite", choices=list(SUITES) + ["all"], default="all")
    sp = sub.add_parser("corpus", help="verify every c-sortable word up to a length")
    common(sp, word=False)
    sp.add_argument("--type", choices=["A2", "A3", "A4", "D4", "kronecker"], required=True)
    sp.add_argument("--max-len", type=int, required=True)
    sp.add_argument("--suite", choices=list(SUITES) + ["all"], default="all")
    sp.add_argument("--jobs", type=int, default=1)
    sp.set_defaults(func=cmd_corpus)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (QuiverError, UsageError, ValueError, OSError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return ERROR


if __name__ == "__main__":
    sys.exit(main())
