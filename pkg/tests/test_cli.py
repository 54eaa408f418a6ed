import json
from collections import Counter
from pathlib import Path

import pytest

from ppw import diagram
from ppw.cli import main
from ppw.preproj import WordAlgebra
from ppw.quiver import builtin_quiver
from ppw.report import RunReport

QUIVERS = Path(__file__).parent.parent / "quivers"
RUNNING = "1 2 3 1 2 1"


def as_counters(layers):
    return [Counter({(v, d): n for v, d, n in layer}) for layer in layers]


def run(argv, capsys):
    code = main(argv)
    return code, capsys.readouterr().out


def test_golden_radical_layers(triangle_golden):
    W = WordAlgebra(builtin_quiver("triangle"), tuple(map(int, RUNNING.split())))
    golden = triangle_golden
    for u, X in diagram.piw_projectives(W).items():
        assert as_counters(diagram.layers_of(X)) == golden[u], u


def test_piw_json_layers_match_golden(tmp_path, capsys, triangle_golden):
    out = tmp_path / "piw.json"
    code, text = run(["piw", "--word", RUNNING, "--diagram", "--json", str(out)], capsys)
    assert code == 0
    assert "d0: [1]" in text
    rep = RunReport.from_json(out.read_text())
    golden = triangle_golden
    for u, info in rep.results["projectives"].items():
        layers = [Counter({(e["vertex"], e["degree"]): e["mult"] for e in layer}) for layer in info["layers"]]
        assert layers == golden[int(u)]


def test_sortable_exit_codes(capsys):
    code, text = run(["sortable", "--word", RUNNING], capsys)
    assert code == 0 and "c0=1 2 3 | c1=1 2 | c2=1" in text
    assert run(["sortable", "--word", "2 3"], capsys)[0] == 0
    assert run(["sortable", "--word", "2 1"], capsys)[0] == 2
    assert run(["sortable", "--word", "1 1"], capsys)[0] == 1


def test_bad_inputs_exit_1(capsys, tmp_path):
    assert run(["sortable", "--quiver", "builtin:nope", "--word", "1"], capsys)[0] == 1
    assert run(["sortable", "--quiver", str(tmp_path / "missing.quiver"), "--word", "1"], capsys)[0] == 1
    assert run(["sortable", "--word", "1 9"], capsys)[0] == 1
    assert run(["piw"], capsys)[0] == 1


def test_quiver_file_input(capsys):
    code, text = run(["sortable", "--quiver", str(QUIVERS / "a3.quiver"), "--word", "1 2 3 1 2 1"], capsys)
    assert code == 0


def test_module_command(capsys):
    code, text = run(["module", "--word", RUNNING, "--kind", "M", "--index", "5"], capsys)
    assert code == 0 and "dim 9" in text and "in Sub: True" in text


def test_qw_rejects_non_sorting_word(capsys):
    code, text = run(["qw", "--word", "1 2 3 2 1 2"], capsys)
    assert code == 2


def test_endo_and_gldim(capsys):
    code, text = run(["endo", "--word", RUNNING], capsys)
    assert code == 0 and "a*b" in text
    code, text = run(["gldim", "--word", RUNNING], capsys)
    assert code == 0


def test_verify_report_round_trip(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert run(["verify", "--word", RUNNING, "--json", str(a)], capsys)[0] == 0
    assert run(["verify", "--word", RUNNING, "--json", str(b)], capsys)[0] == 0
    ra, rb = RunReport.from_json(a.read_text()), RunReport.from_json(b.read_text())
    assert ra.canonical() == rb.canonical()
    assert RunReport.from_json(ra.to_json()).to_dict() == ra.to_dict()
    assert set(ra.statuses) == {"PASS"}
    assert json.loads(a.read_text())["schema"] == "ppw.report/1"


def test_verify_non_sortable_is_skip(capsys):
    code, text = run(["verify", "--word", "2 1"], capsys)
    assert code == 2 and "SKIP" in text


def test_report_rejects_unknown_schema():
    with pytest.raises(ValueError):
        RunReport.from_json(json.dumps({"schema": "other/9"}))


def test_corpus_a2(capsys):
    code, text = run(["corpus", "--type", "A2", "--max-len", "3"], capsys)
    assert code == 0
    assert "PASS 43, FAIL 0, SKIP 2" in text
    assert not any(line.startswith("FAIL") for line in text.splitlines())
