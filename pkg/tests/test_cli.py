import json
import subprocess
import sys

import pytest

from arrowkit import cli
from arrowkit.gadgets.search import GadgetNotFound
from arrowkit.graph import Graph, parse_colouring, parse_graph6, write_graph6


def run(argv, capsys):
    code = cli.main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_arrow_with_witness(tmp_path, capsys):
    w = tmp_path / "w.txt"
    code, out, _ = run(["arrow", "--graph", "K6", "--pattern", "K3+K2", "--witness-out", str(w)], capsys)
    assert code == 0
    res = json.loads(out)
    assert res["verdict"] == "NotArrows" and res["witness_file"] == str(w)
    c = parse_colouring(Graph.complete(6), w.read_text())
    assert c.is_total
    code, out, _ = run(["mono", "--graph", "K6", "--pattern", "K3+K2", "--colouring", str(w)], capsys)
    assert code == 0 and json.loads(out)["found"] is False


def test_arrow_graph_file(tmp_path, capsys):
    f = tmp_path / "g.g6"
    f.write_text("# K_8 minus C_5\n" + write_graph6(parse_graph6("GUZ~~{")) + "\n")
    code, out, _ = run(["arrow", "--graph", str(f), "--pattern", "K3"], capsys)
    assert code == 0 and json.loads(out)["verdict"] == "Arrows"


def test_output_is_reproducible(capsys):
    argv = ["arrow", "--g6", "D~{", "--pattern", "K3"]
    first = run(argv, capsys)[1]
    second = run(argv, capsys)[1]
    assert first == second
    assert json.loads(first)["stats"]["millis"] is None


def test_usage_errors(capsys):
    code, _, err = run(["arrow", "--g6", "D~", "--pattern", "K3"], capsys)
    assert code == 2 and "offset" in err.lower() or "truncated" in err
    with pytest.raises(SystemExit) as ei:
        cli.main(["arrow", "--graph", "K6", "--pattern", "K3+"])
    assert ei.value.code == 2
    code, _, err = run(["arrow", "--graph", "nosuchgraph", "--pattern", "K3"], capsys)
    assert code == 2
    code, _, _ = run(["arrow", "--pattern", "K3"], capsys)
    assert code == 2


def test_cnf_commands(tmp_path, capsys):
    code, out, _ = run(["cnf", "--g6", "D~{", "--pattern", "K3"], capsys)
    assert code == 0 and "p cnf 10 20" in out
    code, out, _ = run(["cnf", "--g6", "D~{", "--pattern", "K3", "--solve"], capsys)
    assert json.loads(out)["satisfiable"] is True
    target = tmp_path / "f.cnf"
    code, out, err = run(["cnf", "--graph", "K6", "--pattern", "K3", "--out", str(target)], capsys)
    assert code == 0 and out == "" and target.read_text().count(" 0\n") == 40


def test_gadget_commands(tmp_path, capsys):
    code, out, _ = run(["gadget-verify", "--name", "theorem1_final", "--n", "5"], capsys)
    rep = json.loads(out)
    assert code == 0 and rep["passed"] and rep["violations"] == [] and rep["rows"]
    code, out, _ = run(["gadget-build", "--name", "lemma3_stage2", "--n", "5"], capsys)
    spec_file = tmp_path / "s.json"
    spec_file.write_text(out)
    code, out, _ = run(["gadget-verify", "--spec", str(spec_file), "--summary"], capsys)
    assert code == 0 and json.loads(out)["passed"] and "rows" not in json.loads(out)
    code, out, _ = run(["gadget-search", "--name", "lemma1", "--n", "4"], capsys)
    assert code == 0 and json.loads(out)["name"] == "lemma1"
    code, out, _ = run(["gadget-verify", "--name", "t2_k6missing", "--summary"], capsys)
    rep = json.loads(out)
    assert rep["passed"] and len(rep["w_extension"]) == 15
    code, _, _ = run(["gadget-search", "--name", "lemma1"], capsys)
    assert code == 2


def test_gadget_search_not_found(monkeypatch, capsys):
    def boom(name):
        raise GadgetNotFound("exhausted")

    monkeypatch.setattr(cli, "search_gadget", boom)
    code, out, err = run(["gadget-search", "--name", "t2_5v"], capsys)
    assert code == 1 and out == "" and "exhausted" in err


def test_scenario_command(capsys):
    code, out, _ = run(["scenario", "--n", "4", "--to", "10"], capsys)
    assert code == 0 and json.loads(out)["passed"]


def test_enumerate_and_scan(tmp_path, capsys):
    code, out, _ = run(["enumerate", "--n", "5"], capsys)
    lines = out.split()
    assert code == 0 and len(lines) == 34
    corpus = tmp_path / "all5.g6"
    corpus.write_text(out + "garbage\n")
    code, out, err = run(["scan", "--corpus", str(corpus), "--target", "K3", "--cotarget", "K3+K2"], capsys)
    rows = [json.loads(x) for x in out.splitlines()]
    assert code == 0
    assert len(rows) == 35 and rows[-1]["summary"]["records"] == 34
    assert rows[-1]["summary"]["parse_errors"] == 1 and "line 35" in err


def test_scan_violation_exit_code(tmp_path, capsys):
    corpus = tmp_path / "g.g6"
    corpus.write_text("GUZ~~{\n")
    # K_8 - C_5 arrows K_3 but not 2K_4, and has no K_6
    code, out, err = run(["scan", "--corpus", str(corpus), "--target", "K3", "--cotarget", "2K4"], capsys)
    assert code == 1
    assert json.loads(out.splitlines()[-1])["summary"]["violations"] == 1
    assert "violation: GLr~~{" in err


def test_minimal_and_divergence(capsys):
    code, out, _ = run(["minimal", "--graph", "K6", "--pattern", "K3"], capsys)
    assert json.loads(out)["is_minimal"] is True
    code, out, _ = run(["divergence", "--up-to", "6", "--p1", "K3", "--p2", "K3+K2"], capsys)
    assert json.loads(out)["members"] == ["E~~w"]


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "arrowkit.cli", "arrow", "--graph", "K5", "--pattern", "K3"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["verdict"] == "NotArrows"
