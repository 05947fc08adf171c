import json
from fractions import Fraction
from pathlib import Path

import pytest

from exclusivity.cli import main
from exclusivity.graph import make_cycle, make_shrikhande_complement, find_isomorphism, parse_graph, read_graph
from exclusivity.report import ReportDocument, rational_from_json

DATA = Path(__file__).resolve().parent.parent / "data"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_gen_cycle(capsys):
    code, out, _ = run(capsys, "gen", "cycle", 5)
    assert code == 0
    assert find_isomorphism(parse_graph(out), make_cycle(5)) is not None


def test_gen_to_file(tmp_path, capsys):
    out = tmp_path / "cs.graph"
    assert run(capsys, "gen", "shrikhande-complement", "--out", out)[0] == 0
    assert find_isomorphism(read_graph(out), make_shrikhande_complement()) is not None


def test_gen_product_of_files(capsys):
    code, out, _ = run(capsys, "gen", "or-product", DATA / "c5.graph", DATA / "c5.graph")
    assert code == 0
    assert parse_graph(out) == read_graph(DATA / "c5c5.graph")


def test_gen_circulant_and_complement(tmp_path, capsys):
    f = tmp_path / "ci8.graph"
    assert run(capsys, "gen", "circulant", 8, 1, 4, "--out", f)[0] == 0
    code, out, _ = run(capsys, "gen", "complement-of", f)
    assert code == 0 and parse_graph(out).num_edges == 28 - 12


def test_gen_bad_parameters(capsys):
    assert run(capsys, "gen", "cycle", 2)[0] == 2
    assert run(capsys, "gen", "cycle", "x")[0] == 2
    assert run(capsys, "gen", "cycle")[0] == 2
    assert run(capsys, "gen", "complement-of", "/nonexistent.graph")[0] == 2


def test_scenario_roundtrip(tmp_path, capsys):
    f = tmp_path / "kcbs.scn"
    assert run(capsys, "scenario", "kcbs", "--out", f)[0] == 0
    code, out, _ = run(capsys, "bounds", f, "--json")
    doc = json.loads(out)
    assert code == 0 and doc["bounds"]["alpha"] == 2
    assert rational_from_json(doc["bounds"]["alpha_star"]) == Fraction(5, 2)


def test_bounds_three_box_contexts(capsys):
    code, out, _ = run(capsys, "bounds", DATA / "three-box.scn", "--gamma", "contexts")
    assert code == 0
    assert "alpha*(ctx)  3/1" in out
    assert "separation   no" in out


def test_bounds_mermin_text(capsys):
    code, out, _ = run(capsys, "bounds", DATA / "mermin.scn")
    assert code == 0
    assert "alpha        3" in out and "alpha*       4/1" in out
    assert "separation   yes" in out and "saturation   yes" in out


def test_bounds_json_roundtrip(capsys):
    code, out, _ = run(capsys, "bounds", "builtin:chsh", "--json")
    assert code == 0
    doc = ReportDocument.from_json(out)
    assert ReportDocument.from_json(doc.to_json()) == doc
    lo, up = doc.bounds["theta"]
    assert lo <= 2 + 2 ** 0.5 <= up + 1e-9
    assert doc.bounds["flags"]["quantum_classical_separation"]
    assert doc.status == "ok"


def test_bounds_two_copy_chsh(capsys):
    code, out, _ = run(capsys, "bounds", DATA / "chsh2.graph", "--json", "--tol", "1e-3")
    assert code == 0
    b = json.loads(out)["bounds"]
    assert b["alpha_star"]["exact"] == "64/5"
    assert b["num_maximal_cliques"] == 16752


def test_bounds_exit_codes(tmp_path, capsys, monkeypatch):
    assert run(capsys, "bounds", DATA / "c5.graph", "--tol", "1e-16")[0] == 3
    assert run(capsys, "bounds", DATA / "c5.graph", "--gamma", "contexts")[0] == 2
    assert run(capsys, "bounds", "builtin:nope")[0] == 2
    bad = tmp_path / "bad.graph"
    bad.write_text("n 3\n0 5\n")
    code, _, err = run(capsys, "bounds", bad)
    assert code == 2 and "line 2" in err
    monkeypatch.setenv("EXCL_MAX_CLIQUES", "3")
    code, out, _ = run(capsys, "bounds", DATA / "c5.graph", "--json")
    assert code == 4
    assert json.loads(out)["status"] == "resource-limit"


def test_solver_failure_still_reports(capsys):
    code, out, _ = run(capsys, "bounds", DATA / "c5.graph", "--tol", "1e-16", "--json")
    doc = json.loads(out)
    assert code == 3 and doc["status"] == "solver-failure"
    assert doc["bounds"]["alpha"] == 2 and doc["bounds"]["theta"] is not None


def test_find(capsys):
    code, out, _ = run(capsys, "find", DATA / "chsh.graph", "c5", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["status"] == "found" and len(doc["witnesses"][0]["vertices"]) == 5
    code, out, _ = run(capsys, "find", DATA / "prism.graph", "odd")
    assert code == 0 and "none found" in out
    assert run(capsys, "find", DATA / "cs.graph", "c7", "--budget", "1")[0] == 4
    assert run(capsys, "find", DATA / "cs.graph", "triangle")[0] == 2
    assert run(capsys, "find", DATA / "cs.graph", "odd", "--max-m", "6")[0] == 2


def test_find_pattern_file(capsys):
    code, out, _ = run(capsys, "find", DATA / "c5c5.graph", DATA / "c5.graph")
    assert code == 0 and "witness  c5.graph" in out


def test_paper_suite_subset(capsys):
    code, out, _ = run(capsys, "paper-suite", "--only", "1,2,7", "--skip-spot")
    assert code == 0
    assert "3/3 claims reproduced" in out


def test_paper_suite_detects_corrupted_scenario(tmp_path, capsys):
    text = (DATA / "mermin.scn").read_text()
    # flip the parity of the last context: the graph stops being the Shrikhande complement
    text = text.replace("event 0,0,1 | A1,B1,C1", "event 0,0,0 | A1,B1,C1")
    (tmp_path / "mermin.scn").write_text(text)
    code, out, _ = run(capsys, "paper-suite", "--scenario-dir", tmp_path, "--only", "4", "--skip-spot", "--json")
    assert code == 1
    doc = json.loads(out)
    assert doc["status"].startswith("claim mismatch")
    assert not doc["claims"][0]["passed"]
