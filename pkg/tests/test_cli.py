import json

from nil_graph.cli import EXIT_MISMATCH, EXIT_OK, EXIT_USAGE, main
from nil_graph.graph.export import read_scan_csv
from nil_graph.harness import cases
from nil_graph.harness.suite import SuiteReport
from nil_graph.harness.verdict import Mismatch


def test_ring_command(capsys):
    assert main(["ring", "Z6"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "NC (4): {0, 1, 3, 4}" in out
    assert "nil clean: false" in out
    assert "weak nil clean: true" in out


def test_ring_command_json(capsys):
    assert main(["ring", "GF(5,2)", "--json"]) == EXIT_OK
    data = json.loads(capsys.readouterr().out)
    assert data["nilclean"]["labels"] == ["0", "1"]
    assert data["is_field"] is True


def test_bad_spec_is_a_usage_error(capsys):
    assert main(["ring", "Z1"]) == EXIT_USAGE
    assert "[ERROR]" in capsys.readouterr().err


def test_graph_command_writes_file(tmp_path):
    out = tmp_path / "out" / "z5.dot"
    assert main(["graph", "Z5", "--format", "dot", "--out", str(out)]) == EXIT_OK
    assert "0 -- 1;" in out.read_text(encoding="utf-8")


def test_graph_command_json(capsys):
    assert main(["graph", "GF(2,2)", "--format", "json"]) == EXIT_OK
    assert json.loads(capsys.readouterr().out)["edge_count"] == 2


def test_invariants_command(capsys):
    assert main(["invariants", "GF(5,2)"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "girth: 10" in out
    assert "diameter: ∞" in out
    assert "bipartite: true" in out


def test_invariants_command_json(capsys):
    assert main(["invariants", "Z6", "--json", "--edge-colors"]) == EXIT_OK
    data = json.loads(capsys.readouterr().out)
    assert data["dominating"]["vertices"] == [0, 1]
    assert data["coloring"]["color_count"] == 4
    assert len(data["coloring"]["edge_colors"]) == data["edge_count"]


def test_scan_command(tmp_path):
    out = tmp_path / "scan.csv"
    assert main(["scan", "--zn-range", "2..6", "--gf-bound", "9", "--csv", str(out)]) == EXIT_OK
    rows = read_scan_csv(out.read_text(encoding="utf-8"))
    assert [row.spec for row in rows] == ["GF(2,2)", "GF(2,3)", "GF(3,2)", "Z2", "Z3", "Z4", "Z5", "Z6"]
    assert next(row for row in rows if row.spec == "Z5").diameter == 4


def test_scan_command_marks_oversized_rings(capsys):
    assert main(["scan", "--zn-range", "2..3", "--gf-bound", "25", "--max-order", "10"]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert any(line.startswith('"GF(5,2)",25,skipped') for line in lines)


def test_verify_command(tmp_path, capsys):
    report_path = tmp_path / "report.json"
    cases_arg = "girth-path-shape,degree-lemma"
    code = main(["verify", "--families", "Z6,GF(2,2)", "--cases", cases_arg, "--json", str(report_path)])
    assert code == EXIT_OK
    report = SuiteReport.from_json(report_path.read_text(encoding="utf-8"))
    assert report.totals == {"pass": 2, "mismatch": 0, "expected_mismatch": 1, "skipped": 1}
    assert "[VERIFY] 4 verdicts" in capsys.readouterr().err


def test_verify_unknown_case(capsys):
    assert main(["verify", "--families", "Z6", "--cases", "no-such-case"]) == EXIT_USAGE
    assert "no-such-case" in capsys.readouterr().err


def test_verify_reports_unexpected_mismatch(monkeypatch, capsys):
    broken = cases.TheoremCase(
        "degree-lemma", "always fails", "any ring", lambda ctx: True, lambda ctx: Mismatch(("0",))
    )
    monkeypatch.setitem(cases.CASES_BY_ID, "degree-lemma", broken)
    assert main(["verify", "--families", "Z6", "--cases", "degree-lemma", "--json", "-"]) == EXIT_MISMATCH
    captured = capsys.readouterr()
    report = SuiteReport.from_json(captured.out)
    assert report.totals["mismatch"] == 1
    assert "[MISMATCH] Z6 degree-lemma" in captured.err


def test_verify_report_without_metadata_is_job_independent(capsys):
    outputs = []
    for jobs in ("1", "2"):
        argv = ["verify", "--families", "Z6,GF(2,2),Z4xZ3", "--jobs", jobs, "--json", "-", "--no-metadata"]
        assert main(argv) == EXIT_OK
        outputs.append(capsys.readouterr().out)
    assert outputs[0] == outputs[1]
    assert "metadata" not in json.loads(outputs[0])


def test_single_ring_commands_respect_max_order(monkeypatch, capsys):
    for command in ("ring", "graph", "invariants"):
        assert main([command, "Z100000"]) == EXIT_USAGE
        assert "above max_order 4096" in capsys.readouterr().err
    assert main(["invariants", "Z12", "--max-order", "10"]) == EXIT_USAGE
    monkeypatch.setenv("NILGRAPH_MAX_ORDER", "5")
    assert main(["ring", "Z6"]) == EXIT_USAGE
    assert main(["ring", "Z6", "--max-order", "6"]) == EXIT_OK


def test_config_option(tmp_path, monkeypatch, capsys):
    config = tmp_path / "alt.json"
    monkeypatch.setenv("NILGRAPH_CONFIG", str(config))
    assert main(["--config", str(config), "ring", "Z2"]) == EXIT_OK
    assert config.exists()
