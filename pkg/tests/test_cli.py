import json
from pathlib import Path

import pytest

from cli_cases import GOLDEN_CASES, MAXPLUS
from tropweil.cli import EXIT_INCONSISTENT, EXIT_PRECONDITION, EXIT_USAGE, main, run_command

HERE = Path(__file__).parent
DATA = HERE / "data"
GOLDEN = HERE / "golden"


@pytest.fixture(autouse=True)
def in_data_dir(monkeypatch):
    monkeypatch.chdir(DATA)


@pytest.mark.parametrize("name", sorted(GOLDEN_CASES))
def test_golden(name):
    status, out = run_command(GOLDEN_CASES[name])
    assert status == 0
    assert out + "\n" == (GOLDEN / f"{name}.txt").read_text()


def test_reciprocity_report_text():
    assert run_command(GOLDEN_CASES["reciprocity"]) == (0, "lhs = -3, rhs = -3, verdict: equal")


def test_pair_bigon_value():
    assert run_command(GOLDEN_CASES["pair"]) == (0, "1/2")


def test_no_floats_in_reports():
    for argv in GOLDEN_CASES.values():
        _, out = run_command(argv)
        assert "." not in out.replace("e1.", "").replace(".json", "")


def test_solve_nonzero_degree():
    status, out = run_command(["solve", "--curve", "bigon.json", "--divisor", "bigon_degree_one.json"])
    assert status == EXIT_PRECONDITION
    assert "degree" in out


def test_pair_report_lists_potentials():
    status, out = run_command(GOLDEN_CASES["pair"] + ["--report"])
    doc = json.loads(out)
    assert status == 0 and doc["pairing"] == "1/2"
    assert doc["potentials"][0]["vertex_values"] == {"u": "0", "v": "-1/2"}


@pytest.mark.parametrize(
    "argv",
    [
        ["order", "--expr", "max(x", "--length", "7", "--point", "2"],
        ["order", "--expr", "x", "--point", "1"],
        ["order", "--curve", "missing.json", "--function", "maxplus_f.json", "--point", "a"],
        ["order", "--expr", "x", "--length", "7", "--point", "zz"],
        ["symbol", "--expr", "x", "--length", "7", "--point", "1"],
        ["solve", "--curve", "bigon.json"],
        ["nosuchcommand"],
        [],
        ["classical", "z/(z-", "z"],
    ],
)
def test_usage_errors(argv):
    status, out = run_command(argv)
    assert status == EXIT_USAGE
    assert out.startswith("error:")


def test_malformed_document(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"vertices": ["a"], "edges": [{"id": "e1", "ends": ["a"], "length": "1"}]}')
    status, out = run_command(["solve", "--curve", str(bad), "--divisor", "bigon_dipole.json"])
    assert status == EXIT_USAGE and "ends" in out
    bad.write_text("{not json")
    assert run_command(["solve", "--curve", str(bad), "--divisor", "x.json"])[0] == EXIT_USAGE


def test_curve_mismatch_exit():
    argv = ["reciprocity", "--curve", "segment7.json", "--function", "maxplus_f.json", "--expr", "x", "--length", "6"]
    status, out = run_command(argv)
    assert status == EXIT_PRECONDITION
    assert "CurveMismatchError" in out


def test_inconsistency_exit(monkeypatch):
    import tropweil.cli as cli

    monkeypatch.setattr(cli, "reciprocity_sides", lambda f, g: (1, 2))
    status, out = run_command(GOLDEN_CASES["reciprocity"])
    assert status == EXIT_INCONSISTENT and "NOT equal" in out


def test_output_file(tmp_path):
    target = tmp_path / "out.txt"
    status, _ = run_command(GOLDEN_CASES["order"] + ["--output", str(target)])
    assert status == 0 and target.read_text() == "1\n"


def test_main_prints(capsys):
    assert main(["order", "--expr", MAXPLUS, "--length", "7", "--point", "e1@3"]) == 0
    assert capsys.readouterr().out == "1\n"
    assert main(["solve", "--curve", "bigon.json", "--divisor", "bigon_degree_one.json"]) == EXIT_PRECONDITION
    assert "degree" in capsys.readouterr().err


def test_export_dot_curve_only():
    status, out = run_command(["export-dot", "--curve", "bigon.json"])
    assert status == 0
    assert out.count("--") == 2 and out.startswith("graph")
