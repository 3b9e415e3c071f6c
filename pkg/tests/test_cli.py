import csv
import io
import json

import pytest

import eulersym.identities as identities
from eulersym import cli


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# -- numbers ---------------------------------------------------------------


def test_numbers_bernoulli_text(capsys):
    code, out, _ = run_cli(capsys, "numbers", "bernoulli", "--upto", "4")
    assert code == 0
    values = [line.split("\t")[1] for line in out.strip().splitlines()]
    assert values == ["1", "-1/2", "1/6", "0", "-1/30"]


def test_numbers_euler_csv(capsys):
    code, out, _ = run_cli(capsys, "numbers", "euler", "--upto", "4", "--format", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["k", "value"]
    assert [r[1] for r in rows[1:]] == ["1", "0", "-1", "0", "5"]


def test_numbers_btilde(capsys):
    code, out, _ = run_cli(capsys, "numbers", "btilde", "--upto", "2")
    assert code == 0
    assert [line.split("\t")[1] for line in out.strip().splitlines()] == ["-1", "1"]


def test_numbers_btilde_bad_upto(capsys):
    code, _, err = run_cli(capsys, "numbers", "btilde", "--upto", "0")
    assert code == 2
    assert "error" in err


def test_numbers_json_fractions_are_strings(capsys):
    code, out, _ = run_cli(capsys, "numbers", "bernoulli", "--upto", "2", "--format", "json")
    assert code == 0
    rows = json.loads(out)
    assert rows == [
        {"k": 0, "value": "1"},
        {"k": 1, "value": "-1/2"},
        {"k": 2, "value": "1/6"},
    ]


def test_numbers_invalid_kind_exits_2():
    with pytest.raises(SystemExit) as exc:
        cli.main(["numbers", "fibonacci", "--upto", "3"])
    assert exc.value.code == 2


# -- poly ------------------------------------------------------------------


def test_poly_golden_outputs(capsys):
    assert run_cli(capsys, "poly", "euler", "--n", "2")[1].strip() == "x^2 - x"
    assert run_cli(capsys, "poly", "bernoulli", "--n", "0")[1].strip() == "1"
    assert run_cli(capsys, "poly", "bernoulli", "--n", "2")[1].strip() == "x^2 - x + 1/6"


def test_poly_deterministic_across_runs(capsys):
    first = run_cli(capsys, "poly", "bernoulli", "--n", "7")[1]
    second = run_cli(capsys, "poly", "bernoulli", "--n", "7")[1]
    assert first == second


def test_poly_negative_degree(capsys):
    code, _, err = run_cli(capsys, "poly", "euler", "--n", "-1")
    assert code == 2


# -- verify ----------------------------------------------------------------


def test_verify_json_report_roundtrip(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--identity", "thm12", "--m", "3", "--n", "4",
        "--mode", "symbolic", "--format", "json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["identity"] == "thm12"
    assert payload["m"] == 3
    assert payload["n"] == 4
    assert payload["mode"] == "symbolic"
    assert payload["holds"] is True
    assert payload["residual_terms"] == 0
    assert payload["lhs_terms"] > 0 and payload["rhs_terms"] > 0
    assert payload["elapsed_ms"] >= 0
    assert payload["params"] is None


def test_verify_thm11_part1(capsys):
    code, out, _ = run_cli(capsys, "verify", "--identity", "thm11_part1", "--n", "6")
    assert code == 0
    assert out.startswith("PASS")


def test_verify_numeric_seeded(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--identity", "cor11", "--m", "2", "--n", "4",
        "--mode", "numeric", "--seed", "7", "--format", "json",
    )
    assert code == 0
    assert json.loads(out)["holds"] is True


def test_verify_numeric_reports_sampled_params(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--identity", "cor11", "--m", "2", "--n", "3",
        "--mode", "numeric", "--seed", "7", "--format", "json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["holds"] is True
    assert payload["params"]  # sampled values reported as fraction strings
    for value in payload["params"].values():
        assert isinstance(value, str)


def test_verify_usage_error_exit_2(capsys):
    code, _, err = run_cli(capsys, "verify", "--identity", "thm12", "--m", "2", "--n", "0")
    assert code == 2
    assert "n must be >= 1" in err


def test_verify_unknown_flag_exits_2():
    with pytest.raises(SystemExit) as exc:
        cli.main(["verify", "--identity", "thm12", "--n", "2", "--m", "2", "--bogus"])
    assert exc.value.code == 2


def test_verify_failure_exits_1(capsys, monkeypatch):
    real = identities.thm12_sides

    def flipped(m, n):
        lhs, rhs = real(m, n)
        return lhs, -rhs

    monkeypatch.setattr(identities, "thm12_sides", flipped)
    code, out, _ = run_cli(
        capsys, "verify", "--identity", "thm12", "--m", "3", "--n", "3",
        "--format", "json",
    )
    assert code == 1
    payload = json.loads(out)
    assert payload["holds"] is False
    assert payload["residual_terms"] > 0


# -- verify-all ------------------------------------------------------------


def test_verify_all_minimal(capsys):
    code, out, _ = run_cli(capsys, "verify-all", "--max-m", "1", "--max-n", "1")
    assert code == 0
    lines = out.strip().splitlines()
    assert all(line.startswith("PASS") for line in lines[:-1])
    assert lines[-1].startswith("total=")


def test_verify_all_json_accounting(capsys):
    code, out, _ = run_cli(
        capsys, "verify-all", "--max-m", "2", "--max-n", "2", "--format", "json"
    )
    assert code == 0
    reports = json.loads(out)
    expected = len(list(identities.enumerate_specs(2, 2)))
    assert len(reports) == expected
    assert all(r["holds"] for r in reports)


def test_verify_all_csv(capsys):
    code, out, _ = run_cli(
        capsys, "verify-all", "--max-m", "1", "--max-n", "2", "--format", "csv"
    )
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert rows and all(r["holds"] == "True" for r in rows)


def test_verify_all_bad_bounds(capsys):
    code, _, err = run_cli(capsys, "verify-all", "--max-m", "0", "--max-n", "3")
    assert code == 2


# -- output file -----------------------------------------------------------


def test_out_writes_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    code, out, _ = run_cli(
        capsys, "verify", "--identity", "chu_vandermonde", "--n", "3",
        "--format", "json", "--out", str(target),
    )
    assert code == 0
    assert out == ""
    payload = json.loads(target.read_text())
    assert payload["holds"] is True
