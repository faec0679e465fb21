"""CLI contract tests: exit codes, report schemas, determinism, parallelism."""

import csv
import io
import json

import pytest
from mpmath import mp, mpf

from zetabench import cli, identities
from zetabench.identities import IdentityRecord
from zetabench.precision import PrecisionConfig

SMALL_SUITE = "EQ_3_13,EQ_1_2,CHK_SIGN_ETA"


def run_verify(argv_extra, capsys):
    code = cli.main(["verify"] + argv_extra)
    out = capsys.readouterr().out
    return code, out


def strip_timings(report: dict) -> dict:
    doc = json.loads(json.dumps(report))
    for row in doc["results"]:
        row.pop("elapsed_ms", None)
    return doc


def test_single_pass_identity_exits_zero(capsys):
    code, out = run_verify(["--suite", "EQ_3_13", "--tol", "1e-10"], capsys)
    assert code == 0
    assert "PASS" in out
    assert "total 1  passed 1  failed 0" in out


def test_unknown_suite_id_rejected_before_compute(capsys):
    code = cli.main(["verify", "--suite", "EQ_NOPE"])
    err = capsys.readouterr().err
    assert code == 2
    assert "unknown suite id" in err


def test_unknown_sequence_rejected(capsys):
    code = cli.main(["compute", "wat", "--n", "0"])
    assert code == 2


def test_bad_tolerance_rejected(capsys):
    code = cli.main(["verify", "--suite", "EQ_3_13", "--tol", "1e-35"])
    assert code == 2


def test_usage_error_on_missing_command():
    assert cli.main([]) == 2


def test_alias_accepted(capsys):
    code, out = run_verify(["--suite", "EQ_1_9_vs_1_10", "--tol", "1e-8"], capsys)
    assert code == 0
    assert "EQ_1_9" in out


def test_json_schema_and_summary(capsys):
    code, out = run_verify(
        ["--suite", SMALL_SUITE, "--tol", "1e-8", "--output", "json"], capsys)
    assert code == 0
    doc = json.loads(out)
    assert doc["precision_digits"] == 40
    assert doc["tolerance"] == "1e-8"
    assert doc["summary"] == {"total": 3, "passed": 3, "failed": 0}
    ids = [r["id"] for r in doc["results"]]
    assert ids == sorted(ids)
    for row in doc["results"]:
        assert set(row) == set(cli._ROW_FIELDS)
        assert isinstance(row["pass"], bool)
        assert isinstance(row["evaluations"], int)
        # numeric fields ride as decimal strings
        mpf(row["abs_err"])


def test_json_determinism_across_runs(capsys):
    argv = ["--suite", SMALL_SUITE, "--tol", "1e-8", "--output", "json"]
    _code, out1 = run_verify(argv, capsys)
    _code, out2 = run_verify(argv, capsys)
    assert strip_timings(json.loads(out1)) == strip_timings(json.loads(out2))


def test_parallelism_invariance(capsys):
    argv = ["--suite", SMALL_SUITE, "--tol", "1e-8", "--output", "json"]
    _c, seq = run_verify(argv + ["--parallelism", "1"], capsys)
    _c, par = run_verify(argv + ["--parallelism", "3"], capsys)
    assert strip_timings(json.loads(seq)) == strip_timings(json.loads(par))


def test_injected_failing_identity_flips_exit_code(capsys):
    rec = IdentityRecord(
        "SYNTH_FAIL", "synthetic always-failing identity", (),
        lambda ctx, p: mpf(0), lambda ctx, p: mpf(1))
    identities._CATALOG["SYNTH_FAIL"] = rec
    try:
        code, out = run_verify(["--suite", "SYNTH_FAIL,EQ_3_13"], capsys)
        assert code == 1
        assert "FAIL" in out
    finally:
        del identities._CATALOG["SYNTH_FAIL"]


def test_evaluation_error_becomes_failed_row(capsys):
    def boom(ctx, p):
        raise RuntimeError("deliberate")

    rec = IdentityRecord("SYNTH_BOOM", "synthetic crash", (), boom,
                         lambda ctx, p: mpf(1))
    identities._CATALOG["SYNTH_BOOM"] = rec
    try:
        code, out = run_verify(
            ["--suite", "SYNTH_BOOM", "--output", "json"], capsys)
        assert code == 1
        doc = json.loads(out)
        row = doc["results"][0]
        assert row["pass"] is False
        assert "deliberate" in row["description"]
        assert row["lhs"] == "nan"
    finally:
        del identities._CATALOG["SYNTH_BOOM"]


def test_csv_columns(capsys):
    code, out = run_verify(
        ["--suite", "EQ_3_13", "--output", "csv"], capsys)
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == list(cli._ROW_FIELDS)
    assert rows[1][0] == "EQ_3_13"
    assert rows[1][7] == "True"


def test_report_writes_json_file(tmp_path, capsys):
    path = tmp_path / "report.json"
    code = cli.main(["report", "--suite", "EQ_3_13", "--out", str(path)])
    capsys.readouterr()
    assert code == 0
    doc = json.loads(path.read_text())
    assert doc["summary"]["total"] == 1


def test_compute_table_human(capsys):
    code = cli.main(["compute", "gamma", "--n", "0..1"])
    out = capsys.readouterr().out
    assert code == 0
    assert "n=0" in out and "n=1" in out and "oracle" in out


def test_compute_route_all_cross_agreement(capsys):
    code = cli.main(["compute", "zeta-deriv0", "--n", "2", "--route", "all",
                     "--output", "json"])
    out = capsys.readouterr().out
    assert code == 0
    doc = json.loads(out)
    assert len(doc["entries"]) == 6
    mp.dps = 50
    vals = [mpf(e["value"]) for e in doc["entries"]]
    assert max(vals) - min(vals) < mpf("1e-6")


def test_compute_bad_route(capsys):
    assert cli.main(["compute", "gamma", "--n", "0", "--route", "bogus"]) == 2


def test_env_digits_override(capsys, monkeypatch):
    monkeypatch.setenv("ZETA_DIGITS", "45")
    code = cli.main(["verify", "--suite", "EQ_3_13", "--output", "json"])
    out = capsys.readouterr().out
    assert code == 0
    assert json.loads(out)["precision_digits"] == 45


def test_digits_flag_beats_env(capsys, monkeypatch):
    monkeypatch.setenv("ZETA_DIGITS", "45")
    code = cli.main(["verify", "--suite", "EQ_3_13", "--digits", "42",
                     "--output", "json"])
    out = capsys.readouterr().out
    assert code == 0
    assert json.loads(out)["precision_digits"] == 42


def test_indices_parse_forms():
    assert cli._parse_indices("0..3") == [0, 1, 2, 3]
    assert cli._parse_indices("1,4, 6") == [1, 4, 6]
    assert cli._parse_indices("5") == [5]
    with pytest.raises(cli.UsageError):
        cli._parse_indices(" ")
