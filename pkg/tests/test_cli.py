import csv
import io
import json
import subprocess
import sys

import pytest

from binkloost.cli import CSV_COLUMNS, run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def records(text):
    return [json.loads(line) for line in text.splitlines()]


def test_distribution_closed_json():
    code, out, _ = call("distribution", "--m", "6", "--mode", "closed", "--format", "json")
    assert code == 0
    (rec,) = records(out)
    counts = {int(k): v for k, v in rec["payload"]["counts"].items()}
    assert counts == {3: 6, 7: 9, 11: 14, 15: 10, 19: 12, 23: 12}


@pytest.mark.parametrize("mode", ["fast", "brute"])
def test_distribution_other_modes(mode):
    code, out, _ = call("distribution", "--m", "6", "--mode", mode)
    (rec,) = records(out)
    assert rec["field"] == {"m": 6, "modulus": "43", "generator": "2"}
    assert rec["payload"]["counts"]["11"] == 14


def test_verify_thm9_passes():
    code, out, _ = call("verify", "--m-min", "4", "--m-max", "10", "--suite", "thm9")
    assert code == 0
    recs = records(out)
    assert [r["payload"]["m"] for r in recs] == list(range(4, 11))
    assert {r["status"] for r in recs} == {"pass", "skip"}


def test_verify_all_small():
    code, out, _ = call("verify", "--m-min", "3", "--m-max", "6", "--format", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert list(rows[0]) == CSV_COLUMNS["verify"]
    assert all(r["status"] in ("pass", "skip") for r in rows)
    assert [r["suite"] for r in rows[:8]] == [
        "field", "lemma10", "thm6", "thm4", "thm9", "lemma12", "thm13", "thm16",
    ]


def test_verify_failure_reports_counterexample(monkeypatch):
    from binkloost import verify

    monkeypatch.setattr(verify, "classify24", lambda ctx, a: type("C", (), {"mod24": 0})())
    code, out, err = call("verify", "--m-min", "4", "--m-max", "4", "--suite", "thm9")
    assert code == 1
    assert "counterexample 0x1" in err
    assert "classify24 = K(a) mod 24" in err


def test_ksum_zero_is_usage_error():
    code, out, err = call("ksum", "--m", "6", "--a", "0")
    assert code == 2
    assert "ZeroInput" in err and out == ""


def test_ksum():
    code, out, _ = call("ksum", "--m", "4", "--a", "1")
    (rec,) = records(out)
    assert rec["payload"] == {"a": "1", "value": -1, "tr_a": 0, "mod8": 7, "mod3": 2, "mod24": 23}


def test_ksum_odd_m_undetermined_mod3():
    _, out, _ = call("ksum", "--m", "5", "--a", "1")
    p = records(out)[0]["payload"]
    assert p["value"] % 3 != 0 and p["mod3"] is None


def test_usage_errors():
    assert call("ksum", "--m", "6")[0] == 2
    assert call("bogus")[0] == 2
    assert call("ksum", "--m", "6", "--a", "zz")[0] == 2
    assert call("ksum", "--m", "6", "--a", "40")[0] == 2  # outside GF(64)
    assert call("ksum", "--m", "4", "--a", "1", "--modulus", "15")[0] == 2
    assert call("classify", "--m", "5", "--a", "1")[0] == 2
    assert call("verify", "--m-min", "6", "--m-max", "4")[0] == 2


def test_cap_exit_code_and_force(monkeypatch):
    code, _, err = call("expsums", "--m", "26")
    assert code == 3 and "cap" in err
    code, _, _ = call("distribution", "--m", "16", "--mode", "brute")
    assert code == 3
    monkeypatch.setattr("binkloost.kloosterman.SPECTRUM_CAP", 4)
    monkeypatch.setattr("binkloost.value_distribution.SPECTRUM_CAP", 4)
    assert call("distribution", "--m", "6", "--mode", "brute")[0] == 3
    assert call("distribution", "--m", "6", "--mode", "brute", "--force")[0] == 0
    monkeypatch.setenv("BINKLOOST_FORCE", "1")
    assert call("distribution", "--m", "6", "--mode", "brute")[0] == 0


def test_global_flags_before_subcommand():
    code, out, _ = call("--format", "csv", "--modulus", "49", "distribution", "--m", "6", "--mode", "fast")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert {int(r["residue"]): int(r["count"]) for r in rows}[7] == 9


def test_classify_all_csv():
    code, out, _ = call("classify", "--m", "4", "--all", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 15
    assert list(rows[0]) == CSV_COLUMNS["classify"]
    assert {r["case"] for r in rows} == {"CubeNonzeroTr2", "QuarticImage"}


def test_classify_single():
    _, out, _ = call("classify", "--m", "6", "--a", "1b")
    p = records(out)[0]["payload"]
    assert p["mod24"] == 7 and p["case"] == "QuarticImage"


def test_solve_eq():
    code, out, _ = call("solve-eq", "--m", "6", "--k", "1", "--a", "6")
    rec = records(out)[0]
    assert code == 0 and rec["status"] == "pass"
    assert rec["payload"]["count"] == len(rec["payload"]["solutions"])


def test_curve_count():
    _, out, _ = call("curve-count", "--m", "6", "--c", "7")
    p = records(out)[0]["payload"]
    assert p["points"] == 3 * p["p3"] == p["identity_rhs"]
    _, out, _ = call("curve-count", "--m", "4", "--c", "1")
    p = records(out)[0]["payload"]
    assert p["epsilon"] == 1 and p["identity_rhs"] is None and 3 * p["p3"] == p["points"] - 1


def test_expsums():
    code, out, _ = call("expsums", "--m", "6")
    rec = records(out)[0]
    assert code == 0 and rec["status"] == "pass"
    assert rec["payload"]["X9"] == {"brute": 64, "closed": 64}
    _, out, _ = call("expsums", "--m", "5")
    assert "status" not in records(out)[0]


def test_lpoly():
    code, out, _ = call("lpoly")
    rec = records(out)[0]
    assert code == 0 and rec["status"] == "pass"
    assert rec["payload"]["coeffs"] == [1, 2, 4, 4, 8, 8, 16, 16, 16]
    assert rec["payload"]["power_sums"][:4] == [2, 4, -4, 16]


def test_table_format():
    code, out, _ = call("distribution", "--m", "6", "--mode", "closed", "--format", "table")
    assert code == 0 and "residue=7" in out


def test_deterministic_output():
    argv = ("verify", "--m-min", "4", "--m-max", "6", "--suite", "thm13")
    assert call(*argv)[1] == call(*argv)[1]


def test_json_round_trip():
    _, out, _ = call("classify", "--m", "4", "--all")
    for line in out.splitlines():
        assert json.dumps(json.loads(line), sort_keys=True) == line


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "binkloost", "ksum", "--m", "6", "--a", "0"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 2
    assert "ZeroInput" in proc.stderr
