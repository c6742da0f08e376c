"""Batch driver, report formats, and the command-line interface."""

import csv
import io
import json

import pytest

from congforge.cli import main
from congforge.errors import ConfigurationError, InsufficientPrecision
from congforge.runner import (
    CSV_COLUMNS,
    emit_report,
    report_to_csv,
    report_to_json,
    run_batch,
)


@pytest.fixture(scope="module")
def small_report():
    return run_batch(5, 30, jobs=1)


def test_small_sweep_all_pass(small_report):
    r = small_report
    assert r.ok
    assert r.summary["fail"] == 0 and r.summary["skipped"] == 0
    assert r.summary["pass"] == 31 * 8  # 31 entries, 8 primes in [5, 30]
    assert sorted(r.summary["per_id"]) == r.meta["ids"]
    assert [v.p for v in r.results] == sorted(v.p for v in r.results)


def test_results_sorted_by_p_then_id(small_report):
    keys = [(v.p, v.id) for v in small_report.results]
    assert keys == sorted(keys)


def test_parallel_run_byte_identical(small_report):
    parallel = run_batch(5, 30, jobs=3)
    assert report_to_json(parallel) == report_to_json(small_report)
    assert report_to_csv(parallel) == report_to_csv(small_report)


def test_seed_changes_only_sampled_entries(small_report):
    other = run_batch(5, 30, jobs=1, seed=99)
    assert other.ok
    a = {(v.p, v.id): v.to_dict() for v in small_report.results}
    b = {(v.p, v.id): v.to_dict() for v in other.results}
    assert a.keys() == b.keys()
    for key in a:
        if key[1] != "C3.8":
            assert a[key] == b[key]


def test_id_selection():
    r = run_batch(5, 50, ids=["W.HARM1", "T1.1"], jobs=1)
    assert r.ok and {v.id for v in r.results} == {"W.HARM1", "T1.1"}
    with pytest.raises(ConfigurationError):
        run_batch(5, 50, ids=["NOPE"])


def test_euler_bound_skips():
    r = run_batch(5, 30, euler_bound=10, jobs=1)
    assert r.ok
    skipped = {(s["id"], s["p"]) for s in r.skipped}
    assert ("S11B.HALF", 29) in skipped and ("R2.1b", 29) in skipped
    assert ("S11B.HALF", 7) not in skipped
    assert r.summary["per_id"]["R2.1b"]["skipped"] > 0


def test_run_batch_validation():
    with pytest.raises(ConfigurationError):
        run_batch(2, 30)
    with pytest.raises(ConfigurationError):
        run_batch(30, 5)
    with pytest.raises(ConfigurationError):
        run_batch(5, 30, work=0)
    with pytest.raises(ConfigurationError):
        run_batch(5, 30, jobs=0)
    with pytest.raises(InsufficientPrecision):
        run_batch(5, 30, work=3)  # several entries need more digits
    # a shallow sweep is fine when the selected ids allow it
    assert run_batch(5, 30, ids=["W.HARM1"], work=2).ok


def test_json_schema(small_report):
    doc = json.loads(report_to_json(small_report))
    assert set(doc) == {"meta", "results", "skipped", "summary"}
    meta = doc["meta"]
    assert meta["tool"] == "congforge" and meta["prime_lo"] == 5
    assert "timestamp" not in meta
    row = doc["results"][0]
    assert {"id", "p", "mod_exp", "lhs", "rhs", "pass", "diff_valuation"} <= set(row)


def test_csv_schema(small_report):
    text = report_to_csv(small_report)
    rows = list(csv.reader(io.StringIO(text)))
    assert rows[0] == CSV_COLUMNS
    assert len(rows) == 1 + len(small_report.results)
    assert all(len(r) == len(CSV_COLUMNS) for r in rows)


def test_emit_report_to_file(tmp_path, small_report):
    out = tmp_path / "r.json"
    text = emit_report(small_report, format="json", path=str(out))
    assert out.read_text() == text
    with pytest.raises(ConfigurationError):
        emit_report(small_report, format="xml")


# ------------------------------------------------------------------- CLI


def test_cli_verify_ok(tmp_path, capsys):
    out = tmp_path / "report.json"
    code = main(
        ["verify", "--primes", "5:30", "--ids", "W.HARM1,W.CBC", "--out", str(out)]
    )
    assert code == 0
    doc = json.loads(out.read_text())
    assert doc["summary"]["fail"] == 0
    assert "pass" in capsys.readouterr().out


def test_cli_verify_stdout_csv(capsys):
    code = main(["verify", "--primes", "5:13", "--ids", "W.HARM2", "--format", "csv"])
    assert code == 0
    out = capsys.readouterr().out
    assert out.splitlines()[0] == ",".join(CSV_COLUMNS)


def test_cli_conjecture(capsys):
    code = main(["conjecture", "--primes", "5:30"])
    assert code == 0
    doc = json.loads(capsys.readouterr().out)
    assert {v["id"] for v in doc["results"]} == {"CONJ1"}


def test_cli_value(capsys):
    assert main(["value", "7", "bernoulli-third"]) == 0
    assert main(["value", "7", "legendre3"]) == 0
    assert main(["value", "11", "bernoulli:4"]) == 0
    assert main(["value", "7", "euler"]) == 0
    out = capsys.readouterr().out
    assert "(mod 7)" in out


def test_cli_identities(capsys):
    assert main(["identities", "--max-n", "6"]) == 0
    assert "ok" in capsys.readouterr().out


def test_cli_errors(capsys):
    assert main(["verify", "--primes", "5:30", "--ids", "BOGUS"]) == 2
    assert main(["value", "7", "bogus-selector"]) == 2
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--primes", "oops"])
    assert exc.value.code == 2
