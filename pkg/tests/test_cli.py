"""CLI behavior: exit codes, round trips, JSON stability, determinism."""

import json
import subprocess
import sys

import pytest

from almg import fileio, make_boolean, make_chain, make_z_window_uv, classify
from almg.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.fixture
def b2_file(tmp_path):
    path = tmp_path / "b2.alg"
    fileio.dump(make_boolean(2), path)
    return str(path)


@pytest.fixture
def chain3_file(tmp_path):
    path = tmp_path / "chain3.alg"
    fileio.dump(make_chain(3, "truncated"), path)
    return str(path)


@pytest.fixture
def zuv_file(tmp_path):
    path = tmp_path / "zuv.alg"
    fileio.dump(make_z_window_uv(4), path)
    return str(path)


def test_check_passes_on_b2(capsys, b2_file):
    code, out, err = run_cli(capsys, "check", b2_file)
    assert code == 0
    assert "al_monoid=True" in out


def test_check_fails_on_zuv(capsys, zuv_file):
    code, out, err = run_cli(capsys, "check", zuv_file)
    assert code == 1
    assert "axiom2: FAIL" in out


def test_check_parse_error_exit_2(capsys, tmp_path):
    bad = tmp_path / "bad.alg"
    text = fileio.dumps(make_boolean(2)).splitlines()
    text[4] = "0 1 2"  # three entries in a size-4 row
    bad.write_text("\n".join(text), encoding="utf-8")
    code, out, err = run_cli(capsys, "check", str(bad))
    assert code == 2
    assert "line 5" in err


def test_check_missing_file_exit_2(capsys):
    code, out, err = run_cli(capsys, "check", "/nonexistent/x.alg")
    assert code == 2


def test_check_json_round_trips(capsys, b2_file):
    code, out, _ = run_cli(capsys, "check", b2_file, "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["classification"]["al_monoid"] is True
    assert {e["name"] for e in doc["entries"]} >= {"lattice", "monoid", "metric"}
    assert doc["summary"]["exit_code"] == 0


def test_check_optional_sections(capsys, b2_file):
    code, out, _ = run_cli(capsys, "check", b2_file, "--distributivity", "--drl", "--json")
    assert code == 0
    names = {e["name"] for e in json.loads(out)["entries"]}
    assert "add_distributive" in names and "drl_compatible" in names


def test_geometry_suite_b2(capsys, b2_file):
    code, out, _ = run_cli(capsys, "geometry", b2_file, "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["flags"]["theorems_passed"] is True
    assert doc["flags"]["is_chain"] is False
    assert doc["fixty_total"] == 1


def test_geometry_predicates(capsys, b2_file, chain3_file):
    code, out, _ = run_cli(capsys, "geometry", b2_file, "--predicate", "fixty", "1", "2", "3")
    assert code == 0 and out.strip() == "true"
    code, out, _ = run_cli(capsys, "geometry", chain3_file, "--predicate", "M", "0", "2", "1")
    assert code == 0 and out.strip() == "false"
    code, out, _ = run_cli(capsys, "geometry", b2_file, "--predicate", "L", "1", "3", "2")
    assert code == 0 and out.strip() == "true"
    code, out, err = run_cli(capsys, "geometry", b2_file, "--predicate", "nope", "1", "2", "3")
    assert code == 2


def test_enumerate_writes_files(capsys, tmp_path):
    out_dir = tmp_path / "found"
    code, out, _ = run_cli(capsys, "enumerate", "--size", "2", "--out", str(out_dir), "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["result"]["found"] >= 1
    assert doc["result"]["exhausted"] is True
    files = sorted(out_dir.glob("*.alg"))
    assert len(files) == len(doc["canonical_forms"])
    for path in files:
        alg = fileio.load(path)
        assert classify(alg).al_monoid
    summary = json.loads((out_dir / "summary.json").read_text())
    assert summary["found"] == doc["result"]["found"]


def test_search_usage_error_on_overlap(capsys):
    code, out, err = run_cli(capsys, "search", "--size", "3",
                             "--require", "axiom2", "--violate", "axiom2")
    assert code == 2
    assert "overlap" in err


def test_search_finds_independence_witness(capsys):
    code, out, _ = run_cli(capsys, "search", "--size", "2",
                           "--require", "axiom4", "--violate", "axiom2", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["result"]["found"] >= 1


def test_search_exhausted_report(capsys):
    code, out, _ = run_cli(capsys, "search", "--size", "2", "--all",
                           "--require", "lattice,monoid,metric,contractions,axiom2",
                           "--violate", "axiom4", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["result"]["found"] == 0
    assert doc["result"]["exhausted"] is True


def test_intervals_demos(capsys):
    code, out, _ = run_cli(capsys, "intervals", "ex")
    assert code == 0
    assert "[2,2]" in out
    code, out, _ = run_cli(capsys, "intervals", "fixty")
    assert code == 0
    assert "[1,1]+[2,2]" in out


def test_intervals_ops(capsys):
    code, out, _ = run_cli(capsys, "intervals", "star", "[0,2]", "[1,3]")
    assert code == 0 and out.strip() == "[0,1]+[2,3]"
    code, out, _ = run_cli(capsys, "intervals", "union", "[0,2]", "[5/2,3]")
    assert code == 0 and out.strip() == "[0,2]+[5/2,3]"
    code, out, _ = run_cli(capsys, "intervals", "intersect", "[0,2]", "[1,3]")
    assert code == 0 and out.strip() == "[1,2]"
    code, out, _ = run_cli(capsys, "intervals", "axiom2", "[0,2]", "[2,3]")
    assert code == 0


def test_intervals_usage_error_lists_demos(capsys):
    code, out, err = run_cli(capsys, "intervals", "bogus")
    assert code == 2
    assert "ex" in err and "fixty" in err


def test_intervals_bad_literal(capsys):
    code, out, err = run_cli(capsys, "intervals", "star", "[0,2", "[1,3]")
    assert code == 2


def test_model_round_trip(capsys):
    code, out, _ = run_cli(capsys, "model", "boolean", "--k", "2")
    assert code == 0
    alg = fileio.loads(out)
    assert alg == make_boolean(2)


def test_model_chain_and_window(capsys):
    code, out, _ = run_cli(capsys, "model", "chain", "--n", "3", "--mode", "truncated")
    assert code == 0
    assert fileio.loads(out) == make_chain(3, "truncated")
    code, out, _ = run_cli(capsys, "model", "z-u", "--window", "4")
    assert code == 0
    assert "?" in out
    alg = fileio.loads(out)
    assert alg.is_partial


def test_model_product(capsys):
    code, out, _ = run_cli(capsys, "model", "product",
                           "--factor", "boolean:1", "--factor", "chain:3")
    assert code == 0
    assert fileio.loads(out).size == 6


def test_model_window_check_reports_skips(capsys, tmp_path):
    code, out, _ = run_cli(capsys, "model", "z-u", "--window", "4")
    path = tmp_path / "zu.alg"
    path.write_text(out, encoding="utf-8")
    code, out, _ = run_cli(capsys, "check", str(path), "--json")
    assert code == 0
    doc = json.loads(out)
    assert any(e["skipped"] > 0 for e in doc["entries"])


def _strip_timing(text):
    doc = json.loads(text)
    doc.pop("timing", None)
    return json.dumps(doc, sort_keys=True)


def test_json_outputs_are_stable_across_runs(capsys, b2_file):
    _, out1, _ = run_cli(capsys, "check", b2_file, "--json")
    _, out2, _ = run_cli(capsys, "check", b2_file, "--json")
    assert _strip_timing(out1) == _strip_timing(out2)


def test_json_outputs_thread_invariant(capsys, b2_file):
    for cmd in (
        ["enumerate", "--size", "3", "--json"],
        ["search", "--size", "2", "--require", "axiom4", "--violate", "axiom2", "--json"],
        ["check", b2_file, "--json"],
        ["geometry", b2_file, "--json"],
    ):
        _, out1, _ = run_cli(capsys, *cmd, "--threads", "1")
        _, out8, _ = run_cli(capsys, *cmd, "--threads", "8")
        assert _strip_timing(out1) == _strip_timing(out8), cmd


def test_console_entry_point_subprocess(tmp_path):
    path = tmp_path / "b2.alg"
    fileio.dump(make_boolean(2), path)
    proc = subprocess.run(
        [sys.executable, "-m", "almg.cli", "check", str(path)],
        capture_output=True, text=True)
    assert proc.returncode == 0
    assert "al_monoid=True" in proc.stdout
