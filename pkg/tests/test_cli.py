"""CLI commands and exit codes, in-process and against the API."""
from __future__ import annotations

import json

import pytest
from fastapi.testclient import TestClient
from typer.testing import CliRunner

from dpcolor import __version__, cli
from dpcolor.api.main import app as api_app

runner = CliRunner()


def invoke(*args: str):
    return runner.invoke(cli.app, [str(a) for a in args])


def test_version():
    result = invoke("version")
    assert result.exit_code == 0
    assert result.stdout.strip() == __version__


def test_parse_dimacs(tmp_path):
    path = tmp_path / "p3.col"
    path.write_text("p edge 3 2\ne 1 2\ne 2 3\n", encoding="utf-8")
    result = invoke("parse", path)
    assert result.exit_code == 0
    assert result.stdout == "3 2\n0 1\n1 2\n"


def test_parse_rejects_malformed_input(tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("0 x\n", encoding="utf-8")
    assert invoke("parse", path).exit_code == 2
    assert invoke("parse", tmp_path / "missing.txt").exit_code == 2


def test_faces(embedding_file):
    result = invoke("faces", embedding_file("q3"))
    assert result.exit_code == 0
    assert result.stdout.splitlines()[0] == "n=8 m=12 faces=6"
    payload = json.loads(invoke("faces", embedding_file("q3"), "--format", "json").stdout)
    assert [len(f) for f in payload["faces"]] == [4] * 6


def test_check_class(embedding_file):
    assert invoke("check-class", embedding_file("c5")).stdout.strip() == "ok"
    result = invoke("check-class", embedding_file("k4"), "-f", "json")
    assert result.exit_code == 1
    assert json.loads(result.stdout) == {"ok": False, "c4": [0, 1, 2, 3], "c3": [0, 1, 2], "shared_edge": [0, 1]}


def test_solve_twisted_c4_is_infeasible(twisted_c4_files):
    graph, assignment = twisted_c4_files
    result = invoke("solve", graph, "--assignment", assignment)
    assert result.exit_code == 1
    assert result.stdout.startswith("infeasible")


def test_solve_respects_budget(twisted_c4_files):
    graph, assignment = twisted_c4_files
    assert invoke("solve", graph, "-a", assignment, "--budget", "0").exit_code == 3


def test_chi_dp(tmp_path):
    path = tmp_path / "C6.txt"
    path.write_text("0 1\n1 2\n2 3\n3 4\n4 5\n0 5\n", encoding="utf-8")
    result = invoke("chi-dp", path, "--format", "json")
    assert result.exit_code == 0
    report = json.loads(result.stdout)
    assert (report["graph_id"], report["chi"], report["chi_dp"]) == ("C6", 2, 3)
    assert invoke("chi-dp", path, "--kmax", "1").exit_code == 3


def test_color_in_process(embedding_file):
    result = invoke("color", embedding_file("icosidodecahedron"), "-f", "json")
    assert result.exit_code == 0
    report = json.loads(result.stdout)
    assert report["status"] == "colored"
    assert len(report["coloring"]) == 30
    assert report["trace"][-1] == "verified transversal against the full cover"


def test_color_rejects_non_members(embedding_file):
    assert invoke("color", embedding_file("k4")).exit_code == 2


def test_color_through_the_api(embedding_file, monkeypatch: pytest.MonkeyPatch):
    monkeypatch.setattr(cli.httpx, "Client", lambda timeout=None: TestClient(api_app))
    result = invoke("color", embedding_file("dodecahedron"), "--api-url", "http://testserver/", "-f", "json")
    assert result.exit_code == 0
    assert json.loads(result.stdout)["status"] == "colored"
    assert invoke("color", embedding_file("w5"), "--api-url", "http://testserver").exit_code == 2


def test_audit(embedding_file):
    result = invoke("audit", embedding_file("icosidodecahedron"), "--strict")
    assert result.exit_code == 0
    assert result.stdout.splitlines()[:2] == ["total charge -12 -> -12", "30 negative, 0 unwitnessed"]
    payload = json.loads(invoke("audit", embedding_file("dodecahedron"), "-f", "json").stdout)
    assert set(payload) == {"ledger", "audit", "lemmas"}
    assert len(payload["audit"]["negatives"]) == 12


def test_audit_of_a_non_member(embedding_file):
    assert invoke("audit", embedding_file("k4")).exit_code == 2


def test_regress():
    result = invoke("regress", "chi-dp-C4", "k4-class")
    assert result.exit_code == 0
    assert result.stdout.splitlines()[0] == "ok   chi-dp-C4: 3"
    assert invoke("regress", "no-such-case").exit_code == 2


def test_fuzz_budget_failure_and_replay(tmp_path):
    out = tmp_path / "bundles"
    result = invoke("fuzz", "--seed", "1", "--trials", "3", "--n-min", "8", "--n-max", "10", "--budget", "0", "--out", out)
    assert result.exit_code == 3
    (bundle,) = sorted(out.glob("*.json"))
    assert bundle.name.endswith("-budget.json")
    assert invoke("replay", bundle, "--budget", "0").exit_code == 1
    replayed = invoke("replay", bundle)
    assert replayed.exit_code == 0
    assert replayed.stdout.startswith("budget: no longer reproduces")


def test_fuzz_rejects_bad_ranges():
    assert invoke("fuzz", "--n-min", "10", "--n-max", "5").exit_code == 2


def test_small_fuzz_run(tmp_path):
    result = invoke("fuzz", "-s", "5", "-n", "2", "--assignments", "2", "--n-max", "15", "-f", "json")
    assert result.exit_code == 0
    report = json.loads(result.stdout)
    assert report["total_runs"] == report["total_colored"] == 4
    assert report["failures"] == []
