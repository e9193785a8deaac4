from __future__ import annotations

import io
import json
import subprocess
import sys

import pytest

from gammasym.cli import main
from gammasym.lie import dump_algebra, filiform_l5, heisenberg
from gammasym.scenarios import SCENARIOS, list_scenarios, run_scenario

REQUIRED = [
    "h3-involutions",
    "h3-subgroups",
    "h3-z22-grading",
    "h3-symmetric-no-metric",
    "h3-symmetric-center-metric",
    "h3-riemannian-normal-form",
    "h3-lorentzian-case1",
    "h3-lorentzian-case2",
    "h2p1-gradings",
    "h2p1-metric-existence",
    "h2p1-flat-connections",
    "l5-connection",
    "sigma3-example",
]


def run(*argv: str) -> tuple[int, str]:
    out = io.StringIO()
    code = main(list(argv), out)
    return code, out.getvalue()


def test_list_has_required_names():
    code, text = run("list")
    assert code == 0
    names = [line.split("\t")[0] for line in text.splitlines()]
    assert set(REQUIRED) <= set(names)
    assert len(names) == len(set(names)) >= 13
    assert run()[1] == text


def test_every_scenario_has_an_anchor():
    for name in list_scenarios():
        assert SCENARIOS[name].anchor and SCENARIOS[name].description


def test_run_z22_grading_json():
    code, text = run("run", "h3-z22-grading", "--json")
    assert code == 0
    doc = json.loads(text)
    assert doc["scenario"] == "h3-z22-grading" and doc["status"] == "pass"
    actual = {c["label"]: c["actual"] for c in doc["checks"]}
    assert actual["g_(-,+)"] == "span{(1,0,0)}"
    assert actual["g_(+,-)"] == "span{(0,1,0)}"
    assert actual["g_(-,-)"] == "span{(0,0,1)}"
    assert isinstance(doc["elapsed_ms"], int)
    assert set(doc["checks"][0]) == {"label", "expected", "actual", "ok"}


def test_run_no_metric_reports_radical():
    rep = run_scenario("h3-symmetric-no-metric")
    assert rep.status == "pass"
    check = next(c for c in rep.checks if c.label == "common_radical")
    assert check.actual == "span{(0,0,1)}"


def test_unknown_scenario_is_usage_error():
    assert run("run", "unknown")[0] == 2
    assert run("frobnicate")[0] == 2
    assert run("run", "h3-order-k", "--param", "oops")[0] == 2


def test_reports_are_byte_identical():
    a = run("run", "h3-involutions", "--json", "--no-timing", "--seed", "7")
    b = run("run", "h3-involutions", "--json", "--no-timing", "--seed", "7")
    assert a == b
    assert json.loads(a[1])["elapsed_ms"] == 0


def test_seed_changes_samples():
    a = run_scenario("l5-connection", seed=1)
    b = run_scenario("l5-connection", seed=2)
    assert [c.label for c in a.checks] != [c.label for c in b.checks]


def test_exit_code_tracks_checks():
    code, _ = run("run", "sigma3-example")
    assert code == 0
    code, text = run("run", "l5-connection", "--json")
    doc = json.loads(text)
    assert (code == 0) == all(c["ok"] for c in doc["checks"])
    assert doc["status"] == ("pass" if code == 0 else "fail")


def test_check_heisenberg_file(tmp_path):
    path = tmp_path / "h3.json"
    dump_algebra(heisenberg(1), path)
    code, text = run("check", str(path), "--json")
    assert code == 0
    doc = json.loads(text)
    assert {"label": "center dimension", "expected": "1", "actual": "1", "ok": True} in doc["checks"]


def test_check_l5_file(tmp_path):
    path = tmp_path / "l5.json"
    dump_algebra(filiform_l5(), path)
    code, text = run("check", str(path))
    assert code == 0 and "center dimension: 1" in text


def test_check_rejects_non_antisymmetric(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"dim": 3, "brackets": [
        {"i": 1, "j": 2, "coeffs": [[3, "1"]]},
        {"i": 2, "j": 1, "coeffs": [[3, "1"]]},
    ]}))
    assert run("check", str(path))[0] == 1


def test_check_rejects_jacobi_failure(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"dim": 3, "brackets": [
        {"i": 1, "j": 2, "coeffs": [[3, "1"]]},
        {"i": 3, "j": 1, "coeffs": [[1, "1"]]},
    ]}))
    assert run("check", str(path))[0] == 1


def test_check_parse_errors(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    assert run("check", str(path))[0] == 2
    assert run("check", str(tmp_path / "missing.json"))[0] == 2
    path.write_text(json.dumps({"dim": 3, "brackets": [{"i": 1, "j": 2, "coeffs": [[3, 1.5]]}]}))
    assert run("check", str(path))[0] == 2


@pytest.mark.slow
def test_module_entry_point_and_jobs():
    proc = subprocess.run(
        [sys.executable, "-m", "gammasym", "run-all", "--json", "--jobs", "2", "--no-timing"],
        capture_output=True, text=True, timeout=300,
    )
    docs = json.loads(proc.stdout)
    assert [d["scenario"] for d in docs] == list_scenarios()
    failing = [d["scenario"] for d in docs if d["status"] == "fail"]
    assert proc.returncode == (1 if failing else 0)
