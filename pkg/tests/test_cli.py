import json
import subprocess
import sys

import pytest

from thetacancel.cli import RunConfig, UsageError, main, run


def test_usage_error_on_hypothesis(capsys):
    assert main(["verify-even", "--d", "4", "--n", "2"]) == 2
    err = capsys.readouterr().err
    assert "d - (2n + (1-(-1)^d)/2) > 0 fails" in err


def test_verify_even_reports_constant(capsys):
    assert main(["verify-even", "--d", "6", "--n", "2", "--verbose"]) == 0
    out = capsys.readouterr().out
    assert "constant multiple of top(base): expected -128/1, got -128/1" in out


def test_check_numeric_single_tau(capsys):
    assert main(["check-numeric", "--tau", "0,2", "--v", "0.3,0.1"]) == 0
    assert "fail 0" in capsys.readouterr().out


def test_expand_json(capsys):
    assert main(["expand", "--object", "epsilon2", "--order", "4"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["series"] == {"1/2": "1/1", "2/2": "8/1", "3/2": "28/1", "4/2": "64/1"}


def test_expand_q_form_needs_dn():
    with pytest.raises(UsageError):
        run(RunConfig("expand", obj="Q2"))
    with pytest.raises(UsageError):
        run(RunConfig("expand", obj="nothing"))
    code, data = run(RunConfig("expand", d=6, n=1, order=2, obj="P2"))
    assert code == 0 and set(data["series"]) == {"0/2", "1/2", "2/2"}


def test_json_out_deterministic(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert main(["verify-odd", "--d", "6", "--n", "1", "--json", "--out", str(a)]) == 0
    assert main(["verify-odd", "--d", "6", "--n", "1", "--json", "--out", str(b), "--jobs", "3"]) == 0
    assert a.read_bytes() == b.read_bytes()
    data = json.loads(a.read_text())
    assert set(data) == {"version", "config", "checks"}
    assert all(set(c) == {"check_id", "identity", "params", "status", "details"} for c in data["checks"])


def test_order_env_override(monkeypatch, capsys):
    monkeypatch.setenv("THETACANCEL_ORDER", "2")
    assert main(["verify-even", "--d", "6", "--n", "1", "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["config"]["order"] == 2
    assert any(c["status"] == "skip" for c in data["checks"])
    monkeypatch.setenv("THETACANCEL_ORDER", "x")
    assert main(["verify-even", "--d", "6", "--n", "1"]) == 2


def test_corollary_mismatch_does_not_fail(capsys):
    assert main(["verify-corollary", "--id", "twisted-d5-n1"]) == 0
    assert "REFERENCE-MISMATCH" in capsys.readouterr().out
    assert main(["verify-corollary", "--id", "bogus"]) == 2


def test_all_at_order_two_skips_large_windows():
    code, rep = run(RunConfig("all", order=2))
    counts = rep.counts()
    assert code == 0 and counts["fail"] == 0 and counts["skip"] > 0
    passed = {e.check_id for e in rep.entries if e.status == "pass"}
    assert "even.d6.n2.residual" in passed


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "thetacancel", "verify-odd", "--d", "4", "--n", "1"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and "summary:" in res.stdout
