from __future__ import annotations

import json
import subprocess
import sys

import pytest

from rlcm.cli import main
from rlcm.specfile import load_spec
from rlcm import equal

from conftest import FIXTURES

SPECS = sorted(p.name for p in FIXTURES.glob("*.spec") if p.name != "bad.spec")


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def report(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--json")
    assert code == 0
    return json.loads(out)


def test_lcm_command(capsys):
    r = report(capsys, "lcm", FIXTURES / "b4.spec", "s1", "s2")
    assert r["results"]["result"] == {"kind": "lcm", "lcm": "s1.s2.s1"}
    assert r["generators"] == ["s1", "s2", "s3"]
    r = report(capsys, "lcm", FIXTURES / "free2.spec", "a", "b")
    assert r["results"]["result"]["kind"] == "proven_empty"


def test_exit_codes(capsys, monkeypatch):
    assert run(capsys, "ball", FIXTURES / "bad.spec")[0] == 2
    code, _, err = run(capsys, "lcm", FIXTURES / "i2_3.spec", "a", "a?b")
    assert code == 2 and "column 2" in err
    assert run(capsys, "ball", FIXTURES / "free2.spec", "--cap", "10")[0] == 3
    monkeypatch.setenv("RLCM_CAP", "10")
    assert run(capsys, "ball", FIXTURES / "free2.spec")[0] == 3
    monkeypatch.delenv("RLCM_CAP")
    assert run(capsys, "classify", FIXTURES / "noncancel.spec")[0] == 2
    assert run(capsys, "check", FIXTURES / "i2_3.spec", "--check", "covariance",
               "--rep", FIXTURES / "violates.rep")[0] == 2
    assert run(capsys, "check", FIXTURES / "noncancel.spec", "--check", "covariance")[0] == 2
    assert run(capsys, "ball", FIXTURES / "missing.spec")[0] == 2
    assert run(capsys, "frobnicate")[0] == 2


def test_fails_is_not_an_error(capsys):
    argv = ["check", FIXTURES / "n2.spec", "--check", "covariance", "--rep", FIXTURES / "shift_equal.rep"]
    code, out, _ = run(capsys, *argv, "--json")
    assert code == 0 and json.loads(out)["results"]["verdict"]["kind"] == "fails"
    assert run(capsys, *argv, "--assert-holds")[0] == 1
    assert run(capsys, "check", FIXTURES / "i2_3.spec", "--check", "rightlcm", "--assert-holds")[0] == 0
    # unresolved pairs make the aggregate Inconclusive, which --assert-holds rejects
    assert run(capsys, "check", FIXTURES / "i2_3.spec", "--check", "wick", "--assert-holds")[0] == 1


def test_inclusion_and_zf(capsys):
    r = report(capsys, "check", FIXTURES / "b4.spec", "--check", "inclusion", "--subset", "s1,s2")
    assert {v["kind"] for v in r["results"].values()} == {"holds"}
    r = report(capsys, "check", FIXTURES / "i2_3.spec", "--check", "zf", "--set", "a,b", "--radius", "4")
    assert r["results"]["psd"] is True and r["results"]["dim"] == 26
    r = report(capsys, "check", FIXTURES / "i2_3.spec", "--check", "zf", "--set", "a,b", "--radius", "2")
    assert r["results"]["verdict"]["kind"] == "inconclusive" and r["results"]["matrix"] is None


def test_closure_witness_replays(capsys):
    r = report(capsys, "check", FIXTURES / "closure.spec", "--check", "inclusion", "--subset", "a", "--radius", "3")
    v = r["results"]["closed_under_factorization"]
    assert v["kind"] == "fails"
    pres = load_spec(FIXTURES / "closure.spec").presentation
    w = {k: pres.parse_word(s) for k, s in v["witness"].items()}
    assert equal(pres, w["x"] + w["y"], w["w"])


def test_covariance_witness_replays(capsys):
    r = report(capsys, "check", FIXTURES / "n2.spec", "--check", "covariance",
               "--rep", FIXTURES / "shift_equal.rep")
    w = r["results"]["verdict"]["witness"]
    assert w["lhs"] != w["rhs"]
    assert (w["x"], w["y"], w["lcm"]) == ("a", "b", "ab")


def test_classify(capsys):
    r = report(capsys, "classify", FIXTURES / "b4.spec")
    assert r["results"]["verdict"]["kind"] == "not_nica_amenable"
    assert r["results"]["dihedral_witness"]["generators"] == ["s1", "s2"]
    assert {v["kind"] for v in r["results"]["dihedral_witness"]["checks"].values()} == {"holds"}
    r = report(capsys, "classify", "--matrix", "1 inf; inf 1")
    assert r["results"]["verdict"]["kind"] == "nica_amenable"
    r = report(capsys, "classify", FIXTURES / "gp_braid.spec")
    assert r["results"]["verdict"]["kind"] == "not_nica_amenable"
    r = report(capsys, "classify", FIXTURES / "gp_path.spec")
    assert r["results"]["verdict"]["kind"] == "nica_amenable"


def test_ball(capsys):
    r = report(capsys, "ball", FIXTURES / "i2_3.spec", "--radius", "3", "--list")
    assert r["results"]["sizes_by_length"] == [1, 2, 4, 7]
    assert r["results"]["elements"][0] == {"canonical": "e", "class_size": 1}


def test_text_output(capsys):
    code, out, _ = run(capsys, "lcm", FIXTURES / "i2_3.spec", "a", "b")
    assert code == 0 and "aba" in out and not out.lstrip().startswith("{")


def test_timing_only_on_request(capsys):
    assert "timing_seconds" not in report(capsys, "ball", FIXTURES / "n2.spec")
    assert "timing_seconds" in report(capsys, "ball", FIXTURES / "n2.spec", "--timing")


CHECKS = ["covariance", "wick", "rightlcm", "cancellativity", "inclusion"]


@pytest.mark.parametrize("spec", SPECS)
def test_check_output_is_deterministic(spec, capsys):
    for check in CHECKS:
        argv = ["check", FIXTURES / spec, "--check", check, "--radius", "4", "--json"]
        if check == "inclusion":
            argv += ["--subset", load_spec(FIXTURES / spec).presentation.names[0]]
        outs = {run(capsys, *argv)[1:] for _ in range(3)}
        assert len(outs) == 1


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "rlcm", "lcm", str(FIXTURES / "i2_4.spec"), "a", "b", "--json"],
        capture_output=True, text=True, check=True,
    )
    assert json.loads(proc.stdout)["results"]["result"]["lcm"] == "abab"
