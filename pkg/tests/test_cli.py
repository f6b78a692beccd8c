from __future__ import annotations

import json
import os
import subprocess
import sys

import pytest

from drinfeld import GF, parse, series_from_json
from drinfeld.cli import default_prec, main


def run(capsys, *argv: str) -> tuple[int, str, str]:
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate-modular", "--q", "3", "--source-weight", "4", "--max-n", "1000")
    assert code == 0 and out.strip() == "6 24 78 240 726"


def test_expand_and_poincare_sign(capsys):
    code, out, _ = run(capsys, "expand", "--q", "3", "--k", "16", "--n", "7", "--prec", "8")
    assert code == 0
    assert out.strip() == "f_(16,7) = (1/(T^6 + T^4 + T^2))*u^3 + (1/(T^3 + 2*T))*u^5 + u^7 + O(u^9)"
    code, out, _ = run(capsys, "expand", "--q", "3", "--k", "16", "--n", "7", "--prec", "8", "--as-poincare", "--json")
    doc = json.loads(out)
    F = GF(3)
    s = series_from_json(F, doc["series"])
    assert s[3] == parse(F, "-1/(T^6 + T^4 + T^2)") and s[7] == parse(F, "-1")


def test_expand_rejects_k_le_n(capsys):
    code, _, err = run(capsys, "expand", "--q", "3", "--k", "7", "--n", "7", "--prec", "8")
    assert code == 1 and "k > n" in err


def test_usage_errors(capsys):
    assert run(capsys, "goss", "--q", "6", "--n", "2")[0] == 2
    assert run(capsys, "nonsense")[0] == 2
    assert run(capsys, "goss", "--n", "2")[0] == 2
    assert run(capsys, "lucas", "--p", "4", "--top", "3", "--bottom", "1")[0] == 2
    assert run(capsys, "named", "--q", "3", "--form", "f_s", "--prec", "5")[0] == 2


def test_json_single_document(capsys):
    for argv in (
        ["goss", "--q", "3", "--n", "7", "--json"],
        ["certify-nonvanishing", "--q", "3", "--k", "16", "--n", "7", "--json"],
        ["basis-express", "--q", "3", "--k", "6", "--type", "0", "--form", "D1(h)", "--prec", "30", "--json"],
        ["hyperderiv", "--q", "3", "--form", "h", "--order", "6", "--prec", "20", "--json"],
    ):
        main(argv)
        out, _ = capsys.readouterr()
        assert len(out.strip().splitlines()) == 1
        json.loads(out)


def test_certify(capsys):
    code, out, _ = run(capsys, "certify-nonvanishing", "--q", "3", "--k", "10", "--n", "2")
    assert code == 0 and "N = 13" in out and "verdict: certified" in out
    code, out, _ = run(capsys, "certify-nonvanishing", "--q", "3", "--k", "4", "--n", "1", "--root-order", "20", "--json")
    assert json.loads(out)["N"] == 20
    code, _, err = run(capsys, "certify-nonvanishing", "--q", "3", "--k", "16", "--n", "7")
    assert code == 1 and "n > k/(q+1)" in err


def test_basis_express(capsys):
    code, out, _ = run(capsys, "basis-express", "--q", "3", "--k", "16", "--type", "1", "--form", "D6(h)", "--json")
    doc = json.loads(out)
    assert code == 0 and doc["ok"] and doc["monomials"] == [[6, 1], [2, 3]]
    assert doc["coefficients"] == ["0", "1/(T^6 + T^4 + T^2)"]
    code, out, _ = run(capsys, "basis-express", "--q", "3", "--k", "6", "--type", "0", "--form", "D1(h)", "--prec", "30")
    assert code == 1 and "u^2" in out
    code, _, err = run(capsys, "basis-express", "--q", "3", "--k", "6", "--type", "1", "--form", "D1(g)", "--prec", "30")
    assert code == 1 and "A-expansions" in err


def test_named_hyperderiv_lucas_carlitz(capsys):
    code, out, _ = run(capsys, "named", "--q", "3", "--form", "g", "--prec", "5")
    assert out.strip() == "g = 1 + (2*T^3 + T)*u^2 + O(u^6)"
    code, out, _ = run(capsys, "hyperderiv", "--q", "3", "--form", "h", "--order", "1", "--prec", "10")
    assert "weight 6, type 0, modular: false" in out
    code, out, _ = run(capsys, "lucas", "--p", "3", "--top", "9", "--bottom", "3")
    assert out.strip() == "0"
    code, out, _ = run(capsys, "carlitz", "--q", "3", "--a", "T^2", "--i", "1")
    assert "[1] = T^3 + 2*T" in out and "X^3: T^3 + T" in out


def test_default_precision(capsys):
    assert default_prec(16, 3) == 64
    assert default_prec(5, 4) == 17
    code, out, _ = run(capsys, "expand", "--q", "3", "--k", "4", "--n", "1", "--json")
    assert json.loads(out)["series"]["prec"] == 16


def test_output_deterministic():
    argv = [sys.executable, "-m", "drinfeld.cli", "expand", "--q", "4", "--k", "11", "--n", "3", "--prec", "40", "--json"]
    first = subprocess.run(argv, capture_output=True, check=True).stdout
    second = subprocess.run(argv, capture_output=True, check=True).stdout
    assert first == second and first


def test_verify_paper_seed_hook(capsys):
    code, out, _ = run(capsys, "verify-paper", "--only", "A1", "A2", "A8", "--json")
    doc = json.loads(out)
    assert code == 0 and doc["all_passed"]
    assert [c["criterion"] for c in doc["criteria"]] == ["A1", "A2", "A8"]
    code, out, _ = run(capsys, "verify-paper", "--only", "A2", "--goss-seed", "0", "--json")
    doc = json.loads(out)
    assert code == 1 and not doc["criteria"][0]["passed"]


def test_threads_env(capsys, monkeypatch):
    monkeypatch.setenv("DRINFELD_THREADS", "3")
    code, out, _ = run(capsys, "verify-paper", "--only", "A1", "A8", "A2")
    assert code == 0 and [line.split()[0] for line in out.splitlines()] == ["A1", "A8", "A2"]
    monkeypatch.setenv("DRINFELD_THREADS", "-1")
    assert run(capsys, "verify-paper", "--only", "A1")[0] == 1


@pytest.mark.slow
def test_verify_paper_full_subprocess():
    env = dict(os.environ, DRINFELD_THREADS="1")
    proc = subprocess.run(
        [sys.executable, "-m", "drinfeld.cli", "verify-paper", "--json"], capture_output=True, env=env, timeout=600
    )
    assert proc.returncode == 0, proc.stdout
    assert json.loads(proc.stdout)["all_passed"]
