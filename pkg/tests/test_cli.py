import json
import shutil
import subprocess

import jsonschema
import pytest

from polytaxi.cli import main
from polytaxi.serialize import load_schema


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def validate(doc, name):
    jsonschema.validate(doc, load_schema(name))


def test_mason_extremal(capsys):
    code, out, _ = run(capsys, "mason-check", "--f", "x^2", "--g", "2*x+1", "--h", "(x+1)^2")
    assert code == 0
    doc = json.loads(out)
    validate(doc, "mason_report")
    assert doc["slack"] == 0 and doc["satisfied"]


def test_mason_rejected(capsys):
    code, out, _ = run(capsys, "mason-check", "--f", "x", "--g", "x", "--h", "2*x")
    assert code == 1
    validate(json.loads(out), "mason_report")


def test_ss_and_debondt(capsys):
    fs = ["--f", "x^2", "--f=-(x+1)^2", "--f", "2*x+1"]
    code, out, _ = run(capsys, "ss-check", *fs)
    assert code == 0
    validate(json.loads(out), "mason_report")
    code, out, _ = run(capsys, "debondt-check", *fs)
    doc = json.loads(out)
    assert code == 0
    validate(doc["debondt"], "mason_report")
    validate(doc["shapiro_sparer"], "mason_report")
    code, _, _ = run(capsys, "debondt-check", "--f", "x", "--f=-x", "--f", "x+1", "--f=-x-1")
    assert code == 1


def test_radical_and_wronskian(capsys):
    code, out, _ = run(capsys, "radical", "--p", "x^3*(x+1)^2")
    assert code == 0
    doc = json.loads(out)
    assert doc["r_star"] == 2 and doc["radical_text"] == "x^2 + x"
    code, out, _ = run(capsys, "wronskian", "--f", "1", "--f", "x", "--f", "x^2")
    assert code == 0
    doc = json.loads(out)
    assert doc["det_text"] == "2" and doc["linearly_independent"]


def test_radical_over_field(capsys):
    code, out, _ = run(capsys, "radical", "--field", "gaussian", "--p", "(x^2+1)^2")
    assert code == 0 and json.loads(out)["r_star"] == 2


def test_fermat(capsys):
    code, out, _ = run(capsys, "fermat", "--a", "x", "--b", "x+1", "--c", "x+2", "--n", "3")
    assert code == 0
    validate(json.loads(out), "fermat_report")
    code, _, _ = run(capsys, "fermat", "--a", "3", "--b", "4", "--c", "5", "--n", "2")
    assert code == 1


def test_thm21_euler(capsys):
    code, out, _ = run(capsys, "thm21", "--n", "4", "--euler")
    assert code == 0
    doc = json.loads(out)
    validate(doc, "two_term_certificate")
    assert doc["derivative_identity_holds"] and doc["deg_d"] <= 39


@pytest.mark.parametrize("flag", [["--lehmer", "+"], ["--lehmer", "-"], ["--example41"]])
def test_thm21_presets(capsys, flag):
    code, out, _ = run(capsys, "thm21", *flag)
    assert code == 0
    validate(json.loads(out), "two_term_certificate")


def test_thm21_explicit_and_negative_values(capsys):
    # values starting with '-' need the --opt=value form
    code, out, _ = run(capsys, "thm21", "--p", "x", "--q=-x", "--r", "x", "--s=-x", "--n", "5")
    assert code == 1
    validate(json.loads(out), "two_term_certificate")


def test_thm21_missing_inputs(capsys):
    code, _, err = run(capsys, "thm21", "--p", "x")
    assert code == 2 and "error" in err


@pytest.mark.parametrize("preset", ["pythagorean", "euler-zeta8", "linear5"])
def test_thm23_presets(capsys, preset):
    code, out, _ = run(capsys, "thm23", "--preset", preset)
    assert code == 0
    validate(json.loads(out), "zero_sum_certificate")


def test_thm23_rejects(capsys):
    code, out, _ = run(capsys, "thm23", "--p", "x", "--p", "1", "--p", "x+2", "--k", "2")
    assert code == 1
    validate(json.loads(out), "zero_sum_certificate")


def test_cor24_and_thm35(capsys):
    code, out, _ = run(capsys, "cor24", "--field", "gaussian", "--p", "x^2-1", "--p", "2*x",
                       "--p", "(x^2+1)*@", "--k", "2")
    assert code == 0
    validate(json.loads(out), "equal_exponent_report")
    code, out, _ = run(capsys, "thm35", "--f", "x", "--f", "x+2", "--g", "x+1", "--g", "3", "--n", "16")
    assert code == 0
    validate(json.loads(out), "coprime_sums_report")


@pytest.mark.parametrize("family", ["lehmer+", "lehmer-", "euler", "example41"])
def test_gen_family_identities(capsys, family):
    code, out, _ = run(capsys, "gen-family", family)
    assert code == 0
    doc = json.loads(out)
    validate(doc, "identity_record")
    assert doc["provenance"] == family


def test_gen_family_crt(capsys):
    code, out, _ = run(capsys, "gen-family", "crt")
    assert code == 0
    doc = json.loads(out)
    validate(doc, "crt_result")
    assert doc["alphas"] == [15, 20, 24]
    code, _, err = run(capsys, "gen-family", "crt", "--k", "2", "--k", "4", "--k", "5")
    assert code == 1 and "coprime" in err


def test_gen_family_abc(capsys):
    code, out, _ = run(capsys, "gen-family", "abc", "--alpha", "1")
    assert code == 0
    assert out == "1,7,25,32,70,0.815756098418\n"
    code, out, _ = run(capsys, "gen-family", "abc", "--alpha", "1", "--alpha-max", "3", "--header")
    lines = out.splitlines()
    assert lines[0] == "alpha,a,b,c,rad,quality" and len(lines) == 4
    code, _, _ = run(capsys, "gen-family", "abc", "--alpha", "70")
    assert code == 2


def test_elkies_scan(capsys):
    code, out, err = run(capsys, "elkies-scan", "--limit", "20", "--n-lo", "3", "--n-hi", "3")
    assert code == 0
    hits = [json.loads(line) for line in out.splitlines()]
    assert [(h["A"], h["B"], h["C"], h["sign"]) for h in hits] == [(6, 8, 9, "-"), (9, 10, 12, "+")]
    assert "2 solutions" in err
    code, _, _ = run(capsys, "elkies-scan", "--limit", "1")
    assert code == 2


def test_elkies_workers_from_env(capsys, monkeypatch):
    monkeypatch.setenv("POLYTAXI_WORKERS", "2")
    code, out, _ = run(capsys, "elkies-scan", "--limit", "20", "--n-lo", "3", "--n-hi", "4")
    assert code == 0 and len(out.splitlines()) == 2


def test_taxicab(capsys):
    code, out, _ = run(capsys, "taxicab", "--n", "3", "--limit", "2000")
    assert code == 0
    doc = json.loads(out)
    validate(doc, "taxicab_result")
    assert doc["value"] == 1729 and doc["representations"] == [[1, 12], [9, 10]]
    code, _, _ = run(capsys, "taxicab", "--n", "3", "--limit", str(2**49))
    assert code == 2


def test_poly_search(capsys):
    code, out, err = run(capsys, "poly-search", "--n", "3", "--max-degree", "4", "--coeff-bound", "4",
                         "--max-terms", "2")
    assert code == 0
    lines = [json.loads(line) for line in out.splitlines()]
    assert len(lines) == 2
    for doc in lines:
        validate(doc, "identity_record")
    assert lines[0]["text"] == ["x^4 + 2*x", "-x^3 + 1", "x^4 - x", "2*x^3 + 1"]
    assert "candidates" in err
    code, _, err = run(capsys, "poly-search", "--n", "3", "--max-degree", "12", "--coeff-bound", "50",
                       "--max-terms", "3")
    assert code == 2 and "cap" in err


@pytest.mark.parametrize("argv", [
    [],
    ["no-such-command"],
    ["mason-check", "--f", "x"],
    ["mason-check", "--f", "9t", "--g", "1", "--h", "1"],
    ["radical", "--p", "@*x"],
    ["radical", "--field", "1,0,-1", "--p", "x"],
    ["radical", "--field", "bogus", "--p", "x"],
    ["radical", "--p", "0"],
])
def test_usage_errors(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 2


@pytest.mark.skipif(shutil.which("polytaxi") is None, reason="console script not installed")
def test_console_script():
    proc = subprocess.run(["polytaxi", "gen-family", "abc", "--alpha", "2"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.startswith("2,135,121,256,330,")


def test_inconsistency_exit_code(capsys, monkeypatch):
    from polytaxi import mason

    def broken(*args):
        raise mason.InconsistencyError("bound failed", {"kind": "mason"})

    monkeypatch.setattr(mason, "mason_check", broken)
    code, out, err = run(capsys, "mason-check", "--f", "x", "--g", "1", "--h", "x+1")
    assert code == 3
    assert json.loads(out) == {"kind": "mason"} and "INCONSISTENCY" in err
