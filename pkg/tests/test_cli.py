"""CLI plumbing: JSON shapes, exit codes, determinism, error channels."""

import json

import pytest

from heptalift import acceptance, cli
from heptalift.density import MASS_CONSTANT, beta_exps
from heptalift.exactnum import frac_str
from heptalift.genfun import gamma_k
from heptalift.jordan import JordanElement
from heptalift.lift import eigen_delta, local_factor

ZERO8 = [0] * 8


def run_cli(capsys, *argv):
    code = cli.dispatch(list(argv))
    cap = capsys.readouterr()
    return code, cap.out, cap.err


def element_file(tmp_path, a, b, c):
    path = tmp_path / "elem.json"
    path.write_text(json.dumps(JordanElement.diag(a, b, c).to_json()))
    return str(path)


def test_gamma_k_payload(capsys):
    code, out, err = run_cli(capsys, "gamma-k", "--k", "10", "--derived")
    assert code == 0 and err == ""
    payload = json.loads(out)
    assert payload["gamma_k"] == frac_str(gamma_k(10))
    assert payload["derived"] == payload["gamma_k"]
    assert isinstance(payload["residue"], list) and payload["residue"]
    assert {"coeff", "pi_half_power", "symbols"} <= set(payload["residue"][0])


def test_density_payload(capsys):
    code, out, _ = run_cli(capsys, "density", "--prime", "2", "--divisors", "0,0,1")
    assert code == 0
    assert json.loads(out)["beta"] == frac_str(beta_exps(2, (0, 0, 1)))


def test_density_usage_errors(capsys):
    code, _, err = run_cli(capsys, "density", "--prime", "4", "--divisors", "0,0,1")
    assert code == 2 and "error" in json.loads(err)
    code, _, err = run_cli(capsys, "density", "--prime", "2", "--divisors", "2,1,0")
    assert code == 2 and "error" in json.loads(err)


def test_reduce_roundtrip(tmp_path, capsys):
    path = element_file(tmp_path, 1, 2, 12)
    code, out, _ = run_cli(capsys, "reduce", "--prime", "2", "--input", path)
    assert code == 0
    assert json.loads(out)["divisors"] == [0, 1, 2]


def test_reduce_malformed_input(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{ not json")
    code, out, err = run_cli(capsys, "reduce", "--prime", "2", "--input", str(bad))
    assert code == 2 and out == ""
    assert "malformed JSON" in json.loads(err)["error"]


def test_siegel_payload_and_eval(capsys):
    code, out, _ = run_cli(
        capsys, "siegel", "--prime", "3", "--m", "0,1,1", "--eval", "X=1/3"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["weight"] == 2
    assert len(payload["coefficients"]) == 3
    assert payload["eval"]["X"] == "1/3"
    code, _, err = run_cli(capsys, "siegel", "--prime", "3", "--m", "0,1,1", "--eval", "Y=2")
    assert code == 2 and "X=<rational>" in json.loads(err)["error"]


def test_mass_payload(tmp_path, capsys):
    path = element_file(tmp_path, 1, 1, 1)
    code, out, _ = run_cli(capsys, "mass", "--input", path)
    assert code == 0
    assert json.loads(out)["mass"] == frac_str(MASS_CONSTANT)


def test_mass_rejects_indefinite(tmp_path, capsys):
    path = element_file(tmp_path, 1, 1, -1)
    code, _, err = run_cli(capsys, "mass", "--input", path)
    assert code == 2 and "positive definite" in json.loads(err)["error"]


def test_verify_subcommands(capsys):
    code, out, _ = run_cli(capsys, "igusa-verify", "--prime", "3", "--order", "5")
    assert code == 0
    payload = json.loads(out)
    assert payload["ok"] and len(payload["rows"]) == 6
    code, out, _ = run_cli(capsys, "hp-verify", "--prime", "2", "--tmax", "4")
    assert code == 0 and json.loads(out)["ok"]


def test_lift_coeff_payload(tmp_path, capsys):
    path = element_file(tmp_path, 1, 1, 2)
    code, out, _ = run_cli(capsys, "lift-coeff", "--k", "10", "--input", path)
    assert code == 0
    payload = json.loads(out)
    assert payload["coefficient"] == "-24"
    assert payload["divisors"] == {"2": [0, 0, 1]}


def test_lift_coeff_missing_eigen_prime(tmp_path, capsys):
    csv = tmp_path / "eigen.csv"
    csv.write_text("p,a_p\n2,-24\n")
    path = element_file(tmp_path, 1, 1, 3)
    code, _, err = run_cli(
        capsys, "lift-coeff", "--k", "10", "--eigen", str(csv), "--input", path
    )
    assert code == 2 and "missing a_p" in json.loads(err)["error"]


def test_lift_table_rows(capsys):
    code, out, _ = run_cli(capsys, "lift-table", "--k", "10", "--max-det", "4")
    assert code == 0
    rows = json.loads(out)["rows"]
    eigen = eigen_delta(10)
    assert [r["det"] for r in rows] == ["1", "2", "3", "4", "4"]
    assert rows[0]["coefficient"] == "1"
    four = {json.dumps(r["divisors"]): r["coefficient"] for r in rows if r["det"] == "4"}
    assert four['{"2": [0, 0, 2]}'] == str(local_factor(2, (0, 0, 2), eigen))
    assert four['{"2": [0, 1, 1]}'] == str(local_factor(2, (0, 1, 1), eigen))


def test_rs_euler_payload(capsys):
    code, out, _ = run_cli(capsys, "rs-euler", "--prime", "5")
    assert code == 0
    payload = json.loads(out)
    assert payload["consistent"] is True
    assert len(payload["t2_numerators"]) == 3
    assert len(payload["sym2_denominators"]) == 3
    assert all(len(tri) == 3 for tri in payload["sym2_denominators"])


def test_period_deterministic_bytes(capsys):
    code1, out1, _ = run_cli(capsys, "period", "--k", "10", "--digits", "12")
    code2, out2, _ = run_cli(capsys, "period", "--k", "10", "--digits", "12")
    assert code1 == code2 == 0
    assert out1 == out2
    payload = json.loads(out1)
    assert payload["pi_power"] == -63
    assert payload["gamma_k"] == frac_str(gamma_k(10))
    assert [lv["s"] for lv in payload["lvalues"]] == [1, 5, 9]
    assert all("error_bound" in lv for lv in payload["lvalues"])


def test_probe_payload(capsys):
    code, out, _ = run_cli(capsys, "probe", "--k", "10", "--digits", "20,30")
    assert code == 0
    payload = json.loads(out)
    assert payload["r5"] == "2/12285"
    assert payload["r9"] == "256/14582602125"


def test_census_payload(capsys):
    code, out, _ = run_cli(capsys, "census", "--threads", "4")
    assert code == 0
    payload = json.loads(out)
    assert payload["counts"]["rank3"] == 64884736
    assert payload["beta"] == frac_str(beta_exps(2, (0, 0, 0)))
    assert "elapsed_seconds" in payload
    code, _, err = run_cli(capsys, "census", "--prime", "3")
    assert code == 2 and "prime 2" in json.loads(err)["error"]


def test_selftest_wiring(monkeypatch, capsys):
    fake = (
        acceptance.Criterion(1, "fake-pass", 5.0, lambda: "fine"),
        acceptance.Criterion(2, "fake-fail", 5.0, lambda: (_ for _ in ()).throw(AssertionError("boom"))),
    )
    monkeypatch.setattr(cli.acceptance, "CRITERIA", fake)
    code, out, err = run_cli(capsys, "selftest")
    assert code == 1
    squeezed = " ".join(err.split())
    assert "fake-pass PASS" in squeezed
    assert "fake-fail FAIL" in squeezed
    payload = json.loads(out.strip())
    assert payload["ok"] is False
    assert [c["ok"] for c in payload["criteria"]] == [True, False]


def test_out_flag_writes_file(tmp_path, capsys):
    target = tmp_path / "out.json"
    code, out, _ = run_cli(capsys, "gamma-k", "--k", "11", "--out", str(target))
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["gamma_k"] == frac_str(gamma_k(11))


def test_unknown_command_and_missing_args(capsys):
    code, _, err = run_cli(capsys, "bogus")
    assert code == 2 and "error" in json.loads(err)
    code, _, err = run_cli(capsys, "gamma-k")
    assert code == 2 and "error" in json.loads(err)
