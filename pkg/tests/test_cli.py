import json
import subprocess
import sys
from fractions import Fraction

import degbern.cli as cli
from degbern.core import ExactDivisionError, LambdaPoly
from degbern.expansion import RouteMismatchError, expand_order1, reconstruct
from degbern.parser import parse_poly


def run_cli(*args):
    return subprocess.run(
        [sys.executable, "-m", "degbern", *args],
        capture_output=True,
        text=True,
        timeout=300,
    )


# -- expand ---------------------------------------------------------------------


def test_expand_text_with_lambda_column():
    proc = run_cli("expand", "--expr", "x^2", "--lambda", "0")
    assert proc.returncode == 0
    assert "a_0 = 1/6*l^2 - 1/2*l + 1/3" in proc.stdout
    assert "[l=0: 1/3]" in proc.stdout


def test_expand_json_scaled_bernoulli_number():
    proc = run_cli("expand", "--expr", "B(4)", "--format", "json")
    assert proc.returncode == 0
    doc = json.loads(proc.stdout)
    assert doc["order"] == "1"
    assert doc["degree"] == "4"
    assert doc["coefficients"][0]["lambda_poly"] == [["4", "-1/30"]]


def test_expand_constant_higher_order():
    proc = run_cli("expand", "--expr", "1", "--order", "3")
    assert proc.returncode == 0
    assert "a_0 = 1" in proc.stdout
    assert "a_1" not in proc.stdout


def test_expand_crosscheck_clean():
    proc = run_cli("expand", "--expr", "B(2)*x", "--order", "2", "--crosscheck")
    assert proc.returncode == 0


def test_expand_parse_error_exit_1():
    proc = run_cli("expand", "--expr", "2x")
    assert proc.returncode == 1
    assert "offset" in proc.stderr


def test_expand_bad_order_exit_1():
    proc = run_cli("expand", "--expr", "x", "--order", "0")
    assert proc.returncode == 1


def test_json_document_round_trip():
    proc = run_cli("expand", "--expr", "x^3 - 1/2*l*x", "--format", "json")
    doc = json.loads(proc.stdout)
    # field-exact document round trip
    e = cli.document_to_expansion(doc)
    assert cli.expansion_to_document(doc["input"], e) == doc
    # the reconstructed polynomial is the parsed input again
    assert reconstruct(e) == parse_poly(doc["input"])


def test_json_matches_in_process_expansion():
    expr = "B(2)*B(2)"
    proc = run_cli("expand", "--expr", expr, "--format", "json")
    doc = json.loads(proc.stdout)
    e = expand_order1(parse_poly(expr))
    assert cli.document_to_expansion(doc).coeffs == e.coeffs


def test_lambda_poly_pair_serialization():
    p = LambdaPoly({0: Fraction(-1, 2), 3: Fraction(7)})
    pairs = cli.lambda_poly_to_pairs(p)
    assert pairs == [["0", "-1/2"], ["3", "7"]]
    assert cli.lambda_poly_from_pairs(pairs) == p


def test_latex_output_is_balanced():
    proc = run_cli("expand", "--expr", "x^2 - l*x", "--format", "latex")
    assert proc.returncode == 0
    out = proc.stdout.strip()
    assert out.count("{") == out.count("}")
    assert "\\beta" in out
    assert all(ch.isprintable() or ch == "\n" for ch in proc.stdout)


# -- verify -----------------------------------------------------------------------


def test_verify_miki_sweep():
    proc = run_cli("verify", "miki", "--n-max", "8")
    assert proc.returncode == 0
    lines = [line for line in proc.stdout.splitlines() if line.startswith("miki(")]
    assert len(lines) == 7
    assert all("PASS" in line for line in lines)


def test_verify_single_case_range_error():
    proc = run_cli("verify", "ex_g", "--n", "4", "--r", "5")
    assert proc.returncode == 1
    assert "n >= r" in proc.stderr


def test_verify_unknown_identity():
    proc = run_cli("verify", "not_a_thing")
    assert proc.returncode == 1
    assert "unknown identity" in proc.stderr


def test_verify_perturbed_exits_2():
    proc = run_cli("verify", "miki", "--n-max", "3", "--perturb")
    assert proc.returncode == 2
    assert "FAIL" in proc.stdout


def test_verify_json_format():
    proc = run_cli("verify", "fpz", "--n-max", "4", "--format", "json")
    assert proc.returncode == 0
    payload = json.loads(proc.stdout)
    assert payload["failures"] == 0
    assert [case["params"]["n"] for case in payload["cases"]] == ["2", "3", "4"]


# -- table ------------------------------------------------------------------------


def test_table_bernoulli_numbers():
    proc = run_cli("table", "--family", "bernoulli", "--n-max", "12")
    assert proc.returncode == 0
    assert "10: 5/66" in proc.stdout
    assert "12: -691/2730" in proc.stdout


def test_table_genocchi_numbers():
    proc = run_cli("table", "--family", "genocchi", "--n-max", "12")
    assert proc.returncode == 0
    assert "12: 2073" in proc.stdout


def test_table_degenerate_bernoulli():
    proc = run_cli("table", "--family", "deg-bernoulli", "--n-max", "2")
    assert proc.returncode == 0
    assert "1: x + (1/2*l - 1/2)" in proc.stdout


def test_table_unknown_family():
    proc = run_cli("table", "--family", "fibonacci", "--n-max", "3")
    assert proc.returncode == 1
    assert "unknown family" in proc.stderr


def test_table_json_round_trip():
    proc = run_cli("table", "--family", "deg-falling", "--n-max", "3", "--format", "json")
    doc = json.loads(proc.stdout)
    entry = doc["entries"][2]
    assert entry["coefficients"][1]["lambda_poly"] == [["1", "-1"]]


# -- exit-code contract, in process -----------------------------------------------


def test_usage_error_exits_1():
    assert cli.main(["expand"]) == 1  # --expr is required
    assert cli.main(["bogus-command"]) == 1


def test_route_mismatch_maps_to_exit_2(monkeypatch):
    def boom(p, r=1):
        raise RouteMismatchError(0, "a", LambdaPoly.zero(), "b", LambdaPoly.one())

    monkeypatch.setattr(cli, "crosscheck", boom)
    assert cli.main(["expand", "--expr", "x", "--crosscheck"]) == 2


def test_exact_division_failure_maps_to_exit_3(monkeypatch):
    def boom(p, r=1, **kw):
        raise ExactDivisionError("1 + l is not divisible by l^1")

    monkeypatch.setattr(cli, "expand", boom)
    assert cli.main(["expand", "--expr", "x"]) == 3


def test_version_flag():
    proc = run_cli("--version")
    assert proc.returncode == 0
    assert "degbern" in proc.stdout
