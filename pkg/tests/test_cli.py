import csv
import io
import json
import subprocess
import sys

import pytest

from orthogs import cli, verify
from orthogs.ratcore import format_rational, parse_rational


def run(argv, capsys):
    code = cli.main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def gen_json(argv, capsys):
    code, out, _ = run(["gen", *argv, "--format", "json"], capsys)
    assert code == 0
    return json.loads(out)


def test_gen_laguerre(capsys):
    doc = gen_json(["--family", "laguerre", "--alpha", "0", "--max-degree", "2", "--normalization", "gs-monic"], capsys)
    assert doc["polys"][2] == {"n": 2, "coeffs": ["2", "-4", "1"]}
    assert doc["family"] == "laguerre" and doc["alpha"] == "0" and doc["beta"] is None
    assert set(doc) == {"family", "alpha", "beta", "basis", "normalization", "polys"}


def test_gen_legendre_closed(capsys):
    doc = gen_json(["--preset", "legendre", "--max-degree", "1", "--normalization", "paper-closed"], capsys)
    assert doc["basis"] == "monomial"
    assert doc["polys"][1]["coeffs"] == ["0", "1"]
    assert (doc["family"], doc["alpha"], doc["beta"]) == ("jacobi", "0", "0")


def test_gen_hermite_degree_zero(capsys):
    doc = gen_json(["--family", "hermite", "--max-degree", "0"], capsys)
    assert doc["polys"] == [{"n": 0, "coeffs": ["1"]}]


def test_gen_standard_hermite(capsys):
    doc = gen_json(["--family", "hermite", "--max-degree", "2", "--normalization", "standard-hermite"], capsys)
    assert doc["polys"][2]["coeffs"] == ["-2", "0", "4"]


def test_gen_shifted_basis(capsys):
    doc = gen_json(["--family", "jacobi", "--alpha", "0", "--beta", "0", "--max-degree", "1", "--basis", "shifted",
                    "--normalization", "paper-closed"], capsys)
    assert doc["basis"] == "shifted"
    assert doc["polys"][1]["coeffs"] == ["1", "-2"]


def test_gen_gegenbauer(capsys):
    doc = gen_json(["--preset", "gegenbauer", "--lambda", "1", "--max-degree", "1"], capsys)
    assert (doc["alpha"], doc["beta"]) == ("1/2", "1/2")


def test_gen_round_trip(capsys):
    doc = gen_json(["--family", "jacobi", "--alpha", "1/2", "--beta", "-1/3", "--max-degree", "6"], capsys)
    for poly in doc["polys"]:
        for c in poly["coeffs"]:
            assert format_rational(parse_rational(c)) == c


def test_gen_csv(capsys):
    code, out, _ = run(["gen", "--family", "laguerre", "--max-degree", "1", "--format", "csv"], capsys)
    rows = list(csv.reader(io.StringIO(out)))
    assert rows == [["n", "power", "coeff"], ["0", "0", "1"], ["1", "0", "-1"], ["1", "1", "1"]]


def test_gen_latex(capsys):
    code, out, _ = run(["gen", "--family", "hermite", "--max-degree", "2", "--format", "latex"], capsys)
    assert code == 0
    assert r"h_{2}(x) &= x^{2} - \frac{1}{2}" in out
    code, out, _ = run(["gen", "--family", "laguerre", "--alpha", "1/2", "--max-degree", "1",
                        "--normalization", "paper-closed", "--format", "latex"], capsys)
    assert r"L_{1}^{(1/2)}(x) &= -x + \frac{3}{2}" in out


def test_gen_deterministic_file(tmp_path, capsys):
    paths = [tmp_path / "a.json", tmp_path / "b.json"]
    for p in paths:
        assert cli.main(["gen", "--family", "jacobi", "--alpha", "1", "--beta", "2", "--max-degree", "8",
                         "--out", str(p)]) == 0
    assert paths[0].read_bytes() == paths[1].read_bytes()
    assert capsys.readouterr().out == ""


@pytest.mark.parametrize(
    "argv",
    [
        ["gen", "--family", "hermite", "--alpha", "1"],
        ["gen", "--family", "laguerre", "--alpha", "-1"],
        ["gen", "--family", "laguerre", "--basis", "shifted"],
        ["gen", "--family", "laguerre", "--normalization", "standard-hermite"],
        ["gen", "--preset", "gegenbauer"],
        ["gen", "--preset", "legendre", "--alpha", "1"],
        ["gen", "--family", "jacobi", "--alpha", "0.5"],
        ["gen", "--family", "hermite", "--preset", "legendre"],
        ["gen"],
        ["det", "--kind", "gamma", "--z", "0,1"],
        ["det", "--kind", "beta"],
        ["det", "--kind", "beta-ratio", "--z", "1,2,3", "--w", "-4"],
        ["verify", "--suite", "nope"],
    ],
)
def test_usage_errors_exit_2(argv, capsys):
    try:
        code = cli.main(argv)
    except SystemExit as exc:
        code = exc.code
    assert code == 2


def det_values(argv, capsys):
    code, out, _ = run(["det", *argv], capsys)
    return code, dict(line.split(": ", 1) for line in out.strip().splitlines())


def test_det_vandermonde(capsys):
    code, vals = det_values(["--kind", "vandermonde", "--z", "1,2,3"], capsys)
    assert code == 0
    assert (vals["closed-form"], vals["brute-force"], vals["verdict"]) == ("2", "2", "equal")
    code, vals = det_values(["--kind", "vandermonde", "--z", "5"], capsys)
    assert vals["closed-form"] == "1"


def test_det_beta_ratio(capsys):
    code, vals = det_values(["--kind", "beta-ratio", "--z", "1,2", "--w", "1"], capsys)
    assert code == 0
    assert vals["closed-form"] == vals["brute-force"] == vals["recursive"] == "1/6"


def test_det_other_kinds(capsys):
    _, vals = det_values(["--kind", "beta", "--z", "1,2", "--w", "1"], capsys)
    assert vals["closed-form"] == "1/12*Gamma(1)^2" and vals["verdict"] == "equal"
    _, vals = det_values(["--kind", "gamma", "--z", "1/2,3/2"], capsys)
    assert vals["closed-form"] == "1/2*Gamma(1/2)^2"
    _, vals = det_values(["--kind", "binomial", "--n", "4", "--m", "2"], capsys)
    assert vals["closed-form"] == "6"
    code, out, _ = run(["det", "--kind", "pochhammer", "--z", "1,2,3", "--format", "json"], capsys)
    assert json.loads(out) == {"kind": "pochhammer", "closed-form": "2", "brute-force": "2", "verdict": "equal"}


@pytest.mark.parametrize("kind, max_n", [("gamma", 12), ("beta-ratio", 10), ("vandermonde", 1)])
def test_bench(kind, max_n, capsys):
    code, out, _ = run(["bench", "--kind", kind, "--max-n", str(max_n), "--repeat", "1"], capsys)
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    methods = 3 if kind == "beta-ratio" else 2
    assert len(rows) == max_n * methods
    assert all(float(r["seconds"]) >= 0 for r in rows)


def test_verify_detkit(capsys):
    code, out, _ = run(["verify", "--suite", "detkit", "--size", "6", "--instances", "100"], capsys)
    assert code == 0
    assert "FAIL" not in out and out.endswith("11 passed, 0 failed\n")


def test_verify_exterior(capsys):
    code, out, _ = run(["verify", "--suite", "exterior", "--dim", "5"], capsys)
    assert code == 0, out


def test_verify_exit_code_tracks_failures(monkeypatch, capsys):
    bad = [verify.CheckResult("x.ok", True, 1), verify.CheckResult("x.bad", False, 1, "[1]")]
    monkeypatch.setattr(verify, "run_suites", lambda *a, **k: bad)
    code, out, _ = run(["verify"], capsys)
    assert code == 1
    assert "FAIL x.bad (1 cases): first counterexample [1]" in out


def test_run_check_reports_exceptions():
    def boom(x):
        raise ZeroDivisionError("nope")

    r = verify.run_check("t", [(1,), (2,)], boom)
    assert not r.passed and r.cases == 2 and "ZeroDivisionError" in r.counterexample


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "orthogs", "det", "--kind", "vandermonde", "--z", "1,2,3"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0 and "verdict: equal" in proc.stdout
