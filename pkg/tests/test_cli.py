import json

import pytest

from skewcode.cli import main

CTX9 = ["--ring", "gf9", "--rho", "1", "--theta", "1", "--l", "2", "--s", "2"]


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_poly_mul(capsys):
    assert run(capsys, "poly-mul", "--ring", "gf4", "--rho", "1", "--theta", "1", "a*x", "a*y") == (0, "x*y\n", "")


def test_poly_div(capsys):
    code, out, _ = run(capsys, "poly-div", "--ring", "gf9", "--json", "x^2*y^2 - x^2 - y^2 + 1", "y - 1")
    assert code == 0
    assert json.loads(out)["remainder"] == "0"


def test_poly_div_non_monic(capsys):
    code, _, err = run(capsys, "poly-div", "--ring", "gf4", "x", "a*y")
    assert code == 1 and "divisor must be monic" in err
    assert json.loads(err)["error"] == "UnsupportedDivisorError"


def test_usage_errors_exit_2(capsys):
    assert main(["no-such-command"]) == 2
    assert main(["poly-mul", "--bogus"]) == 2
    code, _, err = run(capsys, "poly-mul", "--ring", "gf6", "x", "y")
    assert code == 2 and "prime power" in err


def test_ring_info(capsys):
    code, out, _ = run(capsys, "ring-info", "--ring", "gf16", "--rho", "1", "--json")
    info = json.loads(out)
    assert code == 0 and info["rho_order"] == 4 and info["fixed_by_rho_theta"] == ["0", "1"]


def test_reduce(capsys):
    assert run(capsys, "reduce", *CTX9, "--lambda1", "2", "x^3")[:2] == (0, "2*x\n")
    code, out, _ = run(capsys, "reduce", *CTX9, "--lambda1", "2", "--lambda2", "2", "--diamond", "x^2*y^2")
    assert out == "2*y^2 + 2*x^2 + 2\n"


def test_context_json(capsys, tmp_path):
    path = tmp_path / "ctx.json"
    path.write_text(json.dumps({"ring": "gf9", "rho_power": 1, "theta_power": 1, "l": 2, "s": 2}))
    code, out, _ = run(capsys, "code-build", "--context", str(path), "y - 1")
    doc = json.loads(out)
    assert code == 0 and (doc["k"], doc["t"], doc["cardinality"]) == (2, 1, 81)
    assert set(doc) >= {"k", "t", "cardinality", "basis", "gen_matrix"}


def test_code_build_distance_and_errors(capsys):
    code, out, _ = run(capsys, "code-build", *CTX9, "--distance", "y - 1")
    assert json.loads(out)["min_distance"] == 2
    code, _, err = run(capsys, "code-build", *CTX9, "x + y")
    assert code == 1 and json.loads(err)["error"] == "NotAGeneratorError"


def test_code_dual(capsys):
    code, out, _ = run(capsys, "code-dual", *CTX9, "y - 1")
    doc = json.loads(out)
    assert code == 0 and doc["dual_dim"] == 2 and doc["dual_is_constacyclic"]


def test_verify_single_suite(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "star-laws", "--json")
    doc = json.loads(out)
    assert code == 0 and doc["schema"] == "skewcode-lab/1"
    assert [s["suite"] for s in doc["suites"]] == ["star-laws"]


def test_verify_empty_config(capsys):
    code, out, _ = run(capsys, "verify", "--config", '{"suites": []}', "--json")
    assert code == 0 and json.loads(out)["suites"] == []


def test_verify_bad_config(capsys):
    code, _, err = run(capsys, "verify", "--config", '{"suites": ["nope"]}')
    assert code == 2 and "suites" in err
    code, _, err = run(capsys, "verify", "--config", "{not json")
    assert code == 2 and "line 1" in err


def test_verify_failure_exit_code(capsys):
    cfg = json.dumps({
        "configurations": [{"ring": "gf4", "rho_power": 1, "theta_power": 1, "l": 2, "s": 2}],
        "suites": ["generator-basis"],
    })
    code, out, _ = run(capsys, "verify", "--config", cfg)
    assert code == 1 and out.startswith("FAIL generator-basis")


def test_verify_list(capsys):
    code, out, _ = run(capsys, "verify", "--list")
    assert code == 0 and "open-problem" in out


def test_open_problem_csv(capsys):
    cfg = json.dumps({"configurations": [{"ring": "gf4", "rho_power": 1, "theta_power": 1, "l": 2, "s": 2}]})
    code, out, _ = run(capsys, "open-problem", "--config", cfg)
    lines = out.splitlines()
    assert code == 0 and lines[0].startswith("q,rho,theta,l,s,lambda1,lambda2,g")
    assert len(lines) == 1 + 31


@pytest.mark.parametrize("flag", ["--help", "--version"])
def test_help_and_version(flag, capsys):
    assert main([flag]) == 0
