import json

import pytest

from skewcode import QuotientContext, RingSpec, UsageError
from skewcode.lab import SCHEMA, SUITES, LabConfig, desk_contexts, run_lab, run_suite

# every claim the lab is expected to check, one suite each
MANIFEST = {
    "ring-axioms", "degree-orders", "star-laws", "degree-additivity", "no-zero-divisors",
    "division", "psi-anti-isomorphism", "mccoy", "central-binomials",
    "central-binomial-negative", "fixed-subring-center", "quotient-arithmetic",
    "two-sided-ideal", "monic-central-commute", "shift-submodule", "generator-basis",
    "minimal-generator", "gxy-criterion", "dual-constacyclic", "annihilator-orthogonality",
    "dual-candidate", "membership-via-cofactor", "open-problem",
}


def small_config(**kw):
    ring = RingSpec.from_name("gf4")
    ctx = QuotientContext.create(ring, 1, 1, 2, 2, 1, 1)
    return LabConfig(contexts=(ctx,), **kw)


def test_manifest_covers_every_suite():
    assert set(SUITES) == MANIFEST
    assert [s for s in SUITES if SUITES[s].kind == "observation"] == ["open-problem"]
    report = run_lab(small_config(suites=tuple(sorted(MANIFEST - {"mccoy", "annihilator-orthogonality"}))))
    assert {r.suite for r in report.results} == MANIFEST - {"mccoy", "annihilator-orthogonality"}


def test_desk_contexts():
    ctxs = desk_contexts()
    assert len(ctxs) == 3 + 12
    assert {(c.l, c.s) for c in ctxs} == {(2, 2), (2, 4), (4, 2)}
    assert all(c.autos.rho_power == c.autos.theta_power == 1 for c in ctxs)


def test_empty_suite_list():
    report = run_lab(small_config(suites=()))
    assert report.results == [] and report.exit_code == 0
    assert report.to_json()["suites"] == []


def test_same_seed_same_bytes():
    cfg = small_config(suites=("star-laws", "quotient-arithmetic", "open-problem"), seed=7)
    a = json.dumps(run_lab(cfg).to_json())
    b = json.dumps(run_lab(cfg).to_json())
    assert a == b
    c = json.dumps(run_lab(small_config(suites=("star-laws", "quotient-arithmetic", "open-problem"), seed=8)).to_json())
    assert c != a


def test_parallel_run_matches_serial():
    cfg = small_config(suites=("division", "shift-submodule", "dual-constacyclic"))
    assert run_lab(cfg, jobs=2).to_json() == run_lab(cfg).to_json()


def test_report_shape():
    report = run_suite("central-binomial-negative")
    doc = report.to_json()
    assert doc["schema"] == SCHEMA and doc["ok"]
    (res,) = doc["suites"]
    assert res["instances"] > 0 and res["counterexample_count"] == 0
    assert "seconds" not in res
    assert "seconds" in report.to_json(timing=True)["suites"][0]
    witnesses = res["outcomes"]["non_multiplicative_reduction"]
    assert any("l=3" in w["context"] for w in witnesses)


def test_per_config_suite_runs_on_each_context():
    report = run_suite("dual-constacyclic", small_config())
    assert [r.configuration for r in report.results] == [str(small_config().contexts[0])]


def test_counterexamples_fail_the_report():
    report = run_suite("generator-basis", small_config())
    (res,) = report.results
    assert res.counterexample_count == 12 and res.instances == 31
    assert len(res.counterexamples) <= 5
    assert not report.ok and report.exit_code == 1


def test_observations_never_fail():
    report = run_suite("open-problem", small_config())
    assert report.ok
    rows = report.results[0].outcomes
    assert len(rows) == 31 and {"generates", "dual_dim"} <= set(rows[0])


def test_config_json_round_trip():
    cfg = small_config(seed=3, suites=("division",))
    again = LabConfig.from_json(json.loads(json.dumps(cfg.to_json())))
    assert again == cfg


@pytest.mark.parametrize(
    "doc,where",
    [
        ({"configurations": [{"ring": "gf4", "rho_power": 1, "theta_power": 1, "l": 3, "s": 2}]}, "configurations[0]"),
        ({"configurations": [{"ring": "gf4"}]}, "configurations[0]"),
        ({"suites": ["nope"]}, "suites"),
        ({"caps": {"bogus": 1}}, "caps"),
        ({"colour": 1}, "config"),
    ],
)
def test_invalid_config_names_the_location(doc, where):
    with pytest.raises(UsageError, match=where.replace("[", r"\[").replace("]", r"\]")):
        LabConfig.from_json(doc)


def test_unknown_suite():
    with pytest.raises(UsageError):
        run_suite("no-such-suite")
