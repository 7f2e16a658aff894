"""Suite runner: aggregation, determinism across workers, failure paths."""

import pytest

import fibideal.core
import fibideal.verify
from fibideal.core import IdentityCheck
from fibideal.verify import SUITES, SuiteReport, run_suite, run_suites


def test_canonical_suite_order():
    assert SUITES == ("theorem", "gf", "lattice", "sigma", "shape")
    reports = run_suites(["shape", "theorem"], 5, gf_max=5)
    assert [r.suite for r in reports] == ["theorem", "shape"]


def test_all_suites_pass_small_range():
    reports = run_suites(SUITES, 20, gf_max=12)
    assert all(r.ok for r in reports)
    by_name = {r.suite: r for r in reports}
    assert by_name["theorem"].summary_line() == "theorem: 20/20 PASS"
    assert by_name["gf"].summary_line() == "gf: 13/13 PASS"
    assert by_name["shape"].total == 20


def test_parallel_equals_serial():
    serial = run_suites(["theorem", "sigma"], 30)
    parallel = run_suites(["theorem", "sigma"], 30, jobs=4)
    assert [r.to_dict() for r in serial] == [r.to_dict() for r in parallel]


def test_unknown_suite_rejected():
    with pytest.raises(ValueError):
        run_suites(["theorem", "nonsense"], 10)
    with pytest.raises(ValueError):
        run_suite("nonsense", 10)


def test_report_aggregation_counts_failed_n_once():
    fails = [IdentityCheck("sigma_profile", 7, False, "1", "2"),
             IdentityCheck("sigma_division", 7, False, "1", "2"),
             IdentityCheck("sigma_profile", 9, False, "5", "6")]
    report = SuiteReport("sigma", 10, 10, fails)
    assert report.passed == 8
    assert not report.ok
    assert report.summary_line() == "sigma: 8/10 FAIL"
    assert report.to_dict()["failures"][0]["n"] == 7


def test_corrupted_lucas_fails_with_witnesses(monkeypatch):
    """An off-by-one in the Lucas numbers must surface as theorem failures
    carrying both sides of the identity."""
    real = fibideal.core.lucas
    monkeypatch.setattr(fibideal.core, "lucas", lambda n: real(n) + 1)
    report = run_suite("theorem", 6, jobs=1)
    assert not report.ok
    assert report.summary_line().endswith("FAIL")
    witness = report.failures[0]
    assert witness.identity == "theorem"
    assert witness.left != witness.right
    assert "phi" in witness.left and "phi" in witness.right


def test_gf_suite_ignores_max_n():
    report = run_suite("gf", 999, gf_max=6)
    assert report.max_n == 6
    assert report.total == 7
    assert report.ok
