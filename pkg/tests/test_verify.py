"""
Tests for the worked-example verification suite
"""

from condenlab import scenarios
from condenlab.models import credit
from condenlab.scenarios.schemas import SCENARIO_SCHEMAS
from condenlab.scenarios.verify import CHECKS, verify_worked_examples


def test_all_checks_pass():
    report = verify_worked_examples()
    failed = report.results.loc[~report.results["passed"], ["check", "detail"]].values.tolist()
    assert failed == []
    assert report.passed
    assert report.exit_code == 0


def test_suite_covers_models_and_scenarios():
    names = [name for name, _, _ in CHECKS]
    assert len(names) == len(set(names))
    assert len([n for n in names if not n.startswith("scenario:")]) >= 20
    assert {f"scenario:{s}" for s in SCENARIO_SCHEMAS} <= set(names)


def test_report_format():
    text = verify_worked_examples().format()
    lines = text.splitlines()
    assert lines[0].startswith("PASS  ")
    assert lines[-1] == f"{len(CHECKS)}/{len(CHECKS)} checks passed"


def test_broken_model_fails_its_check(monkeypatch):
    monkeypatch.setattr(credit, "bankruptcy_fraction", lambda interest_pct: 49)
    report = verify_worked_examples()
    results = report.results.set_index("check")
    assert not results.loc["bankruptcy_fraction_at_100", "passed"]
    assert "got 49" in results.loc["bankruptcy_fraction_at_100", "detail"]
    assert results.loc["money_multiplier", "passed"]
    assert not report.passed
    assert report.exit_code == 1
    assert "FAIL  bankruptcy_fraction_at_100" in report.format()


def test_verify_alias_is_exported():
    assert scenarios.verify_paper_examples is verify_worked_examples
    assert "verify_paper_examples" in scenarios.__all__


def test_exact_multiplier_checks_are_registered():
    results = verify_worked_examples().results.set_index("check")
    assert results.loc["money_multiplier_ten_percent", "passed"]
    assert results.loc["money_multiplier_ninth", "passed"]
