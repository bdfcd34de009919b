import json

import pytest

from regcore.config import DEFAULT
from regcore.field import QQ
from regcore.staircase import MonomialIdeal
from regcore.verify import (VerificationReport, _Runner, render_report,
                            run_suite)

M = MonomialIdeal.max_power


def test_unknown_family_rejected():
    with pytest.raises(ValueError):
        run_suite("nonsense")


@pytest.mark.parametrize("family", ["ideal-classics", "main-theorem",
                                    "core-theorems", "multiplicity-formulas",
                                    "counterexamples"])
def test_small_campaigns_pass_over_q(family):
    reports = run_suite(family, count=4, seed=7, field="Q")
    assert reports, "family produced no checks"
    failures = [r for r in reports if not r.verdict]
    assert not failures, failures[:3]


def test_small_campaign_passes_over_prime_field():
    reports = run_suite("main-theorem", count=3, seed=5, field="F65537")
    assert all(r.verdict for r in reports)


def test_json_reports_are_deterministic():
    a = render_report(run_suite("all", count=3, seed=42, field="Q"), "json")
    b = render_report(run_suite("all", count=3, seed=42, field="Q"), "json")
    assert a == b
    payload = json.loads(a)
    assert payload["summary"]["failed"] == 0
    assert payload["summary"]["total"] == len(payload["reports"])


def test_different_seeds_differ():
    a = render_report(run_suite("ideal-classics", count=3, seed=1), "json")
    b = render_report(run_suite("ideal-classics", count=3, seed=2), "json")
    assert a != b


def test_text_rendering():
    reports = run_suite("counterexamples", count=2, seed=42)
    text = render_report(reports, "text")
    assert "PASS" in text and "summary:" in text
    # the counterexample staircase art is included
    assert "#" in text


def test_failure_witness_is_recheckable():
    runner = _Runner(QQ, DEFAULT)
    runner.start()
    lhs, rhs = M(2), M(3)
    runner.eq_mono("synthetic-failure", "m^2 vs m^3", lhs, rhs)
    report = runner.reports[0]
    assert not report.verdict
    assert report.witness is not None
    # the witness names a monomial in exactly one side
    mono_text = report.witness.split()[0]
    from regcore.poly import parse_poly
    from regcore.field import QQ as QQ2
    poly = parse_poly(mono_text, QQ2)
    mono = next(iter(poly.terms))
    assert lhs.contains_monomial(mono) != rhs.contains_monomial(mono)
    rendered = render_report(runner.reports, "text")
    assert "FAIL" in rendered and "witness" in rendered


def test_report_fields():
    reports = run_suite("counterexamples", count=2, seed=42)
    r = reports[0]
    assert isinstance(r, VerificationReport)
    assert r.seconds >= 0.0
    payload = json.loads(render_report(reports, "json"))
    assert set(payload["reports"][0]) == {
        "theorem", "instance", "lhs", "rhs", "verdict", "witness"}
