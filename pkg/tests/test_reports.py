"""Report plumbing: digests, round-trips, wall-time stripping."""

import json

from torsion_orbits.reports import (TrialRecord, VerificationReport,
                                    inputs_digest, single_trial_report,
                                    strip_wall_time)


def test_inputs_digest_is_stable_and_order_free():
    a = inputs_digest({"x": 1, "y": "two"})
    b = inputs_digest({"y": "two", "x": 1})
    assert a == b
    assert len(a) == 12
    assert a != inputs_digest({"x": 2, "y": "two"})


def test_trial_record_autodigest():
    t = TrialRecord(index=0, seed=3, inputs={"n": 4}, residuals={}, passed=True)
    assert t.digest == inputs_digest({"n": 4})


def test_report_pass_is_conjunction():
    ok = TrialRecord(index=0, seed=0, inputs={}, residuals={"r": 0.1}, passed=True)
    bad = TrialRecord(index=1, seed=1, inputs={}, residuals={"r": 0.7}, passed=False)
    rej = TrialRecord(index=2, seed=2, inputs={}, residuals={}, passed=True,
                      status="rejected")
    assert VerificationReport.from_trials("c", [ok]).passed
    assert not VerificationReport.from_trials("c", [ok, bad]).passed
    # rejected trials are not evidence, so they fail the report too
    assert not VerificationReport.from_trials("c", [ok, rej]).passed
    assert VerificationReport.from_trials("c", [ok, bad]).worst_residual == 0.7


def test_report_json_round_trip_lossless():
    rep = single_trial_report("check", {"k": 1}, {"res": 1e-12}, True,
                              config={"seed": 7}, details={"note": "x"},
                              wall_time_s=0.25)
    back = VerificationReport.from_json(rep.to_json())
    assert back.to_dict() == rep.to_dict()


def test_report_json_is_canonical():
    rep = single_trial_report("check", {"b": 2, "a": 1}, {}, True)
    doc = json.loads(rep.to_json())
    assert list(doc.keys()) == sorted(doc.keys())


def test_strip_wall_time_recurses():
    payload = {"wall_time_s": 1.0,
               "checks": [{"wall_time_s": 2.0, "passed": True}],
               "nested": {"wall_time_s": 3.0, "keep": 1}}
    out = strip_wall_time(payload)
    assert out == {"checks": [{"passed": True}], "nested": {"keep": 1}}
    # original untouched
    assert payload["wall_time_s"] == 1.0


def test_summary_line_mentions_verdict():
    rep = single_trial_report("mycheck", {}, {"r": 0.5}, False)
    line = rep.summary_line()
    assert "mycheck" in line and "FAIL" in line
