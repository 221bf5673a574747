import json

from weylfc.report import Check, VerificationReport


def sample():
    rep = VerificationReport({"command": "demo", "m": 2, "seed": 0})
    rep.add(Check("first", True, {"z": 1, "a": [1, 2]}))
    rep.add(Check("second", False, {"first_difference": "x1*d1"}))
    rep.result["value"] = 8
    return rep


def test_structured_schema():
    doc = json.loads(sample().to_json())
    assert set(doc) == {"run", "result", "checks"}
    assert doc["checks"][1] == {"name": "second", "status": "fail", "detail": {"first_difference": "x1*d1"}}
    assert doc["run"]["m"] == 2


def test_text_layout():
    text = sample().to_text()
    lines = text.splitlines()
    assert lines[0] == "value: 8"
    assert "[PASS] first" in lines and "[FAIL] second" in lines
    assert lines[-1] == "1/2 checks passed"


def test_passed_and_stability():
    rep = sample()
    assert not rep.passed
    assert rep.to_json() == sample().to_json()
    assert VerificationReport({}).passed
