"""Tests for the output formatters."""

import json

import pytest

from multibrot.constants import section_constants, table_rows
from multibrot.formatters import (
    constants_to_dict,
    endpoint_to_dict,
    format_constants_text,
    format_endpoint_report,
    format_table_csv,
    format_table_json,
    format_verification_text,
    to_json,
    verification_to_dict,
)
from multibrot.models import (
    CheckResult,
    ComplexPoint,
    EndpointEstimate,
    IterationBudget,
    Probe,
    RayClass,
    VerdictKind,
    VerificationReport,
)

pytestmark = pytest.mark.unit


@pytest.fixture
def estimate():
    return EndpointEstimate(
        d=2,
        ray=RayClass(d=2, kind="plus", omega=ComplexPoint(re=1.0)),
        t_low=0.2499,
        t_high=0.2501,
        predicted=0.25,
        budget_used=IterationBudget(max_iters=1000),
        bisection_steps=2,
        probes=[
            Probe(t=2.5, kind=VerdictKind.ESCAPED, steps=2),
            Probe(t=0.2499, kind=VerdictKind.UNDETERMINED, steps=1000),
        ],
    )


@pytest.fixture
def report():
    return VerificationReport(
        d=3,
        checks=[
            CheckResult(name="gamma_exceeds_one", passed=True, details={"gamma": 1.08}),
            CheckResult(name="real_sections", passed=False),
        ],
        settings={"max_iters": 10},
    )


class TestConstants:
    def test_dict_keys(self):
        payload = constants_to_dict(section_constants(3))
        assert set(payload) == {"d", "alpha", "beta", "xi", "gamma", "xi_residual", "relative_residual"}
        assert payload["d"] == 3
        assert isinstance(payload["d"], int)

    def test_real_degree_kept(self):
        assert constants_to_dict(section_constants(2.5))["d"] == 2.5

    def test_text(self):
        text = format_constants_text(section_constants(2))
        key, value = text.splitlines()[1].split()
        assert key == "alpha"
        assert float(value) == pytest.approx(0.25, abs=1e-15)
        assert text.endswith("\n")


class TestTable:
    def test_csv_single_row(self):
        assert format_table_csv(table_rows(5, 5)) == (
            "d,alpha,beta,gamma\n5,0.534992244,1.189207115,1.069984488\n"
        )

    @pytest.mark.regression
    def test_csv_reproduces_golden_table(self, table_golden):
        lines = format_table_csv(table_rows(2, 12)).splitlines()
        assert lines[0] == "d,alpha,beta,gamma"
        assert len(lines) == 12
        for line in lines[1:]:
            d, *values = line.split(",")
            assert values == [f"{v:.9f}" for v in table_golden[int(d)]]

    def test_json_rounded(self):
        rows = json.loads(format_table_json(table_rows(2, 3)))["rows"]
        assert rows[1] == {"d": 3, "alpha": 0.384900179, "beta": 1.414213562, "gamma": 1.088662108}

    def test_json_full(self):
        rows = json.loads(format_table_json(table_rows(3, 3), full=True))["rows"]
        assert rows[0]["gamma"] == section_constants(3).gamma
        assert "xi" in rows[0]

    def test_json_is_deterministic(self):
        assert format_table_json(table_rows(2, 6)) == format_table_json(table_rows(2, 6))


class TestEndpointReport:
    def test_keys(self, estimate):
        payload = endpoint_to_dict(estimate, 2e-3, {"max_iters": 1000})
        for key in ("d", "ray", "omega", "t_low", "t_high", "midpoint", "predicted", "budget", "pass", "settings"):
            assert key in payload
        assert payload["ray"] == "plus"
        assert payload["omega"] == [1.0, 0.0]
        assert payload["pass"] is True
        assert payload["undetermined_probes"] == 1

    def test_failure(self, estimate):
        off = estimate.model_copy(update={"predicted": 0.26})
        payload = endpoint_to_dict(off, 2e-3, {})
        assert payload["pass"] is False
        assert payload["error"] == pytest.approx(0.01)

    def test_sorted_json(self, estimate):
        text = format_endpoint_report(estimate, 2e-3, {})
        keys = list(json.loads(text))
        assert keys == sorted(keys)


class TestVerification:
    def test_dict(self, report):
        payload = verification_to_dict(report)
        assert payload["passed"] is False
        assert payload["failed_checks"] == ["real_sections"]
        assert payload["checks"][0]["details"] == {"gamma": 1.08}

    def test_text_names_failures(self, report):
        text = format_verification_text(report)
        assert "PASS  gamma_exceeds_one" in text
        assert "FAIL  real_sections" in text
        assert text.rstrip().endswith("failed: real_sections")

    def test_text_all_passed(self):
        report = VerificationReport(d=2, checks=[CheckResult(name="x", passed=True)])
        assert format_verification_text(report).rstrip().endswith("all checks passed")


def test_to_json_layout():
    assert to_json({"b": 1, "a": [1, 2]}) == '{\n  "a": [\n    1,\n    2\n  ],\n  "b": 1\n}'
