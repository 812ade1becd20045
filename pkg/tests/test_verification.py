"""Tests for the aggregate check suite."""

import pytest

from multibrot.config import Config
from multibrot.verification import (
    check_asymptotic_ladder,
    check_gamma_exceeds_one,
    check_oracle_equivalence,
    check_period_two_cycle,
    check_real_sections,
    check_rotation_symmetry,
    run_verification,
)

pytestmark = pytest.mark.unit


@pytest.fixture
def quick_config():
    return Config(max_iters=20_000, symmetry_samples=24, mu_grid_points=20_000)


class TestChecks:
    @pytest.mark.parametrize("d", [2, 3, 4, 5])
    def test_gamma_exceeds_one(self, d, config):
        result = check_gamma_exceeds_one(d, config)
        assert result.passed
        assert result.details["alpha"] < 1.0 < result.details["gamma"]

    @pytest.mark.parametrize("d,odd", [(3, True), (4, False)])
    def test_period_two_cycle(self, d, odd, config):
        result = check_period_two_cycle(d, config)
        assert result.passed
        assert result.details["swapped_by_q"] is odd

    def test_asymptotic_ladder(self, config):
        result = check_asymptotic_ladder(3, config)
        assert result.passed
        assert len(result.details["rows"]) == 4

    def test_oracle_equivalence(self, config):
        result = check_oracle_equivalence(3, config)
        assert result.passed
        assert result.details["grid_points"] == 100_000
        assert result.details["product_error"] <= 1e-8
        assert result.details["mu_error"] <= 1e-8

    def test_real_sections_nests_sentinels(self, quick_config):
        result = check_real_sections(4, quick_config)
        assert result.passed
        assert set(result.details) == {"alpha_inside", "alpha_outside", "minus_beta_landing", "minus_beta_outside"}

    def test_rotation_symmetry_records_seed(self, quick_config):
        result = check_rotation_symmetry(5, quick_config)
        assert result.passed
        assert result.details["seed"] == quick_config.symmetry_seed
        assert result.details["samples"] == 24


def test_run_verification(quick_config):
    report = run_verification(3, quick_config)
    assert report.passed, report.failed_checks
    assert report.settings["max_iters"] == 20_000
    assert len(report.checks) == 6
