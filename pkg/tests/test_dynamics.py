"""
Unit tests for the iteration kernels and the real q-orbit analysis
"""
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from multibrot.constants import beta, gamma
from multibrot.dynamics import (
    analyze_real_q_orbit,
    escape_counts,
    escape_radius,
    iterate_p,
    iterate_q,
    orbit_p,
    orbit_q,
    power,
    require_degree,
    witness_holds,
)
from multibrot.errors import InvalidDegreeError, InvalidParameterError
from multibrot.models import InvariantInterval, IterationBudget, VerdictKind

pytestmark = pytest.mark.unit


class TestRequireDegree:
    @pytest.mark.parametrize("bad", [1, 0, -3, 2.5, True, "3"])
    def test_rejects_invalid(self, bad):
        with pytest.raises(InvalidDegreeError):
            require_degree(bad)

    def test_accepts_numpy_integer(self):
        assert require_degree(np.int64(4)) == 4

    def test_odd_required(self):
        with pytest.raises(InvalidDegreeError):
            require_degree(4, odd=True)
        assert require_degree(5, odd=True) == 5


class TestPower:
    @pytest.mark.parametrize("d", range(1, 9))
    def test_matches_builtin_on_integers(self, d):
        assert power(3, d) == 3 ** d

    @pytest.mark.parametrize("d", [3, 5, 7])
    def test_odd_powers_negate_exactly(self, d):
        z = 0.3712 - 0.9121j
        assert power(-z, d) == -power(z, d)

    def test_numpy_arrays(self):
        z = np.array([1.0 + 1.0j, 2.0, -0.5j])
        np.testing.assert_allclose(power(z, 4), z ** 4)


class TestIterateP:
    def test_zero_never_escapes(self, small_budget):
        verdict = iterate_p(2, 0.0, small_budget)
        assert verdict.kind == VerdictKind.UNDETERMINED
        assert verdict.steps == small_budget.max_iters

    def test_far_parameter_escapes_quickly(self, small_budget):
        """For d=3, c=2 the second iterate is 10, beyond the radius 2."""
        verdict = iterate_p(3, 2.0, small_budget)
        assert verdict.escaped
        assert verdict.steps == 2
        assert abs(verdict.last_iterate) > verdict.escape_radius

    def test_tip_of_real_section_stays(self, small_budget):
        """c = -2 for d = 2 lands on the fixed point 2, which sits on the escape circle."""
        verdict = iterate_p(2, -2.0, small_budget)
        assert verdict.kind == VerdictKind.UNDETERMINED

    def test_cusp_stays(self, small_budget):
        assert not iterate_p(2, 0.25, small_budget).escaped

    def test_overflow_counts_as_escape(self, small_budget):
        verdict = iterate_p(2, 1e200, small_budget)
        assert verdict.escaped
        assert verdict.overflow

    def test_complex_overflow_is_flagged_not_raised(self, small_budget):
        verdict = iterate_q(3, 1e150j, small_budget)
        assert verdict.escaped
        assert verdict.overflow
        assert verdict.steps == 2

    def test_never_proven_bounded(self, small_budget):
        assert iterate_p(3, 0.1j, small_budget).kind != VerdictKind.PROVEN_BOUNDED

    def test_rejects_non_finite(self, small_budget):
        with pytest.raises(InvalidParameterError):
            iterate_p(2, complex(math.nan, 0.0), small_budget)


class TestIterateQ:
    def test_escape(self, small_budget):
        """q_2(z) = -z**3 + 2: 0 -> 2 -> -6 escapes at step 2."""
        verdict = iterate_q(3, 2.0, small_budget)
        assert verdict.escaped
        assert verdict.steps == 2

    def test_bounded_below_gamma(self, small_budget):
        assert not iterate_q(3, 1.0, small_budget).escaped


class TestOrbits:
    def test_orbit_p(self):
        assert orbit_p(2, -1.0, 3) == [0j, -1 + 0j, 0j, -1 + 0j]

    def test_orbit_q(self):
        assert orbit_q(3, 1.0, 2) == [0j, 1 + 0j, 0j]


def test_escape_radius():
    assert escape_radius(2, 0.1) == 2.0
    assert escape_radius(3, 5.0) == 5.0
    assert escape_radius(3, 0.0) == pytest.approx(math.sqrt(2.0))


class TestWitness:
    def test_invariant_interval(self):
        """[0, c] is mapped into itself for c in [0, 1]."""
        assert witness_holds(3, 0.8, InvariantInterval(lower=0.0, upper=0.8))

    def test_non_invariant_interval(self):
        assert not witness_holds(3, 1.5, InvariantInterval(lower=-0.1, upper=1.5))


class TestAnalyzeRealQOrbit:
    @pytest.mark.parametrize("c", [0.0, 0.5, 1.0])
    def test_trivial_witness(self, c, small_budget):
        verdict = analyze_real_q_orbit(3, c, small_budget)
        assert verdict.kind == VerdictKind.PROVEN_BOUNDED
        assert verdict.witness.lower == 0.0
        assert verdict.witness.upper == c

    def test_two_cycle_witness(self, budget):
        verdict = analyze_real_q_orbit(3, 1.05, budget)
        assert verdict.kind == VerdictKind.PROVEN_BOUNDED
        assert verdict.witness.lower < 0.0 < verdict.witness.upper
        assert witness_holds(3, 1.05, verdict.witness)

    @pytest.mark.parametrize("d", [3, 5, 7])
    def test_beyond_gamma_escapes(self, d, budget):
        verdict = analyze_real_q_orbit(d, gamma(d) + 0.05, budget)
        assert verdict.kind == VerdictKind.ESCAPED

    def test_rejects_negative_parameter(self, small_budget):
        with pytest.raises(InvalidParameterError):
            analyze_real_q_orbit(3, -0.5, small_budget)

    def test_rejects_even_degree(self, small_budget):
        with pytest.raises(InvalidDegreeError):
            analyze_real_q_orbit(4, 0.5, small_budget)

    @pytest.mark.slow
    def test_orbit_at_gamma_is_bounded(self):
        """At the endpoint itself the two-cycle is parabolic and convergence takes millions of steps."""
        verdict = analyze_real_q_orbit(3, gamma(3), IterationBudget(max_iters=10_000_000))
        assert verdict.kind == VerdictKind.PROVEN_BOUNDED
        assert witness_holds(3, gamma(3), verdict.witness)


class TestEscapeCounts:
    def test_shape_and_values(self, small_budget):
        c = np.array([[0.0, 2.0], [-2.0, 0.1j]])
        counts = escape_counts(3, c, small_budget)
        assert counts.shape == (2, 2)
        assert counts[0, 0] == 0
        assert counts[0, 1] == 2
        assert counts[1, 0] == iterate_p(3, -2.0, small_budget).steps
        assert counts[1, 1] == 0

    def test_negated_map(self, small_budget):
        counts = escape_counts(3, np.array([2.0, 1.0]), small_budget, negate=True)
        assert list(counts) == [2, 0]

    def test_rejects_non_finite(self, small_budget):
        with pytest.raises(InvalidParameterError):
            escape_counts(2, np.array([0.0, np.nan]), small_budget)

    def test_agrees_with_iterate_p(self, small_budget):
        points = [0.1 + 0.1j, -1.0, 0.5 + 0.5j, 1.0 + 1.0j, -2.5]
        counts = escape_counts(2, np.array(points), small_budget)
        for c, count in zip(points, counts):
            verdict = iterate_p(2, c, small_budget)
            assert count == (verdict.steps if verdict.escaped else 0)


@given(
    d=st.integers(min_value=2, max_value=8),
    scale=st.floats(min_value=1.01, max_value=50.0),
    angle=st.floats(min_value=0.0, max_value=2 * math.pi),
)
@settings(max_examples=100, deadline=None)
def test_outside_beta_always_escapes(d, scale, angle):
    """Every |c| > beta(d) lies outside M_d."""
    c = scale * beta(d) * complex(math.cos(angle), math.sin(angle))
    assert iterate_p(d, c, IterationBudget(max_iters=10_000)).escaped


@given(c=st.floats(min_value=0.0, max_value=1.07))
@settings(max_examples=50, deadline=None)
def test_proven_bounded_witness_is_checkable(c):
    """Any witness returned for d=3 passes the invariance check and the orbit never escapes."""
    verdict = analyze_real_q_orbit(3, c, IterationBudget(max_iters=1_000_000))
    assert verdict.kind != VerdictKind.ESCAPED
    if verdict.kind == VerdictKind.PROVEN_BOUNDED:
        assert witness_holds(3, c, verdict.witness)
