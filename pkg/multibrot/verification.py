"""
Aggregate check suite behind `multibrot verify`
"""
import logging
from typing import Callable, List

from .config import Config
from .constants import alpha, asymptotic_ladder, gamma, mu_bruteforce, period_two_cycle
from .dynamics import require_degree
from .models import CheckResult, VerificationReport
from .sections import rotation_samples, verify_real_sections, verify_rotation_symmetry

logger = logging.getLogger(__name__)

ORACLE_TOLERANCE = 1e-8
CYCLE_TOLERANCE = 1e-9
LADDER_GROWTH = 2.0
LADDER_SCALED_RANGE = (0.9, 1.1)


def check_oracle_equivalence(d: int, config: Config) -> CheckResult:
    """mu(d) from the brute-force maximizer against gamma(d) from xi_d."""
    solution = mu_bruteforce(d, grid_points=config.mu_grid_points)
    g = gamma(d)
    mu_error = abs(solution.mu - g)
    product_error = abs(solution.product - solution.product_target)
    return CheckResult(
        name="oracle_equivalence",
        passed=mu_error <= ORACLE_TOLERANCE and product_error <= ORACLE_TOLERANCE,
        details={
            "mu": solution.mu,
            "gamma": g,
            "mu_error": mu_error,
            "a0": solution.a0,
            "b0": solution.b0,
            "product": solution.product,
            "product_target": solution.product_target,
            "product_error": product_error,
            "constraint_residual": solution.constraint_residual,
            "grid_points": solution.grid_points,
        },
    )


def check_period_two_cycle(d: int, config: Config) -> CheckResult:
    """
    Residuals of the two-cycle equations at c = gamma(d).

    For odd d they say q_c swaps -b0 and a0; for even d they are still the
    stationarity conditions of the maximization and are checked all the same.
    """
    cycle = period_two_cycle(d)
    return CheckResult(
        name="period_two_cycle",
        passed=max(cycle.forward_residual, cycle.backward_residual) <= CYCLE_TOLERANCE,
        details={
            "c": cycle.c,
            "a0": cycle.a0,
            "b0": cycle.b0,
            "forward_residual": cycle.forward_residual,
            "backward_residual": cycle.backward_residual,
            "swapped_by_q": d % 2 == 1,
        },
    )


def check_gamma_exceeds_one(d: int, config: Config) -> CheckResult:
    g = gamma(d)
    a = alpha(d)
    return CheckResult(
        name="gamma_exceeds_one",
        passed=g > 1.0 and a < g,
        details={"alpha": a, "gamma": g},
    )


def check_real_sections(d: int, config: Config) -> CheckResult:
    sentinels = verify_real_sections(d, config.budget())
    return CheckResult(
        name="real_sections",
        passed=all(s.passed for s in sentinels),
        details={s.name: {"passed": s.passed, **s.details} for s in sentinels},
    )


def check_rotation_symmetry(d: int, config: Config) -> CheckResult:
    samples = rotation_samples(d, config.symmetry_samples, config.symmetry_seed)
    result = verify_rotation_symmetry(d, samples, config.symmetry_budget())
    result.details["seed"] = config.symmetry_seed
    return result


def check_asymptotic_ladder(d: int, config: Config) -> CheckResult:
    """Bounded deviation of gamma(d) from 2**(1/d) along d = 10**2 .. 10**5 (independent of d)."""
    rows = asymptotic_ladder()
    reference = rows[0]["deviation"]
    low, high = LADDER_SCALED_RANGE
    passed = all(
        row["deviation"] <= LADDER_GROWTH * reference and low <= row["scaled_log2_gamma"] <= high
        for row in rows
    )
    return CheckResult(name="asymptotic_ladder", passed=passed, details={"rows": rows})


CHECKS: List[Callable[[int, Config], CheckResult]] = [
    check_oracle_equivalence,
    check_period_two_cycle,
    check_gamma_exceeds_one,
    check_real_sections,
    check_rotation_symmetry,
    check_asymptotic_ladder,
]


def run_verification(d: int, config: Config) -> VerificationReport:
    """
    Run every check for one degree.

    Args:
        d: Integer degree >= 2
        config: Budgets, seeds and grid sizes

    Returns:
        VerificationReport; passed is True only when every check passed
    """
    d = require_degree(d)
    report = VerificationReport(d=d, settings=config.provenance())
    for check in CHECKS:
        result = check(d, config)
        logger.info(f"verify d={d}: {result.name} {'passed' if result.passed else 'FAILED'}")
        report.checks.append(result)

    if not report.passed:
        logger.warning(f"verify d={d}: failed checks {report.failed_checks}")
    return report
