"""
Section constants of multibrot sets

alpha(d) and beta(d) are the radii of the largest disk inside M_d and the smallest
disk containing it. gamma(d) is where M_d ends along the rays R+ omega with
omega**(d-1) = -1 when d is odd; it is computed from xi_d, the positive root of
cosh(d*x) = d*cosh(x).

mu_bruteforce reaches the same number without xi_d, by maximizing a - b**d over
the curve a**d + b**d = a + b directly, and serves as an independent oracle.

Real (non-integer) degrees are accepted throughout this module.
"""
import logging
import math
import numbers
from typing import Callable, Dict, Iterable, List, Tuple

import numpy as np

from .errors import BracketError, InvalidDegreeError, InvalidParameterError
from .models import MuSolution, PeriodTwoCycle, SectionConstants

logger = logging.getLogger(__name__)

BISECTION_MAX_ITER = 200
NEWTON_STEPS = 5
RESIDUAL_TOLERANCE = 1e-9
# Above this argument cosh and sinh are replaced by exp(x)/2
LARGE_ARGUMENT = 30.0

A_BISECTION_STEPS = 64
GOLDEN_TOLERANCE = 1e-12
PARABOLA_SPACING = 1e-5
PARABOLA_PASSES = 3
# Rounding noise allowed when comparing the refined maximum with the grid maximum
REFINEMENT_SLACK = 1e-12

INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0
INV_PHI_SQ = (3.0 - math.sqrt(5.0)) / 2.0


def require_real_degree(d) -> float:
    """
    Validate a real degree d >= 2.

    Raises:
        InvalidDegreeError: If d is not a finite real number >= 2
    """
    if isinstance(d, bool) or not isinstance(d, numbers.Real):
        raise InvalidDegreeError(d, "must be a real number >= 2")
    d = float(d)
    if not math.isfinite(d) or d < 2.0:
        raise InvalidDegreeError(d, "must be a real number >= 2")
    return d


def _cosh(x: float) -> float:
    if x > LARGE_ARGUMENT:
        return 0.5 * math.exp(x)
    return math.cosh(x)


def _sinh(x: float) -> float:
    if x > LARGE_ARGUMENT:
        return 0.5 * math.exp(x)
    return math.sinh(x)


def alpha(d: float) -> float:
    """(d-1) * d**(-d/(d-1)): radius of the largest disk about 0 inside M_d."""
    d = require_real_degree(d)
    return (d - 1.0) * math.exp(-d / (d - 1.0) * math.log(d))


def beta(d: float) -> float:
    """2**(1/(d-1)): radius of the smallest disk about 0 containing M_d."""
    d = require_real_degree(d)
    return 2.0 ** (1.0 / (d - 1.0))


def _xi_equation(d: float, x: float) -> float:
    return _cosh(d * x) - d * _cosh(x)


def solve_xi(d: float) -> Tuple[float, float]:
    """
    Positive root of cosh(d*x) = d*cosh(x).

    The root lies in [ln(d)/d, 2*ln(2d)/d]: at the left end cosh(ln d) = (d + 1/d)/2
    is below d*cosh(ln(d)/d), at the right end cosh(d*x) ~ 2d**2 dominates. The
    bracket is bisected, then polished with a few Newton steps.

    Args:
        d: Real degree >= 2

    Returns:
        Tuple of (xi, |cosh(d*xi) - d*cosh(xi)|)

    Raises:
        BracketError: If the bracket shows no sign change
    """
    d = require_real_degree(d)
    lower = math.log(d) / d
    upper = 2.0 * math.log(2.0 * d) / d
    if not (_xi_equation(d, lower) < 0.0 < _xi_equation(d, upper)):
        raise BracketError(d, lower, upper)

    lo, hi = lower, upper
    for _ in range(BISECTION_MAX_ITER):
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if _xi_equation(d, mid) < 0.0:
            lo = mid
        else:
            hi = mid

    xi = 0.5 * (lo + hi)
    residual = abs(_xi_equation(d, xi))
    for _ in range(NEWTON_STEPS):
        slope = d * (_sinh(d * xi) - _sinh(xi))
        if slope == 0.0:
            break
        candidate = xi - _xi_equation(d, xi) / slope
        if not lower <= candidate <= upper:
            break
        candidate_residual = abs(_xi_equation(d, candidate))
        if candidate_residual < residual:
            xi, residual = candidate, candidate_residual

    if residual > RESIDUAL_TOLERANCE * d * _cosh(xi):
        logger.warning(f"solve_xi d={d}: relative residual {residual / (d * _cosh(xi)):.3e} above tolerance")
    logger.debug(f"solve_xi d={d}: xi={xi!r} residual={residual:.3e}")
    return xi, residual


def gamma(d: float) -> float:
    """d**(-d/(d-1)) * (sinh(d*xi) + d*sinh(xi)) with xi = solve_xi(d)."""
    d = require_real_degree(d)
    xi, _ = solve_xi(d)
    return math.exp(-d / (d - 1.0) * math.log(d)) * (_sinh(d * xi) + d * _sinh(xi))


def log_gamma(d: float) -> float:
    """ln(gamma(d)) assembled from logarithms, without rounding gamma first."""
    d = require_real_degree(d)
    xi, _ = solve_xi(d)
    return math.log(_sinh(d * xi) + d * _sinh(xi)) - d / (d - 1.0) * math.log(d)


def section_constants(d: float) -> SectionConstants:
    """alpha, beta, xi and gamma for one degree."""
    d = require_real_degree(d)
    xi, residual = solve_xi(d)
    return SectionConstants(
        d=d,
        alpha=alpha(d),
        beta=beta(d),
        xi=xi,
        gamma=gamma(d),
        xi_residual=residual,
    )


def table_rows(dmin: int, dmax: int) -> List[SectionConstants]:
    """
    Section constants for every integer degree in [dmin, dmax].

    Raises:
        InvalidParameterError: If the bounds are not integers with 2 <= dmin <= dmax
    """
    for name, value in (("dmin", dmin), ("dmax", dmax)):
        if isinstance(value, bool) or not isinstance(value, numbers.Integral):
            raise InvalidParameterError(name, value, "must be an integer")
    if dmin < 2:
        raise InvalidParameterError("dmin", dmin, "must be at least 2")
    if dmin > dmax:
        raise InvalidParameterError("dmax", dmax, f"must not be below dmin={dmin}")
    return [section_constants(d) for d in range(int(dmin), int(dmax) + 1)]


def period_two_cycle(d: float) -> PeriodTwoCycle:
    """
    The cycle {-b0, a0} of q_c at c = gamma(d), built from xi_d.

    a0 = d**(-1/(d-1)) * e**xi and b0 = d**(-1/(d-1)) * e**-xi. The residuals measure
    b0**d + c = a0 and a0**d - c = b0, i.e. q_c(-b0) = a0 and q_c(a0) = -b0 for odd d.
    """
    d = require_real_degree(d)
    xi, _ = solve_xi(d)
    scale = math.exp(-math.log(d) / (d - 1.0))
    a0 = scale * math.exp(xi)
    b0 = scale * math.exp(-xi)
    c = gamma(d)
    cycle = PeriodTwoCycle(
        d=d,
        c=c,
        a0=a0,
        b0=b0,
        forward_residual=abs(c - a0 ** d + b0),
        backward_residual=abs(c + b0 ** d - a0),
    )
    logger.debug(f"period_two_cycle d={d}: {cycle}")
    return cycle


def gamma_asymptotic_deviation(d: float) -> float:
    """
    |d*ln(gamma(d)) - ln 2| * d / (ln d)**2.

    gamma(d) = 2**(1/d + O((ln d)**2/d**2)), so this stays bounded as d grows.
    """
    d = require_real_degree(d)
    return abs(d * log_gamma(d) - math.log(2.0)) * d / math.log(d) ** 2


def asymptotic_ladder(exponents: Iterable[int] = (2, 3, 4, 5)) -> List[Dict[str, float]]:
    """Deviation and d*log2(gamma(d)) along d = 10**k."""
    rows = []
    for k in exponents:
        d = 10.0 ** k
        rows.append({
            "d": d,
            "deviation": gamma_asymptotic_deviation(d),
            "scaled_log2_gamma": d * log_gamma(d) / math.log(2.0),
        })
    return rows


def _solve_constraint(d: float, b):
    """
    The a in [1, 2] with a**d - a = b - b**d, by bisection (vectorized over b).

    x**d - x increases on [1, 2] from 0 to 2**d - 2 >= 2, while b - b**d < 1 on [0, 1].
    """
    b = np.asarray(b, dtype=np.float64)
    target = b - b ** d
    lo = np.ones_like(b)
    hi = np.full_like(b, 2.0)
    for _ in range(A_BISECTION_STEPS):
        mid = 0.5 * (lo + hi)
        below = mid ** d - mid < target
        lo = np.where(below, mid, lo)
        hi = np.where(below, hi, mid)
    return 0.5 * (lo + hi)


def golden_section_max(f: Callable[[float], float], a: float, b: float, tol: float = GOLDEN_TOLERANCE) -> float:
    """
    Golden section search for the maximizer of a unimodal f on [a, b].

    Args:
        f: Objective
        a: Left end of the bracket
        b: Right end of the bracket
        tol: Final bracket width

    Returns:
        Midpoint of the final bracket
    """
    dist = b - a
    if dist <= tol:
        return 0.5 * (a + b)

    n = int(math.ceil(math.log(tol / dist) / math.log(INV_PHI)))

    c = a + INV_PHI_SQ * dist
    e = a + INV_PHI * dist
    yc = f(c)
    ye = f(e)

    for _ in range(n - 1):
        if yc > ye:
            b = e
            e = c
            ye = yc
            dist = INV_PHI * dist
            c = a + INV_PHI_SQ * dist
            yc = f(c)
        else:
            a = c
            c = e
            yc = ye
            dist = INV_PHI * dist
            e = a + INV_PHI * dist
            ye = f(e)

    if yc > ye:
        return 0.5 * (a + e)
    return 0.5 * (c + b)


def parabolic_polish(
    f: Callable[[float], float],
    x: float,
    lo: float,
    hi: float,
    spacing: float = PARABOLA_SPACING,
    passes: int = PARABOLA_PASSES,
) -> float:
    """
    Move x to the vertex of the parabola through f at x - spacing, x, x + spacing.

    Near lo or hi the outer points are clipped to the bracket, so the spacing may be
    uneven. Each pass moves x by at most spacing and stays inside [lo, hi].
    """
    for _ in range(passes):
        left, right = max(x - spacing, lo), min(x + spacing, hi)
        if not left < x < right:
            break
        fl, f0, fr = f(left), f(x), f(right)
        dl, dr = x - left, right - x
        # Second divided difference; the vertex is a maximum only when it is negative
        curvature = ((fr - f0) / dr - (f0 - fl) / dl) / (right - left)
        if not curvature < 0.0:
            break
        numerator = dl * dl * (f0 - fr) - dr * dr * (f0 - fl)
        denominator = dl * (f0 - fr) + dr * (f0 - fl)
        if denominator == 0.0:
            break
        step = -0.5 * numerator / denominator
        step = max(-spacing, min(spacing, step))
        moved = min(max(x + step, lo), hi)
        if moved == x:
            break
        x = moved
    return x


def mu_bruteforce(d: float, grid_points: int = 100_000) -> MuSolution:
    """
    max{a - b**d : a, b >= 0, a**d + b**d = a + b}, computed without xi_d.

    The curve is parametrized by b in [0, 1] (for each b the constraint fixes a in
    [1, 2]). The objective is sampled on a uniform grid that includes both boundary
    points, the best cell is refined by golden section and the maximizer is polished
    by parabolic interpolation.

    Args:
        d: Real degree >= 2
        grid_points: Number of grid cells on [0, 1]

    Returns:
        MuSolution with the maximizer (a0, b0), the value and the constraint residual
    """
    d = require_real_degree(d)
    if grid_points < 2:
        raise InvalidParameterError("grid_points", grid_points, "must be at least 2")

    def objective(b: float) -> float:
        return float(_solve_constraint(d, b)) - b ** d

    grid = np.linspace(0.0, 1.0, grid_points + 1)
    values = _solve_constraint(d, grid) - grid ** d
    k = int(np.argmax(values))
    lo = float(grid[max(k - 1, 0)])
    hi = float(grid[min(k + 1, grid_points)])

    b0 = golden_section_max(objective, lo, hi)
    # The polish samples one cell beyond the golden-section bracket
    b0 = parabolic_polish(
        objective, b0, float(grid[max(k - 2, 0)]), float(grid[min(k + 2, grid_points)])
    )
    if objective(b0) < float(values[k]) - REFINEMENT_SLACK:
        logger.warning(f"mu_bruteforce d={d}: refinement fell below the grid maximum, keeping grid point")
        b0 = float(grid[k])

    a0 = float(_solve_constraint(d, b0))
    solution = MuSolution(
        d=d,
        a0=a0,
        b0=b0,
        mu=a0 - b0 ** d,
        constraint_residual=abs(a0 ** d + b0 ** d - a0 - b0),
        grid_points=grid_points,
    )
    logger.info(f"mu_bruteforce d={d}: mu={solution.mu!r} at a0={a0!r}, b0={b0!r}")
    return solution
