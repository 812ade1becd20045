"""
Cross-sections of M_d along the rays R+ omega with omega**(d-1) = +1 or -1

On these rays the set is a segment [0, endpoint] * omega:
- omega**(d-1) = 1: endpoint alpha(d)
- omega**(d-1) = -1, d even: endpoint beta(d)
- omega**(d-1) = -1, d odd: endpoint gamma(d)

The scanner bisects along a ray and brackets the endpoint empirically. Parameters
whose orbit is still undecided when the budget runs out count as inside the set.
"""
import cmath
import logging
import math
from typing import Iterable, List, Optional, Union

import numpy as np

from .constants import alpha, beta, gamma
from .dynamics import escape_counts, iterate_p, iterate_q, orbit_p, require_degree
from .errors import InvalidParameterError, ScanError
from .models import (
    CheckResult,
    ComplexPoint,
    EndpointEstimate,
    IterationBudget,
    OrbitVerdict,
    Probe,
    RayClass,
    RayKind,
    VerdictKind,
)

logger = logging.getLogger(__name__)

LANDING_TOLERANCE = 1e-12
SENTINEL_INSIDE = 0.999
SENTINEL_OUTSIDE = 1.001
# Upper end of the scan is beta(d) plus this slack
SCAN_SLACK = 0.5


def unit_root(d: int, k: int, minus: bool = False) -> complex:
    """k-th solution of omega**(d-1) = 1, or of omega**(d-1) = -1 when minus is set."""
    offset = 0.5 if minus else 0.0
    return cmath.exp(2j * math.pi * (k + offset) / (d - 1))


def ray_class(d: int, kind: Union[RayKind, str], omega: Optional[Union[str, complex]] = None) -> RayClass:
    """
    Concrete ray for a degree and ray family.

    Args:
        d: Integer degree >= 2
        kind: "plus" (omega**(d-1) = 1) or "minus" (omega**(d-1) = -1)
        omega: None or "principal" for the default choice (1; -1 for even d;
            e**(i*pi/(d-1)) for odd d), "i" for the imaginary axis, or an explicit value

    Raises:
        InvalidParameterError: If the requested omega does not belong to the family
    """
    d = require_degree(d)
    kind = RayKind(kind)

    if omega is None or omega == "principal":
        if kind == RayKind.ROOT_OF_UNITY:
            value = 1.0 + 0j
        elif d % 2 == 0:
            value = -1.0 + 0j
        else:
            value = unit_root(d, 0, minus=True)
    elif omega == "i":
        if kind != RayKind.ROOT_OF_MINUS_UNITY or (d - 1) % 4 != 2:
            raise InvalidParameterError(
                "omega", omega, f"i**{d - 1} is not -1; the imaginary axis needs d-1 = 2 (mod 4)"
            )
        value = 1j
    else:
        value = complex(omega)

    try:
        return RayClass(d=d, kind=kind, omega=ComplexPoint.of(value))
    except ValueError as e:
        raise InvalidParameterError("omega", value, str(e)) from e


def predicted_endpoint(ray: RayClass) -> float:
    """alpha, beta or gamma according to the ray family and the parity of d."""
    if ray.kind == RayKind.ROOT_OF_UNITY:
        return alpha(ray.d)
    if ray.odd_degree:
        return gamma(ray.d)
    return beta(ray.d)


def _classifier(d: int, ray: RayClass, budget: IterationBudget, via_conjugacy: bool):
    if via_conjugacy and ray.kind == RayKind.ROOT_OF_MINUS_UNITY and ray.odd_degree:
        # omega^-1 p_{t omega}(omega z) = q_t(z)
        return lambda t: iterate_q(d, t, budget)
    omega = ray.omega.value
    return lambda t: iterate_p(d, t * omega, budget)


def scan_ray_endpoint(
    d: int,
    ray: RayClass,
    budget: IterationBudget,
    bisection_steps: int,
    via_conjugacy: bool = True,
) -> EndpointEstimate:
    """
    Bracket the end of M_d along a ray by bisection on t in [0, beta(d) + 0.5].

    Args:
        d: Integer degree >= 2
        ray: Ray to scan (its degree must be d)
        budget: Iteration budget per probe
        bisection_steps: Number of halvings
        via_conjugacy: For odd d on a minus ray, classify real t with q_t instead of
            t*omega with p

    Returns:
        EndpointEstimate with the final bracket and every probe

    Raises:
        ScanError: If the upper end of the search interval does not escape
    """
    d = require_degree(d)
    if ray.d != d:
        raise InvalidParameterError("ray", ray.label, f"belongs to d={ray.d}, not d={d}")
    if bisection_steps < 1:
        raise InvalidParameterError("bisection_steps", bisection_steps, "must be at least 1")

    classify = _classifier(d, ray, budget, via_conjugacy)
    use_q = via_conjugacy and ray.kind == RayKind.ROOT_OF_MINUS_UNITY and ray.odd_degree
    probes: List[Probe] = []

    def probe(t: float) -> OrbitVerdict:
        verdict = classify(t)
        probes.append(Probe(t=t, kind=verdict.kind, steps=verdict.steps))
        return verdict

    t_low, t_high = 0.0, beta(d) + SCAN_SLACK
    if not probe(t_high).escaped:
        raise ScanError(d, ray.label, t_high)

    for _ in range(bisection_steps):
        mid = 0.5 * (t_low + t_high)
        if probe(mid).escaped:
            t_high = mid
        else:
            t_low = mid

    estimate = EndpointEstimate(
        d=d,
        ray=ray,
        t_low=t_low,
        t_high=t_high,
        predicted=predicted_endpoint(ray),
        budget_used=budget,
        bisection_steps=bisection_steps,
        via_conjugacy=use_q,
        probes=probes,
    )
    if not estimate.is_monotone():
        logger.warning(f"d={d} {ray.label}: escaped probe below a non-escaped probe")
    logger.info(
        f"d={d} {ray.label}: endpoint in [{t_low!r}, {t_high!r}], predicted {estimate.predicted!r}"
    )
    return estimate


def _sentinel(name: str, d: int, c: float, budget: IterationBudget, expect_escape: bool) -> CheckResult:
    verdict = iterate_p(d, c, budget)
    return CheckResult(
        name=name,
        passed=verdict.escaped == expect_escape,
        details={
            "c": c,
            "expected": "escaped" if expect_escape else "not escaped",
            "verdict": verdict.kind.value,
            "steps": verdict.steps,
        },
    )


def _landing_orbit(d: int, budget: IterationBudget) -> CheckResult:
    """
    For even d and c = -beta(d) the orbit is 0 -> c -> beta(d) -> beta(d).

    Passes on the landing error alone. beta(d) is a repelling fixed point, so the
    long-run verdict at -beta(d) is rounding-dependent and only reported.
    """
    b = beta(d)
    c = -b
    orbit = orbit_p(d, c, 3)
    errors = [abs(orbit[2] - b), abs(orbit[3] - b)]
    verdict = iterate_p(d, c, budget)
    return CheckResult(
        name="minus_beta_landing",
        passed=max(errors) <= LANDING_TOLERANCE,
        details={
            "c": c,
            "z2": orbit[2].real,
            "z3": orbit[3].real,
            "beta": b,
            "max_error": max(errors),
            "verdict": verdict.kind.value,
        },
    )


def verify_real_sections(d: int, budget: IterationBudget) -> List[CheckResult]:
    """
    Sentinel checks of M_d on the real line.

    Odd d: the section is [-alpha, alpha], probed just inside and outside both ends.
    Even d: the section is [-beta, alpha]; the right end is probed like the odd case,
    the left end by the landing orbit at -beta and an escape just beyond it.
    """
    d = require_degree(d)
    a = alpha(d)
    results = [
        _sentinel("alpha_inside", d, SENTINEL_INSIDE * a, budget, expect_escape=False),
        _sentinel("alpha_outside", d, SENTINEL_OUTSIDE * a, budget, expect_escape=True),
    ]
    if d % 2 == 1:
        results.append(_sentinel("minus_alpha_inside", d, -SENTINEL_INSIDE * a, budget, expect_escape=False))
        results.append(_sentinel("minus_alpha_outside", d, -SENTINEL_OUTSIDE * a, budget, expect_escape=True))
    else:
        results.append(_landing_orbit(d, budget))
        results.append(_sentinel("minus_beta_outside", d, -SENTINEL_OUTSIDE * beta(d), budget, expect_escape=True))

    for result in results:
        if not result.passed:
            logger.warning(f"d={d} real-section sentinel {result.name} failed: {result.details}")
    return results


def rotation_samples(d: int, n: int, seed: int) -> List[complex]:
    """
    Deterministic parameters kept away from the boundary of M_d.

    Samples cycle through four regions: the disk |c| <= 0.9*alpha(d), the annulus
    1.1*beta(d) <= |c| <= 1.5*beta(d), and points t*omega on random rays of both
    families with t in [0.1, 0.5] or [1.1, 1.5] times the ray's endpoint.
    """
    d = require_degree(d)
    rng = np.random.default_rng(seed)
    a, b = alpha(d), beta(d)
    samples = []
    for i in range(n):
        region = i % 4
        if region == 0:
            r = 0.9 * a * math.sqrt(rng.uniform())
            samples.append(cmath.rect(r, rng.uniform(0.0, 2.0 * math.pi)))
        elif region == 1:
            r = rng.uniform(1.1 * b, 1.5 * b)
            samples.append(cmath.rect(r, rng.uniform(0.0, 2.0 * math.pi)))
        else:
            minus = bool(rng.integers(2))
            k = int(rng.integers(d - 1))
            ray = RayClass(
                d=d,
                kind=RayKind.ROOT_OF_MINUS_UNITY if minus else RayKind.ROOT_OF_UNITY,
                omega=ComplexPoint.of(unit_root(d, k, minus=minus)),
            )
            low, high = (0.1, 0.5) if region == 2 else (1.1, 1.5)
            t = rng.uniform(low, high) * predicted_endpoint(ray)
            samples.append(t * ray.omega.value)
    return samples


def verify_rotation_symmetry(d: int, samples: Iterable[complex], budget: IterationBudget) -> CheckResult:
    """
    Compare verdicts of c and omega*c for every (d-1)-th root of unity omega.

    Kinds must agree; escape steps may differ by at most one.
    """
    d = require_degree(d)
    points = np.array(list(samples), dtype=np.complex128)
    roots = np.array([unit_root(d, k) for k in range(d - 1)], dtype=np.complex128)
    roots[0] = 1.0
    counts = escape_counts(d, np.outer(points, roots), budget)

    mismatches = []
    for s, row in enumerate(counts):
        base = int(row[0])
        for k in range(1, d - 1):
            other = int(row[k])
            same_kind = (base > 0) == (other > 0)
            if not same_kind or abs(base - other) > 1:
                mismatches.append({
                    "c": [points[s].real, points[s].imag],
                    "rotation": k,
                    "steps": [base, other],
                })

    if mismatches:
        logger.warning(f"d={d}: {len(mismatches)} rotation mismatches")
    return CheckResult(
        name="rotation_symmetry",
        passed=not mismatches,
        details={
            "samples": len(points),
            "rotations": d - 1,
            "max_iters": budget.max_iters,
            "escaped_samples": int(np.count_nonzero(counts[:, 0])),
            "mismatches": mismatches,
        },
    )


def check_conjugacy(d: int, ray: RayClass, ts: Iterable[float], budget: IterationBudget) -> CheckResult:
    """
    For odd d on a minus ray, p at t*omega and q at t must reach the same verdict kind.
    """
    d = require_degree(d, odd=True)
    if ray.kind != RayKind.ROOT_OF_MINUS_UNITY or ray.d != d:
        raise InvalidParameterError("ray", ray.label, f"needs a minus ray of degree {d}")

    disagreements = []
    checked = 0
    for t in ts:
        checked += 1
        via_p = iterate_p(d, t * ray.omega.value, budget)
        via_q = iterate_q(d, t, budget)
        if via_p.kind != via_q.kind:
            disagreements.append({"t": t, "p": via_p.kind.value, "q": via_q.kind.value})

    return CheckResult(
        name="conjugacy",
        passed=not disagreements,
        details={"checked": checked, "omega": [ray.omega.re, ray.omega.im], "disagreements": disagreements},
    )


def undetermined_fraction(estimate: EndpointEstimate) -> float:
    """Share of probes that ran out of budget (counted as inside by the scan)."""
    if not estimate.probes:
        return 0.0
    undecided = sum(1 for p in estimate.probes if p.kind == VerdictKind.UNDETERMINED)
    return undecided / len(estimate.probes)
