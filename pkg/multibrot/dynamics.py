"""
Iteration kernels for p_c(z) = z**d + c and q_c(z) = -z**d + c

Every orbit starts at 0. An orbit has escaped once an iterate leaves the disk of
radius max(|c|, beta(d)) + escape_margin: beyond that radius |z**d +- c| > |z|, so
the modulus grows without bound.

The real q-orbit analysis exploits that q_c is decreasing on the real line when d
is odd: the even and odd subsequences of the orbit of 0 are monotone, and when
they converge the limits bound an interval mapped into itself.
"""
import logging
import math
import numbers
from typing import List, Union

import numpy as np
from pydantic import ValidationError

from .constants import beta
from .errors import InvalidDegreeError, InvalidParameterError
from .models import (
    ComplexLike,
    ComplexPoint,
    InvariantInterval,
    IterationBudget,
    OrbitVerdict,
    VerdictKind,
)

logger = logging.getLogger(__name__)

# Subsequence convergence for the real q-orbit analysis
CONVERGENCE_TOLERANCE = 1e-13
WITNESS_ENLARGEMENT = 1e-10
WITNESS_TOLERANCE = 1e-10

Number = Union[float, complex, np.ndarray]


def require_degree(d, odd: bool = False) -> int:
    """
    Validate an integer degree.

    Args:
        d: Candidate degree
        odd: Also require d to be odd

    Returns:
        d as a Python int

    Raises:
        InvalidDegreeError: If d is not an integer >= 2 (or not odd when required)
    """
    if isinstance(d, bool) or not isinstance(d, numbers.Integral):
        raise InvalidDegreeError(d, "must be an integer >= 2")
    d = int(d)
    if d < 2:
        raise InvalidDegreeError(d, "must be an integer >= 2")
    if odd and d % 2 == 0:
        raise InvalidDegreeError(d, "must be odd")
    return d


def as_complex(c: ComplexLike) -> complex:
    """Coerce a parameter to a finite Python complex."""
    try:
        return ComplexPoint.of(c).value
    except (ValidationError, TypeError, ValueError) as e:
        raise InvalidParameterError("c", c, "must be a finite complex number") from e


def power(z: Number, d: int) -> Number:
    """
    z**d by exponentiation by squaring.

    Only multiplications are used, so the same code serves floats, complex numbers
    and numpy arrays, and negating z negates odd powers exactly.
    """
    result = None
    base = z
    while True:
        if d & 1:
            result = base if result is None else result * base
        d >>= 1
        if not d:
            return result
        base = base * base


def escape_radius(d: int, c: ComplexLike) -> float:
    """
    Radius beyond which the orbit of 0 under p_c (or q_c) diverges.

    Callers add their escape margin on top.
    """
    d = require_degree(d)
    return max(abs(as_complex(c)), beta(d))


def p_map(d: int, c: Number, z: Number) -> Number:
    return power(z, d) + c


def q_map(d: int, c: Number, z: Number) -> Number:
    return c - power(z, d)


def _iterate(d: int, c: ComplexLike, budget: IterationBudget, negate: bool) -> OrbitVerdict:
    d = require_degree(d)
    c = as_complex(c)
    radius = escape_radius(d, c) + budget.escape_margin

    z = 0j
    for n in range(1, budget.max_iters + 1):
        w = power(z, d)
        z = c - w if negate else w + c
        modulus = abs(z)
        if modulus > radius:
            if math.isinf(modulus):
                return OrbitVerdict(kind=VerdictKind.ESCAPED, steps=n, escape_radius=radius, overflow=True)
            return OrbitVerdict(
                kind=VerdictKind.ESCAPED,
                steps=n,
                escape_radius=radius,
                last_iterate=ComplexPoint(re=z.real, im=z.imag),
            )
        if modulus != modulus:
            return OrbitVerdict(kind=VerdictKind.ESCAPED, steps=n, escape_radius=radius, overflow=True)

    return OrbitVerdict(kind=VerdictKind.UNDETERMINED, steps=budget.max_iters, escape_radius=radius)


def iterate_p(d: int, c: ComplexLike, budget: IterationBudget) -> OrbitVerdict:
    """
    Follow the orbit of 0 under z -> z**d + c.

    Args:
        d: Integer degree >= 2
        c: Parameter
        budget: Iteration budget and escape margin

    Returns:
        Escaped at the first step whose iterate leaves the escape disk, otherwise
        Undetermined after max_iters steps. Never ProvenBounded.
    """
    return _iterate(d, c, budget, negate=False)


def iterate_q(d: int, c: ComplexLike, budget: IterationBudget) -> OrbitVerdict:
    """Same contract as iterate_p for z -> -z**d + c."""
    return _iterate(d, c, budget, negate=True)


def orbit_p(d: int, c: ComplexLike, n: int) -> List[complex]:
    """The iterates z_0 = 0, ..., z_n of p_c, without escape detection."""
    d = require_degree(d)
    c = as_complex(c)
    orbit = [0j]
    for _ in range(n):
        orbit.append(p_map(d, c, orbit[-1]))
    return orbit


def orbit_q(d: int, c: ComplexLike, n: int) -> List[complex]:
    """The iterates z_0 = 0, ..., z_n of q_c, without escape detection."""
    d = require_degree(d)
    c = as_complex(c)
    orbit = [0j]
    for _ in range(n):
        orbit.append(q_map(d, c, orbit[-1]))
    return orbit


def witness_holds(d: int, c: float, interval: InvariantInterval, tol: float = WITNESS_TOLERANCE) -> bool:
    """
    Check that q_c maps [lower, upper] into itself, up to tol.

    q_c is decreasing for odd d, so the image is [q_c(upper), q_c(lower)].
    """
    lower, upper = interval.lower, interval.upper
    if not lower <= 0.0 <= upper:
        return False
    return q_map(d, c, upper) >= lower - tol and q_map(d, c, lower) <= upper + tol


def analyze_real_q_orbit(d: int, c: float, budget: IterationBudget) -> OrbitVerdict:
    """
    Decide boundedness of the real orbit of 0 under q_c(x) = -x**d + c.

    For c in [0, 1] the interval [0, c] is invariant. For c > 1 the even terms of the
    orbit decrease and the odd terms increase; once both have settled the odd term,
    slightly enlarged, and its image give a candidate interval [lower, upper] that is
    accepted when q_c maps it into itself.

    Args:
        d: Odd integer degree >= 3
        c: Nonnegative real parameter
        budget: Iteration budget and escape margin

    Returns:
        ProvenBounded with the invariant interval, Escaped, or Undetermined when the
        budget runs out first

    Raises:
        InvalidDegreeError: If d is not odd
        InvalidParameterError: If c is negative or not finite
    """
    d = require_degree(d, odd=True)
    c = float(c)
    if not math.isfinite(c) or c < 0.0:
        raise InvalidParameterError("c", c, "must be a finite nonnegative real")

    radius = max(c, beta(d)) + budget.escape_margin

    if c <= 1.0:
        witness = InvariantInterval(lower=0.0, upper=c)
        logger.debug(f"d={d} c={c!r}: [0, c] is invariant")
        return OrbitVerdict(kind=VerdictKind.PROVEN_BOUNDED, steps=0, escape_radius=radius, witness=witness)

    # x3, x2, x1, x are x_{n-3}, x_{n-2}, x_{n-1}, x_n
    x3 = x2 = x1 = x = 0.0
    for n in range(1, budget.max_iters + 1):
        x3, x2, x1 = x2, x1, x
        x = c - power(x1, d)
        if not abs(x) <= radius:
            logger.debug(f"d={d} c={c!r}: real q-orbit escaped at step {n}")
            return OrbitVerdict(
                kind=VerdictKind.ESCAPED,
                steps=n,
                escape_radius=radius,
                overflow=not math.isfinite(x),
                last_iterate=ComplexPoint(re=x) if math.isfinite(x) else None,
            )

        if n >= 4 and abs(x - x2) < CONVERGENCE_TOLERANCE and abs(x1 - x3) < CONVERGENCE_TOLERANCE:
            upper = max(x, x1) + WITNESS_ENLARGEMENT
            lower = q_map(d, c, upper)
            if lower <= 0.0:
                witness = InvariantInterval(lower=lower, upper=upper)
                if witness_holds(d, c, witness):
                    logger.debug(f"d={d} c={c!r}: invariant interval [{lower!r}, {upper!r}] at step {n}")
                    return OrbitVerdict(
                        kind=VerdictKind.PROVEN_BOUNDED, steps=n, escape_radius=radius, witness=witness
                    )

    logger.debug(f"d={d} c={c!r}: real q-orbit undecided after {budget.max_iters} steps")
    return OrbitVerdict(kind=VerdictKind.UNDETERMINED, steps=budget.max_iters, escape_radius=radius)


def escape_counts(d: int, c: np.ndarray, budget: IterationBudget, negate: bool = False) -> np.ndarray:
    """
    Vectorized escape times for an array of parameters.

    Args:
        d: Integer degree >= 2
        c: Array of complex parameters (any shape)
        budget: Iteration budget and escape margin
        negate: Iterate q_c instead of p_c

    Returns:
        Integer array of c's shape: the escape step n >= 1, or 0 when the orbit stayed
        inside the escape disk for the whole budget
    """
    d = require_degree(d)
    c = np.array(c, dtype=np.complex128)
    shape = c.shape
    flat_c = c.ravel()
    if not np.all(np.isfinite(flat_c)):
        raise InvalidParameterError("c", "array", "all parameters must be finite")
    flat_r = np.maximum(np.abs(flat_c), beta(d)) + budget.escape_margin

    counts = np.zeros(flat_c.size, dtype=np.int64)
    active = np.arange(flat_c.size)
    z = np.zeros(flat_c.size, dtype=np.complex128)

    with np.errstate(over="ignore", invalid="ignore"):
        for n in range(1, budget.max_iters + 1):
            if active.size == 0:
                break
            w = power(z, d)
            z = flat_c[active] - w if negate else w + flat_c[active]
            out = ~(np.abs(z) <= flat_r[active])
            if out.any():
                counts[active[out]] = n
                keep = ~out
                active = active[keep]
                z = z[keep]

    logger.debug(f"escape_counts d={d}: {int(np.count_nonzero(counts))}/{counts.size} escaped")
    return counts.reshape(shape)
