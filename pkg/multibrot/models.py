"""
Data models for multibrot section computations
"""
import math
from enum import Enum
from typing import Any, Dict, List, Optional, Union

import numpy as np
from pydantic import BaseModel, Field, field_validator, model_validator


class ComplexPoint(BaseModel):
    """A finite binary64 complex number"""
    re: float = Field(..., description="Real part")
    im: float = Field(0.0, description="Imaginary part")

    @field_validator("re", "im")
    @classmethod
    def validate_finite(cls, v: float) -> float:
        """Reject NaN and infinities."""
        if not math.isfinite(v):
            raise ValueError("complex point components must be finite")
        return v

    @classmethod
    def of(cls, z: Union["ComplexPoint", complex, float, int]) -> "ComplexPoint":
        """Build a point from a Python number (or return it unchanged)."""
        if isinstance(z, ComplexPoint):
            return z
        z = complex(z)
        return cls(re=z.real, im=z.imag)

    @property
    def value(self) -> complex:
        return complex(self.re, self.im)

    def __abs__(self) -> float:
        return abs(self.value)


ComplexLike = Union[ComplexPoint, complex, float, int]


class IterationBudget(BaseModel):
    """How long an orbit is followed before giving up"""
    max_iters: int = Field(..., ge=1, description="Maximum number of map applications")
    escape_margin: float = Field(1e-9, gt=0, description="Added to the escape radius")


class VerdictKind(str, Enum):
    ESCAPED = "escaped"
    UNDETERMINED = "undetermined"
    PROVEN_BOUNDED = "proven_bounded"


class InvariantInterval(BaseModel):
    """Real interval [lower, upper] containing 0, certified mapped into itself by q_c"""
    lower: float = Field(..., le=0.0, description="Left endpoint (-b)")
    upper: float = Field(..., ge=0.0, description="Right endpoint (a)")


class OrbitVerdict(BaseModel):
    """Outcome of following the orbit of 0"""
    kind: VerdictKind
    steps: int = Field(..., ge=0, description="Iteration count at decision")
    escape_radius: float = Field(..., gt=0, description="Radius (margin included) used for escape")
    witness: Optional[InvariantInterval] = Field(None, description="Invariant interval for proven_bounded")
    last_iterate: Optional[ComplexPoint] = Field(None, description="Iterate that crossed the radius")
    overflow: bool = Field(False, description="Escape was declared on a non-finite iterate")

    @model_validator(mode="after")
    def check_consistency(self) -> "OrbitVerdict":
        if self.kind == VerdictKind.PROVEN_BOUNDED and self.witness is None:
            raise ValueError("proven_bounded verdicts need a witness interval")
        if self.kind == VerdictKind.ESCAPED and self.last_iterate is not None:
            if abs(self.last_iterate) <= self.escape_radius:
                raise ValueError("escaped verdict whose last iterate is inside the escape radius")
        return self

    @property
    def escaped(self) -> bool:
        return self.kind == VerdictKind.ESCAPED


class SectionConstants(BaseModel):
    """alpha, beta, gamma and xi for one degree"""
    d: float = Field(..., ge=2)
    alpha: float
    beta: float
    xi: float = Field(..., gt=0)
    gamma: float
    xi_residual: float = Field(..., ge=0, description="|cosh(d*xi) - d*cosh(xi)| at the root")

    @model_validator(mode="after")
    def check_order(self) -> "SectionConstants":
        if not self.alpha < self.gamma:
            raise ValueError(f"expected alpha < gamma, got {self.alpha} >= {self.gamma}")
        return self

    @property
    def relative_residual(self) -> float:
        return self.xi_residual / (self.d * math.cosh(self.xi))


class MuSolution(BaseModel):
    """Maximizer of a - b**d on the curve a**d + b**d = a + b, found without xi"""
    d: float = Field(..., ge=2)
    a0: float = Field(..., ge=0)
    b0: float = Field(..., ge=0)
    mu: float
    constraint_residual: float = Field(..., ge=0)
    grid_points: int = Field(..., ge=2)

    @property
    def product(self) -> float:
        return self.a0 * self.b0

    @property
    def product_target(self) -> float:
        return math.exp(-2.0 * math.log(self.d) / (self.d - 1.0))


class PeriodTwoCycle(BaseModel):
    """The cycle {-b0, a0} of q_c at c = gamma(d)"""
    d: float = Field(..., ge=2)
    c: float
    a0: float
    b0: float
    forward_residual: float = Field(..., description="|q_c(a0) + b0|")
    backward_residual: float = Field(..., description="|q_c(-b0) - a0|")


class RayKind(str, Enum):
    ROOT_OF_UNITY = "plus"
    ROOT_OF_MINUS_UNITY = "minus"


class RayClass(BaseModel):
    """A ray R+ omega with omega**(d-1) = +1 or -1"""
    d: int = Field(..., ge=2)
    kind: RayKind
    omega: ComplexPoint

    @model_validator(mode="after")
    def check_root(self) -> "RayClass":
        target = 1.0 if self.kind == RayKind.ROOT_OF_UNITY else -1.0
        if abs(self.omega.value ** (self.d - 1) - target) > 1e-12:
            raise ValueError(f"omega={self.omega.value} is not a {self.d - 1}-th root of {target:+.0f}")
        return self

    @property
    def odd_degree(self) -> bool:
        return self.d % 2 == 1

    @property
    def label(self) -> str:
        return f"{self.kind.value}(omega={self.omega.re:.12g}{self.omega.im:+.12g}i)"


class Probe(BaseModel):
    t: float
    kind: VerdictKind
    steps: int


class EndpointEstimate(BaseModel):
    """Bracket [t_low, t_high] for the end of M_d along a ray"""
    d: int
    ray: RayClass
    t_low: float
    t_high: float
    predicted: float
    budget_used: IterationBudget
    bisection_steps: int = Field(..., ge=1)
    via_conjugacy: bool = False
    probes: List[Probe] = Field(default_factory=list)

    @model_validator(mode="after")
    def check_bracket(self) -> "EndpointEstimate":
        if not self.t_low < self.t_high:
            raise ValueError(f"empty bracket [{self.t_low}, {self.t_high}]")
        return self

    @property
    def midpoint(self) -> float:
        return 0.5 * (self.t_low + self.t_high)

    @property
    def width(self) -> float:
        return self.t_high - self.t_low

    @property
    def error(self) -> float:
        return abs(self.midpoint - self.predicted)

    def passes(self, tolerance: float) -> bool:
        return self.error <= tolerance

    def is_monotone(self) -> bool:
        """True when no escaped probe lies below a probe that did not escape."""
        escaped = [p.t for p in self.probes if p.kind == VerdictKind.ESCAPED]
        inside = [p.t for p in self.probes if p.kind != VerdictKind.ESCAPED]
        if not escaped or not inside:
            return True
        return min(escaped) > max(inside)


class Window(BaseModel):
    """Rectangular window of the parameter plane sampled at pixel centers"""
    center: ComplexPoint = Field(default_factory=lambda: ComplexPoint(re=0.0, im=0.0))
    width: float = Field(..., gt=0)
    height: float = Field(..., gt=0)
    px_w: int = Field(..., ge=1)
    px_h: int = Field(..., ge=1)

    def pixel_to_c(self, i: int, j: int) -> complex:
        """
        Parameter at the center of pixel column i, row j (row 0 is the top edge).

        Integer numerators make the mirrored pixel (px_w-1-i, px_h-1-j) map to the exact
        negative offset from the center.
        """
        re = self.center.re + ((2 * i + 1 - self.px_w) / (2 * self.px_w)) * self.width
        im = self.center.im + ((self.px_h - (2 * j + 1)) / (2 * self.px_h)) * self.height
        return complex(re, im)


class EscapeGrid(BaseModel):
    """
    Escape counts over a window, stored row-major.

    The image is px_w wide and px_h tall, so counts has numpy shape (px_h, px_w):
    counts[j, i] is row j (top first), column i.
    """
    model_config = {"arbitrary_types_allowed": True}

    d: int = Field(..., ge=2)
    window: Window
    counts: np.ndarray
    budget: IterationBudget

    @model_validator(mode="after")
    def check_counts(self) -> "EscapeGrid":
        if self.counts.shape != (self.window.px_h, self.window.px_w):
            raise ValueError(
                f"counts shape {self.counts.shape} does not match window "
                f"{self.window.px_h}x{self.window.px_w}"
            )
        if self.counts.size and (self.counts.min() < 0 or self.counts.max() > self.budget.max_iters):
            raise ValueError("escape counts must lie in [0, max_iters]")
        return self


class CheckResult(BaseModel):
    """Outcome of one named verification check"""
    name: str
    passed: bool
    details: Dict[str, Any] = Field(default_factory=dict)


class VerificationReport(BaseModel):
    """All checks run by `multibrot verify`"""
    d: int
    checks: List[CheckResult] = Field(default_factory=list)
    settings: Dict[str, Any] = Field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def failed_checks(self) -> List[str]:
        return [check.name for check in self.checks if not check.passed]

