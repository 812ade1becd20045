"""Configuration module for multibrot runs.

This module holds the numerical defaults shared by the library and the CLI,
and validates overrides coming from command-line flags.
"""

import logging
from typing import Any, Dict

from pydantic import BaseModel, Field, field_validator

from .models import IterationBudget

logger = logging.getLogger(__name__)


class Config(BaseModel):
    """Defaults for iteration budgets, scans, renders and the verification suite.

    Every field can be overridden by a CLI flag. No environment variables are read,
    so identical flags always reproduce identical output.
    """

    # Orbit iteration
    max_iters: int = Field(
        default=100_000,
        description="Iteration budget for sentinels and ray scans"
    )

    escape_margin: float = Field(
        default=1e-9,
        description="Margin added to max(|c|, beta(d)) before declaring escape"
    )

    # Ray scans
    bisection_steps: int = Field(
        default=40,
        description="Bisection steps used by endpoint scans"
    )

    endpoint_tolerance: float = Field(
        default=2e-3,
        description="Allowed |midpoint - predicted| for a passing endpoint scan"
    )

    # Rendering
    render_max_iters: int = Field(
        default=500,
        description="Iteration budget for rendered images"
    )

    render_width: float = Field(
        default=3.0,
        description="Width of the default render window"
    )

    render_height: float = Field(
        default=3.0,
        description="Height of the default render window"
    )

    render_px: int = Field(
        default=600,
        description="Default image side length in pixels"
    )

    # Verification suite
    symmetry_samples: int = Field(
        default=100,
        description="Number of sample parameters for the rotation check"
    )

    symmetry_seed: int = Field(
        default=20170601,
        description="Seed of the rotation sample generator"
    )

    symmetry_max_iters: int = Field(
        default=2_000,
        description="Iteration budget for the rotation check"
    )

    mu_grid_points: int = Field(
        default=100_000,
        description="Grid cells used by the brute-force mu(d) oracle"
    )

    # Logging Configuration
    log_level: str = Field(
        default="WARNING",
        description="Logging level (DEBUG, INFO, WARNING, ERROR, CRITICAL)"
    )

    @field_validator("log_level")
    @classmethod
    def validate_log_level(cls, v: str) -> str:
        """Validate log level is valid."""
        valid_levels = ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]
        v_upper = v.upper()
        if v_upper not in valid_levels:
            raise ValueError(f"log_level must be one of {valid_levels}")
        return v_upper

    @field_validator(
        "max_iters", "bisection_steps", "render_max_iters", "render_px",
        "symmetry_samples", "symmetry_max_iters",
    )
    @classmethod
    def validate_positive_int(cls, v: int) -> int:
        """Validate counts are at least one."""
        if v < 1:
            raise ValueError("must be a positive integer")
        return v

    @field_validator("escape_margin", "endpoint_tolerance", "render_width", "render_height")
    @classmethod
    def validate_positive_float(cls, v: float) -> float:
        """Validate lengths and tolerances are positive."""
        if not v > 0:
            raise ValueError("must be positive")
        return v

    @field_validator("mu_grid_points")
    @classmethod
    def validate_grid(cls, v: int) -> int:
        """The oracle needs both boundary cells plus an interior one."""
        if v < 2:
            raise ValueError("mu_grid_points must be at least 2")
        return v

    @classmethod
    def from_cli(cls, **overrides: Any) -> "Config":
        """Build a Config from parsed flags.

        Flags that were not given arrive as None and keep their default.

        Returns:
            Config instance with the overrides applied
        """
        given = {key: value for key, value in overrides.items() if value is not None}
        config = cls(**given)
        logger.debug(f"Config overrides: {given}")
        return config

    def budget(self) -> IterationBudget:
        return IterationBudget(max_iters=self.max_iters, escape_margin=self.escape_margin)

    def render_budget(self) -> IterationBudget:
        return IterationBudget(max_iters=self.render_max_iters, escape_margin=self.escape_margin)

    def symmetry_budget(self) -> IterationBudget:
        return IterationBudget(max_iters=self.symmetry_max_iters, escape_margin=self.escape_margin)

    def provenance(self) -> Dict[str, Any]:
        """Numeric settings recorded in every JSON report."""
        return self.model_dump(exclude={"log_level"})
