"""Custom exception classes for multibrot error handling."""

from typing import Any, Dict, Optional


class MultibrotError(Exception):
    """Base exception class for multibrot errors."""

    def __init__(self, code: str, message: str):
        """
        Initialize multibrot error.

        Args:
            code: Error code identifier
            message: Human-readable error message
        """
        self.code = code
        self.message = message
        super().__init__(message)

    def to_dict(self) -> Dict[str, Any]:
        """
        Convert error to the JSON error envelope printed by the CLI.

        Returns:
            Dictionary with an "error" object holding code and message
        """
        return {
            "error": {
                "code": self.code,
                "message": self.message,
            }
        }


class InvalidDegreeError(MultibrotError):
    """Exception raised when a degree violates an operation's precondition."""

    def __init__(self, d: Any, reason: str):
        """
        Initialize invalid degree error.

        Args:
            d: The rejected degree
            reason: Which precondition failed (e.g. "must be an integer >= 2")
        """
        super().__init__(
            code="INVALID_DEGREE",
            message=f"Invalid degree d={d!r}: {reason}"
        )
        self.d = d
        self.reason = reason


class InvalidParameterError(MultibrotError):
    """Exception raised when a numeric parameter is out of range."""

    def __init__(self, name: str, value: Any, reason: str):
        """
        Initialize invalid parameter error.

        Args:
            name: Parameter name
            value: The rejected value
            reason: Why the value was rejected
        """
        super().__init__(
            code="INVALID_PARAMETER",
            message=f"Invalid {name}={value!r}: {reason}"
        )
        self.name = name
        self.value = value
        self.reason = reason


class BracketError(MultibrotError):
    """Exception raised when a root-finding bracket has no sign change."""

    def __init__(self, d: float, lower: float, upper: float):
        super().__init__(
            code="ROOT_NOT_BRACKETED",
            message=(
                f"cosh(d*x) - d*cosh(x) has no sign change on [{lower!r}, {upper!r}] for d={d!r}"
            )
        )
        self.d = d
        self.lower = lower
        self.upper = upper


class ScanError(MultibrotError):
    """Exception raised when a ray scan's upper bound fails to escape."""

    def __init__(self, d: int, ray: str, t: float):
        """
        Initialize scan error.

        Args:
            d: Degree being scanned
            ray: Ray class label
            t: The upper bound that did not escape within budget
        """
        super().__init__(
            code="SCAN_UPPER_BOUND_BOUNDED",
            message=(
                f"Ray scan for d={d} ({ray}) expected t={t!r} to escape, "
                f"but the orbit stayed within the escape radius for the whole budget"
            )
        )
        self.d = d
        self.ray = ray
        self.t = t


class RenderOutputError(MultibrotError):
    """Exception raised when an image cannot be written."""

    def __init__(self, path: str, details: Optional[str] = None):
        """
        Initialize render output error.

        Args:
            path: Output file path
            details: Optional underlying error text
        """
        message = f"Cannot write image to '{path}'"
        if details:
            message += f": {details}"

        super().__init__(
            code="RENDER_OUTPUT_FAILED",
            message=message
        )
        self.path = path
        self.details = details
