"""
Output formatters for CLI results.

JSON is written with sorted keys and a fixed indent, and no timestamps are
included, so identical flags give byte-identical output.
"""
import csv
import io
import json
import logging
from typing import Any, Dict, List

from .models import EndpointEstimate, SectionConstants, VerificationReport

logger = logging.getLogger(__name__)

TABLE_HEADER = ["d", "alpha", "beta", "gamma"]
TABLE_DECIMALS = 9


def to_json(payload: Dict[str, Any]) -> str:
    return json.dumps(payload, sort_keys=True, indent=2)


def _degree(d: float) -> Any:
    return int(d) if float(d).is_integer() else d


def constants_to_dict(constants: SectionConstants) -> Dict[str, Any]:
    """
    Full-precision view of one degree's constants.

    Args:
        constants: Constants computed by section_constants

    Returns:
        Dictionary with alpha, beta, gamma, xi and the root residuals
    """
    return {
        "d": _degree(constants.d),
        "alpha": constants.alpha,
        "beta": constants.beta,
        "xi": constants.xi,
        "gamma": constants.gamma,
        "xi_residual": constants.xi_residual,
        "relative_residual": constants.relative_residual,
    }


def format_constants_text(constants: SectionConstants) -> str:
    rows = constants_to_dict(constants)
    width = max(len(key) for key in rows)
    return "\n".join(f"{key.ljust(width)}  {value!r}" for key, value in rows.items()) + "\n"


def format_table_csv(rows: List[SectionConstants]) -> str:
    """CSV with header d,alpha,beta,gamma and values rounded to nine decimals."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(TABLE_HEADER)
    for row in rows:
        writer.writerow([
            _degree(row.d),
            f"{row.alpha:.{TABLE_DECIMALS}f}",
            f"{row.beta:.{TABLE_DECIMALS}f}",
            f"{row.gamma:.{TABLE_DECIMALS}f}",
        ])
    logger.debug(f"Formatted {len(rows)} table rows as CSV")
    return buffer.getvalue()


def format_table_json(rows: List[SectionConstants], full: bool = False) -> str:
    """
    JSON table of the constants.

    Args:
        rows: Constants per degree
        full: Keep binary64 values and the xi columns instead of nine-decimal rounding
    """
    if full:
        table = [constants_to_dict(row) for row in rows]
    else:
        table = [
            {
                "d": _degree(row.d),
                "alpha": round(row.alpha, TABLE_DECIMALS),
                "beta": round(row.beta, TABLE_DECIMALS),
                "gamma": round(row.gamma, TABLE_DECIMALS),
            }
            for row in rows
        ]
    return to_json({"rows": table})


def endpoint_to_dict(estimate: EndpointEstimate, tolerance: float, settings: Dict[str, Any]) -> Dict[str, Any]:
    """
    Report for one ray scan.

    Args:
        estimate: Result of scan_ray_endpoint
        tolerance: Allowed |midpoint - predicted|
        settings: Numeric defaults recorded for provenance

    Returns:
        Dictionary with the bracket, the prediction and the pass flag
    """
    undecided = sum(1 for p in estimate.probes if p.kind.value == "undetermined")
    return {
        "d": estimate.d,
        "ray": estimate.ray.kind.value,
        "omega": [estimate.ray.omega.re, estimate.ray.omega.im],
        "t_low": estimate.t_low,
        "t_high": estimate.t_high,
        "midpoint": estimate.midpoint,
        "predicted": estimate.predicted,
        "error": estimate.error,
        "tolerance": tolerance,
        "budget": estimate.budget_used.max_iters,
        "bisection_steps": estimate.bisection_steps,
        "via_conjugacy": estimate.via_conjugacy,
        "monotone": estimate.is_monotone(),
        "undetermined_probes": undecided,
        "pass": estimate.passes(tolerance),
        "settings": settings,
    }


def format_endpoint_report(estimate: EndpointEstimate, tolerance: float, settings: Dict[str, Any]) -> str:
    return to_json(endpoint_to_dict(estimate, tolerance, settings))


def verification_to_dict(report: VerificationReport) -> Dict[str, Any]:
    return {
        "d": report.d,
        "passed": report.passed,
        "failed_checks": report.failed_checks,
        "checks": [check.model_dump() for check in report.checks],
        "settings": report.settings,
    }


def format_verification_text(report: VerificationReport) -> str:
    """One PASS/FAIL line per check and a closing summary."""
    lines = [f"multibrot verify d={report.d}"]
    for check in report.checks:
        lines.append(f"  {'PASS' if check.passed else 'FAIL'}  {check.name}")
    if report.passed:
        lines.append("all checks passed")
    else:
        lines.append(f"failed: {', '.join(report.failed_checks)}")
    return "\n".join(lines) + "\n"
