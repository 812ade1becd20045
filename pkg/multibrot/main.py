"""Command-line entry point for multibrot.

Usage:
    multibrot constants --d 3                      alpha, beta, xi, gamma for one degree
    multibrot table --dmin 2 --dmax 12             CSV table of the constants
    multibrot endpoint --d 3 --ray minus           bracket the end of a ray section
    multibrot render --d 3 --out m3.pgm            escape-time image as binary PGM
    multibrot verify --d 3                         run the full check suite

Exit codes: 0 success, 1 failed check or runtime failure, 2 usage error.
Logs go to stderr; stdout carries only the command output.
"""

import argparse
import logging
import sys
from typing import List, Optional

from pydantic import ValidationError

from . import __version__
from .config import Config
from .constants import section_constants, table_rows
from .errors import InvalidDegreeError, InvalidParameterError, MultibrotError, RenderOutputError, ScanError
from .formatters import (
    constants_to_dict,
    format_constants_text,
    format_endpoint_report,
    format_table_csv,
    format_table_json,
    format_verification_text,
    to_json,
    verification_to_dict,
)
from .models import ComplexPoint, Window
from .render import compute_grid, default_window, write_pgm
from .sections import ray_class, scan_ray_endpoint
from .verification import run_verification

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

LOG_LEVELS = ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]


def setup_logging(log_level: str = "WARNING") -> None:
    """Configure logging for the CLI.

    Logs are written to stderr so that stdout stays byte-deterministic.

    Args:
        log_level: Logging level (DEBUG, INFO, WARNING, ERROR, CRITICAL)
    """
    logging.basicConfig(
        level=getattr(logging, log_level.upper()),
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        datefmt="%Y-%m-%d %H:%M:%S",
        stream=sys.stderr,
        force=True,
    )


def cmd_constants(args: argparse.Namespace) -> int:
    """Print alpha, beta, xi and gamma for one (possibly real) degree."""
    constants = section_constants(args.d)
    if args.format == "json":
        print(to_json(constants_to_dict(constants)))
    else:
        sys.stdout.write(format_constants_text(constants))
    return EXIT_OK


def cmd_table(args: argparse.Namespace) -> int:
    """Print the constants for every integer degree in [dmin, dmax]."""
    rows = table_rows(args.dmin, args.dmax)
    if args.format == "json":
        print(format_table_json(rows, full=args.full))
    else:
        sys.stdout.write(format_table_csv(rows))
    return EXIT_OK


def cmd_endpoint(args: argparse.Namespace) -> int:
    """Scan a ray and compare the bracketed endpoint with the predicted constant."""
    config = Config.from_cli(
        max_iters=args.budget,
        bisection_steps=args.steps,
        endpoint_tolerance=args.tolerance,
    )
    ray = ray_class(args.d, args.ray, args.omega)
    estimate = scan_ray_endpoint(
        args.d,
        ray,
        config.budget(),
        config.bisection_steps,
        via_conjugacy=not args.direct,
    )
    print(format_endpoint_report(estimate, config.endpoint_tolerance, config.provenance()))

    if not estimate.passes(config.endpoint_tolerance):
        logger.warning(
            f"Endpoint midpoint {estimate.midpoint!r} is {estimate.error!r} away from "
            f"{estimate.predicted!r} (tolerance {config.endpoint_tolerance})"
        )
        return EXIT_FAILURE
    return EXIT_OK


def cmd_render(args: argparse.Namespace) -> int:
    """Render M_d into a binary PGM file."""
    config = Config.from_cli(
        render_max_iters=args.budget,
        render_px=args.px,
        render_width=args.width,
        render_height=args.height,
    )
    base = default_window(args.d, config.render_px, config.render_width, config.render_height)
    window = Window(
        center=ComplexPoint(
            re=base.center.re if args.center_re is None else args.center_re,
            im=base.center.im if args.center_im is None else args.center_im,
        ),
        width=base.width,
        height=base.height,
        px_w=base.px_w if args.px_w is None else args.px_w,
        px_h=base.px_h if args.px_h is None else args.px_h,
    )
    out = args.out or f"m{args.d}.pgm"

    grid = compute_grid(args.d, window, config.render_budget())
    path = write_pgm(grid, out)
    print(str(path))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    """Run the check suite for one degree."""
    config = Config.from_cli(max_iters=args.budget)
    report = run_verification(args.d, config)
    if args.format == "json":
        print(to_json(verification_to_dict(report)))
    else:
        sys.stdout.write(format_verification_text(report))
    return EXIT_OK if report.passed else EXIT_FAILURE


def build_parser() -> argparse.ArgumentParser:
    """Argument parser with one subcommand per operation."""
    parser = argparse.ArgumentParser(
        prog="multibrot",
        description="Cross-section constants of multibrot sets, boundary scans and renders",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument(
        "--log-level",
        type=str.upper,
        choices=LOG_LEVELS,
        default="WARNING",
        help="Logging level for stderr (default: WARNING)",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    constants_parser = subparsers.add_parser("constants", help="alpha, beta, xi, gamma for one degree")
    constants_parser.add_argument("--d", type=float, required=True, help="Degree (real, >= 2)")
    constants_parser.add_argument("--format", choices=["text", "json"], default="text")
    constants_parser.set_defaults(func=cmd_constants)

    table_parser = subparsers.add_parser("table", help="Constants for a range of integer degrees")
    table_parser.add_argument("--dmin", type=int, required=True)
    table_parser.add_argument("--dmax", type=int, required=True)
    table_parser.add_argument("--format", choices=["csv", "json"], default="csv")
    table_parser.add_argument("--full", action="store_true", help="Full binary64 values (json only)")
    table_parser.set_defaults(func=cmd_table)

    endpoint_parser = subparsers.add_parser("endpoint", help="Bracket the end of M_d along a ray")
    endpoint_parser.add_argument("--d", type=int, required=True)
    endpoint_parser.add_argument("--ray", choices=["plus", "minus"], required=True,
                                 help="omega**(d-1) = +1 (plus) or -1 (minus)")
    endpoint_parser.add_argument("--omega", choices=["principal", "i"], default="principal")
    endpoint_parser.add_argument("--budget", type=int, help="Iterations per probe (default: 100000)")
    endpoint_parser.add_argument("--steps", type=int, help="Bisection steps (default: 40)")
    endpoint_parser.add_argument("--tolerance", type=float, help="Pass tolerance (default: 0.002)")
    endpoint_parser.add_argument("--direct", action="store_true",
                                 help="Iterate p at t*omega even where q at t is equivalent")
    endpoint_parser.set_defaults(func=cmd_endpoint)

    render_parser = subparsers.add_parser("render", help="Render M_d as a binary PGM")
    render_parser.add_argument("--d", type=int, required=True)
    render_parser.add_argument("--out", help="Output path (default: m<d>.pgm)")
    render_parser.add_argument("--px", type=int, help="Square image side (default: 600)")
    render_parser.add_argument("--px-w", type=int, help="Image width, overrides --px")
    render_parser.add_argument("--px-h", type=int, help="Image height, overrides --px")
    render_parser.add_argument("--center-re", type=float)
    render_parser.add_argument("--center-im", type=float)
    render_parser.add_argument("--width", type=float, help="Window width (default: 3)")
    render_parser.add_argument("--height", type=float, help="Window height (default: 3)")
    render_parser.add_argument("--budget", type=int, help="Iterations per pixel (default: 500)")
    render_parser.set_defaults(func=cmd_render)

    verify_parser = subparsers.add_parser("verify", help="Run the check suite for one degree")
    verify_parser.add_argument("--d", type=int, required=True)
    verify_parser.add_argument("--budget", type=int, help="Iterations for sentinels (default: 100000)")
    verify_parser.add_argument("--format", choices=["text", "json"], default="text")
    verify_parser.set_defaults(func=cmd_verify)

    return parser


def _report_error(args: argparse.Namespace, error: MultibrotError) -> None:
    if getattr(args, "format", None) == "json":
        print(to_json(error.to_dict()), file=sys.stderr)
    else:
        print(f"error: {error.message}", file=sys.stderr)


def main(argv: Optional[List[str]] = None) -> int:
    """Parse arguments, dispatch the subcommand and map failures to exit codes.

    Args:
        argv: Arguments without the program name (default: sys.argv[1:])

    Returns:
        Process exit code
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    setup_logging(args.log_level)

    try:
        return args.func(args)
    except (InvalidDegreeError, InvalidParameterError) as e:
        _report_error(args, e)
        return EXIT_USAGE
    except ValidationError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (ScanError, RenderOutputError) as e:
        logger.error(f"{e.code}: {e.message}")
        _report_error(args, e)
        return EXIT_FAILURE


def run() -> None:
    """Entry point for the console script defined in pyproject.toml."""
    try:
        sys.exit(main())
    except KeyboardInterrupt:
        logger.info("Interrupted")
        sys.exit(130)


if __name__ == "__main__":
    run()
