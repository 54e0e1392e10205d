"""Command-line entry point.

    python src/cli/main.py tutte spec.json [--engine definition|convolution|delcon|activity] [--order 2,0,1] [--json]
    python src/cli/main.py coeffs spec.json [--family top|dual|both] [--json]
    python src/cli/main.py verify spec.json [--json]

Exit codes: 0 pass, 1 verification failure, 2 input error, 3 size guard.
Rank and multiplicity tables in spec files are indexed by bitmask: element e
contributes bit 2**e.
"""

import argparse
import logging
import os
import sys

# --- Adjust path to import from root ---
PROJECT_ROOT = os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
sys.path.append(PROJECT_ROOT)
# --- End Path Adjust ---

from src.cli.rendering import render_coefficient_reports, render_polynomial, render_verification
from src.cli.spec_file import load_spec
from src.coefficients.multiplicity_extremes import extreme_b_dual, extreme_b_top
from src.coefficients.report import ExtremeCoefficientReport
from src.coefficients.tutte_extremes import t_extreme, t_extreme_dual
from src.engines.activities import tutte_by_activities
from src.engines.convolution import convolution_tutte
from src.engines.deletion_contraction import tutte_deletion_contraction
from src.engines.subset_sum import multiplicity_tutte_definition
from src.utils.config_loader import get_settings
from src.utils.errors import (
    InputError, InvalidOrderError, PreconditionError, SizeGuardError, UnsupportedMultiplicityError,
)
from src.utils.guards import set_max_n_override
from src.utils.log_setup import configure_logging
from src.verification.verifier import IdentityVerifier

logger = logging.getLogger("src.cli")

EXIT_PASS, EXIT_VERIFY_FAILED, EXIT_INPUT, EXIT_SIZE_GUARD = 0, 1, 2, 3

ENGINES = ("definition", "convolution", "delcon", "activity")


def parse_order(text):
    try:
        return [int(part) for part in text.split(",")] if text.strip() else []
    except ValueError as exc:
        raise InvalidOrderError(f"--order must be comma-separated integers, got {text!r}") from exc


def cmd_tutte(args):
    mm = load_spec(args.file)
    logger.info("tutte: engine %s on n=%d", args.engine, mm.n)
    if args.engine in ("delcon", "activity") and not mm.is_trivial:
        raise UnsupportedMultiplicityError(f"engine {args.engine} only handles the trivial multiplicity")
    if args.order is not None and args.engine != "activity":
        raise InvalidOrderError("--order only applies to the activity engine")
    if args.engine == "definition":
        polynomial = multiplicity_tutte_definition(mm)
    elif args.engine == "convolution":
        polynomial = convolution_tutte(mm)
    elif args.engine == "delcon":
        polynomial = tutte_deletion_contraction(mm.matroid)
    else:
        order = parse_order(args.order) if args.order is not None else None
        polynomial, _ = tutte_by_activities(mm.matroid, order)
    print(render_polynomial(polynomial, args.json))
    return EXIT_PASS


def _family_reports(mm, family, polynomial):
    matroid = mm.matroid
    reports = []
    if family in ("top", "both"):
        if matroid.loops:
            reports.append(ExtremeCoefficientReport("top", [], "matroid has loops"))
        else:
            reports.append(extreme_b_top(mm, polynomial))
            if mm.is_trivial:
                reports.append(t_extreme(matroid, polynomial))
    if family in ("dual", "both"):
        if matroid.coloops:
            reports.append(ExtremeCoefficientReport("dual", [], "matroid has coloops"))
        else:
            reports.append(extreme_b_dual(mm, polynomial))
            if mm.is_trivial:
                reports.append(t_extreme_dual(matroid, polynomial))
    return reports


def cmd_coeffs(args):
    mm = load_spec(args.file)
    polynomial = multiplicity_tutte_definition(mm)
    reports = _family_reports(mm, args.family, polynomial)
    print(render_coefficient_reports(reports, args.json))
    ok = all(r.all_match and r.as_stated_consistent for r in reports)
    if not ok:
        logger.error("❌ coefficient formula disagrees with the brute-force value")
    return EXIT_PASS if ok else EXIT_VERIFY_FAILED


def cmd_verify(args):
    mm = load_spec(args.file)
    report = IdentityVerifier(mm).run()
    print(render_verification(report, args.json))
    if not report.passed:
        logger.error("❌ %d identities failed", len(report.failures()))
    return EXIT_PASS if report.passed else EXIT_VERIFY_FAILED


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("file", help="JSON matroid spec (tables indexed by bitmask, element e is bit 2**e)")
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--max-n", type=int, default=None, help="override every size guard (never above 24)")

    parser = argparse.ArgumentParser(prog="tutte", description="Exact Tutte and multiplicity Tutte polynomials.")
    commands = parser.add_subparsers(dest="command", required=True)

    tutte = commands.add_parser("tutte", parents=[common], help="compute the polynomial")
    tutte.add_argument("--engine", choices=ENGINES, default="definition")
    tutte.add_argument("--order", default=None, help="comma-separated permutation for the activity engine")
    tutte.set_defaults(handler=cmd_tutte)

    coeffs = commands.add_parser("coeffs", parents=[common], help="closed-form extreme coefficients")
    coeffs.add_argument("--family", choices=("top", "dual", "both"), default="both")
    coeffs.set_defaults(handler=cmd_coeffs)

    verify = commands.add_parser("verify", parents=[common], help="run every applicable identity")
    verify.set_defaults(handler=cmd_verify)
    return parser


def main(argv=None):
    settings = get_settings()
    configure_logging(settings.log_level)
    args = build_parser().parse_args(argv)
    try:
        set_max_n_override(args.max_n)
        return args.handler(args)
    except SizeGuardError as exc:
        logger.error("❌ size guard %s: %s", exc.guard, exc)
        return EXIT_SIZE_GUARD
    except (InputError, PreconditionError, ValueError) as exc:
        logger.error("❌ %s", exc)
        return EXIT_INPUT
    finally:
        set_max_n_override(None)


if __name__ == "__main__":
    sys.exit(main())
