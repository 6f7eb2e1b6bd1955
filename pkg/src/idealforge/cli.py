"""Command-line interface for idealforge

Exit codes: 0 success, 1 input error, 2 a predicted identity failed,
3 span deficit. With ``--output json`` stdout carries exactly one JSON
document; logs and diagnostics go to stderr.
"""

import argparse
import sys
from collections.abc import Callable, Sequence
from pathlib import Path
from typing import Any, NoReturn

import yaml

from . import __version__
from .algebra import find_roots
from .codes import (
    build_code,
    generator_matrix_full,
    generator_matrix_minimal,
    isomorphism_check,
    minimum_distance,
    shift_closure_check,
)
from .config import find_config_file, load_config
from .context import ForgeContext
from .exceptions import IdealForgeError, SpanDeficit, UsageError
from .formats import (
    descriptor_from_text,
    descriptor_polynomials,
    dump_json,
    load_code_descriptor,
    parse_field,
    parse_polynomial,
    parse_vector,
    render_mapping,
    render_matrix,
    render_roots,
    render_summary,
)
from .ideal import build_rotation, rank_report_double, rank_report_single
from .log_handler import get_structured_logger, setup_logging
from .oracle import brute_code_dimension

logger = get_structured_logger(__name__, component="cli")

Handler = Callable[[ForgeContext, argparse.Namespace, str], int]


class ForgeArgumentParser(argparse.ArgumentParser):
    """ArgumentParser that raises UsageError instead of exiting with status 2."""

    def error(self, message: str) -> NoReturn:
        raise UsageError(f"{self.prog}: {message}")


def _emit(output: str, document: dict[str, Any], pretty: str) -> None:
    print(dump_json(document) if output == "json" else pretty)


# =============================================================================
# Subcommands
# =============================================================================


def cmd_rank(context: ForgeContext, args: argparse.Namespace, output: str) -> int:
    """Rank report of the generalized ideal matrix H*(f)_{n x m}."""
    field = parse_field(args.field)
    H = build_rotation(parse_polynomial(field, args.phi, "--phi"))
    f = parse_vector(field, args.f, H.n, "--f")
    report = rank_report_single(H, f, args.m)

    document: dict[str, Any] = {"field": field.tag, "report": report.to_dict()}
    if output == "json":
        document["matrix"] = report.matrix.to_strings()
    pretty = render_matrix(report.matrix) + "\n" + render_mapping(report.to_dict())
    _emit(output, document, pretty)
    return 0 if report.consistent else 2


def cmd_double_rank(context: ForgeContext, args: argparse.Namespace, output: str) -> int:
    """Rank report of the double ideal matrix."""
    field = parse_field(args.field)
    H1 = build_rotation(parse_polynomial(field, args.phi1, "--phi1"))
    H2 = build_rotation(parse_polynomial(field, args.phi2, "--phi2"))
    f1 = parse_vector(field, args.f1, H1.n, "--f1")
    f2 = parse_vector(field, args.f2, H2.n, "--f2")
    report = rank_report_double(H1, H2, f1, f2, args.m)

    document: dict[str, Any] = {"field": field.tag, "report": report.to_dict()}
    if output == "json":
        document["matrix"] = report.matrix.to_strings()
    pretty = render_matrix(report.matrix) + "\n" + render_mapping(report.to_dict())
    _emit(output, document, pretty)
    return 0 if report.consistent else 2


def _code_descriptor(args: argparse.Namespace) -> dict[str, Any]:
    if args.input:
        return load_code_descriptor(args.input)
    missing = [
        flag
        for flag, value in (
            ("--field", args.field),
            ("--phi1", args.phi1),
            ("--phi2", args.phi2),
            ("--a", args.a),
            ("--b", args.b),
        )
        if value is None
    ]
    if missing:
        raise UsageError(f"code: {', '.join(missing)} required unless --input is given")
    return descriptor_from_text(args.field, args.phi1, args.phi2, args.a, args.b)


def cmd_code(context: ForgeContext, args: argparse.Namespace, output: str) -> int:
    """Code report: g, h, dimension, and optionally generator matrix, distance, verification."""
    field, (phi1, phi2, a, b) = descriptor_polynomials(_code_descriptor(args))
    code = build_code(field, phi1, phi2, a, b)
    bound = context.enumeration_bound

    document: dict[str, Any] = {
        "code": code.to_dict(),
        "r": code.r,
        "rows_available": code.rows_available,
        "span_deficit": code.span_deficit,
    }
    sections = [render_mapping(document["code"] | {"r": code.r})]

    if args.genmat is not None:
        if args.genmat == "full":
            matrix = generator_matrix_full(code)
        else:
            matrix = generator_matrix_minimal(code, args.start, bound=bound)
        document["generator"] = {
            "layout": args.genmat,
            "start": args.start if args.genmat == "minimal" else 0,
            "rows": matrix.to_strings(),
        }
        sections.append(render_matrix(matrix))

    if args.min_distance:
        document["min_distance"] = minimum_distance(code, bound)
        sections.append(f"minimum distance = {document['min_distance']}")

    verified = True
    if args.verify:
        checks = {
            "brute_dimension": brute_code_dimension(code, bound),
            "degree_identity": code.degree_identity_holds,
            "shift_closed": shift_closure_check(code, bound),
            "isomorphism": isomorphism_check(code, bound),
        }
        verified = (
            checks["brute_dimension"] == code.dim
            and checks["degree_identity"] is True
            and checks["shift_closed"] is True
            and checks["isomorphism"] is True
        )
        document["verification"] = checks | {"verified": verified}
        sections.append(render_mapping(document["verification"]))
        if not verified:
            logger.warning("Code verification failed", **checks)

    _emit(output, document, "\n".join(sections))
    return 0 if verified else 2


def cmd_verify(context: ForgeContext, args: argparse.Namespace, output: str) -> int:
    """Run a randomized verification campaign."""
    context.registry.require(args.target)
    field = parse_field(args.field)
    spec = context.instance_spec(
        field,
        seed=args.seed,
        n1_max=args.n1_max,
        n2_max=args.n2_max,
        m_max=args.m_max,
        message_dim_max=args.message_dim_max,
        squarefree_only=not args.allow_inseparable,
    )
    summary = context.run_campaign(args.target, spec, args.trials, args.workers)

    document = summary.to_dict()
    if args.summary:
        Path(args.summary).write_text(dump_json(document) + "\n", encoding="utf-8")
        logger.info("Wrote campaign summary", path=args.summary)
    _emit(output, document, render_summary(document))
    return 0 if summary.ok else 2


def cmd_roots(context: ForgeContext, args: argparse.Namespace, output: str) -> int:
    """Distinct roots of a polynomial over its field."""
    field = parse_field(args.field)
    poly = parse_polynomial(field, args.poly, "--poly")
    roots = find_roots(poly, scan_bound=context.scan_bound)
    _emit(output, roots.to_dict(), render_roots(roots))
    return 0


# =============================================================================
# Parser
# =============================================================================


def _common_options() -> argparse.ArgumentParser:
    # Accepted before and after the subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "-v",
        "--verbose",
        action="store_true",
        default=argparse.SUPPRESS,
        help="Enable debug logging",
    )
    common.add_argument(
        "--output",
        choices=("pretty", "json"),
        default=argparse.SUPPRESS,
        help="Output format (default: from config, else pretty)",
    )
    return common


def build_parser() -> ForgeArgumentParser:
    common = _common_options()
    parser = ForgeArgumentParser(
        prog="idealforge",
        description="Rank, kernel and code computations for generalized ideal matrices",
        parents=[common],
    )
    parser.add_argument(
        "-V",
        "--version",
        action="version",
        version=f"%(prog)s {__version__}",
    )
    parser.add_argument(
        "-c",
        "--config",
        type=str,
        help="Path to config file (default: auto-detect)",
    )
    subparsers = parser.add_subparsers(
        dest="command", metavar="COMMAND", parser_class=ForgeArgumentParser
    )
    coefficients = "ascending coefficients, comma-separated (e.g. 1,0,-1/2)"

    rank = subparsers.add_parser("rank", parents=[common], help="Rank of H*(f)_{n x m}")
    rank.add_argument("--field", required=True, help="Q or Fp (e.g. F7)")
    rank.add_argument("--phi", required=True, help=f"Monic modulus, {coefficients}")
    rank.add_argument("--f", required=True, help=f"Generator vector, {coefficients}")
    rank.add_argument("--m", type=int, required=True, help="Number of columns")
    rank.set_defaults(handler=cmd_rank)

    double = subparsers.add_parser(
        "double-rank", parents=[common], help="Rank of the double ideal matrix"
    )
    double.add_argument("--field", required=True, help="Q or Fp (e.g. F7)")
    double.add_argument("--phi1", required=True, help=f"First modulus, {coefficients}")
    double.add_argument("--phi2", required=True, help=f"Second modulus, {coefficients}")
    double.add_argument("--f1", required=True, help=f"First generator, {coefficients}")
    double.add_argument("--f2", required=True, help=f"Second generator, {coefficients}")
    double.add_argument("--m", type=int, required=True, help="Number of columns")
    double.set_defaults(handler=cmd_double_rank)

    code = subparsers.add_parser("code", parents=[common], help="phi-quasi-cyclic code report")
    code.add_argument("--field", help="Fp (e.g. F2)")
    code.add_argument("--phi1", help=f"First modulus, {coefficients}")
    code.add_argument("--phi2", help=f"Second modulus, {coefficients}")
    code.add_argument("--a", help=f"First generator a(x), {coefficients}")
    code.add_argument("--b", help=f"Second generator b(x), {coefficients}")
    code.add_argument("--input", help="JSON code descriptor (or a previous JSON code report)")
    code.add_argument(
        "--genmat", choices=("full", "minimal"), help="Also print a generator matrix"
    )
    code.add_argument("--start", type=int, default=0, help="First row of the minimal window")
    code.add_argument("--min-distance", action="store_true", help="Exhaustive minimum distance")
    code.add_argument(
        "--verify", action="store_true", help="Cross-check the dimension by brute force"
    )
    code.set_defaults(handler=cmd_code)

    verify = subparsers.add_parser(
        "verify", parents=[common], help="Run a randomized verification campaign"
    )
    verify.add_argument(
        "--target", required=True, help="Campaign target id or alias (e.g. rank, thm2.5)"
    )
    verify.add_argument("--field", default="F5", help="Q or Fp (default: F5)")
    verify.add_argument("--trials", type=int, help="Number of trials (default: from config)")
    verify.add_argument("--seed", type=int, help="Campaign seed (default: from config)")
    verify.add_argument("--n1-max", type=int, help="Max degree of phi / phi1 / k")
    verify.add_argument("--n2-max", type=int, help="Max degree of phi2 / l")
    verify.add_argument("--m-max", type=int, help="Max number of columns")
    verify.add_argument("--message-dim-max", type=int, help="Cap on k + l - m")
    verify.add_argument("--workers", type=int, help="Worker threads, 0 = physical cores")
    verify.add_argument(
        "--allow-inseparable",
        action="store_true",
        help="Also draw moduli with repeated roots and check they are refused",
    )
    verify.add_argument("--summary", help="Also write the JSON summary to this file")
    verify.set_defaults(handler=cmd_verify)

    roots = subparsers.add_parser("roots", parents=[common], help="Roots of a polynomial")
    roots.add_argument("--field", required=True, help="Q or Fp (e.g. F7)")
    roots.add_argument("--poly", required=True, help=f"Polynomial, {coefficients}")
    roots.set_defaults(handler=cmd_roots)

    return parser


def _report_error(error: IdealForgeError, output: str) -> int:
    if isinstance(error, SpanDeficit) and output == "json":
        print(dump_json(error.to_dict()))
    print(f"idealforge: {type(error).__name__}: {error}", file=sys.stderr)
    return error.exit_code


def main(argv: Sequence[str] | None = None) -> int:
    """Main entry point"""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as e:
        print(f"idealforge: error: {e}", file=sys.stderr)
        return e.exit_code
    if args.command is None:
        parser.print_usage(sys.stderr)
        return 1

    config_path = Path(args.config) if args.config else find_config_file()
    try:
        config = load_config(str(config_path) if config_path else None)
    except (IdealForgeError, OSError, TypeError, yaml.YAMLError) as e:
        print(f"idealforge: cannot load config {config_path}: {e}", file=sys.stderr)
        return 1

    verbose = getattr(args, "verbose", False)
    level = "DEBUG" if verbose else config.logging.level
    setup_logging(level, config.logging.file, config.logging.format)
    output = getattr(args, "output", None) or config.output.format

    context = ForgeContext.create(config, config_path)
    handler: Handler = args.handler
    logger.debug("Running command", command=args.command, output=output)
    try:
        return handler(context, args, output)
    except IdealForgeError as e:
        return _report_error(e, output)


if __name__ == "__main__":
    sys.exit(main())
