"""
Command line interface

    mobgp gp <expr>
    mobgp gpo <expr>
    mobgp mob <expr> [--max-k K] [--min-k K] [--time-limit SECS] [--threads N] [--witness FILE] [--no-symmetry]
    mobgp verify <certificate>
    mobgp schedule <family> <params...> [-o FILE]
    mobgp table <name> [--stretch]

Every command accepts --format text|json|csv, --log-level and --logfile.
Exit codes: 0 success, 1 internal error or table mismatch, 2 incomplete
coverage, 3 illegal move, 4 malformed input.
"""
import argparse
import logging
import sys
from typing import List, Optional

from pydantic import ValidationError

from ..dsl.expr import build_graph_expr
from ..errors import (
    CertificateError,
    GraphError,
    GraphExprError,
    MobilityError,
    PositionError,
)
from ..mobility.configuration import Schedule, verify_schedule
from ..mobility.solver import MobOptions, mob_number
from ..position.solvers import gp_number, gpo_number
from ..schedules.algorithm import ScheduleInputCheckError
from ..schedules.families import SCHEDULE_FAMILIES, FamilySpec, generate_schedule
from ..settings import (
    EXIT_INTERNAL,
    EXIT_MALFORMED,
    EXIT_OK,
    LOG_DATEFMT,
    LOG_FORMAT,
    get_settings,
)
from .reports import OutputFormat, emit_report
from .tables import TABLE_NAMES, run_table

logger = logging.getLogger(__name__)


class UsageError(Exception):
    pass


MALFORMED_INPUT_ERRORS = (
    UsageError,
    GraphExprError,
    CertificateError,
    GraphError,
    MobilityError,
    PositionError,
    ValidationError,
    ScheduleInputCheckError,
)


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _write(text: str):
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _write_certificate(schedule: Schedule, filename: str):
    try:
        schedule.to_file(filename)
    except OSError as e:
        raise UsageError(f"Could not write '{filename}', got error '{e}'")


def cmd_gp(args: argparse.Namespace) -> int:
    g = build_graph_expr(args.expr)
    _write(emit_report(gp_number(g), args.format, g, quantity="gp"))
    return EXIT_OK


def cmd_gpo(args: argparse.Namespace) -> int:
    g = build_graph_expr(args.expr)
    _write(emit_report(gpo_number(g), args.format, g, quantity="gpo"))
    return EXIT_OK


def cmd_mob(args: argparse.Namespace) -> int:
    g = build_graph_expr(args.expr)
    options = MobOptions(
        max_k=args.max_k,
        min_k=args.min_k,
        time_limit=args.time_limit,
        use_symmetry=not args.no_symmetry,
        threads=args.threads,
    )
    report = mob_number(g, options)
    if args.witness is not None and report.witness is not None:
        _write_certificate(report.witness, args.witness)
        logger.info(f"Witness written to '{args.witness}'")
    _write(emit_report(report, args.format, g))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    schedule = Schedule.from_file(args.certificate)
    try:
        g = build_graph_expr(schedule.graph)
    except GraphExprError as e:
        raise CertificateError(f"Invalid graph expression in certificate, got error '{e}'")
    report = verify_schedule(g, schedule)
    _write(emit_report(report, args.format, g))
    if not report.valid:
        index = report.failure_index if report.failure_index is not None else "initial"
        sys.stderr.write(f"illegal move at index {index}: {report.failure_reason.value}\n")
    elif not report.complete:
        sys.stderr.write(f"incomplete coverage: {len(report.covered)} of {report.order} vertices\n")
    return report.exit_code


def cmd_schedule(args: argparse.Namespace) -> int:
    spec = FamilySpec(family=args.family, params=args.params)
    schedule = generate_schedule(spec)
    if args.output is None:
        # the certificate itself goes to stdout
        _write(schedule.to_json(indent=0))
        return EXIT_OK
    _write_certificate(schedule, args.output)
    _write(emit_report(schedule, args.format, build_graph_expr(schedule.graph)))
    return EXIT_OK


def cmd_table(args: argparse.Namespace) -> int:
    report = run_table(args.name, args.stretch, args.threads, args.time_limit)
    _write(emit_report(report, args.format))
    if not report.all_match:
        sys.stderr.write(f"table {args.name}: mismatch\n")
        return EXIT_INTERNAL
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    settings = get_settings()

    # shared options, accepted before and after the subcommand
    common = _ArgumentParser(add_help=False)
    common.add_argument("--format", choices=[f.value for f in OutputFormat], default=argparse.SUPPRESS)
    common.add_argument("--log-level", default=argparse.SUPPRESS)
    common.add_argument("--logfile", default=argparse.SUPPRESS)

    ap = _ArgumentParser(prog="mobgp", description="Mobile general position solver")
    ap.add_argument("--format", choices=[f.value for f in OutputFormat], default=OutputFormat.TEXT.value)
    ap.add_argument("--log-level", default=settings.log_level)
    ap.add_argument("--logfile", default=None)
    sub = ap.add_subparsers(dest="cmd", required=True, parser_class=_ArgumentParser)

    p = sub.add_parser("gp", parents=[common], help="General position number")
    p.add_argument("expr")
    p.set_defaults(func=cmd_gp)

    p = sub.add_parser("gpo", parents=[common], help="Outer general position number")
    p.add_argument("expr")
    p.set_defaults(func=cmd_gpo)

    p = sub.add_parser("mob", parents=[common], help="Mobile general position number")
    p.add_argument("expr")
    p.add_argument("--max-k", type=int, default=None)
    p.add_argument("--min-k", type=int, default=1)
    p.add_argument("--time-limit", type=float, default=settings.time_limit)
    p.add_argument("--threads", type=int, default=settings.threads)
    p.add_argument("--witness", default=None, help="Write the witness certificate to this file")
    p.add_argument("--no-symmetry", action="store_true")
    p.set_defaults(func=cmd_mob)

    p = sub.add_parser("verify", parents=[common], help="Replay a schedule certificate")
    p.add_argument("certificate")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("schedule", parents=[common], help="Generate a schedule certificate")
    p.add_argument("family", choices=list(SCHEDULE_FAMILIES))
    p.add_argument("params", nargs="*", type=int)
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_schedule)

    p = sub.add_parser("table", parents=[common], help="Compare computed values with known values")
    p.add_argument("name", choices=TABLE_NAMES)
    p.add_argument("--stretch", action="store_true", help="Include the long running rows")
    p.add_argument("--time-limit", type=float, default=settings.time_limit)
    p.add_argument("--threads", type=int, default=settings.threads)
    p.set_defaults(func=cmd_table)

    return ap


def _configure_logging(level: str, logfile: Optional[str]):
    kwargs = dict(format=LOG_FORMAT, datefmt=LOG_DATEFMT, level=level.upper(), force=True)
    if logfile is not None:
        logging.basicConfig(filename=logfile, filemode="w", **kwargs)
    else:
        logging.basicConfig(stream=sys.stderr, **kwargs)


def run_command(argv: Optional[List[str]] = None) -> int:
    """Run one command and return its exit code"""
    try:
        args = build_parser().parse_args(argv)
    except UsageError as e:
        sys.stderr.write(f"mobgp: error: {e}\n")
        return EXIT_MALFORMED
    except ValidationError as e:
        sys.stderr.write(f"mobgp: invalid settings: {e}\n")
        return EXIT_MALFORMED

    try:
        _configure_logging(args.log_level, args.logfile)
    except (ValueError, OSError) as e:
        sys.stderr.write(f"mobgp: error: {e}\n")
        return EXIT_MALFORMED

    try:
        return args.func(args)
    except MALFORMED_INPUT_ERRORS as e:
        sys.stderr.write(f"mobgp: error: {e}\n")
        return EXIT_MALFORMED
    except Exception as e:
        logger.exception(e)
        sys.stderr.write(f"mobgp: internal error: {e}\n")
        return EXIT_INTERNAL


def main():
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
