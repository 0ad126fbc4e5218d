"""Command-line front end of the toolkit."""

from __future__ import annotations

import argparse
import json
import logging
import re
import sys
from typing import Any, Callable, Sequence

from jsonpath_ng import parse as jsonpath_parse  # type: ignore[import-untyped]

from . import __version__
from .config import DEFAULT_PROFILE, RunConfig
from .exceptions import ParseError, PreconditionError, QReflectError
from .reports import ReportModel
from .toolkit import Toolkit

log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED_CHECK = 1
EXIT_ERROR = 2

_LOG_LEVELS = [logging.WARNING, logging.INFO, logging.DEBUG]


def _add_run_options(parser: argparse.ArgumentParser):
    parser.add_argument("--degree-cutoff", type=int, help="largest degree computed")
    parser.add_argument("--order-cap", type=int, help="largest group order explored")
    parser.add_argument(
        "--normality-cutoff", type=int, help="largest degree of normality checks"
    )
    parser.add_argument(
        "--output", choices=["text", "json"], help="report format (default: text)"
    )
    parser.add_argument("--profile", help="stored configuration profile")
    parser.add_argument("--select", help="JSONPath applied to the json report")
    parser.add_argument(
        "-v",
        "--verbose",
        action="count",
        default=0,
        help="log progress (-v) or details (-vv)",
    )


def _add_algebra(parser: argparse.ArgumentParser):
    parser.add_argument("--algebra", required=True, help="presentation file")


def build_parser() -> argparse.ArgumentParser:
    """Create the argument parser for every command."""
    parser = argparse.ArgumentParser(
        prog="qreflect",
        description="Quasi-reflections, traces and Molien series of graded algebras.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    commands = parser.add_subparsers(dest="command", required=True)

    hilbert = commands.add_parser("hilbert", help="check graded dimensions")
    _add_algebra(hilbert)

    trace = commands.add_parser("trace", help="trace series and Euler polynomial")
    _add_algebra(trace)
    trace.add_argument("--auto", required=True, help="automorphism file")

    classify = commands.add_parser("classify", help="classify an automorphism")
    _add_algebra(classify)
    classify.add_argument("--auto", required=True, help="automorphism file")

    for name, text in [
        ("molien", "Molien series of a group"),
        ("gate", "regularity verdict on a fixed ring"),
    ]:
        command = commands.add_parser(name, help=text)
        _add_algebra(command)
        command.add_argument(
            "--group",
            action="append",
            required=True,
            help="automorphism file of group generators (repeatable)",
        )

    rootsum = commands.add_parser("rootsum", help="solve n = x_1 + ... + x_k")
    rootsum.add_argument("--target", type=int, required=True)
    rootsum.add_argument("--count", type=int, required=True)
    rootsum.add_argument("--no-minus-one", action="store_true")
    rootsum.add_argument("--no-cancelling-pair", action="store_true")
    rootsum.add_argument(
        "--candidate",
        action="append",
        help="root of unity of a candidate solution (repeatable)",
    )

    examples = commands.add_parser("examples", help="run the fixture suites")
    examples.add_argument("--suite", action="append", help="suite name (repeatable)")

    normal = commands.add_parser("normal", help="normality of degree-1 elements")
    _add_algebra(normal)
    normal.add_argument("--element", action="append", default=[])
    normal.add_argument(
        "--candidate", action="append", default=[], help="rigidity candidate"
    )
    normal.add_argument(
        "--auto", help="automorphisms whose eigenvectors join the candidates"
    )

    profile = commands.add_parser("profile", help="manage configuration profiles")
    profile.add_argument("action", choices=["list", "show", "save", "delete"])
    profile.add_argument("name", nargs="?", help="profile name")

    for command in commands.choices.values():
        _add_run_options(command)
    return parser


def _config(args: argparse.Namespace) -> RunConfig:
    overrides = dict(
        degree_cutoff=args.degree_cutoff,
        order_cap=args.order_cap,
        normality_cutoff=args.normality_cutoff,
        output_format=args.output,
    )
    if args.profile is None:
        base = RunConfig.load(DEFAULT_PROFILE, skip_error=True)
    else:
        base = RunConfig.load(args.profile)
    return base.with_overrides(**overrides)


def _extract_selected(data: Any, select_path: str | None) -> Any:
    if not select_path:
        return data
    try:
        jsonpath_expr = jsonpath_parse(select_path)
    except Exception as exc:
        raise ParseError(f"invalid JSONPath '{select_path}': {exc}") from exc
    match_values = [match.value for match in jsonpath_expr.find(data)]
    if re.search(r"\[(\*|.*:.*|.*,.*)\]", select_path):
        return match_values
    return match_values[0] if match_values else None


def _run(toolkit: Toolkit, args: argparse.Namespace) -> ReportModel:
    command = args.command
    if command == "rootsum":
        return toolkit.rootsum(
            args.target,
            args.count,
            no_minus_one=args.no_minus_one,
            no_cancelling_pair=args.no_cancelling_pair,
            candidate=args.candidate,
        )
    if command == "examples":
        return toolkit.examples(args.suite or ())
    if command == "profile":
        return toolkit.profile(args.action, args.name)

    presentation = toolkit.load_algebra(args.algebra)
    if command == "hilbert":
        return toolkit.hilbert(presentation)
    if command in ("trace", "classify"):
        automorphisms = toolkit.load_automorphisms(presentation, [args.auto])
        if len(automorphisms) > 1:
            log.warning("%s holds several automorphisms, using the first", args.auto)
        pipeline: Callable = getattr(toolkit, command)
        return pipeline(presentation, automorphisms[0])
    if command in ("molien", "gate"):
        generators = toolkit.load_automorphisms(presentation, args.group)
        return getattr(toolkit, command)(presentation, generators)
    if command == "normal":
        automorphisms = (
            toolkit.load_automorphisms(presentation, [args.auto]) if args.auto else []
        )
        if not (args.element or args.candidate or automorphisms):
            raise PreconditionError("give --element, --candidate or --auto")
        return toolkit.normal(
            presentation, args.element, args.candidate, automorphisms
        )
    raise PreconditionError(f"unknown command {command}")


def _render(report: ReportModel, config: RunConfig, select: str | None) -> str:
    if select:
        return json.dumps(_extract_selected(report.to_dict(), select), indent=2)
    if config.output_format == "json":
        return report.to_json()
    return report.render_text()


def main(argv: Sequence[str] | None = None) -> int:
    """Run one command; returns the process exit status."""
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=_LOG_LEVELS[min(args.verbose, len(_LOG_LEVELS) - 1)],
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        config = _config(args)
        toolkit = Toolkit(config)
        log.debug("running %s with %s", args.command, config)
        report = _run(toolkit, args)
        output = _render(report, config, args.select)
    except (QReflectError, OSError) as exc:
        print(f"error: {args.command}: {exc}", file=sys.stderr)
        return EXIT_ERROR
    print(output)
    return EXIT_OK if report.succeeded else EXIT_FAILED_CHECK


if __name__ == "__main__":
    sys.exit(main())
