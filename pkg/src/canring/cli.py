"""Command-line front end: subcommand registration, dispatch and exit codes."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from collections.abc import Callable, Sequence

import yaml

from .algebra.rational import parse_rational
from .config import CAPS_ENV, Config, create_config, set_config
from .errors import CanringError, CapacityExceededError
from .geometry.divisor import QDivisor
from .models.enums import Command, Verdict
from .models.report import Report
from .storage.specs import SpecStorage, spec_digest
from .tools import (
    BasisTool,
    BoundsTool,
    ConeTool,
    ConvergentsTool,
    PresentationTool,
    ToolOutput,
    VerifyTool,
)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_INCONCLUSIVE = 3

_VERDICT_EXIT = {
    Verdict.PASS: EXIT_OK,
    Verdict.FAIL: EXIT_FAIL,
    Verdict.INCONCLUSIVE: EXIT_INCONCLUSIVE,
}

Handler = Callable[[argparse.Namespace, Config], tuple[ToolOutput, str | None]]


def _common_flags() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--json", action="store_true", help="Emit the report as JSON")
    parent.add_argument("--verbose", action="store_true", help="Log progress at INFO level")
    parent.add_argument("--debug", action="store_true", help="Log per-degree detail")
    parent.add_argument(
        "--caps",
        default=None,
        help=f"Search caps, e.g. words=200000,dmax=64 (default: {CAPS_ENV} env or built-ins)",
    )
    return parent


def _load(args: argparse.Namespace, config: Config) -> tuple[QDivisor, str]:
    divisor = SpecStorage(config).load(args.file)
    return divisor, spec_digest(divisor)


def _bounds(args: argparse.Namespace, config: Config) -> tuple[ToolOutput, str | None]:
    divisor, digest = _load(args, config)
    return BoundsTool(config).bounds(divisor), digest


def _present(args: argparse.Namespace, config: Config) -> tuple[ToolOutput, str | None]:
    divisor, digest = _load(args, config)
    return PresentationTool(config).present(divisor), digest


def _basis(args: argparse.Namespace, config: Config) -> tuple[ToolOutput, str | None]:
    divisor, digest = _load(args, config)
    return BasisTool(config).basis(divisor, args.degree), digest


def _cone(args: argparse.Namespace, config: Config) -> tuple[ToolOutput, str | None]:
    divisor, digest = _load(args, config)
    output = ConeTool(config).cone(divisor, args.box, args.strict)
    return output, digest


def _verify(args: argparse.Namespace, config: Config) -> tuple[ToolOutput, str | None]:
    divisor, digest = _load(args, config)
    output = VerifyTool(config).verify(divisor, args.max_degree, args.relations)
    return output, digest


def _convergents(args: argparse.Namespace, config: Config) -> tuple[ToolOutput, str | None]:
    return ConvergentsTool(config).convergents(parse_rational(args.alpha)), None


def _register_file_command(
    subparsers: argparse._SubParsersAction[argparse.ArgumentParser],
    command: Command,
    handler: Handler,
    parent: argparse.ArgumentParser,
    help_text: str,
) -> argparse.ArgumentParser:
    parser = subparsers.add_parser(command.value, parents=[parent], help=help_text)
    parser.add_argument("file", help="Divisor spec file (YAML or JSON)")
    parser.set_defaults(handler=handler, command=command)
    return parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="canring",
        description="Section rings of Q-divisors on projective spaces and Hirzebruch surfaces",
    )
    subparsers = parser.add_subparsers(dest="subcommand", required=True)
    parent = _common_flags()

    _register_file_command(
        subparsers, Command.BOUNDS, _bounds, parent, "Generator and relation degree bounds"
    )
    _register_file_command(
        subparsers, Command.PRESENT, _present, parent, "Presentation of an effective divisor"
    )
    basis = _register_file_command(
        subparsers, Command.BASIS, _basis, parent, "Basis of one graded piece"
    )
    basis.add_argument("--degree", type=int, required=True, help="Degree d of the piece")
    cone = _register_file_command(
        subparsers, Command.CONE, _cone, parent, "Extremal rays of the cone Sigma"
    )
    cone.add_argument("--box", action="store_true", help="Also list the box points")
    cone.add_argument(
        "--strict", action="store_true", help="Fail when a closed-form ray disagrees"
    )
    verify = _register_file_command(
        subparsers, Command.VERIFY, _verify, parent, "Check the bounds with the oracle"
    )
    verify.add_argument(
        "--max-degree", type=int, required=True, help="Highest degree searched"
    )
    verify.add_argument("--relations", action="store_true", help="Also search relations")

    convergents = subparsers.add_parser(
        Command.CONVERGENTS.value, parents=[parent], help="Lower convergents of p/q"
    )
    convergents.add_argument("alpha", help="Non-negative rational p/q")
    convergents.set_defaults(handler=_convergents, command=Command.CONVERGENTS)
    return parser


def _configure_logging(args: argparse.Namespace) -> None:
    level = logging.DEBUG if args.debug else logging.INFO if args.verbose else logging.WARNING
    logging.basicConfig(stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
    logging.getLogger("canring").setLevel(level)


def _render_text(report: Report) -> str:
    if report.command == Command.CONVERGENTS.value:
        return str(report.result["text"])
    text = yaml.dump(report.result, default_flow_style=False, allow_unicode=True, sort_keys=False)
    if report.verdict is not None:
        text = f"verdict: {report.verdict}\n{text}"
    return text.rstrip("\n")


def run(argv: Sequence[str] | None = None) -> int:
    """Parse arguments, run one subcommand and print its report.

    Returns:
        0 on success or PASS, 1 on FAIL, 2 on usage and input errors, 3 on INCONCLUSIVE
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    _configure_logging(args)

    try:
        config = create_config(args.caps)
        set_config(config)
        output, digest = args.handler(args, config)
    except CapacityExceededError as exc:
        print(f"canring: inconclusive: {exc}", file=sys.stderr)
        return EXIT_INCONCLUSIVE
    except (ValueError, CanringError) as exc:
        print(f"canring: error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    report = Report(
        command=args.command,
        digest=digest,
        result=output.payload,
        warnings=output.warnings,
        verdict=output.verdict,
    )
    for warning in report.warnings:
        print(f"warning: {warning}", file=sys.stderr)
    if args.json:
        print(json.dumps(report.model_dump(), indent=2))
    else:
        print(_render_text(report))
    if output.verdict is None:
        return EXIT_OK
    return _VERDICT_EXIT[Verdict(output.verdict)]
