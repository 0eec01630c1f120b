"""
rqmc: command-line front end.

    rqmc spectrum --system kg-osc --n-max 3
    rqmc density --system kg-box --n 2 --format json --output rho.json
    rqmc ft --system dirac-osc --n 5 --branch antiparticle
    rqmc converge --system kg-osc --n-list 10,20,40,80,160 --units custom --c 1000

Exit codes: 0 success, 1 numerical failure, 2 configuration error. Results go to --output
(written only once the whole payload exists) or stdout; status and errors go to stderr.
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import Optional, Sequence

from pydantic import ValidationError
from rich.console import Console

from RQMC import __version__
from RQMC.core.Errors import RQMCError, ConfigurationError, NumericalError
from RQMC.core.StateSpec import Branch
from RQMC.core.UnitSystem import UnitMode
from RQMC.correspondence.EnergyFixing import TargetMode
from RQMC.correspondence.WindowPolicy import WindowKind
from RQMC.cli.CommandRegistry import registry
from RQMC.cli.RunConfig import RunConfig, SYSTEM_ALIASES, OutputFormat, DensityForm
from RQMC.cli import Commands  # noqa: F401  registers the sub-commands
from RQMC.logs.logging_config import configure_logging, get_logger

logger = get_logger(__name__)

console = Console(stderr=True)


def _int_list(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _add_common(parser: argparse.ArgumentParser):
    parser.add_argument(
        "--system",
        required=True,
        choices=[*SYSTEM_ALIASES, *(str(kind) for kind in SYSTEM_ALIASES.values())],
        help="Which system",
    )
    parser.add_argument(
        "--branch", default=str(Branch.PARTICLE), choices=[str(b) for b in Branch]
    )
    parser.add_argument(
        "--units", default=str(UnitMode.NATURAL), choices=[str(u) for u in UnitMode]
    )
    parser.add_argument("--m", type=float, help="Mass (custom units)")
    parser.add_argument("--omega", type=float, help="Angular frequency (custom units)")
    parser.add_argument("--c", type=float, help="Speed of light (custom units)")
    parser.add_argument("--hbar", type=float, help="Reduced Planck constant (custom units)")
    parser.add_argument("--L", type=float, help="Box length (custom units)")
    parser.add_argument("--grid-points", type=int, default=2001)
    parser.add_argument("--x-min", type=float)
    parser.add_argument("--x-max", type=float)
    parser.add_argument(
        "--window-policy",
        default=str(WindowKind.DEFAULT),
        choices=[str(k) for k in WindowKind],
    )
    parser.add_argument("--window", type=float, help="Width for the fixed window policy")
    parser.add_argument("--window-scale", type=float, default=1.0)
    parser.add_argument("--format", choices=[str(f) for f in OutputFormat])
    parser.add_argument("--output", type=Path, help="Output file (default: stdout)")
    parser.add_argument("--log-level", help="DEBUG, INFO, WARNING, ...")
    parser.add_argument("--trace", action="store_true", help="Verbose tracing to stderr")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rqmc",
        description="Relativistic quantum densities and the correspondence principle",
    )
    parser.add_argument("--version", action="version", version=f"rqmc {__version__}")
    subparsers = parser.add_subparsers(dest="command", required=True)

    for name, command in registry.commands.items():
        sub = subparsers.add_parser(name, help=command.summary, description=command.description)
        _add_common(sub)
        match name:
            case "spectrum":
                sub.add_argument("--n-max", type=int, help="Highest level")
                sub.add_argument("--count", type=int, help="Number of levels or roots")
            case "density":
                sub.add_argument("--n", type=int, required=True)
                sub.add_argument(
                    "--form",
                    default=str(DensityForm.EXACT),
                    choices=[str(f) for f in DensityForm],
                )
            case "ft":
                sub.add_argument("--n", type=int, required=True)
                sub.add_argument("--p-max", type=float, default=5.0)
                sub.add_argument("--p-points", type=int, default=51)
            case "converge":
                sub.add_argument("--n-list", type=_int_list)
                sub.add_argument(
                    "--target",
                    default=str(TargetMode.KAPPA),
                    choices=[str(t) for t in TargetMode],
                )
    return parser


def _report(error: RQMCError) -> int:
    console.print(f"[red]{type(error).__name__}:[/red] {error.message}", highlight=False)
    console.print_json(error.to_payload().model_dump_json())
    return int(error.code)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    if args.log_level or args.trace or not logging.getLogger().handlers:
        level = args.log_level.upper() if args.log_level else None
        try:
            configure_logging(level=logging.DEBUG if args.trace else level, trace_mode=args.trace)
        except ValueError:
            return _report(ConfigurationError(f"Unknown log level: {args.log_level}"))

    try:
        config = RunConfig.from_namespace(args)
        command = registry.get(config.command)
    except RQMCError as e:
        return _report(e)
    except ValidationError as e:
        return _report(ConfigurationError(f"Invalid value: {e}"))

    try:
        logger.info(f"Running {command.name} for {config.system}")
        text = command.function(config)
    except RQMCError as e:
        return _report(e)
    except ValidationError as e:
        # a computed result failed its own model checks
        return _report(NumericalError(f"Invalid result: {e}"))

    if config.output is None:
        sys.stdout.write(text)
        sys.stdout.flush()
    else:
        try:
            config.output.write_text(text, newline="\n")
        except OSError as e:
            return _report(ConfigurationError(f"Cannot write {config.output}: {e}"))
        console.print(f"[green]Wrote[/green] {config.output}", highlight=False)
    return 0


if __name__ == "__main__":
    sys.exit(main())
