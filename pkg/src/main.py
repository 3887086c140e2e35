"""
Signed-lattice toolkit - command-line entry point

    python -m src.main gen 3 2
    python -m src.main synth 3 2 5 --with-basis --verify
"""
import argparse
import logging
import sys
from typing import List, Optional

from pydantic import ValidationError

from . import __version__
from .commands import COMMANDS
from .commands.output import EXIT_USAGE
from .config import get_settings
from .models import CommandConfig, OutputFormat

logger = logging.getLogger(__name__)

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


def configure_logging(level: Optional[str] = None) -> None:
    """Logs go to stderr so stdout stays deterministic"""
    level = (level or get_settings().log_level).upper()
    logging.basicConfig(level=level, format=LOG_FORMAT, stream=sys.stderr, force=True)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=[f.value for f in OutputFormat], default="text")
    common.add_argument("--out", default=None, help="Write output to this file instead of stdout")
    common.add_argument("--log-level", default=None,
                        choices=["DEBUG", "INFO", "WARNING", "ERROR"], type=str.upper)

    parser = argparse.ArgumentParser(
        prog="signed-lattice",
        description="Signed-index lattices, weight functions and boolean maps",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="subcommand", required=True)
    for command in COMMANDS:
        command.add_parser(subparsers, [common])
    return parser


def _config_from_args(args: argparse.Namespace) -> CommandConfig:
    fields = {k: v for k, v in vars(args).items() if k not in ("handler", "log_level")}
    return CommandConfig(**fields)


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code not in (0, None) else 0

    configure_logging(args.log_level)

    try:
        config = _config_from_args(args)
        logger.info(f"Running {config.subcommand}")
        return args.handler(config)
    except ValidationError as e:
        message = "; ".join(err["msg"] for err in e.errors())
        print(f"error: {message}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
