"""
Command-line entry point.

    python -m src.main analyze --matrix "1 0 1
    0 1 1"
    python -m src.main classify weights.txt --format json
    echo "3 1 1" | python -m src.main classify

Subcommands: analyze, tutte, flats, singular, classify, canonicalize, verify.
The matrix comes from a file path, --matrix, or standard input. Reports go to
stdout; logs go to stderr.
"""

import os
import sys
import logging
import argparse
from typing import List, Optional

# --- Setup project base path ---
try:
    MAIN_DIR = os.path.abspath(os.path.join(os.path.dirname(__file__), "../"))
    sys.path.append(MAIN_DIR)
except (ImportError, OSError) as e:
    logging.critical("[Startup Critical] Failed to set project base path.", exc_info=True)
    sys.exit(1)

from pydantic import ValidationError

from src.infra import setup_logging, set_console_level
from src.enums import CliMsg
from src.enums.value_enums import SubCommand, OutputFormat, ExitCode
from src.schema import CliRequest
from src.commands import run

logger = setup_logging(name="MAIN")

HELP = {
    SubCommand.ANALYZE: "reduced homology of the quotient",
    SubCommand.TUTTE: "Tutte polynomial from both engines",
    SubCommand.FLATS: "lattice of flats with Mobius values",
    SubCommand.SINGULAR: "strata, wedge decomposition and homology of the singular set",
    SubCommand.CLASSIFY: "verdict on the quotient with evidence",
    SubCommand.CANONICALIZE: "row-gcd reduction and normalization with a move log",
    SubCommand.VERIFY: "run every cross-check on the input",
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("path", nargs="?", default=None, help="matrix file (text or JSON)")
    common.add_argument("--matrix", default=None, help="inline matrix, rows separated by newlines or ';'")
    common.add_argument("--format", choices=[f.value for f in OutputFormat], default=OutputFormat.TEXT.value)
    common.add_argument("--auto-reduce", action="store_true", help="divide rows by their gcd before analysis")
    common.add_argument("--force", action="store_true", help="lift the subset enumeration limit")
    common.add_argument("--limit", type=int, default=None, help="subset enumeration limit for this run")
    common.add_argument("--log-level", default=None, help="console log level (default from settings)")

    parser = argparse.ArgumentParser(
        prog="torus-quotients",
        description="Homology and classification of torus quotients of odd spheres",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    for command in SubCommand:
        subparsers.add_parser(command.value, parents=[common], help=HELP[command])
    return parser


def request_from_args(args: argparse.Namespace) -> CliRequest:
    matrix = args.matrix.replace(";", "\n") if args.matrix is not None else None
    return CliRequest(
        subcommand=SubCommand(args.command),
        matrix_text=matrix,
        path=args.path,
        use_stdin=matrix is None and args.path is None,
        format=OutputFormat(args.format),
        auto_reduce=args.auto_reduce,
        force=args.force,
        limit=args.limit,
    )


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if args.log_level:
        set_console_level(args.log_level.upper())
    try:
        request = request_from_args(args)
    except ValidationError as e:
        logger.error(CliMsg.INPUT_ERROR.value, e.errors()[0]["msg"])
        return int(ExitCode.INVALID_INPUT)

    code, report = run(request)
    if report:
        print(report)
    return int(code)


if __name__ == "__main__":
    sys.exit(main())
