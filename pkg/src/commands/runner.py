"""
runner.py

Executes one CliRequest: reads the matrix source, parses it, applies the
optional row-gcd reduction, checks effectiveness where the subcommand needs
it, dispatches, and serializes the report.

Failures map to exit codes:
    1  invalid input (parse errors, unreadable source, enumeration limit)
    2  non-effective action without --auto-reduce
    3  internal invariant failure (including a failed verify property)
"""

import os
import sys
import json
import logging
from typing import Callable, Dict, Optional, TextIO, Tuple

# Setup base directory for importing project modules
try:
    MAIN_DIR = os.path.abspath(os.path.join(os.path.dirname(__file__), "../.."))
    sys.path.append(MAIN_DIR)
except (ImportError, OSError) as e:
    logging.error("Failed to set up main directory path: %s", e)
    sys.exit(1)

from src.infra import setup_logging
from src.enums import CliMsg
from src.enums.value_enums import SubCommand, OutputFormat, ExitCode
from src.helpers import (get_settings,
                         TorusQuotientError,
                         MatrixParseError,
                         NonEffectiveActionError,
                         InvariantViolationError)
from src.schema import CliRequest, TorusAction
from src.utils import load_matrix_file, read_matrix_stream
from src.logic import parse_action, reduce_noneffective, require_effective
from src.commands.command_analyze import analyze_command
from src.commands.command_tutte import tutte_command
from src.commands.command_flats import flats_command
from src.commands.command_singular import singular_command
from src.commands.command_classify import classify_command
from src.commands.command_canonicalize import canonicalize_command
from src.commands.command_verify import verify_command

logger = setup_logging(name="CLI")

Command = Callable[[TorusAction, int], Tuple[dict, str]]

COMMANDS: Dict[SubCommand, Command] = {
    SubCommand.ANALYZE: analyze_command,
    SubCommand.TUTTE: tutte_command,
    SubCommand.FLATS: flats_command,
    SubCommand.SINGULAR: singular_command,
    SubCommand.CLASSIFY: classify_command,
    SubCommand.CANONICALIZE: canonicalize_command,
    SubCommand.VERIFY: verify_command,
}

# subcommands whose results are only defined for effective actions
NEEDS_EFFECTIVE = {SubCommand.ANALYZE, SubCommand.SINGULAR, SubCommand.CLASSIFY, SubCommand.VERIFY}


def dumps(payload) -> str:
    return json.dumps(payload, sort_keys=True, indent=2)


def _read_source(request: CliRequest, stdin: Optional[TextIO]) -> str:
    if request.matrix_text is not None:
        return request.matrix_text
    if request.path is not None:
        ok, text = load_matrix_file(request.path)
    else:
        ok, text = read_matrix_stream(stdin if stdin is not None else sys.stdin)
    if not ok:
        raise MatrixParseError(text)
    return text


def _limit(request: CliRequest, action: TorusAction) -> int:
    limit = request.limit if request.limit is not None else get_settings().ORACLE_SUBSET_LIMIT
    return max(limit, action.n) if request.force else limit


def _error(request: CliRequest, code: ExitCode, error: Exception) -> Tuple[ExitCode, str]:
    if request.format is OutputFormat.JSON:
        body = {"error": str(error), "kind": type(error).__name__, "exit_code": int(code)}
        if isinstance(error, NonEffectiveActionError):
            body["kernel"] = error.kernel.to_json()
        return code, dumps(body)
    return code, ""


def run(request: CliRequest, stdin: Optional[TextIO] = None) -> Tuple[ExitCode, str]:
    """
    Run one subcommand.

    Returns:
        (exit code, report for stdout); error details go to the log on stderr.
    """
    logger.debug(CliMsg.RUNNING.value, request.subcommand.value)
    try:
        action = parse_action(_read_source(request, stdin))
        if request.auto_reduce:
            reduced = reduce_noneffective(action)
            if reduced != action:
                logger.info(CliMsg.AUTO_REDUCED.value, action.matrix, reduced.matrix)
            action = reduced
        if request.subcommand in NEEDS_EFFECTIVE:
            action = require_effective(action)

        payload, text = COMMANDS[request.subcommand](action, _limit(request, action))
    except NonEffectiveActionError as e:
        logger.error(CliMsg.NOT_EFFECTIVE.value, e.kernel)
        return _error(request, ExitCode.NOT_EFFECTIVE, e)
    except InvariantViolationError as e:
        logger.critical(CliMsg.INVARIANT_FAILURE.value, e)
        return _error(request, ExitCode.INVARIANT_FAILURE, e)
    except TorusQuotientError as e:
        logger.error(CliMsg.INPUT_ERROR.value, e)
        return _error(request, ExitCode.INVALID_INPUT, e)

    code = ExitCode.SUCCESS
    if request.subcommand is SubCommand.VERIFY and not payload["passed"]:
        logger.critical(CliMsg.INVARIANT_FAILURE.value, "verify reported failing properties")
        code = ExitCode.INVARIANT_FAILURE
    report = dumps(payload) if request.format is OutputFormat.JSON else text
    return code, report
