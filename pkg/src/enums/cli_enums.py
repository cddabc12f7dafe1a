"""
CLI Log Messages

Standardized log messages for the command-line front end.
"""

from enum import Enum


class CliMsg(Enum):
    """Messages for the CLI with %s placeholders."""

    RUNNING = "Running subcommand %s"
    """Debug message at dispatch."""

    AUTO_REDUCED = "Auto-reduce: %s -> %s"
    """Info message when --auto-reduce divided rows."""

    INPUT_ERROR = "Invalid input: %s"
    """Error for exit code 1."""

    NOT_EFFECTIVE = "Action is not effective: %s (use --auto-reduce)"
    """Error for exit code 2."""

    INVARIANT_FAILURE = "Internal invariant failed: %s"
    """Critical message for exit code 3."""

    VERIFY_RESULT = "verify: %s -> %s"
    """Info message per checked property."""
