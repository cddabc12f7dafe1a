from enum import Enum


class SubCommand(str, Enum):
    """CLI subcommands."""
    ANALYZE = "analyze"
    TUTTE = "tutte"
    FLATS = "flats"
    SINGULAR = "singular"
    CLASSIFY = "classify"
    CANONICALIZE = "canonicalize"
    VERIFY = "verify"


class OutputFormat(str, Enum):
    """Report serialization."""
    TEXT = "text"
    JSON = "json"


class PropertyStatus(str, Enum):
    """Outcome of one verify check."""
    PASS = "pass"
    FAIL = "fail"
    SKIPPED = "skipped"


class ExitCode(int, Enum):
    """Process exit codes of the CLI."""
    SUCCESS = 0
    INVALID_INPUT = 1
    NOT_EFFECTIVE = 2
    INVARIANT_FAILURE = 3
