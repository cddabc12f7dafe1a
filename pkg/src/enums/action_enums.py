"""
Torus Action Log Messages

Standardized log messages for parsing weight matrices, Smith normal form
computation, effectiveness tests and matrix moves. Placeholders use %s style
for lazy evaluation by the logging module.
"""

from enum import Enum


class ActionMsg(Enum):
    """Messages for the action module with %s placeholders."""

    # --- Parsing ---
    PARSE_START = "Parsing matrix description (%s characters)"
    """Debug message before tokenizing text or JSON input."""

    PARSE_SUCCESS = "Parsed %sx%s weight matrix"
    """A TorusAction was built; rows x columns."""

    PARSE_FAILED = "Matrix parsing failed: %s"
    """Input rejected (ragged rows, bad token, no columns, bad JSON)."""

    # --- Smith normal form ---
    SNF_DONE = "Smith normal form of %sx%s matrix: invariant factors %s"
    """Debug message after diagonalization."""

    # --- Effectiveness ---
    NOT_EFFECTIVE = "Action is not effective: kernel %s"
    """Warning when the columns do not generate the full lattice."""

    ROW_DIVIDED = "Divided row %s by common factor %s"
    """Info message for each row-gcd reduction."""

    # --- Moves ---
    MOVE_APPLIED = "Applied move %s"
    """Debug message for a single matrix move."""

    MOVE_REJECTED = "Rejected move %s: %s"
    """Error when a move has invalid indices."""

    UNKNOWN_COLUMN = "Column %s is not one of the %s circles"
    """Error when an isotropy query names a missing column."""

    # --- Isotropy ---
    SPECTRUM_SIZE = "Isotropy spectrum over %s column subsets: %s distinct groups"
    """Debug summary of the isotropy type enumeration."""
