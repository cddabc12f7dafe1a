"""
Matroid Log Messages

Standardized log messages for the represented matroid: rank oracle, minors,
flat enumeration and the Mobius function.
"""

from enum import Enum


class MatroidMsg(Enum):
    """Messages for the matroid module with %s placeholders."""

    UNKNOWN_LABEL = "Label %s is not in the ground set %s"
    """Error when a caller names an element outside the matroid."""

    CONTRACTED = "Contracted element %s (pivot gcd %s)"
    """Debug message after Euclidean reduction of a column."""

    FLATS_ENUMERATED = "Enumerated %s flats over %s ranks"
    """Info message after breadth-first flat generation."""

    LIMIT_EXCEEDED = "Refusing %s on %s elements (limit %s)"
    """Error when an exponential enumeration would exceed the limit."""

    COMPONENTS = "Direct-sum components: %s"
    """Debug message listing the component partition."""
