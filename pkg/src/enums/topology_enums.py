"""
Topology Log Messages

Standardized log messages for quotient and singular-set homology.
"""

from enum import Enum


class TopologyMsg(Enum):
    """Messages for the topology module with %s placeholders."""

    QUOTIENT_POINCARE = "Reduced Poincare polynomial of X (dim %s): %s"
    """Info message with the quotient homology."""

    SINGULAR_EMPTY = "Singular set is empty (rank %s, no loops)"
    """Info message when no point has infinite isotropy."""

    FORMULA_NOT_APPLICABLE = "Singular-set formula has prefactor t^%s; reporting from the stratum list"
    """Info message for the rank-one case."""

    WEDGE_SUMMANDS = "Singular set wedge has %s summands"
    """Debug message with the number of flats below the top."""

    CONVOLUTION = "Convolution identity over %s flats: %s"
    """Debug message with the outcome of the identity check."""
