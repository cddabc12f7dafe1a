"""
Tutte Polynomial Log Messages

Standardized log messages for both Tutte engines.
"""

from enum import Enum


class TutteMsg(Enum):
    """Messages for the tutte module with %s placeholders."""

    LARGE_GROUND_SET = "Deletion-contraction on %s elements (warning threshold %s) may be slow"
    """Warning for large inputs to the memoized engine."""

    ENGINE_DONE = "Deletion-contraction finished: %s memo entries, polynomial %s"
    """Debug summary after a top-level evaluation."""

    ORACLE_DONE = "Corank-nullity oracle summed %s subsets"
    """Debug summary of the brute-force engine."""

    PARALLEL_COMPONENTS = "Evaluating %s direct-sum components on %s threads"
    """Debug message when components run in the thread pool."""
