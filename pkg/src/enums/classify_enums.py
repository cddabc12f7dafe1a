"""
Classification Log Messages

Standardized log messages for the orbit-space classification.
"""

from enum import Enum


class ClassifyMsg(Enum):
    """Messages for the classify module with %s placeholders."""

    FACTORS = "Join decomposition: %s factors"
    """Debug message after splitting by matroid components."""

    WEIGHTS_NORMALIZED = "Rank-one weights %s normalized to %s"
    """Debug message after sign, gcd and order normalization."""

    VERDICT = "Classification verdict: %s (dim %s)"
    """Info message with the final verdict."""

    SPHERE_TESTS_DISAGREE = "Circuit test says %s but Tutte test says %s"
    """Critical message: the two sphere criteria disagree."""
