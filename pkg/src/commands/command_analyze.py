"""
analyze: reduced homology of the quotient X.
"""

from typing import Tuple

from src.schema import TorusAction
from src.logic import poincare_quotient, matroid_of, tutte


def analyze_command(action: TorusAction, limit: int) -> Tuple[dict, str]:
    summary = poincare_quotient(action)
    polynomial = tutte(matroid_of(action))
    payload = summary.to_json()
    payload["matrix"] = action.to_json()
    payload["tutte"] = str(polynomial)

    lines = [
        f"quotient of S^{2 * action.n - 1} by T^{action.r}: dimension {summary.dimension}",
        f"Tutte polynomial: {polynomial}",
        f"reduced Poincare polynomial: {summary.poincare}",
        f"simply connected: {'yes' if summary.simply_connected else 'no'}",
        "integral homology is torsion free",
    ]
    return payload, "\n".join(lines)
