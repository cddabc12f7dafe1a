"""
classify: verdict on the quotient with its evidence trace.
"""

from typing import Tuple

from src.schema import TorusAction
from src.logic import classify


def classify_command(action: TorusAction, limit: int) -> Tuple[dict, str]:
    result = classify(action)
    lines = [f"{result.label} (dim {result.dim}): {result.manifold.value}"]
    lines += [f"  - {line}" for line in result.evidence]
    return result.to_json(), "\n".join(lines)
