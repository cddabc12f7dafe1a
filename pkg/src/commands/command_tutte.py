"""
tutte: the Tutte polynomial from both engines, with an equality flag.
"""

from typing import Tuple

from src.schema import TorusAction
from src.logic import matroid_of, tutte, tutte_oracle


def tutte_command(action: TorusAction, limit: int) -> Tuple[dict, str]:
    m = matroid_of(action)
    engine = tutte(m)
    oracle = tutte_oracle(m, limit=limit)
    equal = engine == oracle
    payload = {
        "deletion_contraction": engine.to_json(),
        "oracle": oracle.to_json(),
        "equal": equal,
        "text": str(engine),
    }
    text = "\n".join([
        f"deletion-contraction: {engine}",
        f"corank-nullity:       {oracle}",
        f"equal: {'yes' if equal else 'NO'}",
    ])
    return payload, text
