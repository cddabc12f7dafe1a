"""
canonicalize: row-gcd reduction and sign/order normalization with a move log.
"""

from typing import Tuple

from src.schema import TorusAction
from src.logic import canonicalize, is_effective


def canonicalize_command(action: TorusAction, limit: int) -> Tuple[dict, str]:
    reduced, moves = canonicalize(action)
    effective, kernel = is_effective(reduced)
    payload = {
        "matrix": reduced.to_json(),
        "moves": [move.to_json() for move in moves],
        "effective": effective,
        "kernel": kernel.to_json(),
    }
    lines = [reduced.to_text() or f"(no rows, {reduced.n} columns)"]
    lines += [f"# {move}" for move in moves]
    lines.append(f"# effective: {'yes' if effective else f'no, kernel {kernel}'}")
    return payload, "\n".join(lines)
