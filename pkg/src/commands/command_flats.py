"""
flats: the lattice of flats with Mobius values.
"""

from typing import Tuple

from src.schema import TorusAction
from src.logic import matroid_of, flat_lattice_json


def flats_command(action: TorusAction, limit: int) -> Tuple[dict, str]:
    m = matroid_of(action)
    lattice = m.flat_lattice(limit)
    top_mobius = lattice.mobius_of(lattice.top)
    payload = {
        "rank": lattice.rank,
        "flats": flat_lattice_json(lattice),
        "covers": [list(pair) for pair in lattice.covers],
        "mobius": top_mobius,
    }
    lines = [f"{len(lattice.flats)} flats, rank {lattice.rank}, mu = {top_mobius}"]
    for entry in payload["flats"]:
        lines.append(f"  rank {entry['rank']}  {{{', '.join(map(str, entry['elements']))}}}  mu = {entry['mobius']}")
    return payload, "\n".join(lines)
