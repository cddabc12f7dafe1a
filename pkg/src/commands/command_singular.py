"""
singular: strata, wedge decomposition and homology of the singular set.
"""

from typing import Tuple

from src.schema import TorusAction
from src.logic import singular_summary


def singular_command(action: TorusAction, limit: int) -> Tuple[dict, str]:
    summary = singular_summary(action, limit=limit)
    payload = summary.to_json()
    if summary.empty:
        return payload, "singular set is empty"

    lines = [f"reduced Poincare polynomial: {summary.poincare}"]
    if not summary.formula_applicable:
        lines.append("(closed formula not applicable at this rank; value from the strata)")
    lines.append("strata:")
    for stratum in summary.strata:
        lines.append(f"  S^H for H = {list(stratum.hyperplane.elements)}: dim {stratum.dimension}, "
                     f"isotropy {stratum.isotropy}")
    lines.append("wedge summands:")
    for summand in summary.wedge:
        lines.append(f"  F = {list(summand.flat.elements)}: X_F * {summand.multiplicity} x S^{summand.sphere_dim}"
                     f" -> {summand.contribution if summand.contribution is not None else 'empty'}")
    return payload, "\n".join(lines)
