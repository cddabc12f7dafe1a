"""
verify: every cross-check on one input.

Each property passes, fails, or is skipped with a reason (ground set above the
enumeration limit, or a precondition such as coloop-freeness not met).
"""

from typing import Callable, List, Tuple

from src.infra import setup_logging
from src.enums import CliMsg
from src.enums.value_enums import PropertyStatus
from src.helpers import InvariantViolationError
from src.schema import TorusAction, PropertyResult, VerificationReport
from src.logic import (RepresentedMatroid,
                       matroid_of,
                       tutte,
                       tutte_oracle,
                       specialize_y,
                       convolution_check,
                       check_coefficient_structure,
                       is_homology_sphere,
                       singular_summary,
                       poincare_deletion_contraction)

logger = setup_logging(name="CLI-VERIFY")


class _Skip(Exception):
    """Raised inside a check to report it as skipped."""


def _within(m: RepresentedMatroid, limit: int) -> None:
    if m.n > limit:
        raise _Skip(f"{m.n} elements exceed the enumeration limit {limit}")


def _check_oracle(action: TorusAction, m: RepresentedMatroid, limit: int) -> str:
    _within(m, limit)
    engine, oracle = tutte(m), tutte_oracle(m, limit=limit)
    if engine != oracle:
        raise InvariantViolationError(f"deletion-contraction {engine} != oracle {oracle}")
    return str(engine)


def _check_convolution(action: TorusAction, m: RepresentedMatroid, limit: int) -> str:
    _within(m, limit)
    if not convolution_check(m, limit):
        raise InvariantViolationError("T(M;1,y) differs from the sum over flats")
    return "T(M;1,y) equals the sum over flats"


def _check_order_complex(action: TorusAction, m: RepresentedMatroid, limit: int) -> str:
    _within(m, limit)
    if m.rank() == 0:
        raise _Skip("rank 0 has no proper part")
    if m.loops():
        raise _Skip("matroid has loops")
    euler = m.order_complex_euler(limit)
    mobius = m.mobius(limit)
    signed = (-1) ** m.rank() * tutte(m).evaluate(1, 0)
    if not euler == mobius == signed:
        raise InvariantViolationError(f"reduced Euler characteristic {euler}, mu {mobius}, (-1)^r T(1,0) {signed}")
    return f"reduced Euler characteristic {euler} = mu"


def _check_coefficients(action: TorusAction, m: RepresentedMatroid, limit: int) -> str:
    if m.coloops():
        raise _Skip("matroid has a coloop")
    at_zero = specialize_y(tutte(m), 0).substitute_t_squared()
    if not check_coefficient_structure(at_zero, m.n, m.rank()):
        raise InvariantViolationError(f"T(M;0,t^2) = {at_zero} breaks the coefficient structure")
    return f"T(M;0,t^2) = {at_zero}"


def _check_sphere_criteria(action: TorusAction, m: RepresentedMatroid, limit: int) -> str:
    sphere, offenders = is_homology_sphere(action)
    return "direct sum of circuits" if sphere else f"components {offenders} are not circuits"


def _check_singular(action: TorusAction, m: RepresentedMatroid, limit: int) -> str:
    _within(m, limit)
    summary = singular_summary(action, limit=limit)
    return "singular set is empty" if summary.empty else f"P(S) = {summary.poincare}"


def _check_poincare_deletion(action: TorusAction, m: RepresentedMatroid, limit: int) -> str:
    if not poincare_deletion_contraction(m):
        raise InvariantViolationError("P(X_M) != P(X_{M-e}) + t P(X_{M/e}) for some e")
    return "holds for every element that is neither a loop nor a coloop"


CHECKS: List[Tuple[str, Callable[[TorusAction, RepresentedMatroid, int], str]]] = [
    ("tutte_equals_oracle", _check_oracle),
    ("convolution_identity", _check_convolution),
    ("order_complex_euler", _check_order_complex),
    ("coefficient_structure", _check_coefficients),
    ("sphere_criteria_agree", _check_sphere_criteria),
    ("singular_wedge_matches_formula", _check_singular),
    ("poincare_deletion_contraction", _check_poincare_deletion),
]


def verify(action: TorusAction, limit: int) -> VerificationReport:
    m = matroid_of(action)
    results = []
    for name, check in CHECKS:
        try:
            result = PropertyResult(name=name, status=PropertyStatus.PASS, detail=check(action, m, limit))
        except _Skip as e:
            result = PropertyResult(name=name, status=PropertyStatus.SKIPPED, detail=str(e))
        except InvariantViolationError as e:
            result = PropertyResult(name=name, status=PropertyStatus.FAIL, detail=str(e))
        logger.info(CliMsg.VERIFY_RESULT.value, name, result.status.value)
        results.append(result)
    return VerificationReport(results=tuple(results))


def verify_command(action: TorusAction, limit: int) -> Tuple[dict, str]:
    report = verify(action, limit)
    lines = [f"{r.status.value:8} {r.name}: {r.detail}" for r in report.results]
    lines.append("all properties hold" if report.passed else f"{len(report.failures())} properties FAILED")
    return report.to_json(), "\n".join(lines)
