"""
classify.py

Decides what the orbit space X is:

1. n = 1: a circle (r = 0) or a point (r = 1)
2. a coloop makes X a cone
3. otherwise X is the join of the quotients of its matroid components,
   a zero column contributing a circle factor; each factor is a sphere
   (circuit), a weighted projective space (connected rank one) or fails
   Poincare duality
4. spheres join to a sphere; a join with a non-manifold factor is not a
   manifold; any other join is checked against Poincare duality
"""

import os
import sys
import logging
from typing import List, Sequence, Tuple

# Setup base directory for importing project modules
try:
    MAIN_DIR = os.path.abspath(os.path.join(os.path.dirname(__file__), "../.."))
    sys.path.append(MAIN_DIR)
except (ImportError, OSError) as e:
    logging.error("Failed to set up main directory path: %s", e)
    sys.exit(1)

from src.infra import setup_logging
from src.enums import ClassifyMsg
from src.enums.value_enums import Verdict, ManifoldStatus, FactorRole
from src.helpers import RankDomainError, InvariantViolationError
from src.schema import TorusAction, Move, JoinFactor, Classification, QuotientSummary
from src.utils import UnivariatePolynomial, integer_row_echelon
from src.logic.action import require_effective, canonicalize
from src.logic.matroid import matroid_of
from src.logic.tutte import is_direct_sum_of_circuits_by_tutte
from src.logic.topology import poincare_quotient, poincare_duality_defect

logger = setup_logging(name="CLASSIFY")


def join_decomposition(action: TorusAction) -> List[JoinFactor]:
    """
    Split X into join factors along the components of M_X.

    A zero column is a circle factor with the trivial torus. Any other
    component becomes a block: the integer echelon form of its columns with
    zero rows dropped, which is again effective.
    """
    m = matroid_of(action)
    loops = m.loops()
    factors = []
    for part in m.components():
        if len(part) == 1 and part[0] in loops:
            factors.append(JoinFactor(columns=part,
                                      action=TorusAction(matrix=(), n=1),
                                      role=FactorRole.LOOP_CIRCLE))
            continue
        block = integer_row_echelon([[row[j] for j in part] for row in action.matrix])
        rows = tuple(tuple(row) for row in block if any(row))
        factors.append(JoinFactor(columns=part,
                                  action=TorusAction(matrix=rows, n=len(part)),
                                  role=FactorRole.BLOCK))
    logger.debug(ClassifyMsg.FACTORS.value, len(factors))
    return factors


def is_homology_sphere(action: TorusAction) -> Tuple[bool, List[Tuple[int, ...]]]:
    """
    True iff every component of M_X is a circuit, cross-checked against
    T(M; 0, t) = t^{n-r}.

    Returns:
        (is a homology sphere, components that are not circuits)

    Raises:
        InvariantViolationError: the two tests disagree.
    """
    m = matroid_of(action)
    offenders = [part for part in m.components() if not m.is_circuit(part)]
    structural = not offenders
    by_tutte = is_direct_sum_of_circuits_by_tutte(m)
    if structural != by_tutte:
        logger.critical(ClassifyMsg.SPHERE_TESTS_DISAGREE.value, structural, by_tutte)
        raise InvariantViolationError(
            f"circuit test ({structural}) and Tutte test ({by_tutte}) disagree on {action.to_json()}"
        )
    return structural, offenders


def normalize_weights(weights: Sequence[int]) -> Tuple[Tuple[int, ...], List[Move]]:
    """
    Positive, gcd-free, descending weights, using only isometry-preserving
    moves and row division.

    Raises:
        RankDomainError: empty or containing a zero weight.
    """
    if not weights:
        raise RankDomainError("rank-one classification needs at least one weight")
    if any(w == 0 for w in weights):
        raise RankDomainError(f"weights must be nonzero, got {list(weights)}")
    action, log = canonicalize(TorusAction.from_rows([list(weights)]))
    normalized = action.matrix[0]
    logger.debug(ClassifyMsg.WEIGHTS_NORMALIZED.value, list(weights), list(normalized))
    return normalized, log


def classify_rank_one(weights: Sequence[int]) -> Classification:
    """
    Weighted projective space S^{2n-1}/S^1 with the given weights.

    A manifold iff n <= 2, or a_1 = ... = a_{n-1} and a_n = 1 after
    normalization; then it is a point, S^2 or complex projective space of
    complex dimension n - 1.
    """
    normalized, log = normalize_weights(weights)
    n = len(normalized)
    evidence = [f"weights {list(weights)} normalized to {list(normalized)}"]
    evidence += [f"move {move}" for move in log]
    homology = poincare_quotient(TorusAction.from_rows([normalized]))
    dim = 2 * n - 2

    if n == 1:
        evidence.append("one weight: the quotient is a point")
        return Classification(verdict=Verdict.POINT, dim=0, manifold=ManifoldStatus.MANIFOLD,
                              homology=homology, evidence=tuple(evidence))
    if n == 2:
        evidence.append("two weights: the quotient is homeomorphic to S^2")
        return Classification(verdict=Verdict.SPHERE, dim=2, index=2, manifold=ManifoldStatus.MANIFOLD,
                              homology=homology, evidence=tuple(evidence))

    head, last = normalized[:-1], normalized[-1]
    if len(set(head)) == 1 and last == 1:
        evidence.append(
            f"weights a, ..., a, 1: homeomorphic to complex projective space of complex "
            f"dimension {n - 1} (real dimension {dim}; n weights give index n - 1)"
        )
        return Classification(verdict=Verdict.COMPLEX_PROJECTIVE, dim=dim, index=n - 1,
                              manifold=ManifoldStatus.MANIFOLD, homology=homology,
                              evidence=tuple(evidence))

    if len(set(head)) > 1:
        witness = head[0]
        evidence.append(
            f"isotropy Z_{witness} of the circle with weight {witness} rotates a circle of smaller "
            "weight: the link is a lens space, so the quotient is not a manifold"
        )
    else:
        witness = last
        evidence.append(
            f"isotropy Z_{witness} of the circle with weight {witness} rotates every other circle: "
            "the link is a lens space, so the quotient is not a manifold"
        )
    return Classification(verdict=Verdict.NOT_MANIFOLD, dim=dim, manifold=ManifoldStatus.NOT_MANIFOLD,
                          homology=homology, evidence=tuple(evidence), witness=witness)


def _classify_factor(factor: JoinFactor) -> Classification:
    columns = factor.columns
    homology = poincare_quotient(factor.action)
    if factor.role is FactorRole.LOOP_CIRCLE:
        return Classification(verdict=Verdict.SPHERE, dim=1, index=1, manifold=ManifoldStatus.MANIFOLD,
                              homology=homology, columns=columns,
                              evidence=(f"zero column {columns[0]}: join factor S^1",))

    m = matroid_of(factor.action)
    dim = homology.dimension
    if m.is_circuit(m.labels):
        return Classification(verdict=Verdict.SPHERE, dim=dim, index=dim, manifold=ManifoldStatus.MANIFOLD,
                              homology=homology, columns=columns,
                              evidence=(f"columns {list(columns)} form a circuit: join factor S^{dim}",))

    if factor.action.r == 1:
        verdict = classify_rank_one(factor.action.matrix[0])
        return verdict.model_copy(update={
            "columns": columns,
            "evidence": (f"columns {list(columns)} span rank one",) + verdict.evidence,
        })

    defect = poincare_duality_defect(homology.poincare, dim)
    evidence = (
        f"columns {list(columns)}: connected, rank {factor.action.r}, not a circuit; "
        f"H_{dim - 2} is nonzero while H_2 vanishes, Poincare duality fails in degrees {defect}",
    )
    return Classification(verdict=Verdict.NOT_MANIFOLD, dim=dim, manifold=ManifoldStatus.NOT_MANIFOLD,
                          homology=homology, columns=columns, evidence=evidence)


def _combine(parts: List[Classification], homology: QuotientSummary) -> Classification:
    dim = homology.dimension
    evidence = [f"join of {len(parts)} factors: " + " * ".join(p.label for p in parts)]
    for part in parts:
        evidence.extend(part.evidence)

    if all(p.is_sphere for p in parts):
        evidence.append(f"a join of spheres is a sphere: S^{dim}")
        return Classification(verdict=Verdict.SPHERE, dim=dim, index=dim, manifold=ManifoldStatus.MANIFOLD,
                              factors=tuple(parts), homology=homology, evidence=tuple(evidence))

    if any(p.verdict is Verdict.NOT_MANIFOLD for p in parts):
        evidence.append("a join with a non-manifold factor is not a manifold")
        return Classification(verdict=Verdict.NOT_MANIFOLD, dim=dim, manifold=ManifoldStatus.NOT_MANIFOLD,
                              factors=tuple(parts), homology=homology, evidence=tuple(evidence))

    defect = poincare_duality_defect(homology.poincare, dim)
    if defect:
        evidence.append(f"Poincare duality fails for the join in degrees {defect}")
        return Classification(verdict=Verdict.NOT_MANIFOLD, dim=dim, manifold=ManifoldStatus.NOT_MANIFOLD,
                              factors=tuple(parts), homology=homology, evidence=tuple(evidence))
    evidence.append("Poincare duality holds for the join; manifold status not determined")
    return Classification(verdict=Verdict.JOIN_OF_FACTORS, dim=dim, manifold=ManifoldStatus.UNDETERMINED,
                          factors=tuple(parts), homology=homology, evidence=tuple(evidence))


def classify(action: TorusAction, auto_reduce: bool = False) -> Classification:
    """
    Classify the quotient of an effective action.

    Raises:
        NonEffectiveActionError: the action has a kernel.
        InvariantViolationError: a Sphere verdict disagrees with the homology
            or with the Tutte sphere test.
    """
    action = require_effective(action, auto_reduce=auto_reduce)
    homology = poincare_quotient(action)
    dim = homology.dimension

    if action.n == 1:
        if action.r == 0:
            result = Classification(verdict=Verdict.CIRCLE, dim=1, manifold=ManifoldStatus.MANIFOLD,
                                    homology=homology,
                                    evidence=("n = 1, r = 0: the quotient is the circle S^1",))
        else:
            result = Classification(verdict=Verdict.POINT, dim=0, manifold=ManifoldStatus.MANIFOLD,
                                    homology=homology,
                                    evidence=("n = 1, r = 1: the quotient is a point",))
        logger.info(ClassifyMsg.VERDICT.value, result.label, result.dim)
        return result

    coloops = sorted(matroid_of(action).coloops())
    if coloops:
        result = Classification(verdict=Verdict.CONE, dim=dim, manifold=ManifoldStatus.CONTRACTIBLE,
                                homology=homology,
                                evidence=(f"coloop at column {coloops[0]}: quotient is a cone",))
        logger.info(ClassifyMsg.VERDICT.value, result.label, result.dim)
        return result

    parts = [_classify_factor(factor) for factor in join_decomposition(action)]
    if len(parts) == 1:
        result = parts[0].model_copy(update={"columns": None, "homology": homology})
    else:
        result = _combine(parts, homology)

    sphere, _ = is_homology_sphere(action)
    if result.is_sphere != sphere or (sphere and homology.poincare != UnivariatePolynomial.monomial(dim)):
        raise InvariantViolationError(
            f"verdict {result.label} disagrees with the homology sphere test ({sphere}, {homology.poincare})"
        )
    logger.info(ClassifyMsg.VERDICT.value, result.label, result.dim)
    return result
