"""
topology.py

Homology of the orbit space X = S^{2n-1}/T^r and of its rational singular
set, computed from the Tutte polynomial of the column matroid:

    P(X)  = t^{r-1} T(M; 0, t^2)
    P(S)  = t^{r-2} [T(M; 1, t^2) - T(M; 0, t^2)]

All polynomials are reduced Poincare polynomials. The empty space is
represented by None (its reduced polynomial would be t^{-1}); it is the
identity for joins, and a join with the empty sphere S^{-1} is the identity.
"""

import os
import sys
import logging
from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional, Tuple

# Setup base directory for importing project modules
try:
    MAIN_DIR = os.path.abspath(os.path.join(os.path.dirname(__file__), "../.."))
    sys.path.append(MAIN_DIR)
except (ImportError, OSError) as e:
    logging.error("Failed to set up main directory path: %s", e)
    sys.exit(1)

from src.infra import setup_logging
from src.enums import TopologyMsg
from src.helpers import get_settings, InvariantViolationError
from src.schema import (TorusAction,
                        Flat,
                        QuotientSummary,
                        WedgeSummand,
                        SingularStratum,
                        SingularSetSummary)
from src.utils import UnivariatePolynomial, BivariatePolynomial
from src.logic.action import require_effective, isotropy_of_subset
from src.logic.matroid import RepresentedMatroid, matroid_of
from src.logic.tutte import tutte, specialize_y

logger = setup_logging(name="TOPOLOGY")


def reduced_poincare(m: RepresentedMatroid,
                     polynomial: Optional[BivariatePolynomial] = None) -> Optional[UnivariatePolynomial]:
    """
    t^{r-1} T(M; 0, t^2) for a bare matroid; None for the empty matroid.

    Args:
        polynomial: the Tutte polynomial of m, when already known
    """
    if m.n == 0:
        return None
    polynomial = tutte(m) if polynomial is None else polynomial
    at_zero = specialize_y(polynomial, 0).substitute_t_squared()
    try:
        return at_zero.shift(m.rank() - 1)
    except ValueError as e:
        raise InvariantViolationError(f"quotient polynomial is not a polynomial: {e}") from e


def is_simply_connected(action: TorusAction) -> bool:
    """n >= 2 always; for n = 1 the quotient is a circle (r = 0) or a point."""
    if action.n >= 2:
        return True
    return action.r >= 1


def poincare_quotient(action: TorusAction, auto_reduce: bool = False) -> QuotientSummary:
    """
    Reduced homology of X.

    Raises:
        NonEffectiveActionError: the action has a kernel (after the optional
            row-gcd reduction).
    """
    action = require_effective(action, auto_reduce=auto_reduce)
    poincare = reduced_poincare(matroid_of(action))
    dimension = 2 * action.n - 1 - action.r
    logger.debug(TopologyMsg.QUOTIENT_POINCARE.value, dimension, poincare)
    return QuotientSummary.of(dimension, poincare, is_simply_connected(action))


def join_poincare(p: Optional[UnivariatePolynomial],
                  q: Optional[UnivariatePolynomial]) -> Optional[UnivariatePolynomial]:
    """Reduced polynomial of a join: t * P(X) * P(Y); None is the empty space."""
    if p is None:
        return q
    if q is None:
        return p
    return (p * q).shift(1)


def sphere_wedge_poincare(multiplicity: int, dim: int) -> Optional[UnivariatePolynomial]:
    """
    Reduced polynomial of a wedge of `multiplicity` spheres S^dim.

    dim = -1 is the empty sphere (the multiplicity is always 1 there) and
    gives None; zero spheres give a point.
    """
    if dim < -1:
        raise ValueError(f"sphere dimension must be >= -1, got {dim}")
    if dim == -1:
        return None
    return UnivariatePolynomial.monomial(dim, multiplicity)


def _singular_formula(m: RepresentedMatroid,
                      polynomial: BivariatePolynomial) -> Tuple[UnivariatePolynomial, bool, bool]:
    """(polynomial, formula applicable, singular set empty)."""
    rank = m.rank()
    if rank == 0:
        return UnivariatePolynomial.zero(), False, True
    bracket = (specialize_y(polynomial, 1) - specialize_y(polynomial, 0)).substitute_t_squared()
    if rank == 1 and not m.loops():
        logger.debug(TopologyMsg.SINGULAR_EMPTY.value, rank)
        return UnivariatePolynomial.zero(), False, True
    try:
        return bracket.shift(rank - 2), True, False
    except ValueError as e:
        raise InvariantViolationError(f"singular polynomial is not a polynomial: {e}") from e


def poincare_singular(action: TorusAction) -> UnivariatePolynomial:
    """
    t^{r-2} [T(M; 1, t^2) - T(M; 0, t^2)], or 0 when the singular set is
    empty (r = 0, or r = 1 without loops).
    """
    m = matroid_of(action)
    value, applicable, _ = _singular_formula(m, tutte(m))
    if not applicable:
        logger.info(TopologyMsg.FORMULA_NOT_APPLICABLE.value, m.rank() - 2)
    return value


def _summand(m: RepresentedMatroid, rank: int, flat: Flat) -> WedgeSummand:
    multiplicity = tutte(m.contract_set(flat.elements)).evaluate(1, 0)
    sphere_dim = rank - flat.rank - 2
    flat_poincare = reduced_poincare(m.restrict(flat.elements))
    return WedgeSummand(flat=flat,
                        multiplicity=multiplicity,
                        sphere_dim=sphere_dim,
                        flat_quotient_poincare=flat_poincare,
                        contribution=join_poincare(flat_poincare, sphere_wedge_poincare(multiplicity, sphere_dim)))


def singular_wedge(action: TorusAction,
                   limit: Optional[int] = None,
                   workers: Optional[int] = None) -> List[WedgeSummand]:
    """
    One summand X_F * (wedge of |mu(M/F)| spheres S^{r-r(F)-2}) per flat F
    other than the ground set, in lattice order.
    """
    m = matroid_of(action)
    rank = m.rank()
    proper = [flat for flat in m.flat_lattice(limit).flats if flat.rank < rank]
    workers = get_settings().TUTTE_WORKERS if workers is None else workers
    if workers > 1 and len(proper) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            summands = list(pool.map(lambda flat: _summand(m, rank, flat), proper))
    else:
        summands = [_summand(m, rank, flat) for flat in proper]
    logger.debug(TopologyMsg.WEDGE_SUMMANDS.value, len(summands))
    return summands


def aggregate_wedge(summands: List[WedgeSummand]) -> Optional[UnivariatePolynomial]:
    """Reduced polynomial of the wedge of all summands; None if every summand is empty."""
    nonempty = [s.contribution for s in summands if s.contribution is not None]
    if not nonempty:
        return None
    total = UnivariatePolynomial.zero()
    for contribution in nonempty:
        total = total + contribution
    return total


def singular_strata(action: TorusAction, limit: Optional[int] = None) -> List[SingularStratum]:
    """
    One stratum per nonempty hyperplane H, of dimension 2|H| - r(M).

    Raises:
        NonEffectiveActionError: the action has a kernel.
    """
    action = require_effective(action)
    m = matroid_of(action)
    rank = m.rank()
    strata = []
    for hyperplane in m.hyperplanes(limit):
        if not hyperplane.elements:
            continue
        strata.append(SingularStratum(hyperplane=hyperplane,
                                      dimension=2 * len(hyperplane.elements) - rank,
                                      isotropy=isotropy_of_subset(action, hyperplane.elements)))
    return strata


def singular_summary(action: TorusAction,
                     limit: Optional[int] = None,
                     auto_reduce: bool = False) -> SingularSetSummary:
    """
    Strata, wedge decomposition and homology of the singular set, with the
    closed formula cross-checked against the wedge.

    Raises:
        NonEffectiveActionError: the action has a kernel.
        InvariantViolationError: formula and wedge disagree.
    """
    action = require_effective(action, auto_reduce=auto_reduce)
    m = matroid_of(action)
    formula, applicable, empty = _singular_formula(m, tutte(m))
    wedge = singular_wedge(action, limit)
    aggregated = aggregate_wedge(wedge)

    if (aggregated is None) != empty or (aggregated is not None and aggregated != formula):
        raise InvariantViolationError(
            f"singular set formula gives {formula} but the wedge gives {aggregated}"
        )
    if not applicable:
        logger.info(TopologyMsg.FORMULA_NOT_APPLICABLE.value, m.rank() - 2)
    return SingularSetSummary(strata=tuple(singular_strata(action, limit)),
                              wedge=tuple(wedge),
                              poincare=formula,
                              empty=empty,
                              formula_applicable=applicable)


def convolution_check(m: RepresentedMatroid, limit: Optional[int] = None) -> bool:
    """T(M; 1, y) == sum over flats F of T(M/F; 1, 0) * T(M|F; 0, y)."""
    left = specialize_y(tutte(m), 1)
    right = UnivariatePolynomial.zero()
    lattice = m.flat_lattice(limit)
    for flat in lattice.flats:
        quotient = tutte(m.contract_set(flat.elements)).evaluate(1, 0)
        right = right + quotient * specialize_y(tutte(m.restrict(flat.elements)), 0)
    holds = left == right
    logger.debug(TopologyMsg.CONVOLUTION.value, len(lattice.flats), holds)
    return holds


def poincare_deletion_contraction(m: RepresentedMatroid) -> bool:
    """P(X_M) = P(X_{M-e}) + t P(X_{M/e}) for every e neither loop nor coloop."""
    whole = reduced_poincare(m)
    t = UnivariatePolynomial.monomial(1)
    fixed = m.loops() | m.coloops()
    for label in m.labels:
        if label in fixed:
            continue
        if whole != reduced_poincare(m.delete(label)) + t * reduced_poincare(m.contract(label)):
            return False
    return True


def poincare_duality_defect(poincare: UnivariatePolynomial, dim: int) -> List[int]:
    """
    Degrees k where b_k != b_{dim-k} for the unreduced Betti numbers of a
    space with the given reduced polynomial; empty for a closed orientable
    manifold candidate.
    """
    def unreduced(k: int) -> int:
        return poincare.coefficient(k) + (1 if k == 0 else 0)

    return [k for k in range(dim + 1) if unreduced(k) != unreduced(dim - k)]
