"""
tutte.py

Two independent Tutte polynomial engines for represented matroids:

- tutte: memoized deletion-contraction with direct-sum splitting, loop and
  coloop stripping, and closed forms for rank-one and single-circuit blocks
- tutte_oracle: the corank-nullity subset sum, computed from fresh rank
  eliminations without the matroid's rank memo

plus the specializations used by the topology formulas.
"""

import os
import sys
import logging
import threading
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from itertools import combinations
from typing import Dict, Optional, Tuple

# Setup base directory for importing project modules
try:
    MAIN_DIR = os.path.abspath(os.path.join(os.path.dirname(__file__), "../.."))
    sys.path.append(MAIN_DIR)
except (ImportError, OSError) as e:
    logging.error("Failed to set up main directory path: %s", e)
    sys.exit(1)

from src.infra import setup_logging
from src.enums import TutteMsg, MatroidMsg
from src.helpers import get_settings, SubsetLimitError
from src.logic.matroid import RepresentedMatroid
from src.utils import BivariatePolynomial, UnivariatePolynomial, bareiss_rank

logger = setup_logging(name="TUTTE")

MemoKey = Tuple[Tuple[int, ...], Tuple[int, ...]]


def _uniform_rank_one(size: int) -> BivariatePolynomial:
    """T(U_{1,k}) = x + y + ... + y^{k-1}."""
    return BivariatePolynomial({(1, 0): 1, **{(0, j): 1 for j in range(1, size)}})


def _circuit(size: int) -> BivariatePolynomial:
    """T(U_{k-1,k}) = x + x^2 + ... + x^{k-1} + y."""
    return BivariatePolynomial({(0, 1): 1, **{(i, 0): 1 for i in range(1, size)}})


class DeletionContraction:
    """
    Memoized deletion-contraction for the minors of one matroid.

    The memo is keyed by (retained labels, contracted labels); equal keys
    are equal minors. Inserts are idempotent, so the memo may be shared by
    threads evaluating different direct-sum components.
    """

    def __init__(self):
        self._memo: Dict[MemoKey, BivariatePolynomial] = {}
        self._lock = threading.Lock()

    @property
    def memo_size(self) -> int:
        return len(self._memo)

    def evaluate(self, m: RepresentedMatroid) -> BivariatePolynomial:
        key = m.key
        with self._lock:
            cached = self._memo.get(key)
        if cached is not None:
            return cached

        result = self._compute(m)
        with self._lock:
            self._memo.setdefault(key, result)
        return result

    def _compute(self, m: RepresentedMatroid) -> BivariatePolynomial:
        if m.n == 0:
            return BivariatePolynomial.one()

        loops = m.loops()
        coloops = m.coloops()
        factor = BivariatePolynomial.y(len(loops)) * BivariatePolynomial.x(len(coloops))
        core = m
        for label in sorted(loops):
            core = core.delete(label)
        for label in sorted(coloops):
            core = core.contract(label)
        if core.n == 0:
            return factor
        if core is not m:
            return factor * self.evaluate(core)

        parts = m.components()
        if len(parts) > 1:
            result = BivariatePolynomial.one()
            for part in parts:
                result = result * self.evaluate(m.restrict(part))
            return result

        rank = m.rank()
        if rank == 1:
            return _uniform_rank_one(m.n)
        if rank == m.n - 1:
            return _circuit(m.n)

        pivot = min(m.labels)
        return self.evaluate(m.delete(pivot)) + self.evaluate(m.contract(pivot))


def tutte(m: RepresentedMatroid, workers: Optional[int] = None) -> BivariatePolynomial:
    """
    Tutte polynomial by deletion-contraction.

    Direct-sum components of the top-level matroid are evaluated on a thread
    pool when `workers` (default TUTTE_WORKERS) is above 1; the product is
    formed in component order so the result does not depend on scheduling.
    """
    settings = get_settings()
    workers = settings.TUTTE_WORKERS if workers is None else workers
    if m.n > settings.DELETION_CONTRACTION_WARN:
        logger.warning(TutteMsg.LARGE_GROUND_SET.value, m.n, settings.DELETION_CONTRACTION_WARN)

    engine = DeletionContraction()
    parts = m.components() if m.n else []
    if workers > 1 and len(parts) > 1:
        logger.info(TutteMsg.PARALLEL_COMPONENTS.value, len(parts), workers)
        with ThreadPoolExecutor(max_workers=workers) as pool:
            values = list(pool.map(engine.evaluate, (m.restrict(part) for part in parts)))
        result = BivariatePolynomial.one()
        for value in values:
            result = result * value
    else:
        result = engine.evaluate(m)
    logger.debug(TutteMsg.ENGINE_DONE.value, engine.memo_size, result)
    return result


def tutte_oracle(m: RepresentedMatroid, limit: Optional[int] = None) -> BivariatePolynomial:
    """
    Sum over all subsets A of (x-1)^{r(E)-r(A)} (y-1)^{|A|-r(A)}.

    Raises:
        SubsetLimitError: ground set larger than the limit.
    """
    limit = get_settings().ORACLE_SUBSET_LIMIT if limit is None else limit
    if m.n > limit:
        logger.error(MatroidMsg.LIMIT_EXCEEDED.value, "corank-nullity oracle", m.n, limit)
        raise SubsetLimitError(m.n, limit)

    columns = [m.column(label) for label in m.labels]

    def rank_of(indices) -> int:
        if not indices:
            return 0
        return bareiss_rank([[col[i] for col in (columns[j] for j in indices)] for i in range(len(m.matrix))])

    full = rank_of(tuple(range(m.n)))
    counts: Counter = Counter()
    for size in range(m.n + 1):
        for subset in combinations(range(m.n), size):
            r = rank_of(subset)
            counts[(full - r, size - r)] += 1

    x_minus_one = BivariatePolynomial.x() - 1
    y_minus_one = BivariatePolynomial.y() - 1
    result = BivariatePolynomial.zero()
    for (corank, nullity), count in sorted(counts.items()):
        result = result + count * (x_minus_one ** corank) * (y_minus_one ** nullity)
    logger.debug(TutteMsg.ORACLE_DONE.value, 2 ** m.n)
    return result


def specialize_y(p: BivariatePolynomial, x0: int) -> UnivariatePolynomial:
    """Substitute x := x0; the remaining variable y becomes t."""
    return p.at_x(x0)


def substitute_t_squared(q: UnivariatePolynomial) -> UnivariatePolynomial:
    return q.substitute_t_squared()


def tutte_at(m: RepresentedMatroid, x0: int, y0: int) -> int:
    return tutte(m).evaluate(x0, y0)


def check_coefficient_structure(p: UnivariatePolynomial, n: int, r: int) -> bool:
    """
    Normal form of T(M; 0, t^2) for a coloop-free matroid with n elements and
    rank r: leading term t^{2(n-r)} with coefficient 1, only even degrees,
    nonnegative coefficients, and nonzero coefficients forming one unbroken
    run of degrees down from the top.
    """
    top = n - r
    if p.degree != 2 * top or p.coefficient(2 * top) != 1:
        return False
    if any(e % 2 for e, _ in p.items()) or not p.has_nonnegative_coefficients():
        return False
    support = sorted(e // 2 for e, _ in p.items())
    return support == list(range(support[0], top + 1))


def is_direct_sum_of_circuits_by_tutte(m: RepresentedMatroid) -> bool:
    """T(M; 0, t) = t^{n-r}."""
    return specialize_y(tutte(m), 0) == UnivariatePolynomial.monomial(m.n - m.rank())
