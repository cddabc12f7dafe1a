"""
action.py

The weight matrix of a diagonalized torus action T^r -> S^{2n-1} and the
integer algebra attached to it:

- parsing the text and JSON matrix formats
- Smith normal form with unimodular transforms
- effectiveness and the kernel of the action
- row-gcd reduction and the isometry-preserving matrix moves
- isotropy groups of invariant circles and of the strata S^A

All functions are pure; TorusAction instances are frozen.
"""

import os
import re
import sys
import json
import logging
from collections import Counter
from itertools import combinations
from typing import Iterable, List, Optional, Sequence, Tuple, Union

# Setup base directory for importing project modules
try:
    MAIN_DIR = os.path.abspath(os.path.join(os.path.dirname(__file__), "../.."))
    sys.path.append(MAIN_DIR)
except (ImportError, OSError) as e:
    logging.error("Failed to set up main directory path: %s", e)
    sys.exit(1)

from pydantic import ValidationError

from src.infra import setup_logging
from src.enums import ActionMsg
from src.enums.value_enums import MoveKind
from src.helpers import (get_settings,
                         MatrixParseError,
                         InvalidMoveError,
                         EmptySubsetError,
                         UnknownLabelError,
                         NonEffectiveActionError,
                         SubsetLimitError)
from src.schema import TorusAction, SmithDecomposition, IsotropyGroup, Move
from src.utils import gcd_all, smith_diagonalize, bareiss_rank

logger = setup_logging(name="ACTION")

_INTEGER = re.compile(r"^[+-]?\d+$")


def parse_action(text: str) -> TorusAction:
    """
    Parse a weight matrix.

    Accepted formats:
        - whitespace separated integers, one row per line ("1 0 1\\n0 1 1")
        - JSON {"rows": [[...], ...]} with an optional "cols" key, which is
          required when there are no rows (trivial torus)

    Raises:
        MatrixParseError: ragged rows, non-integer tokens, or no columns.
    """
    logger.debug(ActionMsg.PARSE_START.value, len(text))
    try:
        if text.lstrip().startswith("{"):
            action = _parse_json(text)
        else:
            action = _parse_text(text)
    except MatrixParseError as e:
        logger.error(ActionMsg.PARSE_FAILED.value, e)
        raise
    logger.debug(ActionMsg.PARSE_SUCCESS.value, action.r, action.n)
    return action


def _parse_text(text: str) -> TorusAction:
    rows: List[List[int]] = []
    for line_no, line in enumerate(text.strip().splitlines(), start=1):
        tokens = line.split()
        if not tokens:
            continue
        bad = [t for t in tokens if not _INTEGER.match(t)]
        if bad:
            raise MatrixParseError(f"line {line_no}: non-integer token {bad[0]!r}")
        rows.append([int(t) for t in tokens])
    if not rows:
        raise MatrixParseError("matrix has no columns")
    return _build(rows, len(rows[0]))


def _parse_json(text: str) -> TorusAction:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as e:
        raise MatrixParseError(f"invalid JSON: {e}") from e
    if not isinstance(payload, dict) or not isinstance(payload.get("rows"), list):
        raise MatrixParseError('JSON matrix must be an object with a "rows" list')
    rows = payload["rows"]
    for row in rows:
        if not isinstance(row, list) or any(type(v) is not int for v in row):
            raise MatrixParseError(f"row {row!r} is not a list of integers")
    n = payload.get("cols", len(rows[0]) if rows else None)
    if type(n) is not int or n < 1:
        raise MatrixParseError("matrix has no columns")
    return _build(rows, n)


def _build(rows: Sequence[Sequence[int]], n: int) -> TorusAction:
    for index, row in enumerate(rows):
        if len(row) != n:
            raise MatrixParseError(f"ragged matrix: row {index} has {len(row)} entries, expected {n}")
    try:
        return TorusAction.from_rows(rows, n=n)
    except ValidationError as e:
        raise MatrixParseError(str(e)) from e


def smith_normal_form(matrix: Union[TorusAction, Sequence[Sequence[int]]],
                      n_cols: Optional[int] = None) -> SmithDecomposition:
    """
    Smith decomposition U*Z*V = diag(d_1, ..., d_k, 0, ...).

    Args:
        matrix: a TorusAction or a list of integer rows
        n_cols: column count, needed only for a raw matrix without rows
    """
    if isinstance(matrix, TorusAction):
        rows, n_cols = matrix.matrix, matrix.n
    else:
        rows = matrix
        if n_cols is None:
            n_cols = len(rows[0]) if rows else 0
    u, diag, v = smith_diagonalize(rows, n_cols)
    logger.debug(ActionMsg.SNF_DONE.value, len(rows), n_cols, diag)
    return SmithDecomposition(left=tuple(map(tuple, u)), diag=tuple(diag), right=tuple(map(tuple, v)))


def _kernel_from_snf(r: int, snf: SmithDecomposition) -> IsotropyGroup:
    return IsotropyGroup.from_invariant_factors(r - snf.rank, snf.diag)


def is_effective(action: TorusAction) -> Tuple[bool, IsotropyGroup]:
    """
    True iff the columns generate Z^r (r invariant factors, all 1).

    Returns:
        (effective, kernel); the kernel is the trivial group when effective.
    """
    kernel = _kernel_from_snf(action.r, smith_normal_form(action))
    return kernel.is_trivial, kernel


def require_effective(action: TorusAction, auto_reduce: bool = False) -> TorusAction:
    """
    Return an effective action or raise NonEffectiveActionError.

    With auto_reduce the rows are first divided by their gcds.
    """
    if auto_reduce:
        action = reduce_noneffective(action)
    effective, kernel = is_effective(action)
    if not effective:
        logger.warning(ActionMsg.NOT_EFFECTIVE.value, kernel)
        raise NonEffectiveActionError(kernel)
    return action


def reduce_noneffective_with_log(action: TorusAction) -> Tuple[TorusAction, List[Move]]:
    """Divide every row by the gcd of its entries; zero rows are kept."""
    rows, log = [], []
    for index, row in enumerate(action.matrix):
        g = gcd_all(row)
        if g > 1:
            rows.append(tuple(v // g for v in row))
            log.append(Move(kind=MoveKind.DIVIDE_ROW, first=index, multiplier=g))
            logger.info(ActionMsg.ROW_DIVIDED.value, index, g)
        else:
            rows.append(row)
    return TorusAction(matrix=tuple(rows), n=action.n), log


def reduce_noneffective(action: TorusAction) -> TorusAction:
    """
    Remove the per-row kernels by dividing each row by its gcd.

    Only row-wise kernels disappear; effectiveness must be re-checked with
    is_effective.
    """
    return reduce_noneffective_with_log(action)[0]


def _check_index(value: Optional[int], bound: int, what: str, move: MoveKind) -> int:
    if value is None or not 0 <= value < bound:
        message = f"{what} index {value} out of range [0, {bound})"
        logger.error(ActionMsg.MOVE_REJECTED.value, move.value, message)
        raise InvalidMoveError(message)
    return value


def canonical_moves(action: TorusAction,
                    move: Union[MoveKind, str],
                    first: int,
                    second: Optional[int] = None,
                    multiplier: int = 1) -> TorusAction:
    """
    Apply one of the five moves that preserve the quotient up to isometry.

    Args:
        move: swap_rows, swap_cols, negate_row, negate_col or add_row_multiple
        first, second: row/column indices; for add_row_multiple, row `second`
            receives `multiplier` times row `first`

    Raises:
        InvalidMoveError: out-of-range index, equal rows for add_row_multiple,
            or a move outside the five.
    """
    try:
        move = MoveKind(move)
    except ValueError as e:
        raise InvalidMoveError(f"unknown move {move!r}; expected one of {sorted(MoveKind.values())}") from e
    if move not in MoveKind.elementary_moves():
        raise InvalidMoveError(f"{move.value} is not one of the isometry-preserving moves")

    rows = [list(row) for row in action.matrix]
    if move is MoveKind.SWAP_ROWS:
        i = _check_index(first, action.r, "row", move)
        j = _check_index(second, action.r, "row", move)
        rows[i], rows[j] = rows[j], rows[i]
    elif move is MoveKind.SWAP_COLS:
        i = _check_index(first, action.n, "column", move)
        j = _check_index(second, action.n, "column", move)
        for row in rows:
            row[i], row[j] = row[j], row[i]
    elif move is MoveKind.NEGATE_ROW:
        i = _check_index(first, action.r, "row", move)
        rows[i] = [-v for v in rows[i]]
    elif move is MoveKind.NEGATE_COL:
        j = _check_index(first, action.n, "column", move)
        for row in rows:
            row[j] = -row[j]
    else:
        source = _check_index(first, action.r, "row", move)
        target = _check_index(second, action.r, "row", move)
        if source == target:
            logger.error(ActionMsg.MOVE_REJECTED.value, move.value, "source equals target")
            raise InvalidMoveError("add_row_multiple needs distinct source and target rows")
        rows[target] = [t + multiplier * s for t, s in zip(rows[target], rows[source])]

    logger.debug(ActionMsg.MOVE_APPLIED.value, move.value)
    return TorusAction(matrix=tuple(map(tuple, rows)), n=action.n)


def apply_move(action: TorusAction, move: Move) -> TorusAction:
    """Apply a recorded Move, including divide_row."""
    if move.kind is MoveKind.DIVIDE_ROW:
        i = _check_index(move.first, action.r, "row", move.kind)
        divisor = move.multiplier
        if divisor == 0 or any(v % divisor for v in action.matrix[i]):
            raise InvalidMoveError(f"{divisor} does not divide row {i}")
        rows = list(action.matrix)
        rows[i] = tuple(v // divisor for v in rows[i])
        return TorusAction(matrix=tuple(rows), n=action.n)
    return canonical_moves(action, move.kind, move.first, move.second, move.multiplier)


def apply_moves(action: TorusAction, moves: Iterable[Move]) -> TorusAction:
    for move in moves:
        action = apply_move(action, move)
    return action


def canonicalize(action: TorusAction) -> Tuple[TorusAction, List[Move]]:
    """
    Tidy a matrix with logged moves: row-gcd division, first nonzero entry of
    each column made positive, and for r = 1 the weights sorted descending.

    This is a presentation aid, not a normal form for the move group.
    """
    action, log = reduce_noneffective_with_log(action)
    for j in range(action.n):
        leading = next((v for v in action.column(j) if v != 0), 0)
        if leading < 0:
            move = Move(kind=MoveKind.NEGATE_COL, first=j)
            action = apply_move(action, move)
            log.append(move)
    if action.r == 1:
        # selection sort; each swap is logged
        for i in range(action.n):
            weights = action.matrix[0]
            best = max(range(i, action.n), key=lambda j: (weights[j], -j))
            if weights[best] > weights[i]:
                move = Move(kind=MoveKind.SWAP_COLS, first=i, second=best)
                action = apply_move(action, move)
                log.append(move)
    return action, log


def _check_column(action: TorusAction, j: int) -> int:
    if not 0 <= j < action.n:
        logger.error(ActionMsg.UNKNOWN_COLUMN.value, j, action.n)
        raise UnknownLabelError(f"column {j} out of range [0, {action.n})")
    return j


def isotropy_of_circle(action: TorusAction, j: int) -> IsotropyGroup:
    """
    Stabilizer of a point on the invariant circle S_j.

    A zero column is fixed by the whole torus; otherwise the stabilizer is
    T^{r-1} x Z_g with g the gcd of the column.
    """
    _check_column(action, j)
    g = gcd_all(action.column(j))
    if g == 0:
        return IsotropyGroup(torus_rank=action.r)
    return IsotropyGroup.from_invariant_factors(action.r - 1, [g])


def isotropy_of_subset(action: TorusAction, subset: Iterable[int]) -> IsotropyGroup:
    """
    Stabilizer of a generic point of S^A, read off the Smith form of Z_A.

    Raises:
        EmptySubsetError: for an empty subset.
    """
    columns = sorted(set(subset))
    if not columns:
        raise EmptySubsetError("isotropy_of_subset needs a nonempty column subset")
    for j in columns:
        _check_column(action, j)
    sub = [[row[j] for j in columns] for row in action.matrix]
    return _kernel_from_snf(action.r, smith_normal_form(sub, len(columns)))


def is_rationally_singular(action: TorusAction, subset: Iterable[int]) -> bool:
    """Generic points of S^A have infinite isotropy iff A does not span."""
    columns = sorted(set(subset))
    sub = [[row[j] for j in columns] for row in action.matrix]
    return bareiss_rank(sub) < action.r


def isotropy_spectrum(action: TorusAction, limit: Optional[int] = None) -> List[Tuple[IsotropyGroup, int]]:
    """
    All isotropy types of the action with the number of strata S^A carrying
    each, ordered by (torus rank descending, finite factors).

    Raises:
        SubsetLimitError: when n exceeds the subset limit.
    """
    limit = get_settings().ORACLE_SUBSET_LIMIT if limit is None else limit
    if action.n > limit:
        raise SubsetLimitError(action.n, limit)
    counts: Counter = Counter()
    for size in range(1, action.n + 1):
        for subset in combinations(range(action.n), size):
            counts[isotropy_of_subset(action, subset)] += 1
    logger.debug(ActionMsg.SPECTRUM_SIZE.value, sum(counts.values()), len(counts))
    return sorted(counts.items(), key=lambda item: (-item[0].torus_rank, item[0].finite_factors))
