"""
Exact integer linear algebra.

Everything here works on plain nested lists/tuples of Python ints, so entries
grow without overflow. Provided helpers:

- gcd_all: gcd of a sequence (0 for an empty or all-zero sequence)
- bareiss_rank / bareiss_determinant: fraction-free Gaussian elimination
- reduce_column: Euclidean row reduction leaving one nonzero entry in a column
- integer_row_echelon: echelon form using unimodular row operations only
- smith_diagonalize: Smith normal form with both unimodular transforms
- mat_mul / identity: small matrix utilities (zero-size matrices allowed)
"""

from functools import reduce
from math import gcd
from typing import List, Optional, Sequence, Tuple

Matrix = List[List[int]]


def gcd_all(values: Sequence[int]) -> int:
    """gcd of all values; 0 when there are none or all are zero."""
    return reduce(gcd, values, 0)


def identity(size: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(size)] for i in range(size)]


def mat_mul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]], cols: Optional[int] = None) -> Matrix:
    """Product a*b. `cols` gives the column count of b when b has no rows."""
    if cols is None:
        cols = len(b[0]) if b else 0
    return [[sum(row[k] * b[k][j] for k in range(len(b))) for j in range(cols)] for row in a]


def bareiss_rank(rows: Sequence[Sequence[int]]) -> int:
    """
    Rank over the rationals by fraction-free elimination.

    Every intermediate entry is a minor of the input, so the division by the
    previous pivot is exact.
    """
    m = [list(row) for row in rows]
    if not m or not m[0]:
        return 0
    n_rows, n_cols = len(m), len(m[0])
    rank, previous = 0, 1
    for col in range(n_cols):
        pivot = next((i for i in range(rank, n_rows) if m[i][col] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        p = m[rank][col]
        for i in range(rank + 1, n_rows):
            factor = m[i][col]
            for j in range(col + 1, n_cols):
                m[i][j] = (p * m[i][j] - factor * m[rank][j]) // previous
            m[i][col] = 0
        previous = p
        rank += 1
        if rank == n_rows:
            break
    return rank


def bareiss_determinant(square: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix (1 for the 0x0 matrix)."""
    m = [list(row) for row in square]
    n = len(m)
    if n == 0:
        return 1
    sign, previous = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) // previous
        previous = m[k][k]
    return sign * m[n - 1][n - 1]


def _reduce_column_from(m: Matrix, col: int, start: int) -> Optional[int]:
    """Euclid on rows >= start of column col; returns the surviving row or None."""
    while True:
        nonzero = [i for i in range(start, len(m)) if m[i][col] != 0]
        if len(nonzero) <= 1:
            return nonzero[0] if nonzero else None
        p = min(nonzero, key=lambda i: (abs(m[i][col]), i))
        for i in nonzero:
            if i == p:
                continue
            q = m[i][col] // m[p][col]
            m[i] = [a - q * b for a, b in zip(m[i], m[p])]


def reduce_column(rows: Sequence[Sequence[int]], col: int) -> Tuple[Matrix, Optional[int]]:
    """
    Unimodular row operations making column `col` have at most one nonzero
    entry, whose absolute value is the gcd of the column.

    Returns:
        (reduced rows, index of the nonzero row or None for a zero column)
    """
    m = [list(row) for row in rows]
    return m, _reduce_column_from(m, col, 0)


def integer_row_echelon(rows: Sequence[Sequence[int]]) -> Matrix:
    """
    Row echelon form over the integers (unimodular row operations only).
    Nonzero rows come first and each pivot is positive.
    """
    m = [list(row) for row in rows]
    if not m:
        return m
    k = 0
    for col in range(len(m[0])):
        if k == len(m):
            break
        surviving = _reduce_column_from(m, col, k)
        if surviving is None:
            continue
        m[k], m[surviving] = m[surviving], m[k]
        if m[k][col] < 0:
            m[k] = [-a for a in m[k]]
        k += 1
    return m


def _row_add(m: Matrix, target: int, source: int, factor: int) -> None:
    m[target] = [a + factor * b for a, b in zip(m[target], m[source])]


def _col_add(m: Matrix, target: int, source: int, factor: int) -> None:
    for row in m:
        row[target] += factor * row[source]


def _swap_rows(m: Matrix, i: int, j: int) -> None:
    m[i], m[j] = m[j], m[i]


def _swap_cols(m: Matrix, i: int, j: int) -> None:
    for row in m:
        row[i], row[j] = row[j], row[i]


def smith_diagonalize(rows: Sequence[Sequence[int]], n_cols: int) -> Tuple[Matrix, List[int], Matrix]:
    """
    Smith normal form U * A * V = D.

    Pivot rule: the nonzero entry of smallest absolute value, ties broken by
    the lowest (row, col); the same rule picks the next pivot whenever a
    remainder survives in the pivot row or column. Output is deterministic.

    Returns:
        (U, invariant factors, V)
    """
    a = [list(row) for row in rows]
    n_rows = len(a)
    u, v = identity(n_rows), identity(n_cols)
    diag: List[int] = []

    for t in range(min(n_rows, n_cols)):
        candidates = [(abs(a[i][j]), i, j) for i in range(t, n_rows)
                      for j in range(t, n_cols) if a[i][j] != 0]
        if not candidates:
            break
        _, i, j = min(candidates)
        _swap_rows(a, t, i)
        _swap_rows(u, t, i)
        _swap_cols(a, t, j)
        _swap_cols(v, t, j)

        while True:
            for i in range(t + 1, n_rows):
                if a[i][t]:
                    q = a[i][t] // a[t][t]
                    _row_add(a, i, t, -q)
                    _row_add(u, i, t, -q)
            for j in range(t + 1, n_cols):
                if a[t][j]:
                    q = a[t][j] // a[t][t]
                    _col_add(a, j, t, -q)
                    _col_add(v, j, t, -q)

            leftovers = [(abs(a[t][j]), t, j) for j in range(t + 1, n_cols) if a[t][j]]
            leftovers += [(abs(a[i][t]), i, t) for i in range(t + 1, n_rows) if a[i][t]]
            if leftovers:
                _, i, j = min(leftovers)
                if i != t:
                    _swap_rows(a, t, i)
                    _swap_rows(u, t, i)
                else:
                    _swap_cols(a, t, j)
                    _swap_cols(v, t, j)
                continue

            offender = next(((i, j) for i in range(t + 1, n_rows) for j in range(t + 1, n_cols)
                             if a[i][j] % a[t][t] != 0), None)
            if offender is None:
                break
            _row_add(a, t, offender[0], 1)
            _row_add(u, t, offender[0], 1)

        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
        diag.append(a[t][t])

    return u, diag, v
