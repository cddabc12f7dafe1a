from functools import reduce
from itertools import combinations
from math import gcd

import pytest
from hypothesis import given, strategies as st
from sympy import Matrix

from src.utils import (gcd_all,
                       mat_mul,
                       bareiss_rank,
                       bareiss_determinant,
                       reduce_column,
                       integer_row_echelon,
                       smith_diagonalize)

ENTRY = st.integers(min_value=-6, max_value=6)


@st.composite
def int_matrices(draw, max_rows=4, max_cols=5):
    r = draw(st.integers(min_value=1, max_value=max_rows))
    n = draw(st.integers(min_value=1, max_value=max_cols))
    return draw(st.lists(st.lists(ENTRY, min_size=n, max_size=n), min_size=r, max_size=r))


@st.composite
def square_matrices(draw, max_size=4):
    k = draw(st.integers(min_value=1, max_value=max_size))
    return draw(st.lists(st.lists(ENTRY, min_size=k, max_size=k), min_size=k, max_size=k))


def determinantal_invariant_factors(rows):
    """Invariant factors as ratios of gcds of k x k minors."""
    m = Matrix(rows)
    divisors = [1]
    for k in range(1, min(m.shape) + 1):
        minors = [m.extract(list(rs), list(cs)).det()
                  for rs in combinations(range(m.rows), k)
                  for cs in combinations(range(m.cols), k)]
        g = reduce(gcd, (abs(int(d)) for d in minors), 0)
        if g == 0:
            break
        divisors.append(g)
    return [divisors[i + 1] // divisors[i] for i in range(len(divisors) - 1)]


def test_gcd_all():
    assert gcd_all([4, 6, -8]) == 2
    assert gcd_all([0, 0]) == 0
    assert gcd_all([]) == 0


@pytest.mark.parametrize("rows, expected", [
    ([[1, 0, 1], [0, 1, 1]], 2),
    ([[0, 0]], 0),
    ([[2, 4], [1, 2]], 1),
    ([], 0),
])
def test_bareiss_rank_examples(rows, expected):
    assert bareiss_rank(rows) == expected


@pytest.mark.property_based
@given(int_matrices())
def test_bareiss_rank_matches_sympy(rows):
    assert bareiss_rank(rows) == Matrix(rows).rank()


@pytest.mark.property_based
@given(square_matrices())
def test_bareiss_determinant_matches_sympy(rows):
    assert bareiss_determinant(rows) == Matrix(rows).det()


def test_determinant_of_empty_matrix_is_one():
    assert bareiss_determinant([]) == 1


@pytest.mark.parametrize("rows, n_cols, diag", [
    ([[2, 4]], 2, [2]),
    ([[1, 0], [0, 1]], 2, [1, 1]),
    ([[2, 0], [0, 3]], 2, [1, 6]),
    ([[0, 0, 0]], 3, []),
    ([], 3, []),
])
def test_smith_examples(rows, n_cols, diag):
    assert smith_diagonalize(rows, n_cols)[1] == diag


@pytest.mark.property_based
@given(int_matrices())
def test_smith_decomposition_reproduces_diagonal(rows):
    n_cols = len(rows[0])
    u, diag, v = smith_diagonalize(rows, n_cols)
    product = mat_mul(mat_mul(u, rows, n_cols), v, n_cols)
    expected = [[diag[i] if i == j and i < len(diag) else 0 for j in range(n_cols)] for i in range(len(rows))]
    assert product == expected
    assert abs(Matrix(u).det()) == 1
    assert abs(Matrix(v).det()) == 1
    assert all(d > 0 for d in diag)
    assert all(b % a == 0 for a, b in zip(diag, diag[1:]))


@pytest.mark.property_based
@given(int_matrices(max_rows=3, max_cols=4))
def test_smith_matches_determinantal_divisors(rows):
    assert smith_diagonalize(rows, len(rows[0]))[1] == determinantal_invariant_factors(rows)


def test_smith_is_deterministic():
    rows = [[4, 6, 2], [2, 2, 8]]
    assert smith_diagonalize(rows, 3) == smith_diagonalize(rows, 3)


@pytest.mark.property_based
@given(int_matrices(), st.data())
def test_reduce_column_leaves_gcd(rows, data):
    col = data.draw(st.integers(min_value=0, max_value=len(rows[0]) - 1))
    reduced, pivot = reduce_column(rows, col)
    column = [row[col] for row in reduced]
    g = gcd_all([row[col] for row in rows])
    if g == 0:
        assert pivot is None
    else:
        assert abs(column[pivot]) == g
        assert sum(1 for v in column if v) == 1
    assert Matrix(reduced).rank() == Matrix(rows).rank()


@pytest.mark.property_based
@given(int_matrices())
def test_integer_row_echelon_shape(rows):
    echelon = integer_row_echelon(rows)
    rank = Matrix(rows).rank()
    nonzero = [row for row in echelon if any(row)]
    assert len(nonzero) == rank
    assert echelon[:rank] == nonzero
    leads = [next(j for j, v in enumerate(row) if v) for row in nonzero]
    assert leads == sorted(set(leads))
    assert all(row[lead] > 0 for row, lead in zip(nonzero, leads))
