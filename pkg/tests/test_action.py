import json
from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from src.enums.value_enums import MoveKind
from src.helpers import (MatrixParseError,
                         InvalidMoveError,
                         EmptySubsetError,
                         UnknownLabelError,
                         NonEffectiveActionError,
                         SubsetLimitError)
from src.schema import TorusAction, IsotropyGroup, Move
from src.logic import (parse_action,
                       smith_normal_form,
                       is_effective,
                       require_effective,
                       reduce_noneffective,
                       canonical_moves,
                       apply_move,
                       apply_moves,
                       canonicalize,
                       isotropy_of_circle,
                       isotropy_of_subset,
                       isotropy_spectrum,
                       is_rationally_singular,
                       matroid_of)
from tests.strategies import actions


def action(*rows) -> TorusAction:
    return TorusAction.from_rows(rows)


# --- parsing ---

@pytest.mark.parametrize("text, rows", [
    ("1 1 1", ((1, 1, 1),)),
    ("2 3", ((2, 3),)),
    ("1 0 1\n0 1 1\n", ((1, 0, 1), (0, 1, 1))),
    ("  -2  +3 \n\n", ((-2, 3),)),
])
def test_parse_text(text, rows):
    assert parse_action(text).matrix == rows


@pytest.mark.parametrize("text", [
    "1 0\n0 1\n1",
    "1 x",
    "1.5 2",
    "",
    "   \n  ",
])
def test_parse_rejects_malformed_text(text):
    with pytest.raises(MatrixParseError):
        parse_action(text)


def test_parse_json():
    parsed = parse_action(json.dumps({"rows": [[1, 0, 1], [0, 1, 1]]}))
    assert parsed.r == 2 and parsed.n == 3


def test_parse_json_trivial_torus_needs_cols():
    parsed = parse_action('{"rows": [], "cols": 1}')
    assert parsed.r == 0 and parsed.n == 1
    with pytest.raises(MatrixParseError):
        parse_action('{"rows": []}')


@pytest.mark.parametrize("text", [
    '{"rows": [[1, 2], [3]]}',
    '{"rows": [[1, true]]}',
    '{"rows": [[1.0, 2]]}',
    '{"matrix": [[1]]}',
    '{"rows": [[1, 2]], "cols": 3}',
    '{"rows": ',
])
def test_parse_rejects_malformed_json(text):
    with pytest.raises(MatrixParseError):
        parse_action(text)


def test_action_rejects_booleans():
    with pytest.raises(ValueError):
        TorusAction(matrix=((True, 1),), n=2)


# --- Smith normal form and effectiveness ---

@pytest.mark.parametrize("rows, diag", [
    ([[2, 4]], (2,)),
    ([[1, 0], [0, 1]], (1, 1)),
    ([[2, 0], [0, 3]], (1, 6)),
])
def test_smith_normal_form(rows, diag):
    assert smith_normal_form(TorusAction.from_rows(rows)).diag == diag


def test_smith_normal_form_of_raw_matrix_without_rows():
    snf = smith_normal_form([], n_cols=2)
    assert snf.diag == () and snf.right == ((1, 0), (0, 1))


@pytest.mark.parametrize("rows, effective, kernel", [
    ([[1, 1]], True, IsotropyGroup()),
    ([[2, 4]], False, IsotropyGroup(finite_factors=(2,))),
    ([[2, 0], [0, 3]], False, IsotropyGroup(finite_factors=(6,))),
    ([[1, 1], [2, 2]], False, IsotropyGroup(torus_rank=1)),
])
def test_is_effective(rows, effective, kernel):
    assert is_effective(TorusAction.from_rows(rows)) == (effective, kernel)


def test_trivial_torus_is_effective():
    assert is_effective(TorusAction(matrix=(), n=1))[0]


def test_require_effective_raises_with_kernel():
    with pytest.raises(NonEffectiveActionError) as info:
        require_effective(action([2, 4]))
    assert info.value.kernel == IsotropyGroup(finite_factors=(2,))
    assert require_effective(action([2, 4]), auto_reduce=True) == action([1, 2])


@pytest.mark.parametrize("rows, reduced", [
    ([[2, 4]], ((1, 2),)),
    ([[1, 1]], ((1, 1),)),
    ([[3, 6, 9]], ((1, 2, 3),)),
    ([[0, 0], [4, 2]], ((0, 0), (2, 1))),
])
def test_reduce_noneffective(rows, reduced):
    assert reduce_noneffective(TorusAction.from_rows(rows)).matrix == reduced


def test_reduction_does_not_fix_mixed_kernels():
    reduced = reduce_noneffective(action([2, 0], [0, 3]))
    assert reduced.matrix == ((1, 0), (0, 1))
    assert not is_effective(action([1, 1], [1, -1]))[0]
    assert reduce_noneffective(action([1, 1], [1, -1])) == action([1, 1], [1, -1])


# --- moves ---

def test_negate_col():
    assert canonical_moves(action([2, 3]), MoveKind.NEGATE_COL, 0).matrix == ((-2, 3),)


def test_add_row_multiple():
    moved = canonical_moves(action([1, 0, 1], [0, 1, 1]), "add_row_multiple", 0, 1, multiplier=-1)
    assert moved.matrix == ((1, 0, 1), (-1, 1, 0))


def test_swap_cols_and_rows():
    assert canonical_moves(action([2, 3]), MoveKind.SWAP_COLS, 0, 1).matrix == ((3, 2),)
    assert canonical_moves(action([1, 2], [3, 4]), MoveKind.SWAP_ROWS, 0, 1).matrix == ((3, 4), (1, 2))
    assert canonical_moves(action([1, -2]), MoveKind.NEGATE_ROW, 0).matrix == ((-1, 2),)


@pytest.mark.parametrize("move, first, second", [
    (MoveKind.SWAP_COLS, 0, 5),
    (MoveKind.NEGATE_ROW, 3, None),
    (MoveKind.ADD_ROW_MULTIPLE, 0, 0),
    (MoveKind.SWAP_ROWS, 0, None),
    (MoveKind.DIVIDE_ROW, 0, None),
    ("transpose", 0, None),
])
def test_invalid_moves(move, first, second):
    with pytest.raises(InvalidMoveError):
        canonical_moves(action([1, 2], [3, 4]), move, first, second)


def test_apply_divide_row():
    divided = apply_move(action([3, 6, 9]), Move(kind=MoveKind.DIVIDE_ROW, first=0, multiplier=3))
    assert divided.matrix == ((1, 2, 3),)
    with pytest.raises(InvalidMoveError):
        apply_move(action([3, 6, 8]), Move(kind=MoveKind.DIVIDE_ROW, first=0, multiplier=3))


def test_canonicalize_logs_replayable_moves():
    start = action([-6, 2, 4])
    result, log = canonicalize(start)
    assert result.matrix == ((3, 2, 1),)
    assert apply_moves(start, log) == result


def test_canonicalize_makes_leading_entries_positive():
    result, _ = canonicalize(action([0, -1, 2], [-1, 1, 1]))
    for j in range(result.n):
        leading = next((v for v in result.column(j) if v), 0)
        assert leading >= 0


@pytest.mark.property_based
@given(actions(max_cols=6), st.data())
def test_moves_preserve_independent_sets(a, data):
    kind = data.draw(st.sampled_from(sorted(MoveKind.elementary_moves(), key=lambda k: k.value)))
    if kind in (MoveKind.SWAP_ROWS, MoveKind.NEGATE_ROW, MoveKind.ADD_ROW_MULTIPLE):
        bound = a.r
    else:
        bound = a.n
    if kind in (MoveKind.SWAP_ROWS, MoveKind.SWAP_COLS, MoveKind.ADD_ROW_MULTIPLE) and bound < 2:
        return
    first = data.draw(st.integers(0, bound - 1))
    second = None
    if kind in (MoveKind.SWAP_ROWS, MoveKind.SWAP_COLS, MoveKind.ADD_ROW_MULTIPLE):
        second = data.draw(st.integers(0, bound - 1).filter(lambda v: v != first))
    multiplier = data.draw(st.integers(-3, 3))
    moved = canonical_moves(a, kind, first, second, multiplier)

    before, after = matroid_of(a), matroid_of(moved)
    relabel = list(range(a.n))
    if kind is MoveKind.SWAP_COLS:
        relabel[first], relabel[second] = second, first
    for size in range(1, min(a.n, 3) + 1):
        for subset in combinations(range(a.n), size):
            image = [relabel[j] for j in subset]
            assert before.is_independent(subset) == after.is_independent(image)
    assert is_effective(a)[0] == is_effective(moved)[0]


# --- isotropy ---

@pytest.mark.parametrize("rows, j, group", [
    ([[3, 1, 1]], 0, IsotropyGroup(finite_factors=(3,))),
    ([[1, 0, 1], [0, 1, 1]], 2, IsotropyGroup(torus_rank=1)),
    ([[0, 1]], 0, IsotropyGroup(torus_rank=1)),
    ([[2, 0], [4, 1]], 0, IsotropyGroup(torus_rank=1, finite_factors=(2,))),
])
def test_isotropy_of_circle(rows, j, group):
    assert isotropy_of_circle(TorusAction.from_rows(rows), j) == group


@pytest.mark.parametrize("rows, subset, group", [
    ([[1, 0, 1], [0, 1, 1]], {0, 1, 2}, IsotropyGroup()),
    ([[3, 1, 1]], {1}, IsotropyGroup()),
    ([[2, 0], [0, 3]], {0, 1}, IsotropyGroup(finite_factors=(6,))),
    ([[3, 6, 1]], {0, 1}, IsotropyGroup(finite_factors=(3,))),
])
def test_isotropy_of_subset(rows, subset, group):
    assert isotropy_of_subset(TorusAction.from_rows(rows), subset) == group


def test_isotropy_of_empty_subset():
    with pytest.raises(EmptySubsetError):
        isotropy_of_subset(action([1, 1]), set())


@pytest.mark.parametrize("j", [-1, 2, 5])
def test_isotropy_of_missing_column(j):
    a = action([1, 1])
    with pytest.raises(UnknownLabelError):
        isotropy_of_circle(a, j)
    with pytest.raises(UnknownLabelError):
        isotropy_of_subset(a, {0, j})


def test_isotropy_of_single_column_agrees_with_circle():
    a = action([2, 0, 3], [4, 1, 3])
    for j in range(a.n):
        assert isotropy_of_subset(a, {j}) == isotropy_of_circle(a, j)


def test_rational_singularity(u23):
    assert is_rationally_singular(u23, {0})
    assert not is_rationally_singular(u23, {0, 2})
    assert is_rationally_singular(action([0, 1]), {0})


def test_isotropy_spectrum():
    spectrum = dict(isotropy_spectrum(action([3, 1, 1])))
    assert spectrum == {IsotropyGroup(finite_factors=(3,)): 1, IsotropyGroup(): 6}


def test_isotropy_spectrum_limit():
    with pytest.raises(SubsetLimitError):
        isotropy_spectrum(action([1, 1, 1, 1]), limit=3)
