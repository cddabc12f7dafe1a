import random

import pytest
from hypothesis import given, strategies as st

from src.enums.value_enums import Verdict, ManifoldStatus, FactorRole, MoveKind
from src.helpers import RankDomainError, NonEffectiveActionError
from src.schema import TorusAction
from src.utils import UnivariatePolynomial
from src.logic import (join_decomposition,
                       is_homology_sphere,
                       normalize_weights,
                       classify_rank_one,
                       classify,
                       apply_moves,
                       is_effective,
                       poincare_quotient)
from tests.strategies import actions, weight_lists, random_moves


def action(*rows) -> TorusAction:
    return TorusAction.from_rows(rows)


def invariant_view(result):
    """Everything in a classification that does not name columns."""
    return (result.verdict, result.dim, result.index, result.manifold, result.witness,
            result.homology, sorted(f.label for f in result.factors))


# --- join decomposition ---

def test_loop_splits_off_a_circle():
    factors = join_decomposition(action([0, 1, 1]))
    assert [f.role for f in factors] == [FactorRole.LOOP_CIRCLE, FactorRole.BLOCK]
    assert factors[0].columns == (0,) and factors[0].action == TorusAction(matrix=(), n=1)
    assert factors[1].columns == (1, 2) and factors[1].action.matrix == ((1, 1),)


def test_block_structure():
    factors = join_decomposition(action([1, 1, 0, 0], [0, 0, 1, 1]))
    assert [f.columns for f in factors] == [(0, 1), (2, 3)]
    assert all(f.action.matrix == ((1, 1),) for f in factors)


def test_connected_action_is_one_factor(u23):
    factors = join_decomposition(u23)
    assert len(factors) == 1 and factors[0].columns == (0, 1, 2)
    assert factors[0].action.r == 2


@pytest.mark.property_based
@given(actions(max_cols=6))
def test_join_factors_are_effective(a):
    if not is_effective(a)[0]:
        return
    factors = join_decomposition(a)
    assert sorted(j for f in factors for j in f.columns) == list(range(a.n))
    assert sum(f.action.r for f in factors) == a.r
    assert all(is_effective(f.action)[0] for f in factors)


# --- homology spheres ---

@pytest.mark.parametrize("rows, sphere", [
    ([[2, 3]], True),
    ([[1, 0, 1], [0, 1, 1]], True),
    ([[1, 1, 1]], False),
    ([[0, 1, 1]], True),
    ([[1, 0], [0, 1]], False),
])
def test_is_homology_sphere(rows, sphere):
    assert is_homology_sphere(TorusAction.from_rows(rows))[0] is sphere


def test_homology_sphere_reports_offending_components():
    assert is_homology_sphere(action([1, 1, 1, 0, 0], [0, 0, 0, 1, 1]))[1] == [(0, 1, 2)]


# --- rank one ---

def test_normalize_weights():
    normalized, moves = normalize_weights([-2, 4, 6])
    assert normalized == (3, 2, 1)
    assert moves[0].kind is MoveKind.DIVIDE_ROW


@pytest.mark.parametrize("weights", [[], [0, 1], [3, 0, 1]])
def test_normalize_weights_rejects_degenerate_input(weights):
    with pytest.raises(RankDomainError):
        normalize_weights(weights)


@pytest.mark.parametrize("weights, verdict, index, witness", [
    ([7], Verdict.POINT, None, None),
    ([2, 3], Verdict.SPHERE, 2, None),
    ([1, 1], Verdict.SPHERE, 2, None),
    ([1, 1, 1], Verdict.COMPLEX_PROJECTIVE, 2, None),
    ([2, 2, 1], Verdict.COMPLEX_PROJECTIVE, 2, None),
    ([1, 2, 2], Verdict.COMPLEX_PROJECTIVE, 2, None),
    ([4, 4, 2], Verdict.COMPLEX_PROJECTIVE, 2, None),
    ([3, 1, 1], Verdict.NOT_MANIFOLD, None, 3),
    ([2, 2, 3], Verdict.NOT_MANIFOLD, None, 3),
    ([3, 3, 2], Verdict.NOT_MANIFOLD, None, 2),
    ([1, 1, 1, 1, 1], Verdict.COMPLEX_PROJECTIVE, 4, None),
])
def test_classify_rank_one(weights, verdict, index, witness):
    result = classify_rank_one(weights)
    assert result.verdict is verdict
    assert result.index == index
    assert result.witness == witness
    assert result.dim == 2 * len(weights) - 2


def test_rank_one_manifolds_have_projective_homology():
    result = classify_rank_one([5, 5, 5, 1])
    assert result.label == "ComplexProjective(3)"
    assert result.homology.poincare == UnivariatePolynomial({2: 1, 4: 1, 6: 1})


@pytest.mark.property_based
@given(weight_lists(min_size=1, max_size=6), st.randoms(use_true_random=False))
def test_rank_one_is_invariant_under_signs_and_order(weights, rng: random.Random):
    shuffled = [w * rng.choice((1, -1)) for w in weights]
    rng.shuffle(shuffled)
    a, b = classify_rank_one(weights), classify_rank_one(shuffled)
    assert (a.verdict, a.index, a.witness, a.dim) == (b.verdict, b.index, b.witness, b.dim)


# --- classify ---

@pytest.mark.parametrize("rows, label, dim", [
    ([[2, 3]], "Sphere(2)", 2),
    ([[1, 1]], "Sphere(2)", 2),
    ([[1, 1, 1]], "ComplexProjective(2)", 4),
    ([[3, 1, 1]], "NotManifold", 4),
    ([[1, 0], [0, 1]], "Cone", 1),
    ([[0, 1, 1]], "Sphere(4)", 4),
    ([[1, 0, 1], [0, 1, 1]], "Sphere(3)", 3),
    ([[1, 1, 0, 0], [0, 0, 1, 1]], "Sphere(5)", 5),
    ([[1, 0, 1, 1], [0, 1, 1, 2]], "NotManifold", 5),
])
def test_classify(rows, label, dim):
    result = classify(TorusAction.from_rows(rows))
    assert result.label == label
    assert result.dim == dim


def test_classify_one_column():
    assert classify(TorusAction(matrix=(), n=1)).verdict is Verdict.CIRCLE
    assert classify(action([1])).verdict is Verdict.POINT
    assert classify(action([5]), auto_reduce=True).verdict is Verdict.POINT


def test_classify_needs_effective_action():
    with pytest.raises(NonEffectiveActionError):
        classify(action([2, 4]))


def test_cone_evidence_names_the_coloop(identity2):
    result = classify(identity2)
    assert result.manifold is ManifoldStatus.CONTRACTIBLE
    assert result.evidence == ("coloop at column 0: quotient is a cone",)
    assert result.homology.is_acyclic


def test_not_manifold_witness():
    result = classify(action([3, 1, 1]))
    assert result.witness == 3
    assert result.manifold is ManifoldStatus.NOT_MANIFOLD


def test_join_with_a_loop_records_factors():
    result = classify(action([0, 1, 1]))
    assert [f.label for f in result.factors] == ["Sphere(1)", "Sphere(2)"]
    assert result.factors[0].columns == (0,)
    assert result.columns is None


def test_join_of_projective_space_and_sphere_fails_duality():
    result = classify(action([1, 1, 1, 0, 0], [0, 0, 0, 1, 1]))
    assert result.verdict is Verdict.NOT_MANIFOLD
    assert [f.label for f in result.factors] == ["ComplexProjective(2)", "Sphere(2)"]
    assert result.homology.poincare == UnivariatePolynomial({5: 1, 7: 1})
    assert any("Poincare duality fails" in line for line in result.evidence)


def test_trivial_torus_gives_a_sphere():
    result = classify(TorusAction(matrix=(), n=3))
    assert result.label == "Sphere(5)"
    assert len(result.factors) == 3


def test_classification_json():
    dump = classify(action([1, 1, 1])).to_json()
    assert dump["verdict"] == "ComplexProjective"
    assert dump["label"] == "ComplexProjective(2)"
    assert dump["homology"]["poincare_text"] == "t^2 + t^4"


@pytest.mark.property_based
@given(actions(max_cols=6), st.randoms(use_true_random=False))
def test_classification_is_invariant_under_move_sequences(a, rng: random.Random):
    if not is_effective(a)[0]:
        return
    moved = apply_moves(a, random_moves(a, rng))
    assert invariant_view(classify(moved)) == invariant_view(classify(a))
    assert poincare_quotient(moved) == poincare_quotient(a)


@pytest.mark.property_based
@given(actions(max_cols=6))
def test_sphere_verdicts_match_homology(a):
    if not is_effective(a)[0]:
        return
    result = classify(a)
    if result.is_sphere:
        assert result.homology.poincare == UnivariatePolynomial.monomial(result.dim)
    if result.verdict is Verdict.CONE:
        assert result.homology.is_acyclic
