"""
Cross-checks over the seeded corpus of 500 random weight matrices.
"""

import random

import pytest

from src.logic import (matroid_of,
                       is_effective,
                       apply_moves,
                       tutte,
                       tutte_oracle,
                       specialize_y,
                       convolution_check,
                       check_coefficient_structure,
                       is_homology_sphere,
                       poincare_quotient,
                       singular_summary,
                       classify)
from tests.strategies import seeded_corpus, random_moves

pytestmark = pytest.mark.slow

MOVE_SEQUENCES = 100
SUBSET_SAMPLES = 20


def random_subset(labels, rng: random.Random):
    return {label for label in sorted(labels) if rng.random() < 0.5}


def test_corpus_is_reproducible(corpus):
    assert seeded_corpus(size=20) == corpus[:20]
    assert len(corpus) == 500


def test_engines_agree(corpus):
    for action in corpus:
        m = matroid_of(action)
        assert tutte(m) == tutte_oracle(m), action.to_json()


def test_convolution_identity(corpus):
    for action in corpus:
        assert convolution_check(matroid_of(action)), action.to_json()


def test_order_complex_euler(corpus):
    for action in corpus:
        m = matroid_of(action)
        if m.rank() == 0 or m.loops():
            continue
        signed = (-1) ** m.rank() * tutte(m).evaluate(1, 0)
        assert m.order_complex_euler() == m.mobius() == signed, action.to_json()


def test_coefficient_structure(corpus):
    for action in corpus:
        m = matroid_of(action)
        if m.coloops():
            continue
        at_zero = specialize_y(tutte(m), 0).substitute_t_squared()
        assert check_coefficient_structure(at_zero, m.n, m.rank()), action.to_json()


def test_effective_actions(corpus):
    effective = [a for a in corpus if is_effective(a)[0]]
    assert effective
    for action in effective:
        is_homology_sphere(action)
        singular_summary(action)
        result = classify(action)
        assert result.homology.poincare.has_nonnegative_coefficients()


def test_rank_axioms(corpus):
    rng = random.Random(11)
    for action in corpus:
        m = matroid_of(action)
        labels = sorted(m.ground_set)
        for _ in range(SUBSET_SAMPLES):
            a, b = random_subset(labels, rng), random_subset(labels, rng)
            assert 0 <= m.rank(a) <= len(a), action.to_json()
            assert m.rank(a & b) <= m.rank(a) <= m.rank(a | b), action.to_json()
            assert m.rank(a | b) + m.rank(a & b) <= m.rank(a) + m.rank(b), action.to_json()
            e = rng.choice(labels)
            assert m.rank(a | {e}) - m.rank(a) in (0, 1), action.to_json()


def test_minor_identities(corpus):
    rng = random.Random(13)
    for action in corpus:
        m = matroid_of(action)
        labels = sorted(m.ground_set)
        for e in labels:
            minor = m.contract(e)
            for _ in range(SUBSET_SAMPLES // 4):
                s = random_subset(minor.ground_set, rng)
                assert minor.rank(s) == m.rank(s | {e}) - m.rank({e}), action.to_json()
        if len(labels) < 2:
            continue
        for _ in range(SUBSET_SAMPLES // 4):
            e, f = rng.sample(labels, 2)
            left, right = m.delete(e).contract(f), m.contract(f).delete(e)
            assert left.key == right.key, action.to_json()
            for _ in range(4):
                s = random_subset(left.ground_set, rng)
                assert left.rank(s) == right.rank(s), action.to_json()


def test_classification_is_invariant_under_move_sequences(corpus):
    rng = random.Random(17)
    for action in corpus:
        if not is_effective(action)[0]:
            continue
        expected = classify(action)
        expected_view = (expected.verdict, expected.dim, expected.index, expected.manifold,
                         expected.witness, sorted(f.label for f in expected.factors))
        expected_homology = poincare_quotient(action)
        for _ in range(MOVE_SEQUENCES):
            moved = apply_moves(action, random_moves(action, rng))
            result = classify(moved)
            view = (result.verdict, result.dim, result.index, result.manifold,
                    result.witness, sorted(f.label for f in result.factors))
            assert view == expected_view, (action.to_json(), moved.to_json())
            assert poincare_quotient(moved) == expected_homology, (action.to_json(), moved.to_json())
