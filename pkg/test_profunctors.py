"""
Tests for finite categories, profunctors, coends and the canonical isomorphisms
"""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ccbicat.errors import CompositionError, ShapeError
from ccbicat.harness import (
    GenConfig, case_rng, random_category, random_discrete_profunctor, random_profunctor,
)
from ccbicat.matrices import size_grid
from ccbicat.profunctors import (
    FinCat, Profunctor, coend, constant_profunctor, coyoneda_iso, discrete, dual_profunctor,
    external_product, free_profunctor, monoid_category, opposite, preorder_category, product_category,
    prof_associator, prof_compose, prof_duality, prof_id, prof_zigzag_check, terminal_category, to_ob_matrix,
    validate_fincat, validate_iso_witness, validate_profunctor, walking_arrow,
)

seeds = st.integers(0, 2 ** 32)

CATEGORIES = {
    "terminal": terminal_category(),
    "empty": discrete(0),
    "discrete": discrete(2),
    "discrete3": discrete(3),
    "arrow": walking_arrow(),
    "z2": monoid_category([[0, 1], [1, 0]]),
    "chain": preorder_category(3, [(0, 1), (1, 2)]),
}


def profunctor_chain(seed, length):
    rng = case_rng(seed, 0)
    cats = [random_category(rng) for _ in range(length + 1)]
    return [random_profunctor(rng, cats[k], cats[k + 1]) for k in range(length)]


@pytest.mark.parametrize("name", sorted(CATEGORIES))
def test_builtin_categories_are_valid(name):
    C = CATEGORIES[name]
    assert validate_fincat(C)
    assert validate_fincat(opposite(C))
    assert validate_fincat(product_category(C, walking_arrow()))


def test_preorder_closes_transitively():
    C = CATEGORIES["chain"]
    assert C.morphisms.size == 6
    assert len(C.hom(0, 2)) == 1
    assert len(C.hom(2, 0)) == 0


def test_broken_categories():
    with pytest.raises(ShapeError):
        FinCat.build(1, [0], [0], [0], [(0, 0, 5)])
    with pytest.raises(ShapeError):
        FinCat.build(1, [0], [0], [0], [(0, 0, 0), (0, 0, 0)])
    missing_composite = FinCat.build(1, [0, 0], [0, 0], [0], [(0, 0, 0), (0, 1, 1), (1, 0, 1)])
    assert not validate_fincat(missing_composite)


@pytest.mark.parametrize("name, size", [("terminal", 1), ("empty", 0), ("discrete", 2),
                                        ("arrow", 2), ("z2", 2), ("chain", 3)])
def test_coend_of_hom(name, size):
    assert coend(prof_id(CATEGORIES[name])).size == size


def test_coend_needs_an_endo_profunctor():
    F = free_profunctor(walking_arrow(), discrete(1), [(0, 0)])
    with pytest.raises(CompositionError):
        coend(F)


def test_free_profunctor_values():
    A = walking_arrow()
    F = free_profunctor(A, A, [(0, 1)])
    assert validate_profunctor(F)
    assert [[v.size for v in row] for row in F.values] == [[0, 1], [0, 0]]
    assert validate_profunctor(free_profunctor(A, A, []))


def test_profunctor_shape_is_checked():
    A = walking_arrow()
    F = prof_id(A)
    with pytest.raises(ShapeError):
        Profunctor(A, A, F.values[:1], F.left_action, F.right_action)


def test_compose_rejects_mismatched_middle():
    F = prof_id(walking_arrow())
    G = prof_id(discrete(2))
    with pytest.raises(CompositionError):
        prof_compose(G, F)


@settings(deadline=None, max_examples=40)
@given(seeds)
def test_composites_are_profunctors(seed):
    F, G = profunctor_chain(seed, 2)
    assert validate_profunctor(F) and validate_profunctor(G)
    assert validate_profunctor(prof_compose(G, F))


@settings(deadline=None, max_examples=40)
@given(seeds)
def test_discrete_composition_is_matrix_product(seed):
    rng = case_rng(seed, 1)
    cfg = GenConfig(max_set_size=3)
    C, D, E = (discrete(int(rng.integers(0, 4))) for _ in range(3))
    F = random_discrete_profunctor(rng, cfg, C, D)
    G = random_discrete_profunctor(rng, cfg, D, E)
    composite = size_grid(to_ob_matrix(prof_compose(G, F)))
    assert np.array_equal(composite, size_grid(to_ob_matrix(G)) @ size_grid(to_ob_matrix(F)))


@settings(deadline=None, max_examples=40)
@given(seeds)
def test_coyoneda(seed):
    (F,) = profunctor_chain(seed, 1)
    for side in ("source", "target"):
        assert validate_iso_witness(coyoneda_iso(F, side))
    with pytest.raises(ShapeError):
        coyoneda_iso(F, "middle")


@settings(deadline=None, max_examples=25)
@given(seeds)
def test_associator(seed):
    F, G, H = profunctor_chain(seed, 3)
    assert validate_iso_witness(prof_associator(H, G, F))


@settings(deadline=None, max_examples=40)
@given(seeds)
def test_dual_and_external_product(seed):
    F, G = profunctor_chain(seed, 2)
    assert dual_profunctor(dual_profunctor(F)) == F
    assert validate_profunctor(dual_profunctor(F))
    FG = external_product(F, G)
    assert validate_profunctor(FG)
    assert FG.src_cat.objects.size == F.src_cat.objects.size * G.src_cat.objects.size


@pytest.mark.parametrize("name", sorted(CATEGORIES))
def test_duality_and_zigzag(name):
    C = CATEGORIES[name]
    Cop, unit, counit = prof_duality(C)
    assert Cop == opposite(C)
    assert validate_profunctor(unit) and validate_profunctor(counit)
    assert validate_iso_witness(prof_zigzag_check(C))


def test_zigzag_on_three_discrete_objects():
    witness = prof_zigzag_check(discrete(3))
    assert validate_iso_witness(witness)
    sizes = [[f.dom.size for f in row] for row in witness.components]
    assert sizes == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]


def test_constant_profunctor_is_not_free():
    z2 = CATEGORIES["z2"]
    F = constant_profunctor(z2, terminal_category())
    assert validate_profunctor(F)
    assert F.value(0, 0).size == 1
    assert free_profunctor(z2, terminal_category(), [(0, 0)]).value(0, 0).size == 2
    for side in ("source", "target"):
        assert validate_iso_witness(coyoneda_iso(F, side))


def test_random_profunctors_include_quotients():
    constant, composite = 0, 0
    for seed in range(200):
        rng = case_rng(seed, 0)
        C, D = random_category(rng), random_category(rng)
        F = random_profunctor(rng, C, D)
        assert validate_profunctor(F)
        if F.presentation is not None:
            composite += 1
        elif C.objects.size and D.objects.size and F == constant_profunctor(C, D):
            constant += 1
    assert constant > 0 and composite > 0
