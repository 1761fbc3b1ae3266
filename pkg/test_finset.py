"""
Tests for finite sets, functions, and their limits and colimits
"""

import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ccbicat.errors import CompositionError, ShapeError
from ccbicat.finset import (
    FinFunction, FinSet, all_functions, coequalizer, coequalizer_mediator, compose_fn, copairing,
    coproduct, image_factorization, is_jointly_monic, pairing, product, pullback, pullback_mediator,
    pushout, pushout_mediator,
)


@st.composite
def functions(draw, dom=None, cod=None, max_size=5):
    if dom is None:
        empty_cod = cod is not None and cod.size == 0
        dom = FinSet(0 if empty_cod else draw(st.integers(0, max_size)))
    if cod is None:
        cod = FinSet(draw(st.integers(1 if dom.size else 0, max_size)))
    table = draw(st.lists(st.integers(0, max(cod.size - 1, 0)), min_size=dom.size, max_size=dom.size))
    return FinFunction(dom, cod, tuple(table))


@st.composite
def composable_functions(draw):
    f = draw(functions())
    g = draw(functions(dom=f.cod))
    return g, f


def small_sets(limit=2):
    return [FinSet(n) for n in range(limit + 1)]


# ---------- functions ----------

def test_compose_example():
    f = FinFunction(FinSet(2), FinSet(1), (0, 0))
    g = FinFunction(FinSet(1), FinSet(2), (1,))
    assert compose_fn(g, f).table == (1, 1)


def test_compose_rejects_mismatch():
    f = FinFunction(FinSet(2), FinSet(3), (0, 2))
    with pytest.raises(CompositionError):
        compose_fn(f, f)


def test_bad_tables_are_rejected():
    with pytest.raises(ShapeError):
        FinFunction(FinSet(2), FinSet(2), (0,))
    with pytest.raises(ShapeError):
        FinFunction(FinSet(1), FinSet(2), (2,))
    with pytest.raises(ShapeError):
        FinSet(-1)


@pytest.mark.parametrize("entry", [1.5, 1.0, True, "1", None])
def test_table_entries_must_be_integers(entry):
    with pytest.raises(ShapeError):
        FinFunction(FinSet(2), FinSet(3), (0, entry))


def test_numpy_integers_are_table_entries():
    f = FinFunction(FinSet(2), FinSet(3), tuple(np.array([2, 0])))
    assert f.table == (2, 0)
    assert all(type(x) is int for x in f.table)


def test_finset_equality_ignores_provenance():
    assert product(FinSet(2), FinSet(3)).apex == FinSet(6)
    assert hash(coproduct(FinSet(1), FinSet(1)).apex) == hash(FinSet(2))


@given(composable_functions())
def test_compose_matches_lookup(pair):
    g, f = pair
    h = compose_fn(g, f)
    assert h.dom == f.dom and h.cod == g.cod
    assert all(h(i) == g.table[f.table[i]] for i in f.dom.elements())


@given(functions())
def test_identity_is_unit(f):
    assert compose_fn(FinFunction.identity(f.cod), f) == f
    assert compose_fn(f, FinFunction.identity(f.dom)) == f


@given(composable_functions(), st.data())
def test_composition_is_associative(pair, data):
    g, f = pair
    h = data.draw(functions(dom=g.cod))
    assert compose_fn(h, compose_fn(g, f)) == compose_fn(compose_fn(h, g), f)


def test_inverse_of_non_bijection_fails():
    with pytest.raises(CompositionError):
        FinFunction(FinSet(2), FinSet(2), (0, 0)).inverse()


# ---------- products and pullbacks ----------

def test_product_lexicographic_projections():
    P = product(FinSet(2), FinSet(3))
    assert P.apex.size == 6
    assert P.left.table == (0, 0, 0, 1, 1, 1)
    assert P.right.table == (0, 1, 2, 0, 1, 2)


def test_product_with_singleton_is_bijective_on_other_factor():
    assert product(FinSet(1), FinSet(4)).right.is_bijective()


def test_product_universal_property_exhaustive():
    for X, Y, Z in itertools.product(small_sets(), repeat=3):
        P = product(X, Y)
        for f in all_functions(Z, X):
            for g in all_functions(Z, Y):
                found = [h for h in all_functions(Z, P.apex)
                         if compose_fn(P.left, h) == f and compose_fn(P.right, h) == g]
                assert found == [pairing(f, g)]


def test_pullback_examples():
    ident = FinFunction.identity(FinSet(3))
    assert pullback(ident, ident).apex.size == 3
    to_one = FinFunction.bang(FinSet(2)), FinFunction.bang(FinSet(3))
    assert pullback(*to_one).apex.size == 6
    f = FinFunction(FinSet(2), FinSet(2), (0, 0))
    g = FinFunction(FinSet(3), FinSet(2), (1, 1, 1))
    assert pullback(f, g).apex.size == 0


def test_pullback_orders_pairs_lexicographically():
    f = FinFunction.identity(FinSet(2))
    g = FinFunction(FinSet(3), FinSet(2), (0, 0, 1))
    P = pullback(f, g)
    assert P.left.table == (0, 0, 1)
    assert P.right.table == (0, 1, 2)


@settings(deadline=None, max_examples=60)
@given(st.data())
def test_pullback_universal_property(data):
    f = data.draw(functions(max_size=2))
    g = data.draw(functions(cod=f.cod, max_size=2))
    P = pullback(f, g)
    assert compose_fn(f, P.left) == compose_fn(g, P.right)
    for Z in small_sets():
        for u in all_functions(Z, f.dom):
            for v in all_functions(Z, g.dom):
                if compose_fn(f, u) != compose_fn(g, v):
                    with pytest.raises(CompositionError):
                        pullback_mediator(f, g, u, v)
                    continue
                found = [h for h in all_functions(Z, P.apex)
                         if compose_fn(P.left, h) == u and compose_fn(P.right, h) == v]
                assert found == [pullback_mediator(f, g, u, v)]


def test_pullback_needs_common_codomain():
    with pytest.raises(CompositionError):
        pullback(FinFunction.identity(FinSet(2)), FinFunction.identity(FinSet(3)))


# ---------- coproducts, quotients and pushouts ----------

def test_coproduct_left_first():
    C = coproduct(FinSet(2), FinSet(3))
    assert C.apex.size == 5
    assert C.left.table == (0, 1)
    assert C.right.table == (2, 3, 4)
    assert coproduct(FinSet(3), FinSet(0)).left.is_identity()


def test_copairing_universal_property_exhaustive():
    for X, Y, W in itertools.product(small_sets(), repeat=3):
        C = coproduct(X, Y)
        for u in all_functions(X, W):
            for v in all_functions(Y, W):
                found = [h for h in all_functions(C.apex, W)
                         if compose_fn(h, C.left) == u and compose_fn(h, C.right) == v]
                assert found == [copairing(u, v)]


def test_coequalizer_examples():
    same = FinFunction(FinSet(2), FinSet(3), (0, 2))
    assert coequalizer(same, same).q.is_bijective()
    f = FinFunction(FinSet(1), FinSet(2), (0,))
    g = FinFunction(FinSet(1), FinSet(2), (1,))
    assert coequalizer(f, g).apex.size == 1
    chain_f = FinFunction(FinSet(2), FinSet(3), (0, 1))
    chain_g = FinFunction(FinSet(2), FinSet(3), (1, 2))
    assert coequalizer(chain_f, chain_g).apex.size == 1


def test_coequalizer_numbers_classes_by_smallest_member():
    f = FinFunction(FinSet(1), FinSet(4), (3,))
    g = FinFunction(FinSet(1), FinSet(4), (1,))
    Q = coequalizer(f, g)
    assert Q.q.table == (0, 1, 2, 1)


def test_coequalizer_rejects_non_parallel_pair():
    with pytest.raises(ShapeError):
        coequalizer(FinFunction(FinSet(1), FinSet(2), (0,)), FinFunction(FinSet(1), FinSet(3), (0,)))


def test_coequalizer_mediator_requires_constant_classes():
    f = FinFunction(FinSet(1), FinSet(2), (0,))
    g = FinFunction(FinSet(1), FinSet(2), (1,))
    q = coequalizer(f, g).q
    with pytest.raises(CompositionError):
        coequalizer_mediator(q, FinFunction.identity(FinSet(2)))
    assert coequalizer_mediator(q, FinFunction(FinSet(2), FinSet(1), (0, 0))).table == (0,)


def test_pushout_example():
    f = FinFunction(FinSet(1), FinSet(2), (1,))
    g = FinFunction(FinSet(1), FinSet(2), (0,))
    P = pushout(f, g)
    assert P.apex.size == 3
    assert P.left.table == (0, 1)
    assert P.right.table == (1, 2)


def test_pushout_along_identity_is_other_codomain():
    g = FinFunction(FinSet(2), FinSet(4), (3, 1))
    P = pushout(FinFunction.identity(FinSet(2)), g)
    assert P.apex.size == 4
    assert P.right.is_bijective()


@settings(deadline=None, max_examples=60)
@given(st.data())
def test_pushout_universal_property(data):
    f = data.draw(functions(max_size=2))
    g = data.draw(functions(dom=f.dom, max_size=2))
    P = pushout(f, g)
    assert compose_fn(P.left, f) == compose_fn(P.right, g)
    for W in small_sets():
        for u in all_functions(f.cod, W):
            for v in all_functions(g.cod, W):
                if compose_fn(u, f) != compose_fn(v, g):
                    continue
                found = [h for h in all_functions(P.apex, W)
                         if compose_fn(h, P.left) == u and compose_fn(h, P.right) == v]
                assert found == [pushout_mediator(f, g, u, v)]


# ---------- images ----------

def test_image_of_constant_pair_is_a_point():
    p = FinFunction(FinSet(5), FinSet(2), (1,) * 5)
    img = image_factorization(p, p)
    assert img.image.size == 1
    assert not is_jointly_monic(p, p)


@given(st.data())
def test_image_counts_distinct_pairs(data):
    p = data.draw(functions(max_size=6))
    q = data.draw(functions(dom=p.dom, max_size=6))
    img = image_factorization(p, q)
    assert img.image.size == len({(p(s), q(s)) for s in p.dom.elements()})
    m1, m2 = img.mono_pair
    assert compose_fn(m1, img.surjection) == p
    assert compose_fn(m2, img.surjection) == q
    assert is_jointly_monic(m1, m2)


def test_coequalizer_universal_property_exhaustive():
    sizes = [FinSet(n) for n in range(3)]
    for A, B, W in itertools.product(sizes, repeat=3):
        for f, g in itertools.product(all_functions(A, B), repeat=2):
            q = coequalizer(f, g).q
            assert set(q.table) == set(q.cod.elements())
            for h in all_functions(B, W):
                if compose_fn(h, f) != compose_fn(h, g):
                    with pytest.raises(CompositionError):
                        coequalizer_mediator(q, h)
                    continue
                m = coequalizer_mediator(q, h)
                assert compose_fn(m, q) == h
                assert [k for k in all_functions(q.cod, W) if compose_fn(k, q) == h] == [m]


def test_pullback_is_symmetric_up_to_swapping_pairs():
    sizes = [FinSet(n) for n in range(3)]
    for X, Y, Z in itertools.product(sizes, repeat=3):
        for f, g in itertools.product(all_functions(X, Z), all_functions(Y, Z)):
            P, Q = pullback(f, g), pullback(g, f)
            swap_pq = pullback_mediator(g, f, P.right, P.left)
            swap_qp = pullback_mediator(f, g, Q.right, Q.left)
            assert swap_pq.is_bijective()
            assert compose_fn(swap_qp, swap_pq).is_identity()
            assert compose_fn(Q.left, swap_pq) == P.right
            assert compose_fn(Q.right, swap_pq) == P.left
            pairs = set(zip(P.left.table, P.right.table))
            assert set(zip(Q.right.table, Q.left.table)) == pairs
