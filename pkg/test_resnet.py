"""
Tests for resistor networks, their cospans, and circuits
"""

import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ccbicat import resnet
from ccbicat.errors import CoherenceError, CompositionError, ShapeError
from ccbicat.finset import FinFunction
from ccbicat.harness import GenConfig, case_rng, random_circuit_chain
from ccbicat.resnet import (
    Circuit, CospanMap, NetCospan, ResNet, ResNetMorphism, canonical_cospan_map, circuit_compose,
    circuit_counit, circuit_duality, circuit_swallowtail_check, circuit_swallowtail_pastings,
    circuit_swallowtail_rewrites, circuit_tensor, circuit_unit, circuit_zigzag_targets,
    compose_morphisms, cospan_associator, cospan_compose, cospan_hcompose, cospan_id, cospan_invert,
    cospan_pentagon_holds, cospan_tensor, cospan_tensorator, cospan_triangle_holds, cospan_unitor,
    cospan_vcompose, dual_cospan, edgeless, identity_cospan, identity_morphism, invert_morphism,
    net_coproduct, net_pushout, net_pushout_mediator, validate_morphism,
)

CFG = GenConfig(max_set_size=3, max_edges=2)
seeds = st.integers(0, 2 ** 32)


def foot_leg(foot: ResNet, apex: ResNet, ups) -> ResNetMorphism:
    return ResNetMorphism(foot, apex, FinFunction.from_initial(apex.edges),
                          FinFunction(foot.vertices, apex.vertices, tuple(ups)))


def resistor(r="1") -> NetCospan:
    """One input, one output, a single edge between them"""
    apex = ResNet.build(2, [(0, 1, r)])
    return NetCospan.from_legs(foot_leg(edgeless(1), apex, [0]), foot_leg(edgeless(1), apex, [1]))


def two_port(r="1") -> NetCospan:
    """Both terminals on both sides"""
    apex = ResNet.build(2, [(0, 1, r)])
    return NetCospan.from_legs(foot_leg(edgeless(2), apex, [0, 1]), foot_leg(edgeless(2), apex, [0, 1]))


def test_resistances_are_exact():
    N = ResNet.build(2, [(0, 1, "3/2"), (1, 0, 2)])
    assert N.r == (Fraction(3, 2), Fraction(2))
    assert N.describe() == "2 vertices, 2 edges"


@pytest.mark.parametrize("r", [0, -1, "-1/2"])
def test_resistance_must_be_positive(r):
    with pytest.raises(ShapeError):
        ResNet.build(1, [(0, 0, r)])


def test_edge_endpoints_must_exist():
    with pytest.raises(ShapeError):
        ResNet.build(1, [(0, 1, 1)])


def test_morphisms_preserve_resistance():
    one, two = ResNet.build(2, [(0, 1, 1)]), ResNet.build(2, [(0, 1, 2)])
    ident = FinFunction.identity(one.edges)
    m = ResNetMorphism(one, two, ident, FinFunction.identity(one.vertices))
    assert not validate_morphism(m)
    assert validate_morphism(identity_morphism(one))
    with pytest.raises(CoherenceError):
        NetCospan.from_legs(m, identity_morphism(two))


def test_morphism_composition_and_inverse():
    N = ResNet.build(2, [(0, 1, 1)])
    flip = ResNetMorphism(edgeless(2), edgeless(2), FinFunction.from_initial(edgeless(2).edges),
                          FinFunction(edgeless(2).vertices, edgeless(2).vertices, (1, 0)))
    assert compose_morphisms(flip, flip).is_identity()
    assert invert_morphism(flip) == flip
    with pytest.raises(CompositionError):
        compose_morphisms(identity_morphism(N), flip)
    collapse = foot_leg(edgeless(2), edgeless(1), [0, 0])
    with pytest.raises(CoherenceError):
        invert_morphism(collapse)


def test_pushout_needs_common_source():
    with pytest.raises(CompositionError):
        net_pushout(identity_morphism(edgeless(1)), identity_morphism(edgeless(2)))


def test_series_composition():
    c = cospan_compose(resistor("2"), resistor("3"))
    assert c.apex.vertices.size == 3
    assert c.apex.edges.size == 2
    assert sorted(c.apex.r) == [Fraction(2), Fraction(3)]
    assert not c.is_jointly_epic()


def test_parallel_composition():
    c = cospan_compose(two_port(), two_port())
    assert c.apex.vertices.size == 2
    assert c.apex.edges.size == 2
    assert c.apex.s.table == (0, 0) and c.apex.t.table == (1, 1)


def test_composition_needs_matching_feet():
    with pytest.raises(CompositionError):
        cospan_compose(two_port(), resistor())


def test_tensor_juxtaposes():
    c = cospan_tensor(resistor(), two_port())
    assert c.src_foot.vertices.size == 3
    assert c.apex.vertices.size == 4 and c.apex.edges.size == 2
    assert c.apex.s.table == (0, 2)
    assert net_coproduct(edgeless(2), c.apex).vertices.size == 6


def test_dual_swaps_feet():
    c = resistor()
    assert dual_cospan(dual_cospan(c)) == c
    assert dual_cospan(c).src_leg == c.tgt_leg


def test_cospan_map_must_commute():
    X = edgeless(2)
    swap = ResNetMorphism(X, X, FinFunction.from_initial(X.edges), FinFunction(X.vertices, X.vertices, (1, 0)))
    with pytest.raises(CoherenceError):
        CospanMap(identity_cospan(X), identity_cospan(X), swap)


def test_canonical_map_needs_jointly_epic_source():
    X = edgeless(1)
    padded = NetCospan.from_legs(foot_leg(X, edgeless(2), [0]), foot_leg(X, edgeless(2), [0]))
    assert not padded.is_jointly_epic()
    with pytest.raises(CoherenceError):
        canonical_cospan_map(padded, identity_cospan(X))
    assert canonical_cospan_map(identity_cospan(X), padded).h.ups.table == (0,)


def test_unitor_side_is_checked():
    with pytest.raises(ShapeError):
        cospan_unitor("up", resistor())


@settings(deadline=None, max_examples=30)
@given(seeds)
def test_unitors_and_associator_are_invertible(seed):
    c1, c2, c3 = random_circuit_chain(case_rng(seed, 0), CFG, 3)
    for cell in (cospan_unitor("left", c1), cospan_unitor("right", c1), cospan_associator(c3, c2, c1)):
        assert cell.is_invertible()
        assert cospan_vcompose(cospan_invert(cell), cell) == cospan_id(cell.source)


@settings(deadline=None, max_examples=20)
@given(seeds)
def test_pentagon(seed):
    c1, c2, c3, c4 = random_circuit_chain(case_rng(seed, 0), CFG, 4)
    assert cospan_pentagon_holds(c4, c3, c2, c1)


@settings(deadline=None, max_examples=30)
@given(seeds)
def test_triangle(seed):
    c1, c2 = random_circuit_chain(case_rng(seed, 0), CFG, 2)
    assert cospan_triangle_holds(c2, c1)


@settings(deadline=None, max_examples=30)
@given(seeds)
def test_whiskered_identities(seed):
    c1, c2 = random_circuit_chain(case_rng(seed, 1), CFG, 2)
    assert cospan_hcompose(cospan_id(c2), cospan_id(c1)).is_identity()


def test_circuits_have_edgeless_feet():
    with pytest.raises(ShapeError):
        Circuit(identity_cospan(ResNet.build(1, [(0, 0, 1)])))
    series = circuit_compose(Circuit(resistor()), Circuit(resistor()))
    assert (series.inputs, series.outputs) == (1, 1)
    both = circuit_tensor(Circuit(resistor()), Circuit(two_port()))
    assert (both.inputs, both.outputs) == (3, 3)


def test_unit_and_counit():
    i = circuit_unit(edgeless(2))
    assert i.apex.vertices.size == 2 and i.apex.edges.size == 0
    assert i.src_foot.vertices.size == 0 and i.tgt_foot.vertices.size == 4
    assert i.tgt_leg.ups.table == (0, 1, 0, 1)
    assert circuit_counit(edgeless(2)) == dual_cospan(i)
    with pytest.raises(ShapeError):
        circuit_unit(ResNet.build(1, [(0, 0, 1)]))


@pytest.mark.parametrize("n", range(9))
def test_zigzags(n):
    z, t = circuit_zigzag_targets(edgeless(n))
    assert z.apex.vertices.size == n and z.apex.edges.size == 0
    data = circuit_duality(edgeless(n))
    assert data.zeta.is_invertible() and data.theta.is_invertible()
    assert data.zeta.target == z and data.theta.target == t


@pytest.mark.parametrize("n", range(7))
def test_swallowtail(n):
    sides = circuit_swallowtail_pastings(edgeless(n))
    assert sides.zeta_side.target == sides.theta_side.target
    check = circuit_swallowtail_check(edgeless(n))
    assert check.source == circuit_unit(edgeless(n))
    assert check.is_identity()


def test_tensorator_juxtaposes_the_pushouts():
    cell = cospan_tensorator(resistor("2"), resistor("3"), two_port(), two_port())
    assert cell.is_invertible()
    assert cell.target.apex.vertices.size == 3 + 2
    assert sorted(cell.target.apex.r) == [Fraction(1), Fraction(1), Fraction(2), Fraction(3)]


NETWORKS = [edgeless(1), edgeless(2), ResNet.build(2, [(0, 1, 1)]), ResNet.build(1, [(0, 0, 1)]),
            ResNet.build(3, [(0, 1, 1), (1, 2, 1)])]


def all_morphisms(A: ResNet, B: ResNet):
    found = []
    for ups in itertools.product(range(B.vertices.size), repeat=A.vertices.size):
        for eps in itertools.product(range(B.edges.size), repeat=A.edges.size):
            m = ResNetMorphism(A, B, FinFunction(A.edges, B.edges, eps),
                               FinFunction(A.vertices, B.vertices, ups))
            if validate_morphism(m):
                found.append(m)
    return found


def test_pushout_mediator_universal_property():
    cases = 0
    for S, T1, T2, X in itertools.product([edgeless(0), edgeless(1), edgeless(2)],
                                          NETWORKS[:4], NETWORKS[:4], NETWORKS[2:]):
        for f, g in itertools.product(all_morphisms(S, T1), all_morphisms(S, T2)):
            P = net_pushout(f, g)
            assert set(P.left.ups.table) | set(P.right.ups.table) == set(P.apex.vertices.elements())
            assert set(P.left.eps.table) | set(P.right.eps.table) == set(P.apex.edges.elements())
            for u, v in itertools.product(all_morphisms(T1, X), all_morphisms(T2, X)):
                if compose_morphisms(u, f) != compose_morphisms(v, g):
                    continue
                m = net_pushout_mediator(f, g, u, v)
                assert m.source == P.apex
                assert compose_morphisms(m, P.left) == u
                assert compose_morphisms(m, P.right) == v
                cases += 1
    assert cases >= 200


def test_swallowtail_rewrites_for_circuits():
    rewrites = circuit_swallowtail_rewrites(edgeless(2))
    assert len(rewrites) == 10
    cells = [cell for _, _, _, cell in rewrites if isinstance(cell, CospanMap)]
    assert len(cells) == 1 and cells[0].is_invertible()


def test_swallowtail_is_pasted_from_tensorators(monkeypatch):
    calls = []
    original = resnet.cospan_tensorator

    def counting(*args):
        calls.append(args)
        return original(*args)

    monkeypatch.setattr(resnet, "cospan_tensorator", counting)
    assert circuit_swallowtail_check(edgeless(2)).is_identity()
    assert len(calls) >= 10


@pytest.mark.parametrize("name", ["cospan_tensorator", "cospan_associator", "cospan_unitor"])
def test_swallowtail_fails_with_a_broken_structure_cell(monkeypatch, name):
    def broken(*args):
        raise CoherenceError(f"{name} unavailable")

    monkeypatch.setattr(resnet, name, broken)
    with pytest.raises(CoherenceError):
        circuit_swallowtail_check(edgeless(2))


def test_swallowtail_rewrites_must_reach_the_theta_path(monkeypatch):
    original = resnet.circuit_swallowtail_rewrites
    monkeypatch.setattr(resnet, "circuit_swallowtail_rewrites", lambda F: original(F)[:-1])
    with pytest.raises(CoherenceError):
        circuit_swallowtail_pastings(edgeless(2))
