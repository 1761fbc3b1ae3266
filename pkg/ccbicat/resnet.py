"""
Resistor networks, the cospans between them, and circuits

Networks are directed multigraphs with exact positive resistances on the
edges. Cospans compose by pushout: juxtapose the two apexes, then glue the
images of the shared foot. Circuits are the cospans whose feet have no
edges. The monoidal product is juxtaposition, whose left-first layout makes
the object associators and unitors identity tables.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, NamedTuple, Sequence, Set, Tuple, Union

from .errors import CoherenceError, CompositionError, ShapeError
from .finset import (
    FinFunction, FinSet, compose_fn, coproduct, coproduct_map, copairing,
    pushout, pushout_mediator,
)

logger = logging.getLogger(__name__)

Resistance = Union[Fraction, int, str]


@dataclass(frozen=True)
class ResNet:
    """Vertices, edges with source and target vertices, and a resistance per edge"""
    vertices: FinSet
    edges: FinSet
    s: FinFunction
    t: FinFunction
    r: Tuple[Fraction, ...]

    def __post_init__(self):
        r = tuple(Fraction(x) for x in self.r)
        object.__setattr__(self, "r", r)
        for name, fn in (("s", self.s), ("t", self.t)):
            if fn.dom != self.edges or fn.cod != self.vertices:
                raise ShapeError(f"Edge map {name} must go from edges to vertices")
        if len(r) != self.edges.size:
            raise ShapeError(f"Expected {self.edges.size} resistances, got {len(r)}")
        for e, x in enumerate(r):
            if x <= 0:
                raise ShapeError(f"Resistance of edge {e} must be positive, got {x}")

    @classmethod
    def build(cls, n_vertices: int, edges: Sequence[Tuple[int, int, Resistance]]) -> "ResNet":
        """From (source, target, resistance) triples"""
        V, E = FinSet(n_vertices), FinSet(len(edges))
        return cls(V, E, FinFunction(E, V, tuple(a for a, _, _ in edges)),
                   FinFunction(E, V, tuple(b for _, b, _ in edges)),
                   tuple(Fraction(x) for _, _, x in edges))

    def is_edgeless(self) -> bool:
        return self.edges.is_empty()

    def describe(self) -> str:
        return f"{self.vertices.size} vertices, {self.edges.size} edges"


def empty_network() -> ResNet:
    return ResNet.build(0, [])


def edgeless(n: int) -> ResNet:
    return ResNet.build(n, [])


@dataclass(frozen=True)
class ResNetMorphism:
    """eps on edges and ups on vertices; commutation is checked by validate_morphism"""
    source: ResNet
    target: ResNet
    eps: FinFunction
    ups: FinFunction

    def __post_init__(self):
        if self.eps.dom != self.source.edges or self.eps.cod != self.target.edges:
            raise ShapeError("Edge map of a network morphism has the wrong type")
        if self.ups.dom != self.source.vertices or self.ups.cod != self.target.vertices:
            raise ShapeError("Vertex map of a network morphism has the wrong type")

    def is_invertible(self) -> bool:
        return self.eps.is_bijective() and self.ups.is_bijective()

    def is_identity(self) -> bool:
        return self.source == self.target and self.eps.is_identity() and self.ups.is_identity()


def validate_morphism(m: ResNetMorphism) -> bool:
    """Resistances, sources and targets are all preserved"""
    src, tgt = m.source, m.target
    if tuple(tgt.r[m.eps(e)] for e in src.edges.elements()) != src.r:
        return False
    if compose_fn(tgt.s, m.eps) != compose_fn(m.ups, src.s):
        return False
    return compose_fn(tgt.t, m.eps) == compose_fn(m.ups, src.t)


def _require_valid(m: ResNetMorphism, what: str) -> None:
    if not validate_morphism(m):
        raise CoherenceError(f"{what} does not preserve sources, targets and resistances")


def identity_morphism(N: ResNet) -> ResNetMorphism:
    return ResNetMorphism(N, N, FinFunction.identity(N.edges), FinFunction.identity(N.vertices))


def compose_morphisms(g: ResNetMorphism, f: ResNetMorphism) -> ResNetMorphism:
    if f.target != g.source:
        raise CompositionError("Cannot compose network morphisms: target and source differ")
    return ResNetMorphism(f.source, g.target, compose_fn(g.eps, f.eps), compose_fn(g.ups, f.ups))


def invert_morphism(m: ResNetMorphism) -> ResNetMorphism:
    if not m.is_invertible():
        raise CoherenceError("Network morphism is not invertible")
    return ResNetMorphism(m.target, m.source, m.eps.inverse(), m.ups.inverse())


class NetCocone(NamedTuple):
    apex: ResNet
    left: ResNetMorphism
    right: ResNetMorphism


def net_coproduct_cone(N1: ResNet, N2: ResNet) -> NetCocone:
    """Juxtaposition, N1 first"""
    V, E = coproduct(N1.vertices, N2.vertices), coproduct(N1.edges, N2.edges)
    s = copairing(compose_fn(V.left, N1.s), compose_fn(V.right, N2.s))
    t = copairing(compose_fn(V.left, N1.t), compose_fn(V.right, N2.t))
    apex = ResNet(V.apex, E.apex, s, t, N1.r + N2.r)
    return NetCocone(apex, ResNetMorphism(N1, apex, E.left, V.left), ResNetMorphism(N2, apex, E.right, V.right))


def net_coproduct(N1: ResNet, N2: ResNet) -> ResNet:
    return net_coproduct_cone(N1, N2).apex


def morphism_sum(f: ResNetMorphism, g: ResNetMorphism) -> ResNetMorphism:
    """f + g between juxtapositions"""
    return ResNetMorphism(net_coproduct(f.source, g.source), net_coproduct(f.target, g.target),
                          coproduct_map(f.eps, g.eps), coproduct_map(f.ups, g.ups))


def net_pushout(f: ResNetMorphism, g: ResNetMorphism) -> NetCocone:
    """
    Glue f.target and g.target along the images of the common source.

    Vertices and edges are pushed out separately; each edge class must carry
    one resistance and one pair of endpoint classes.
    """
    if f.source != g.source:
        raise CompositionError("Pushout needs two network morphisms out of the same network")
    _require_valid(f, "First pushout leg")
    _require_valid(g, "Second pushout leg")
    S, T = f.target, g.target
    V = pushout(f.ups, g.ups)
    E = pushout(f.eps, g.eps)
    labels: List = [None] * E.apex.size
    for net, e_in, v_in in ((S, E.left, V.left), (T, E.right, V.right)):
        for e in net.edges.elements():
            label = (net.r[e], v_in(net.s(e)), v_in(net.t(e)))
            cls = e_in(e)
            if labels[cls] is None:
                labels[cls] = label
            elif labels[cls] != label:
                raise CoherenceError(
                    f"Pushout identifies edges with different data: {labels[cls]} vs {label}")
    P = ResNet(V.apex, E.apex,
               FinFunction(E.apex, V.apex, tuple(lab[1] for lab in labels)),
               FinFunction(E.apex, V.apex, tuple(lab[2] for lab in labels)),
               tuple(lab[0] for lab in labels))
    logger.debug("network pushout: %s", P.describe())
    return NetCocone(P, ResNetMorphism(S, P, E.left, V.left), ResNetMorphism(T, P, E.right, V.right))


def net_pushout_mediator(f: ResNetMorphism, g: ResNetMorphism,
                         u: ResNetMorphism, v: ResNetMorphism) -> ResNetMorphism:
    """The unique morphism out of net_pushout(f, g) through which u and v factor"""
    P = net_pushout(f, g).apex
    if u.target != v.target:
        raise CompositionError("Mediator legs must share a target network")
    return ResNetMorphism(P, u.target,
                          FinFunction(P.edges, u.target.edges, pushout_mediator(f.eps, g.eps, u.eps, v.eps).table),
                          FinFunction(P.vertices, u.target.vertices,
                                      pushout_mediator(f.ups, g.ups, u.ups, v.ups).table))


# ---------- cospans ----------

@dataclass(frozen=True)
class NetCospan:
    """src_foot -> apex <- tgt_foot, read as a 1-cell src_foot -> tgt_foot"""
    src_foot: ResNet
    tgt_foot: ResNet
    apex: ResNet
    src_leg: ResNetMorphism
    tgt_leg: ResNetMorphism

    def __post_init__(self):
        if self.src_leg.source != self.src_foot or self.tgt_leg.source != self.tgt_foot:
            raise ShapeError("Cospan legs must start at the feet")
        if self.src_leg.target != self.apex or self.tgt_leg.target != self.apex:
            raise ShapeError("Cospan legs must end at the apex")
        _require_valid(self.src_leg, "Source leg")
        _require_valid(self.tgt_leg, "Target leg")

    @classmethod
    def from_legs(cls, src_leg: ResNetMorphism, tgt_leg: ResNetMorphism) -> "NetCospan":
        return cls(src_leg.source, tgt_leg.source, src_leg.target, src_leg, tgt_leg)

    def is_jointly_epic(self) -> bool:
        covered_v = set(self.src_leg.ups.table) | set(self.tgt_leg.ups.table)
        covered_e = set(self.src_leg.eps.table) | set(self.tgt_leg.eps.table)
        return len(covered_v) == self.apex.vertices.size and len(covered_e) == self.apex.edges.size

    def describe(self) -> str:
        return (f"cospan {self.src_foot.vertices.size} -> {self.tgt_foot.vertices.size} "
                f"(apex {self.apex.describe()})")


def identity_cospan(X: ResNet) -> NetCospan:
    ident = identity_morphism(X)
    return NetCospan(X, X, X, ident, ident)


def graph_cospan(f: ResNetMorphism) -> NetCospan:
    """source -f-> target <-id- target"""
    return NetCospan.from_legs(f, identity_morphism(f.target))


def dual_cospan(c: NetCospan) -> NetCospan:
    return NetCospan(c.tgt_foot, c.src_foot, c.apex, c.tgt_leg, c.src_leg)


def _composite_cocone(c2: NetCospan, c1: NetCospan) -> NetCocone:
    if c1.tgt_foot != c2.src_foot:
        raise CompositionError(
            f"Cannot compose cospans: {c1.tgt_foot.describe()} does not match {c2.src_foot.describe()}")
    return net_pushout(c1.tgt_leg, c2.src_leg)


def cospan_compose(c2: NetCospan, c1: NetCospan) -> NetCospan:
    """c2 after c1, apex the pushout of the two inner legs"""
    P = _composite_cocone(c2, c1)
    return NetCospan(c1.src_foot, c2.tgt_foot, P.apex,
                     compose_morphisms(P.left, c1.src_leg), compose_morphisms(P.right, c2.tgt_leg))


def cospan_path(*cospans: NetCospan) -> NetCospan:
    """Compose in diagrammatic order, nesting to the left"""
    result = cospans[0]
    for c in cospans[1:]:
        result = cospan_compose(c, result)
    return result


def cospan_tensor(c1: NetCospan, c2: NetCospan) -> NetCospan:
    return NetCospan.from_legs(morphism_sum(c1.src_leg, c2.src_leg), morphism_sum(c1.tgt_leg, c2.tgt_leg))


@dataclass(frozen=True)
class CospanMap:
    """A morphism of apexes commuting strictly with both legs"""
    source: NetCospan
    target: NetCospan
    h: ResNetMorphism

    def __post_init__(self):
        if self.source.src_foot != self.target.src_foot or self.source.tgt_foot != self.target.tgt_foot:
            raise CompositionError("A map of cospans needs parallel cospans")
        if self.h.source != self.source.apex or self.h.target != self.target.apex:
            raise ShapeError("Map of cospans must go from apex to apex")
        _require_valid(self.h, "Map of cospans")
        if compose_morphisms(self.h, self.source.src_leg) != self.target.src_leg:
            raise CoherenceError("Map of cospans does not commute with the source legs")
        if compose_morphisms(self.h, self.source.tgt_leg) != self.target.tgt_leg:
            raise CoherenceError("Map of cospans does not commute with the target legs")

    def is_invertible(self) -> bool:
        return self.h.is_invertible()

    def is_identity(self) -> bool:
        return self.source == self.target and self.h.is_identity()


def cospan_id(c: NetCospan) -> CospanMap:
    return CospanMap(c, c, identity_morphism(c.apex))


def cospan_vcompose(m2: CospanMap, m1: CospanMap) -> CospanMap:
    if m1.target != m2.source:
        raise CompositionError("Vertical composite needs m1's target to be m2's source")
    return CospanMap(m1.source, m2.target, compose_morphisms(m2.h, m1.h))


def cospan_hcompose(m2: CospanMap, m1: CospanMap) -> CospanMap:
    """m2 * m1 for m1: c1 => c1' and m2: c2 => c2'"""
    source = cospan_compose(m2.source, m1.source)
    target = cospan_compose(m2.target, m1.target)
    outer = _composite_cocone(m2.target, m1.target)
    h = net_pushout_mediator(m1.source.tgt_leg, m2.source.src_leg,
                             compose_morphisms(outer.left, m1.h), compose_morphisms(outer.right, m2.h))
    return CospanMap(source, target, h)


def cospan_invert(m: CospanMap) -> CospanMap:
    return CospanMap(m.target, m.source, invert_morphism(m.h))


def cospan_tensor_maps(m: CospanMap, n: CospanMap) -> CospanMap:
    return CospanMap(cospan_tensor(m.source, n.source), cospan_tensor(m.target, n.target),
                     morphism_sum(m.h, n.h))


def cospan_tensorator(c: NetCospan, c_prime: NetCospan, d: NetCospan, d_prime: NetCospan) -> CospanMap:
    """(c + d)(c' + d') => (c c') + (d d'); a pushout of juxtapositions is the juxtaposed pushouts"""
    upper = cospan_tensor(c, d)
    lower = cospan_tensor(c_prime, d_prime)
    glued_c = _composite_cocone(c, c_prime)
    glued_d = _composite_cocone(d, d_prime)
    h = net_pushout_mediator(lower.tgt_leg, upper.src_leg,
                             morphism_sum(glued_c.left, glued_d.left),
                             morphism_sum(glued_c.right, glued_d.right))
    return CospanMap(cospan_compose(upper, lower),
                     cospan_tensor(cospan_compose(c, c_prime), cospan_compose(d, d_prime)), h)


def cospan_associator(c3: NetCospan, c2: NetCospan, c1: NetCospan) -> CospanMap:
    """(c3 c2) c1 => c3 (c2 c1), assembled from pushout mediators"""
    c21 = cospan_compose(c2, c1)
    inner21 = _composite_cocone(c2, c1)
    inner32 = _composite_cocone(c3, c2)
    target_cocone = _composite_cocone(c3, c21)
    from32 = net_pushout_mediator(c2.tgt_leg, c3.src_leg,
                                  compose_morphisms(target_cocone.left, inner21.right), target_cocone.right)
    c32 = cospan_compose(c3, c2)
    h = net_pushout_mediator(c1.tgt_leg, c32.src_leg,
                             compose_morphisms(target_cocone.left, inner21.left), from32)
    return CospanMap(cospan_compose(c32, c1), cospan_compose(c3, c21), h)


def cospan_unitor(side: str, c: NetCospan) -> CospanMap:
    """Left: id c => c. Right: c id => c."""
    if side == "left":
        source = cospan_compose(identity_cospan(c.tgt_foot), c)
        h = net_pushout_mediator(c.tgt_leg, identity_morphism(c.tgt_foot),
                                 identity_morphism(c.apex), c.tgt_leg)
    elif side == "right":
        source = cospan_compose(c, identity_cospan(c.src_foot))
        h = net_pushout_mediator(identity_morphism(c.src_foot), c.src_leg,
                                 c.src_leg, identity_morphism(c.apex))
    else:
        raise ShapeError(f"Unitor side must be 'left' or 'right', got {side!r}")
    return CospanMap(source, c, h)


def cospan_pentagon_holds(c4: NetCospan, c3: NetCospan, c2: NetCospan, c1: NetCospan) -> bool:
    direct = cospan_vcompose(cospan_associator(c4, c3, cospan_compose(c2, c1)),
                             cospan_associator(cospan_compose(c4, c3), c2, c1))
    around = cospan_vcompose(
        cospan_hcompose(cospan_id(c4), cospan_associator(c3, c2, c1)),
        cospan_vcompose(cospan_associator(c4, cospan_compose(c3, c2), c1),
                        cospan_hcompose(cospan_associator(c4, c3, c2), cospan_id(c1))))
    return direct == around


def cospan_triangle_holds(c2: NetCospan, c1: NetCospan) -> bool:
    through = cospan_vcompose(cospan_hcompose(cospan_id(c2), cospan_unitor("left", c1)),
                              cospan_associator(c2, identity_cospan(c1.tgt_foot), c1))
    direct = cospan_hcompose(cospan_unitor("right", c2), cospan_id(c1))
    return through == direct


def canonical_cospan_map(source: NetCospan, target: NetCospan) -> CospanMap:
    """
    The unique map of cospans out of a jointly epic source.

    Every apex vertex and edge of the source is reached by a leg; it is sent
    wherever the matching leg of the target sends the same foot element.
    """
    if source.src_foot != target.src_foot or source.tgt_foot != target.tgt_foot:
        raise CompositionError("Canonical map needs parallel cospans")

    def assign(size: int, pairs) -> Tuple[int, ...]:
        images: Dict[int, Set[int]] = {k: set() for k in range(size)}
        for src_fn, tgt_fn in pairs:
            for x in src_fn.dom.elements():
                images[src_fn(x)].add(tgt_fn(x))
        table = []
        for k in range(size):
            if not images[k]:
                raise CoherenceError("Source cospan is not jointly epic; the map would not be unique")
            if len(images[k]) > 1:
                raise CoherenceError(f"No strict map of cospans: element {k} has images {sorted(images[k])}")
            table.append(images[k].pop())
        return tuple(table)

    ups = assign(source.apex.vertices.size, ((source.src_leg.ups, target.src_leg.ups),
                                             (source.tgt_leg.ups, target.tgt_leg.ups)))
    eps = assign(source.apex.edges.size, ((source.src_leg.eps, target.src_leg.eps),
                                          (source.tgt_leg.eps, target.tgt_leg.eps)))
    h = ResNetMorphism(source.apex, target.apex,
                       FinFunction(source.apex.edges, target.apex.edges, eps),
                       FinFunction(source.apex.vertices, target.apex.vertices, ups))
    return CospanMap(source, target, h)


def _canonical_iso(source: NetCospan, target: NetCospan, name: str) -> CospanMap:
    m = canonical_cospan_map(source, target)
    if not m.is_invertible():
        raise CoherenceError(f"{name} is not invertible")
    return m


# ---------- circuits ----------

@dataclass(frozen=True)
class Circuit:
    """A cospan of networks whose feet have no edges"""
    cospan: NetCospan

    def __post_init__(self):
        if not (self.cospan.src_foot.is_edgeless() and self.cospan.tgt_foot.is_edgeless()):
            raise ShapeError("Circuit feet must have no edges")

    @property
    def inputs(self) -> int:
        return self.cospan.src_foot.vertices.size

    @property
    def outputs(self) -> int:
        return self.cospan.tgt_foot.vertices.size


def circuit_compose(c2: Circuit, c1: Circuit) -> Circuit:
    return Circuit(cospan_compose(c2.cospan, c1.cospan))


def circuit_tensor(c1: Circuit, c2: Circuit) -> Circuit:
    return Circuit(cospan_tensor(c1.cospan, c2.cospan))


def _codiagonal(F: ResNet) -> ResNetMorphism:
    """F + F -> F"""
    cone = net_coproduct_cone(F, F)
    ident = identity_morphism(F)
    return ResNetMorphism(cone.apex, F, copairing(ident.eps, ident.eps), copairing(ident.ups, ident.ups))


def _from_empty(F: ResNet) -> ResNetMorphism:
    return ResNetMorphism(empty_network(), F, FinFunction.from_initial(F.edges),
                          FinFunction.from_initial(F.vertices))


def _check_edgeless(F: ResNet) -> None:
    if not F.is_edgeless():
        raise ShapeError(f"Circuit duality needs an edgeless network, got {F.describe()}")


def circuit_unit(F: ResNet) -> NetCospan:
    """i: empty -> F + F, apex F with legs (!, codiagonal)"""
    _check_edgeless(F)
    return NetCospan.from_legs(_from_empty(F), _codiagonal(F))


def circuit_counit(F: ResNet) -> NetCospan:
    return dual_cospan(circuit_unit(F))


def _whisker_left(F: ResNet, c: NetCospan) -> NetCospan:
    """F + c"""
    return cospan_tensor(identity_cospan(F), c)


def _whisker_right(c: NetCospan, F: ResNet) -> NetCospan:
    """c + F"""
    return cospan_tensor(c, identity_cospan(F))


def _associator_1cell(X: ResNet, Y: ResNet, Z: ResNet) -> NetCospan:
    """(X + Y) + Z -> X + (Y + Z); both sides are the same network"""
    return identity_cospan(net_coproduct(net_coproduct(X, Y), Z))


def _associator_adjoint(X: ResNet, Y: ResNet, Z: ResNet) -> NetCospan:
    return dual_cospan(_associator_1cell(X, Y, Z))


def _left_unitor(X: ResNet) -> NetCospan:
    """empty + X -> X"""
    return identity_cospan(net_coproduct(empty_network(), X))


def _right_unitor(X: ResNet) -> NetCospan:
    return identity_cospan(net_coproduct(X, empty_network()))


def _zeta_pieces(F: ResNet) -> List[NetCospan]:
    return [dual_cospan(_left_unitor(F)), _whisker_right(circuit_unit(F), F),
            _associator_1cell(F, F, F), _whisker_left(F, circuit_counit(F)), _right_unitor(F)]


def _theta_pieces(F: ResNet) -> List[NetCospan]:
    return [dual_cospan(_right_unitor(F)), _whisker_left(F, circuit_unit(F)),
            _associator_adjoint(F, F, F), _whisker_right(circuit_counit(F), F), _left_unitor(F)]


def circuit_zigzag_targets(F: ResNet) -> Tuple[NetCospan, NetCospan]:
    """z = r (F e) a (i F) l* and t = l (e F) a* (F i) r*"""
    return cospan_path(*_zeta_pieces(F)), cospan_path(*_theta_pieces(F))


class CircuitDuality(NamedTuple):
    obj: ResNet
    unit: NetCospan
    counit: NetCospan
    zeta: CospanMap
    theta: CospanMap


def circuit_duality(F: ResNet) -> CircuitDuality:
    """F is its own dual; zeta and theta are the unique maps out of the identity cospan"""
    _check_edgeless(F)
    z, t = circuit_zigzag_targets(F)
    zeta = _canonical_iso(identity_cospan(F), z, "zeta")
    theta = _canonical_iso(identity_cospan(F), t, "theta")
    return CircuitDuality(F, circuit_unit(F), circuit_counit(F), zeta, theta)


def _flatten(X: NetCospan, pieces: Sequence[NetCospan]) -> CospanMap:
    """(cospan_path(pieces)) X => cospan_path(X, *pieces), by associators"""
    cell = cospan_id(cospan_compose(pieces[0], X))
    for k in range(1, len(pieces)):
        head = cospan_path(*pieces[:k])
        cell = cospan_vcompose(cospan_hcompose(cospan_id(pieces[k]), cell),
                               cospan_associator(pieces[k], head, X))
    return cell


def _rewrite(path: List[NetCospan], start: int, stop: int, new: List[NetCospan],
             cell: CospanMap) -> Tuple[List[NetCospan], CospanMap]:
    """Replace path[start:stop] by new, given cell: cospan_path(segment) => cospan_path(new)"""
    prefix, seg, suffix = path[:start], path[start:stop], path[stop:]
    if prefix:
        head = cospan_path(*prefix)
        cell = cospan_vcompose(_flatten(head, new),
                               cospan_vcompose(cospan_hcompose(cell, cospan_id(head)),
                                               cospan_invert(_flatten(head, seg))))
    for c in suffix:
        cell = cospan_hcompose(cospan_id(c), cell)
    return prefix + new + suffix, cell


def _tensor_path(pieces: Sequence[NetCospan], F: ResNet, side: str) -> CospanMap:
    """cospan_path(c1 + F, ..., cn + F) => cospan_path(c1, ..., cn) + F, or with F on the left"""
    def whisker(c: NetCospan) -> NetCospan:
        return _whisker_right(c, F) if side == "right" else _whisker_left(F, c)

    ident = identity_cospan(F)
    done = pieces[0]
    cell = cospan_id(whisker(done))
    for c in pieces[1:]:
        cell = cospan_hcompose(cospan_id(whisker(c)), cell)
        if side == "right":
            merge = cospan_vcompose(
                cospan_tensor_maps(cospan_id(cospan_compose(c, done)), cospan_unitor("left", ident)),
                cospan_tensorator(c, done, ident, ident))
        else:
            merge = cospan_vcompose(
                cospan_tensor_maps(cospan_unitor("left", ident), cospan_id(cospan_compose(c, done))),
                cospan_tensorator(ident, ident, c, done))
        cell = cospan_vcompose(merge, cell)
        done = cospan_compose(c, done)
    return cell


def _interchange(c: NetCospan, d: NetCospan) -> CospanMap:
    """(c + Y')(X + d) => (Y + d)(c + X'), through c + d"""
    first = cospan_vcompose(
        cospan_tensor_maps(cospan_unitor("right", c), cospan_unitor("left", d)),
        cospan_tensorator(c, identity_cospan(c.src_foot), identity_cospan(d.tgt_foot), d))
    second = cospan_vcompose(
        cospan_tensor_maps(cospan_unitor("left", c), cospan_unitor("right", d)),
        cospan_tensorator(identity_cospan(c.tgt_foot), c, d, identity_cospan(d.src_foot)))
    return cospan_vcompose(cospan_invert(second), first)


CospanRewrite = Tuple[int, int, List[NetCospan], Union[CospanMap, str]]


def circuit_swallowtail_rewrites(F: ResNet) -> List[CospanRewrite]:
    """
    The cells between the two zig-zag pastings for circuits, in the same
    order as for spans. The interchange of the two units is built from
    cospan tensorators and unitors; every other entry names the unique map
    between two local composites of structure cospans, units and counits.
    """
    I, FF = empty_network(), net_coproduct(F, F)
    i, e = circuit_unit(F), circuit_counit(F)

    def lb(X: ResNet) -> NetCospan:
        return dual_cospan(_left_unitor(X))

    def rb(X: ResNet) -> NetCospan:
        return dual_cospan(_right_unitor(X))

    return [
        (1, 2, [lb(FF), _associator_adjoint(I, F, F)], "left 2-unitor"),
        (2, 4, [_whisker_right(i, FF), _associator_adjoint(FF, F, F)], "a* natural in i"),
        (0, 2, [lb(I), _whisker_left(I, i)], "l* natural in i"),
        (1, 3, [_whisker_right(i, I), _whisker_left(FF, i)], _interchange(i, i)),
        (6, 7, [_associator_1cell(F, I, F), _whisker_left(F, _left_unitor(F))], "middle 2-unitor"),
        (5, 7, [_associator_1cell(F, FF, F), _whisker_left(F, _whisker_right(e, F))], "a natural in e"),
        (3, 6, [_associator_1cell(F, F, FF), _whisker_left(F, _associator_adjoint(F, F, F))],
         "pentagonator"),
        (2, 4, [_associator_1cell(F, F, I), _whisker_left(F, _whisker_left(F, i))], "a natural in i"),
        (0, 2, [i, rb(FF)], "r* natural in i"),
        (1, 3, [_whisker_left(F, rb(F))], "right 2-unitor"),
    ]


class CospanSwallowtailPastings(NamedTuple):
    zeta_side: CospanMap
    theta_side: CospanMap
    unitor: CospanMap


def circuit_swallowtail_pastings(F: ResNet) -> CospanSwallowtailPastings:
    """
    zeta side: (zeta + F) whiskered by i, then (z + F) i expanded into the
    flattened path of z's pieces, carried across by the rewrites and
    contracted into (F + t) i. theta side: (F + theta) whiskered by i.
    """
    data = circuit_duality(F)
    ident = cospan_id(identity_cospan(F))
    i = data.unit
    zeta_whiskered = cospan_hcompose(cospan_tensor_maps(data.zeta, ident), cospan_id(i))
    theta_whiskered = cospan_hcompose(cospan_tensor_maps(ident, data.theta), cospan_id(i))

    z_pieces = [_whisker_right(c, F) for c in _zeta_pieces(F)]
    t_pieces = [_whisker_left(F, c) for c in _theta_pieces(F)]
    middle = cospan_vcompose(_flatten(i, z_pieces),
                             cospan_hcompose(cospan_invert(_tensor_path(_zeta_pieces(F), F, "right")),
                                             cospan_id(i)))
    path = [i] + z_pieces
    for start, stop, new, cell in circuit_swallowtail_rewrites(F):
        if isinstance(cell, str):
            cell = _canonical_iso(cospan_path(*path[start:stop]), cospan_path(*new), cell)
        path, whiskered = _rewrite(path, start, stop, new, cell)
        middle = cospan_vcompose(whiskered, middle)
    if path != [i] + t_pieces:
        raise CoherenceError("Swallowtail rewrites do not end at the theta path")
    middle = cospan_vcompose(cospan_hcompose(_tensor_path(_theta_pieces(F), F, "left"), cospan_id(i)),
                             cospan_vcompose(cospan_invert(_flatten(i, t_pieces)), middle))
    return CospanSwallowtailPastings(cospan_vcompose(middle, zeta_whiskered), theta_whiskered,
                                     cospan_unitor("left", i))


def circuit_swallowtail_check(F: ResNet) -> CospanMap:
    """The swallowtail 2-cell i => i; it must be the identity"""
    sides = circuit_swallowtail_pastings(F)
    around = cospan_vcompose(cospan_invert(sides.theta_side),
                             cospan_vcompose(sides.zeta_side, cospan_invert(sides.unitor)))
    return cospan_vcompose(sides.unitor, around)
