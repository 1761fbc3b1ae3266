"""
The compact closed bicategory Span(FinSet)

1-cells are spans X <- S -> Y, 2-cells are maps of spans commuting strictly
with both legs. Every structure cell is built from the pullback and
product universal properties of ccbicat.finset, so the coherence laws hold
as table equalities.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import List, NamedTuple, Sequence, Tuple, Union

from .errors import CoherenceError, CompositionError, ShapeError
from .finset import (
    Cone, FinFunction, FinSet, compose_fn, diagonal, image_factorization,
    pairing, product, product_map, pullback, pullback_mediator, reassociate,
    swap, terminal,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Span:
    """A span src <- apex -> tgt, read as a 1-cell src -> tgt"""
    src: FinSet
    tgt: FinSet
    apex: FinSet
    src_leg: FinFunction
    tgt_leg: FinFunction

    def __post_init__(self):
        if self.src_leg.dom != self.apex or self.tgt_leg.dom != self.apex:
            raise ShapeError("Both legs of a span must start at its apex")
        if self.src_leg.cod != self.src or self.tgt_leg.cod != self.tgt:
            raise ShapeError("Span legs must end at the source and target")

    @classmethod
    def from_legs(cls, src_leg: FinFunction, tgt_leg: FinFunction) -> "Span":
        return cls(src_leg.cod, tgt_leg.cod, src_leg.dom, src_leg, tgt_leg)

    def is_jointly_monic(self) -> bool:
        return image_factorization(self.src_leg, self.tgt_leg).surjection.is_bijective()

    def describe(self) -> str:
        return f"span {self.src.size} -> {self.tgt.size} (apex {self.apex.size})"


@dataclass(frozen=True)
class SpanMap:
    """A map of spans: h between apexes with both triangles commuting on the nose"""
    source: Span
    target: Span
    h: FinFunction

    def __post_init__(self):
        if self.source.src != self.target.src or self.source.tgt != self.target.tgt:
            raise CompositionError("A map of spans needs parallel spans")
        if self.h.dom != self.source.apex or self.h.cod != self.target.apex:
            raise ShapeError("Map of spans must go from apex to apex")
        if compose_fn(self.target.src_leg, self.h) != self.source.src_leg:
            raise CoherenceError("Map of spans does not commute with the source legs")
        if compose_fn(self.target.tgt_leg, self.h) != self.source.tgt_leg:
            raise CoherenceError("Map of spans does not commute with the target legs")

    def is_invertible(self) -> bool:
        return self.h.is_bijective()

    def is_identity(self) -> bool:
        return self.source == self.target and self.h.is_identity()


@dataclass(frozen=True)
class DualityData:
    obj: FinSet
    unit: Span
    counit: Span
    zeta: SpanMap
    theta: SpanMap


class Modification(Enum):
    PENTAGONATOR = "pi"
    LEFT_2UNITOR = "lambda"
    MIDDLE_2UNITOR = "mu"
    RIGHT_2UNITOR = "rho"
    HEXAGON_R = "R"
    HEXAGON_S = "S"
    SYLLEPSIS = "v"


MODIFICATION_ARITY = {
    Modification.PENTAGONATOR: 4,
    Modification.LEFT_2UNITOR: 3,
    Modification.MIDDLE_2UNITOR: 3,
    Modification.RIGHT_2UNITOR: 3,
    Modification.HEXAGON_R: 3,
    Modification.HEXAGON_S: 3,
    Modification.SYLLEPSIS: 2,
}

# position of the monoidal unit among the objects of the 2-unitors
UNIT_SLOT = {
    Modification.LEFT_2UNITOR: 0,
    Modification.MIDDLE_2UNITOR: 1,
    Modification.RIGHT_2UNITOR: 2,
}


def unit_object() -> FinSet:
    return terminal()


def tensor_objects(A: FinSet, B: FinSet) -> FinSet:
    return product(A, B).apex


# ---------- 1-cells and 2-cells ----------

def id_span(A: FinSet) -> Span:
    ident = FinFunction.identity(A)
    return Span(A, A, A, ident, ident)


def graph_span(f: FinFunction) -> Span:
    """The span dom <-id- dom -f-> cod"""
    return Span.from_legs(FinFunction.identity(f.dom), f)


def dual_span(s: Span) -> Span:
    """The dual swaps the legs"""
    return Span(s.tgt, s.src, s.apex, s.tgt_leg, s.src_leg)


def _composite_cone(s: Span, r: Span) -> Cone:
    if r.tgt != s.src:
        raise CompositionError(
            f"Cannot compose spans: target {r.tgt.size} does not match source {s.src.size}")
    return pullback(r.tgt_leg, s.src_leg)


def compose_spans(s: Span, r: Span) -> Span:
    """s after r, apex the pullback of r's target leg against s's source leg"""
    cone = _composite_cone(s, r)
    return Span(r.src, s.tgt, cone.apex,
                compose_fn(r.src_leg, cone.left), compose_fn(s.tgt_leg, cone.right))


def compose_path(*spans: Span) -> Span:
    """Compose in diagrammatic order, nesting to the left: compose_path(a, b, c) = c(b a)"""
    result = spans[0]
    for s in spans[1:]:
        result = compose_spans(s, result)
    return result


def id_map(s: Span) -> SpanMap:
    return SpanMap(s, s, FinFunction.identity(s.apex))


def vcompose(m2: SpanMap, m1: SpanMap) -> SpanMap:
    if m1.target != m2.source:
        raise CompositionError("Vertical composite needs m1's target to be m2's source")
    return SpanMap(m1.source, m2.target, compose_fn(m2.h, m1.h))


def hcompose(m2: SpanMap, m1: SpanMap) -> SpanMap:
    """m2 * m1 for m1: r => r' and m2: s => s', giving s r => s' r'"""
    source = compose_spans(m2.source, m1.source)
    target = compose_spans(m2.target, m1.target)
    cone = _composite_cone(m2.source, m1.source)
    h = pullback_mediator(m1.target.tgt_leg, m2.target.src_leg,
                          compose_fn(m1.h, cone.left), compose_fn(m2.h, cone.right))
    return SpanMap(source, target, h)


def invert(m: SpanMap) -> SpanMap:
    if not m.is_invertible():
        raise CoherenceError("Map of spans is not invertible")
    return SpanMap(m.target, m.source, m.h.inverse())


def dual_map(m: SpanMap) -> SpanMap:
    return SpanMap(dual_span(m.source), dual_span(m.target), m.h)


def canonical_isomap(source: Span, target: Span) -> SpanMap:
    """
    The unique map of spans into a jointly monic target.

    Each element of the source apex is sent to the target element with the
    same pair of leg values; if there is none the spans are not related by
    a strict map and CoherenceError is raised.
    """
    if source.src != target.src or source.tgt != target.tgt:
        raise CompositionError("Canonical map needs parallel spans")
    if not target.is_jointly_monic():
        raise CoherenceError("Target span is not jointly monic; the map would not be unique")
    index = {(target.src_leg(x), target.tgt_leg(x)): x for x in target.apex.elements()}
    table = []
    for x in source.apex.elements():
        pair = (source.src_leg(x), source.tgt_leg(x))
        if pair not in index:
            raise CoherenceError(f"No strict map of spans: leg values {pair} are missing in the target")
        table.append(index[pair])
    return SpanMap(source, target, FinFunction(source.apex, target.apex, tuple(table)))


def _canonical_iso(source: Span, target: Span, name: str) -> SpanMap:
    m = canonical_isomap(source, target)
    if not m.is_invertible():
        raise CoherenceError(f"{name} is not invertible")
    return m


# ---------- composition structure ----------

def associator_span(t: Span, s: Span, r: Span) -> SpanMap:
    """(t s) r => t (s r), sending nested elements (x, (y, z)) to ((x, y), z)"""
    ts = compose_spans(t, s)
    ts_cone = _composite_cone(t, s)
    outer = _composite_cone(ts, r)
    x = outer.left
    y = compose_fn(ts_cone.left, outer.right)
    z = compose_fn(ts_cone.right, outer.right)
    sr = compose_spans(s, r)
    xy = pullback_mediator(r.tgt_leg, s.src_leg, x, y)
    h = pullback_mediator(sr.tgt_leg, t.src_leg, xy, z)
    return SpanMap(compose_spans(ts, r), compose_spans(t, sr), h)


def unitor_span(side: str, r: Span) -> SpanMap:
    """Left: id_B r => r. Right: r id_A => r."""
    if side == "left":
        source = compose_spans(id_span(r.tgt), r)
        h = _composite_cone(id_span(r.tgt), r).left
    elif side == "right":
        source = compose_spans(r, id_span(r.src))
        h = _composite_cone(r, id_span(r.src)).right
    else:
        raise ShapeError(f"Unitor side must be 'left' or 'right', got {side!r}")
    return SpanMap(source, r, h)


def pentagon_holds(u: Span, t: Span, s: Span, r: Span) -> bool:
    """Both ways of reassociating ((u t) s) r into u (t (s r)) agree"""
    direct = vcompose(associator_span(u, t, compose_spans(s, r)),
                      associator_span(compose_spans(u, t), s, r))
    around = vcompose(hcompose(id_map(u), associator_span(t, s, r)),
                      vcompose(associator_span(u, compose_spans(t, s), r),
                               hcompose(associator_span(u, t, s), id_map(r))))
    return direct == around


def triangle_holds(s: Span, r: Span) -> bool:
    """(s id) r => s r through the associator equals the right unitor whiskered by r"""
    through = vcompose(hcompose(id_map(s), unitor_span("left", r)),
                       associator_span(s, id_span(r.tgt), r))
    direct = hcompose(unitor_span("right", s), id_map(r))
    return through == direct


def interchange_holds(b2: SpanMap, b1: SpanMap, a2: SpanMap, a1: SpanMap) -> bool:
    lhs = hcompose(vcompose(b2, b1), vcompose(a2, a1))
    rhs = vcompose(hcompose(b2, a2), hcompose(b1, a1))
    return lhs == rhs


# ---------- monoidal structure ----------

def tensor_spans(s: Span, r: Span) -> Span:
    return Span.from_legs(product_map(s.src_leg, r.src_leg), product_map(s.tgt_leg, r.tgt_leg))


def tensor_maps(m: SpanMap, n: SpanMap) -> SpanMap:
    return SpanMap(tensor_spans(m.source, n.source), tensor_spans(m.target, n.target),
                   product_map(m.h, n.h))


def tensorator(s: Span, s_prime: Span, r: Span, r_prime: Span) -> SpanMap:
    """(s x r)(s' x r') => (s s') x (r r'), the reindexing of pullbacks of products"""
    upper = tensor_spans(s, r)
    lower = tensor_spans(s_prime, r_prime)
    cone = _composite_cone(upper, lower)
    lower_proj = product(s_prime.apex, r_prime.apex)
    upper_proj = product(s.apex, r.apex)
    x_low = compose_fn(lower_proj.left, cone.left)
    y_low = compose_fn(lower_proj.right, cone.left)
    x_up = compose_fn(upper_proj.left, cone.right)
    y_up = compose_fn(upper_proj.right, cone.right)
    h = pairing(pullback_mediator(s_prime.tgt_leg, s.src_leg, x_low, x_up),
                pullback_mediator(r_prime.tgt_leg, r.src_leg, y_low, y_up))
    return SpanMap(compose_spans(upper, lower),
                   tensor_spans(compose_spans(s, s_prime), compose_spans(r, r_prime)), h)


def left_whisker_object(A: FinSet, s: Span) -> Span:
    """A x s"""
    return tensor_spans(id_span(A), s)


def right_whisker_object(s: Span, A: FinSet) -> Span:
    """s x A"""
    return tensor_spans(s, id_span(A))


def associator_1cell(A: FinSet, B: FinSet, C: FinSet) -> Span:
    """a: (A B) C -> A (B C)"""
    return graph_span(reassociate(A, B, C))


def associator_adjoint(A: FinSet, B: FinSet, C: FinSet) -> Span:
    """a*: A (B C) -> (A B) C"""
    return dual_span(associator_1cell(A, B, C))


def left_unitor_1cell(A: FinSet) -> Span:
    """l: I A -> A"""
    return graph_span(product(unit_object(), A).right)


def right_unitor_1cell(A: FinSet) -> Span:
    """r: A I -> A"""
    return graph_span(product(A, unit_object()).left)


def braiding_span(A: FinSet, B: FinSet) -> Span:
    """b: A B -> B A, apex A x B with legs (id, swap)"""
    return graph_span(swap(A, B))


def adjoint_braiding(A: FinSet, B: FinSet) -> Span:
    """b*: B A -> A B; the swap is its own inverse, so this is b(B, A)"""
    return braiding_span(B, A)


def structural_modification(kind: Union[Modification, str], *objects: FinSet) -> SpanMap:
    """
    The invertible modification filling one of the monoidal polygons.

    pi(A,B,C,D), lambda(I,A,B), mu(A,I,B), rho(A,B,I), R(A,B,C), S(A,B,C), v(A,B).
    Every cell except v is the unique strict isomap between the two composite
    1-cells of the polygon; v is the identity on b(A,B).
    """
    kind = Modification(kind)
    if len(objects) != MODIFICATION_ARITY[kind]:
        raise ShapeError(
            f"{kind.value} takes {MODIFICATION_ARITY[kind]} objects, got {len(objects)}")
    if kind in UNIT_SLOT and objects[UNIT_SLOT[kind]] != unit_object():
        raise ShapeError(f"{kind.value} needs the monoidal unit in slot {UNIT_SLOT[kind]}")

    if kind is Modification.PENTAGONATOR:
        A, B, C, D = objects
        AB, BC, CD = tensor_objects(A, B), tensor_objects(B, C), tensor_objects(C, D)
        source = compose_path(right_whisker_object(associator_1cell(A, B, C), D),
                              associator_1cell(A, BC, D),
                              left_whisker_object(A, associator_1cell(B, C, D)))
        target = compose_path(associator_1cell(AB, C, D), associator_1cell(A, B, CD))
    elif kind is Modification.LEFT_2UNITOR:
        I, A, B = objects
        source = right_whisker_object(left_unitor_1cell(A), B)
        target = compose_path(associator_1cell(I, A, B), left_unitor_1cell(tensor_objects(A, B)))
    elif kind is Modification.MIDDLE_2UNITOR:
        A, I, B = objects
        source = compose_path(associator_1cell(A, I, B), left_whisker_object(A, left_unitor_1cell(B)))
        target = right_whisker_object(right_unitor_1cell(A), B)
    elif kind is Modification.RIGHT_2UNITOR:
        A, B, I = objects
        source = compose_path(associator_1cell(A, B, I), left_whisker_object(A, right_unitor_1cell(B)))
        target = right_unitor_1cell(tensor_objects(A, B))
    elif kind is Modification.HEXAGON_R:
        A, B, C = objects
        source = compose_path(right_whisker_object(braiding_span(A, B), C),
                              associator_1cell(B, A, C),
                              left_whisker_object(B, braiding_span(A, C)))
        target = compose_path(associator_1cell(A, B, C),
                              braiding_span(A, tensor_objects(B, C)),
                              associator_1cell(B, C, A))
    elif kind is Modification.HEXAGON_S:
        A, B, C = objects
        source = compose_path(left_whisker_object(A, braiding_span(B, C)),
                              associator_adjoint(A, C, B),
                              right_whisker_object(braiding_span(A, C), B))
        target = compose_path(associator_adjoint(A, B, C),
                              braiding_span(tensor_objects(A, B), C),
                              associator_adjoint(C, A, B))
    else:
        A, B = objects
        return id_map(braiding_span(A, B))

    logger.debug("building %s on objects of sizes %s", kind.value, [o.size for o in objects])
    return _canonical_iso(source, target, kind.value)


def double_braiding_iso(A: FinSet, B: FinSet) -> SpanMap:
    """b(B,A) b(A,B) => id on A x B"""
    twice = compose_spans(braiding_span(B, A), braiding_span(A, B))
    return _canonical_iso(twice, id_span(tensor_objects(A, B)), "double braiding")


# ---------- duality ----------

def unit_span(A: FinSet) -> Span:
    """i: I -> A A, apex A with legs (!, diagonal)"""
    return Span.from_legs(FinFunction.bang(A), diagonal(A))


def counit_span(A: FinSet) -> Span:
    """e: A A -> I, the reverse of i"""
    return dual_span(unit_span(A))


def _zeta_pieces(A: FinSet) -> List[Span]:
    return [dual_span(left_unitor_1cell(A)),
            right_whisker_object(unit_span(A), A),
            associator_1cell(A, A, A),
            left_whisker_object(A, counit_span(A)),
            right_unitor_1cell(A)]


def _theta_pieces(A: FinSet) -> List[Span]:
    return [dual_span(right_unitor_1cell(A)),
            left_whisker_object(A, unit_span(A)),
            associator_adjoint(A, A, A),
            right_whisker_object(counit_span(A), A),
            left_unitor_1cell(A)]


def zigzag_zeta_target(A: FinSet) -> Span:
    """z = r (A e) a (i A) l*"""
    return compose_path(*_zeta_pieces(A))


def zigzag_theta_target(A: FinSet) -> Span:
    """t = l (e A) a* (A i) r*"""
    return compose_path(*_theta_pieces(A))


def duality(A: FinSet) -> DualityData:
    zeta = _canonical_iso(id_span(A), zigzag_zeta_target(A), "zeta")
    theta = _canonical_iso(id_span(A), zigzag_theta_target(A), "theta")
    return DualityData(A, unit_span(A), counit_span(A), zeta, theta)


# ---------- paths of 1-cells ----------

def _flatten(X: Span, pieces: Sequence[Span]) -> SpanMap:
    """(compose_path(pieces)) X => compose_path(X, *pieces), by associators"""
    cell = id_map(compose_spans(pieces[0], X))
    for k in range(1, len(pieces)):
        head = compose_path(*pieces[:k])
        cell = vcompose(hcompose(id_map(pieces[k]), cell), associator_span(pieces[k], head, X))
    return cell


def _whisker_path(cell: SpanMap, suffix: Sequence[Span]) -> SpanMap:
    for s in suffix:
        cell = hcompose(id_map(s), cell)
    return cell


def _rewrite(path: List[Span], start: int, stop: int, new: List[Span],
             cell: SpanMap) -> Tuple[List[Span], SpanMap]:
    """Replace path[start:stop] by new, given cell: compose_path(segment) => compose_path(new)"""
    prefix, seg, suffix = path[:start], path[start:stop], path[stop:]
    if prefix:
        head = compose_path(*prefix)
        cell = vcompose(_flatten(head, new),
                        vcompose(hcompose(cell, id_map(head)), invert(_flatten(head, seg))))
    return prefix + new + suffix, _whisker_path(cell, suffix)


def _tensor_path(pieces: Sequence[Span], A: FinSet, side: str) -> SpanMap:
    """
    compose_path(c1 x A, ..., cn x A) => compose_path(c1, ..., cn) x A, or the
    same with A on the left, by tensorators and unitors on id_A.
    """
    def whisker(c: Span) -> Span:
        return right_whisker_object(c, A) if side == "right" else left_whisker_object(A, c)

    ident = id_span(A)
    done = pieces[0]
    cell = id_map(whisker(done))
    for c in pieces[1:]:
        cell = hcompose(id_map(whisker(c)), cell)
        if side == "right":
            merge = vcompose(tensor_maps(id_map(compose_spans(c, done)), unitor_span("left", ident)),
                             tensorator(c, done, ident, ident))
        else:
            merge = vcompose(tensor_maps(unitor_span("left", ident), id_map(compose_spans(c, done))),
                             tensorator(ident, ident, c, done))
        cell = vcompose(merge, cell)
        done = compose_spans(c, done)
    return cell


def _interchange(s: Span, r: Span) -> SpanMap:
    """(s x Y')(X x r) => (Y x r)(s x X'), both sides taken to s x r by tensorators and unitors"""
    first = vcompose(tensor_maps(unitor_span("right", s), unitor_span("left", r)),
                     tensorator(s, id_span(s.src), id_span(r.tgt), r))
    second = vcompose(tensor_maps(unitor_span("left", s), unitor_span("right", r)),
                      tensorator(id_span(s.tgt), s, r, id_span(r.src)))
    return vcompose(invert(second), first)


Rewrite = Tuple[int, int, List[Span], Union[SpanMap, str]]


def swallowtail_rewrites(A: FinSet) -> List[Rewrite]:
    """
    The cells between the two zig-zag pastings, as (start, stop, replacement,
    cell) rewrites taking the flattened path

        i, l* A, (i A) A, a A, (A e) A, r A

    to

        i, A r*, A (A i), A a*, A (e A), A l

    In order: the left 2-unitor on l* A; a* natural in i; l* natural in i;
    the interchange of the two units; the middle 2-unitor on r A; a natural
    in e; the pentagonator; a natural in i; r* natural in i; the right
    2-unitor on A r*. The interchange is a SpanMap built from tensorators and
    unitors, the middle 2-unitor is structural_modification(mu). The other
    entries carry a name and are the strict isomaps between the two local
    composites of structure 1-cells, units and counits.
    """
    I, AA = unit_object(), tensor_objects(A, A)
    i, e = unit_span(A), counit_span(A)

    def lb(X: FinSet) -> Span:
        return dual_span(left_unitor_1cell(X))

    def rb(X: FinSet) -> Span:
        return dual_span(right_unitor_1cell(X))

    return [
        (1, 2, [lb(AA), associator_adjoint(I, A, A)], "left 2-unitor"),
        (2, 4, [right_whisker_object(i, AA), associator_adjoint(AA, A, A)], "a* natural in i"),
        (0, 2, [lb(I), left_whisker_object(I, i)], "l* natural in i"),
        (1, 3, [right_whisker_object(i, I), left_whisker_object(AA, i)], _interchange(i, i)),
        (6, 7, [associator_1cell(A, I, A), left_whisker_object(A, left_unitor_1cell(A))],
         invert(structural_modification(Modification.MIDDLE_2UNITOR, A, I, A))),
        (5, 7, [associator_1cell(A, AA, A), left_whisker_object(A, right_whisker_object(e, A))],
         "a natural in e"),
        (3, 6, [associator_1cell(A, A, AA), left_whisker_object(A, associator_adjoint(A, A, A))],
         "pentagonator"),
        (2, 4, [associator_1cell(A, A, I), left_whisker_object(A, left_whisker_object(A, i))],
         "a natural in i"),
        (0, 2, [i, rb(AA)], "r* natural in i"),
        (1, 3, [left_whisker_object(A, rb(A))], "right 2-unitor"),
    ]


class SwallowtailPastings(NamedTuple):
    zeta_side: SpanMap
    theta_side: SpanMap
    unitor: SpanMap


def swallowtail_pastings(A: FinSet) -> SwallowtailPastings:
    """
    The two pasted sides of the swallowtail, both from (A x A) i to (A x t) i.

    zeta side: (zeta x A) whiskered by i; then (z x A) i is expanded into the
    flattened path of z's pieces tensored with A (tensorators, then
    associators), carried across by swallowtail_rewrites, and contracted
    into (A x t) i the same way. theta side: (A x theta) whiskered by i.
    Each step must match the next on the nose, so a misplaced bracket or a
    cell that does not commute raises.
    """
    data = duality(A)
    ident = id_span(A)
    i = data.unit
    zeta_whiskered = hcompose(tensor_maps(data.zeta, id_map(ident)), id_map(i))
    theta_whiskered = hcompose(tensor_maps(id_map(ident), data.theta), id_map(i))

    z_pieces = [right_whisker_object(c, A) for c in _zeta_pieces(A)]
    t_pieces = [left_whisker_object(A, c) for c in _theta_pieces(A)]
    middle = vcompose(_flatten(i, z_pieces),
                      hcompose(invert(_tensor_path(_zeta_pieces(A), A, "right")), id_map(i)))
    path = [i] + z_pieces
    for start, stop, new, cell in swallowtail_rewrites(A):
        if isinstance(cell, str):
            cell = _canonical_iso(compose_path(*path[start:stop]), compose_path(*new), cell)
        path, whiskered = _rewrite(path, start, stop, new, cell)
        middle = vcompose(whiskered, middle)
    if path != [i] + t_pieces:
        raise CoherenceError("Swallowtail rewrites do not end at the theta path")
    middle = vcompose(hcompose(_tensor_path(_theta_pieces(A), A, "left"), id_map(i)),
                      vcompose(invert(_flatten(i, t_pieces)), middle))
    unitor = unitor_span("left", i)
    return SwallowtailPastings(vcompose(middle, zeta_whiskered), theta_whiskered, unitor)


def swallowtail_check(A: FinSet) -> SpanMap:
    """The swallowtail 2-cell i => i; it must be the identity"""
    sides = swallowtail_pastings(A)
    around = vcompose(invert(sides.theta_side), vcompose(sides.zeta_side, invert(sides.unitor)))
    return vcompose(sides.unitor, around)


def structure_1cells(objects: Sequence[FinSet]) -> list:
    """Every structure 1-cell on the given objects, used by joint-monicity checks"""
    cells = []
    for A in objects:
        cells.extend([id_span(A), unit_span(A), counit_span(A),
                      left_unitor_1cell(A), right_unitor_1cell(A),
                      dual_span(left_unitor_1cell(A)), dual_span(right_unitor_1cell(A))])
        for B in objects:
            cells.append(braiding_span(A, B))
            for C in objects:
                cells.extend([associator_1cell(A, B, C), associator_adjoint(A, B, C)])
    return cells
