"""
Rel as the jointly monic spans inside Span(FinSet)
"""

import logging
from dataclasses import dataclass
from typing import FrozenSet, Iterable, Optional, Tuple

from .errors import CoherenceError, CompositionError, ShapeError
from .finset import FinFunction, FinSet, image_factorization, terminal
from .spans import (
    DualityData, Span, SpanMap, associator_1cell, canonical_isomap, compose_spans,
    counit_span, dual_span, duality, id_span, left_unitor_1cell, left_whisker_object,
    right_unitor_1cell, right_whisker_object, structure_1cells, tensor_spans, unit_span,
)
from .utils import first_occurrence

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class Relation:
    """A relation X -> Y stored as its jointly monic span"""
    span: Span

    def __post_init__(self):
        if not self.span.is_jointly_monic():
            raise ShapeError("A relation needs a jointly monic span")

    @property
    def src(self) -> FinSet:
        return self.span.src

    @property
    def tgt(self) -> FinSet:
        return self.span.tgt

    def pairs(self) -> Tuple[Tuple[int, int], ...]:
        """Related pairs in the stored (first-occurrence) order"""
        return tuple((self.span.src_leg(k), self.span.tgt_leg(k)) for k in self.span.apex.elements())

    def pair_set(self) -> FrozenSet[Tuple[int, int]]:
        return frozenset(self.pairs())

    def __eq__(self, other):
        if not isinstance(other, Relation):
            return NotImplemented
        return self.src == other.src and self.tgt == other.tgt and self.pair_set() == other.pair_set()

    def __hash__(self):
        return hash((self.src.size, self.tgt.size, self.pair_set()))


def span_to_rel(s: Span) -> Relation:
    """Replace the apex by the joint image of the legs"""
    img = image_factorization(s.src_leg, s.tgt_leg)
    m1, m2 = img.mono_pair
    return Relation(Span(s.src, s.tgt, img.image, m1, m2))


def relation_from_pairs(X: FinSet, Y: FinSet, pairs: Iterable[Tuple[int, int]]) -> Relation:
    distinct = first_occurrence((int(x), int(y)) for x, y in pairs)
    apex = FinSet(len(distinct))
    src_leg = FinFunction(apex, X, tuple(x for x, _ in distinct))
    tgt_leg = FinFunction(apex, Y, tuple(y for _, y in distinct))
    return Relation(Span(X, Y, apex, src_leg, tgt_leg))


def identity_relation(A: FinSet) -> Relation:
    return Relation(id_span(A))


def empty_relation(X: FinSet, Y: FinSet) -> Relation:
    return relation_from_pairs(X, Y, ())


def rel_compose(t: Relation, s: Relation) -> Relation:
    """t after s"""
    return span_to_rel(compose_spans(t.span, s.span))


def rel_converse(r: Relation) -> Relation:
    return Relation(dual_span(r.span))


def rel_tensor(r: Relation, s: Relation) -> Relation:
    return span_to_rel(tensor_spans(r.span, s.span))


def _check_parallel(s: Relation, t: Relation) -> None:
    if s.src != t.src or s.tgt != t.tgt:
        raise CompositionError(
            f"Relations are not parallel: {s.src.size}->{s.tgt.size} vs {t.src.size}->{t.tgt.size}")


def rel_leq(s: Relation, t: Relation) -> bool:
    """s implies t: every pair of s is a pair of t"""
    _check_parallel(s, t)
    return s.pair_set() <= t.pair_set()


def implication(s: Relation, t: Relation) -> Optional[SpanMap]:
    """The unique map of spans s => t, or None when s does not imply t"""
    _check_parallel(s, t)
    try:
        return canonical_isomap(s.span, t.span)
    except CoherenceError:
        return None


def rel_compact_structure(A: FinSet) -> DualityData:
    """
    Duality data for A in Rel.

    Every structure 1-cell on A and the unit object is checked to be jointly
    monic already, so span_to_rel leaves it alone and the span duality data
    is a duality in Rel as it stands.
    """
    for cell in structure_1cells([A, terminal()]):
        if not cell.is_jointly_monic():
            raise CoherenceError(f"Structure 1-cell {cell.describe()} is not jointly monic")
    data = duality(A)
    logger.debug("relation duality on %s elements verified", A.size)
    return data


def rel_zigzag(A: FinSet) -> Relation:
    """r (A e) a (i A) l* computed with relation composition throughout"""
    chain = [dual_span(left_unitor_1cell(A)),
             right_whisker_object(unit_span(A), A),
             associator_1cell(A, A, A),
             left_whisker_object(A, counit_span(A)),
             right_unitor_1cell(A)]
    result = span_to_rel(chain[0])
    for cell in chain[1:]:
        result = rel_compose(span_to_rel(cell), result)
    return result


def rel_zigzag_holds(A: FinSet) -> bool:
    return rel_zigzag(A) == identity_relation(A)


def rel_associativity_holds(u: Relation, t: Relation, s: Relation, r: Relation) -> bool:
    """All five bracketings of u t s r give the same relation"""
    bracketings = [
        rel_compose(rel_compose(rel_compose(u, t), s), r),
        rel_compose(rel_compose(u, rel_compose(t, s)), r),
        rel_compose(rel_compose(u, t), rel_compose(s, r)),
        rel_compose(u, rel_compose(rel_compose(t, s), r)),
        rel_compose(u, rel_compose(t, rel_compose(s, r))),
    ]
    return all(b == bracketings[0] for b in bracketings[1:])


def rel_unit_holds(s: Relation, r: Relation) -> bool:
    """Identity relations are strict units on both sides of s r"""
    sr = rel_compose(s, r)
    return (rel_compose(s, rel_compose(identity_relation(s.src), r)) == sr
            and rel_compose(identity_relation(s.tgt), s) == s
            and rel_compose(r, identity_relation(r.src)) == r)
