"""
Finite categories and profunctors between them

A profunctor F: C -|-> D is a functor C^op x D -> FinSet, stored as a grid of
value sets with one action table per morphism on each side. Composition is
the coend over the middle category, computed as a coequalizer of the two
action maps out of the sum over morphisms into the sum over the diagonal.
"""

import itertools
import logging
from bisect import bisect_right
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Dict, List, NamedTuple, Optional, Sequence, Tuple

from .errors import CoherenceError, CompositionError, ShapeError
from .finset import (
    FinFunction, FinSet, coequalizer, coequalizer_mediator, compose_fn, product, product_map,
)
from .matrices import ObMatrix
from .utils import lex_coords, lex_index

logger = logging.getLogger(__name__)


# ---------- finite categories ----------

@dataclass(frozen=True)
class FinCat:
    """
    A finite category.

    composition holds one triple (g, f, g after f) per composable pair, kept
    sorted so that categories built in different ways compare equal when
    their tables agree.
    """
    objects: FinSet
    morphisms: FinSet
    src_of: FinFunction
    tgt_of: FinFunction
    id_of: FinFunction
    composition: Tuple[Tuple[int, int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "composition",
                           tuple(sorted(tuple(int(x) for x in t) for t in self.composition)))
        for name, fn, dom, cod in (("src_of", self.src_of, self.morphisms, self.objects),
                                   ("tgt_of", self.tgt_of, self.morphisms, self.objects),
                                   ("id_of", self.id_of, self.objects, self.morphisms)):
            if fn.dom != dom or fn.cod != cod:
                raise ShapeError(f"{name} has the wrong domain or codomain")
        seen = set()
        for triple in self.composition:
            if len(triple) != 3 or any(not 0 <= m < self.morphisms.size for m in triple):
                raise ShapeError(f"Composition entry {triple} is out of range")
            if triple[:2] in seen:
                raise ShapeError(f"Composition lists the pair {triple[:2]} twice")
            seen.add(triple[:2])

    @classmethod
    def build(cls, n_objects: int, src: Sequence[int], tgt: Sequence[int],
              ident: Sequence[int], composition) -> "FinCat":
        objects, morphisms = FinSet(n_objects), FinSet(len(src))
        return cls(objects, morphisms, FinFunction(morphisms, objects, tuple(src)),
                   FinFunction(morphisms, objects, tuple(tgt)),
                   FinFunction(objects, morphisms, tuple(ident)), tuple(composition))

    @cached_property
    def _table(self) -> Dict[Tuple[int, int], int]:
        return {(g, f): h for g, f, h in self.composition}

    @cached_property
    def _homs(self) -> Dict[Tuple[int, int], Tuple[int, ...]]:
        homs: Dict[Tuple[int, int], List[int]] = {
            (a, b): [] for a in self.objects.elements() for b in self.objects.elements()}
        for m in self.morphisms.elements():
            homs[(self.src_of(m), self.tgt_of(m))].append(m)
        return {key: tuple(ms) for key, ms in homs.items()}

    @cached_property
    def _positions(self) -> Tuple[int, ...]:
        pos = [0] * self.morphisms.size
        for ms in self._homs.values():
            for k, m in enumerate(ms):
                pos[m] = k
        return tuple(pos)

    def hom(self, a: int, b: int) -> Tuple[int, ...]:
        """Morphisms a -> b in ascending order"""
        return self._homs[(a, b)]

    def hom_set(self, a: int, b: int) -> FinSet:
        return FinSet(len(self.hom(a, b)))

    def position(self, m: int) -> int:
        """Index of m inside its hom-set"""
        return self._positions[m]

    def identity(self, a: int) -> int:
        return self.id_of(a)

    def compose(self, g: int, f: int) -> int:
        """g after f"""
        if self.tgt_of(f) != self.src_of(g):
            raise CompositionError(f"Morphisms {g} and {f} are not composable")
        if (g, f) not in self._table:
            raise CompositionError(f"Composition table has no entry for ({g}, {f})")
        return self._table[(g, f)]

    def composable_pairs(self):
        for f in self.morphisms.elements():
            for g in self.hom_from(self.tgt_of(f)):
                yield g, f

    def hom_from(self, a: int) -> List[int]:
        return [m for m in self.morphisms.elements() if self.src_of(m) == a]


def validate_fincat(C: FinCat) -> bool:
    """Exhaustive check of the identity, bookkeeping and associativity axioms"""
    for a in C.objects.elements():
        i = C.identity(a)
        if C.src_of(i) != a or C.tgt_of(i) != a:
            logger.debug("identity of %s has the wrong endpoints", a)
            return False
    composable = set(C.composable_pairs())
    if set(C._table) != composable:
        logger.debug("composition table does not cover exactly the composable pairs")
        return False
    for g, f in composable:
        h = C.compose(g, f)
        if C.src_of(h) != C.src_of(f) or C.tgt_of(h) != C.tgt_of(g):
            logger.debug("composite of (%s, %s) has the wrong endpoints", g, f)
            return False
    for f in C.morphisms.elements():
        if C.compose(C.identity(C.tgt_of(f)), f) != f or C.compose(f, C.identity(C.src_of(f))) != f:
            logger.debug("identity law fails at %s", f)
            return False
    for g, f in composable:
        for h in C.hom_from(C.tgt_of(g)):
            if C.compose(h, C.compose(g, f)) != C.compose(C.compose(h, g), f):
                logger.debug("associativity fails at (%s, %s, %s)", h, g, f)
                return False
    return True


def discrete(n: int) -> FinCat:
    return FinCat.build(n, range(n), range(n), range(n), [(i, i, i) for i in range(n)])


def terminal_category() -> FinCat:
    return discrete(1)


def walking_arrow() -> FinCat:
    """Objects 0 and 1; morphisms id_0, id_1 and 0 -> 1"""
    return FinCat.build(2, [0, 1, 0], [0, 1, 1], [0, 1],
                        [(0, 0, 0), (1, 1, 1), (2, 0, 2), (1, 2, 2)])


def monoid_category(table: Sequence[Sequence[int]], unit: int = 0) -> FinCat:
    """One object; morphisms are monoid elements, table[g][f] is g after f"""
    k = len(table)
    return FinCat.build(1, [0] * k, [0] * k, [unit],
                        [(g, f, table[g][f]) for g in range(k) for f in range(k)])


def preorder_category(n: int, relation: Sequence[Tuple[int, int]]) -> FinCat:
    """The preorder generated by the given pairs a <= b, one morphism per related pair"""
    leq = {(a, a) for a in range(n)} | {(int(a), int(b)) for a, b in relation}
    changed = True
    while changed:
        changed = False
        for (a, b), (c, d) in itertools.product(list(leq), repeat=2):
            if b == c and (a, d) not in leq:
                leq.add((a, d))
                changed = True
    pairs = sorted(leq)
    index = {pair: m for m, pair in enumerate(pairs)}
    composition = [(index[(b, c)], index[(a, b)], index[(a, c)])
                   for (a, b) in pairs for (b2, c) in pairs if b2 == b]
    return FinCat.build(n, [a for a, _ in pairs], [b for _, b in pairs],
                        [index[(a, a)] for a in range(n)], composition)


def opposite(C: FinCat) -> FinCat:
    return FinCat(C.objects, C.morphisms, C.tgt_of, C.src_of, C.id_of,
                  tuple((f, g, h) for g, f, h in C.composition))


def product_category(C: FinCat, D: FinCat) -> FinCat:
    """C x D with objects and morphisms flattened left-major"""
    m = D.morphisms.size
    n = D.objects.size
    src = [C.src_of(f) * n + D.src_of(g) for f in C.morphisms.elements() for g in D.morphisms.elements()]
    tgt = [C.tgt_of(f) * n + D.tgt_of(g) for f in C.morphisms.elements() for g in D.morphisms.elements()]
    ident = [C.identity(a) * m + D.identity(b) for a in C.objects.elements() for b in D.objects.elements()]
    composition = [(g1 * m + g2, f1 * m + f2, h1 * m + h2)
                   for g1, f1, h1 in C.composition for g2, f2, h2 in D.composition]
    return FinCat.build(C.objects.size * n, src, tgt, ident, composition)


# ---------- profunctors ----------

class CoendPresentation(NamedTuple):
    """A coend as the quotient of the sum over the diagonal"""
    apex: FinSet
    quotient: FinFunction
    summands: Tuple[FinSet, ...]
    offsets: Tuple[int, ...]

    def class_of(self, a: int, x: int) -> int:
        return self.quotient(self.offsets[a] + x)

    def locate(self, k: int) -> Tuple[int, int]:
        """Summand and local index of element k of the sum"""
        a = bisect_right(self.offsets, k) - 1
        return a, k - self.offsets[a]

    def representative(self, cls: int) -> Tuple[int, int]:
        """The first element of the sum in the given class"""
        return self.locate(self.quotient.table.index(cls))

    def elements(self):
        for a, summand in enumerate(self.summands):
            for x in summand.elements():
                yield a, x


@dataclass(frozen=True)
class Profunctor:
    """
    F: src_cat -|-> tgt_cat.

    values[c][d] is F(c, d); left_action[g][d] is F(c', d) -> F(c, d) for
    g: c -> c'; right_action[c][h] is F(c, d) -> F(c, d') for h: d -> d'.
    """
    src_cat: FinCat
    tgt_cat: FinCat
    values: Tuple[Tuple[FinSet, ...], ...]
    left_action: Tuple[Tuple[FinFunction, ...], ...]
    right_action: Tuple[Tuple[FinFunction, ...], ...]
    presentation: Optional[Tuple[Tuple[CoendPresentation, ...], ...]] = field(
        default=None, compare=False, repr=False)

    def __post_init__(self):
        C, D = self.src_cat, self.tgt_cat
        if len(self.values) != C.objects.size or any(len(row) != D.objects.size for row in self.values):
            raise ShapeError("Profunctor values do not form an objects x objects grid")
        if len(self.left_action) != C.morphisms.size or len(self.right_action) != C.objects.size:
            raise ShapeError("Profunctor actions are missing rows")
        for g in C.morphisms.elements():
            for d in D.objects.elements():
                act = self.left_action[g][d]
                if act.dom != self.value(C.tgt_of(g), d) or act.cod != self.value(C.src_of(g), d):
                    raise ShapeError(f"Left action of morphism {g} at {d} has the wrong type")
        for c in C.objects.elements():
            for h in D.morphisms.elements():
                act = self.right_action[c][h]
                if act.dom != self.value(c, D.src_of(h)) or act.cod != self.value(c, D.tgt_of(h)):
                    raise ShapeError(f"Right action of morphism {h} at {c} has the wrong type")

    @classmethod
    def from_callables(cls, C: FinCat, D: FinCat, value: Callable[[int, int], FinSet],
                       left: Callable[[int, int, int], int], right: Callable[[int, int, int], int],
                       presentation=None) -> "Profunctor":
        """left(g, d, x) and right(c, h, x) give the image of element x"""
        values = tuple(tuple(value(c, d) for d in D.objects.elements()) for c in C.objects.elements())

        def left_fn(g, d):
            src, dst = values[C.tgt_of(g)][d], values[C.src_of(g)][d]
            return FinFunction(src, dst, tuple(left(g, d, x) for x in src.elements()))

        def right_fn(c, h):
            src, dst = values[c][D.src_of(h)], values[c][D.tgt_of(h)]
            return FinFunction(src, dst, tuple(right(c, h, x) for x in src.elements()))

        return cls(C, D, values,
                   tuple(tuple(left_fn(g, d) for d in D.objects.elements()) for g in C.morphisms.elements()),
                   tuple(tuple(right_fn(c, h) for h in D.morphisms.elements()) for c in C.objects.elements()),
                   presentation)

    def value(self, c: int, d: int) -> FinSet:
        return self.values[c][d]

    def act_left(self, g: int, d: int) -> FinFunction:
        return self.left_action[g][d]

    def act_right(self, c: int, h: int) -> FinFunction:
        return self.right_action[c][h]


@dataclass(frozen=True)
class IsoWitness:
    """Bijections source(c, d) -> target(c, d), one per pair of objects"""
    source: Profunctor
    target: Profunctor
    components: Tuple[Tuple[FinFunction, ...], ...]

    def component(self, c: int, d: int) -> FinFunction:
        return self.components[c][d]


def validate_profunctor(F: Profunctor) -> bool:
    """Functoriality of both actions and their commutation, checked exhaustively"""
    C, D = F.src_cat, F.tgt_cat
    for d in D.objects.elements():
        for a in C.objects.elements():
            if not F.act_left(C.identity(a), d).is_identity():
                return False
        for g, f in C.composable_pairs():
            if F.act_left(C.compose(g, f), d) != compose_fn(F.act_left(f, d), F.act_left(g, d)):
                return False
    for c in C.objects.elements():
        for b in D.objects.elements():
            if not F.act_right(c, D.identity(b)).is_identity():
                return False
        for k, h in D.composable_pairs():
            if F.act_right(c, D.compose(k, h)) != compose_fn(F.act_right(c, k), F.act_right(c, h)):
                return False
    for g in C.morphisms.elements():
        for h in D.morphisms.elements():
            c, c2 = C.src_of(g), C.tgt_of(g)
            d, d2 = D.src_of(h), D.tgt_of(h)
            one = compose_fn(F.act_left(g, d2), F.act_right(c2, h))
            other = compose_fn(F.act_right(c, h), F.act_left(g, d))
            if one != other:
                return False
    return True


def validate_iso_witness(w: IsoWitness) -> bool:
    """Every component is a bijection and every naturality square commutes"""
    F, G = w.source, w.target
    if F.src_cat != G.src_cat or F.tgt_cat != G.tgt_cat:
        return False
    C, D = F.src_cat, F.tgt_cat
    for c in C.objects.elements():
        for d in D.objects.elements():
            comp = w.component(c, d)
            if comp.dom != F.value(c, d) or comp.cod != G.value(c, d) or not comp.is_bijective():
                return False
    for g in C.morphisms.elements():
        for d in D.objects.elements():
            a, b = C.src_of(g), C.tgt_of(g)
            if compose_fn(w.component(a, d), F.act_left(g, d)) != compose_fn(G.act_left(g, d), w.component(b, d)):
                return False
    for c in C.objects.elements():
        for h in D.morphisms.elements():
            a, b = D.src_of(h), D.tgt_of(h)
            if compose_fn(w.component(c, b), F.act_right(c, h)) != compose_fn(G.act_right(c, h), w.component(c, a)):
                return False
    return True


def _coend(C: FinCat, value: Callable[[int, int], FinSet],
           act_contra: Callable[[int, int], FinFunction],
           act_co: Callable[[int, int], FinFunction]) -> CoendPresentation:
    """
    Coequalize the two maps out of the sum over g: a -> b of value(b, a)
    into the sum over a of value(a, a).

    act_contra(g, a): value(b, a) -> value(a, a) acts on the first slot,
    act_co(b, g): value(b, a) -> value(b, b) on the second.
    """
    summands = tuple(value(a, a) for a in C.objects.elements())
    offsets = tuple(itertools.accumulate([0] + [s.size for s in summands[:-1]])) if summands else ()
    total = FinSet(sum(s.size for s in summands))
    first, second = [], []
    for g in C.morphisms.elements():
        a, b = C.src_of(g), C.tgt_of(g)
        contra, co = act_contra(g, a), act_co(b, g)
        for x in contra.dom.elements():
            first.append(offsets[a] + contra(x))
            second.append(offsets[b] + co(x))
    relations = FinSet(len(first))
    quotient = coequalizer(FinFunction(relations, total, tuple(first)),
                           FinFunction(relations, total, tuple(second)))
    return CoendPresentation(quotient.apex, quotient.q, summands, offsets)


def coend_presentation(F: Profunctor) -> CoendPresentation:
    if F.src_cat != F.tgt_cat:
        raise CompositionError("A coend needs an endo-profunctor")
    return _coend(F.src_cat, F.value, F.act_left, F.act_right)


def coend(F: Profunctor) -> FinSet:
    return coend_presentation(F).apex


def _induced_action(source: CoendPresentation, target: CoendPresentation,
                    local_map: Callable[[int, int], int]) -> FinFunction:
    """Push every representative through local_map and factor through the source quotient"""
    table = [target.class_of(a, local_map(a, x)) for a, x in source.elements()]
    raw = FinFunction(source.quotient.dom, target.apex, tuple(table))
    return coequalizer_mediator(source.quotient, raw)


def prof_compose(G: Profunctor, F: Profunctor) -> Profunctor:
    """
    G after F: the value at (c, e) is the sum over d of F(c, d) x G(d, e),
    elements ordered (d, x, y), with (F(c, k) x, y) identified with
    (x, G(k, e) y) for every k: d -> d'.
    """
    if F.tgt_cat != G.src_cat:
        raise CompositionError("Profunctors do not compose: middle categories differ")
    C, D, E = F.src_cat, F.tgt_cat, G.tgt_cat

    def presentation_at(c: int, e: int) -> CoendPresentation:
        def value(d1, d2):
            return product(F.value(c, d2), G.value(d1, e)).apex

        def contra(k, d2):
            return product_map(FinFunction.identity(F.value(c, d2)), G.act_left(k, e))

        def co(d1, k):
            return product_map(F.act_right(c, k), FinFunction.identity(G.value(d1, e)))

        return _coend(D, value, contra, co)

    pres = tuple(tuple(presentation_at(c, e) for e in E.objects.elements()) for c in C.objects.elements())

    def left_action(g: int, e: int) -> FinFunction:
        c, c2 = C.src_of(g), C.tgt_of(g)

        def local(d, k):
            x, y = divmod(k, G.value(d, e).size)
            return F.act_left(g, d)(x) * G.value(d, e).size + y

        return _induced_action(pres[c2][e], pres[c][e], local)

    def right_action(c: int, h: int) -> FinFunction:
        e, e2 = E.src_of(h), E.tgt_of(h)

        def local(d, k):
            x, y = divmod(k, G.value(d, e).size)
            return x * G.value(d, e2).size + G.act_right(d, h)(y)

        return _induced_action(pres[c][e], pres[c][e2], local)

    values = tuple(tuple(p.apex for p in row) for row in pres)
    logger.debug("composed profunctors over %s middle objects", D.objects.size)
    return Profunctor(
        C, E, values,
        tuple(tuple(left_action(g, e) for e in E.objects.elements()) for g in C.morphisms.elements()),
        tuple(tuple(right_action(c, h) for h in E.morphisms.elements()) for c in C.objects.elements()),
        pres)


def prof_id(C: FinCat) -> Profunctor:
    """The hom profunctor; elements of hom(a, b) are indexed by position"""
    def left(g, b, x):
        return C.position(C.compose(C.hom(C.tgt_of(g), b)[x], g))

    def right(a, h, x):
        return C.position(C.compose(h, C.hom(a, C.src_of(h))[x]))

    return Profunctor.from_callables(C, C, C.hom_set, left, right)


def external_product(F: Profunctor, G: Profunctor) -> Profunctor:
    """F x G: C1 x C2 -|-> D1 x D2"""
    C1, C2, D1, D2 = F.src_cat, G.src_cat, F.tgt_cat, G.tgt_cat
    n_c2, n_d2 = C2.objects.size, D2.objects.size
    m_c2, m_d2 = C2.morphisms.size, D2.morphisms.size

    def value(c, d):
        (c1, c2), (d1, d2) = divmod(c, n_c2), divmod(d, n_d2)
        return product(F.value(c1, d1), G.value(c2, d2)).apex

    def left(g, d, x):
        (g1, g2), (d1, d2) = divmod(g, m_c2), divmod(d, n_d2)
        act = product_map(F.act_left(g1, d1), G.act_left(g2, d2))
        return act(x)

    def right(c, h, x):
        (c1, c2), (h1, h2) = divmod(c, n_c2), divmod(h, m_d2)
        act = product_map(F.act_right(c1, h1), G.act_right(c2, h2))
        return act(x)

    return Profunctor.from_callables(product_category(C1, C2), product_category(D1, D2), value, left, right)


def dual_profunctor(F: Profunctor) -> Profunctor:
    """F*: D^op -|-> C^op with F*(d, c) = F(c, d)"""
    C, D = F.src_cat, F.tgt_cat
    return Profunctor.from_callables(
        opposite(D), opposite(C),
        lambda d, c: F.value(c, d),
        lambda g, c, x: F.act_right(c, g)(x),
        lambda d, h, x: F.act_left(h, d)(x))


def free_profunctor(C: FinCat, D: FinCat, generators: Sequence[Tuple[int, int]]) -> Profunctor:
    """The sum over generators (a, b) of hom(-, a) x hom(b, -)"""
    generators = [(int(a), int(b)) for a, b in generators]

    def blocks(c, d):
        return [(len(C.hom(c, a)), len(D.hom(b, d))) for a, b in generators]

    def value(c, d):
        return FinSet(sum(p * q for p, q in blocks(c, d)))

    def split(c, d, x):
        for k, (p, q) in enumerate(blocks(c, d)):
            if x < p * q:
                return k, x // q, x % q
            x -= p * q
        raise ShapeError("Element outside the profunctor value")

    def join(c, d, k, u, v):
        sizes = blocks(c, d)
        return sum(p * q for p, q in sizes[:k]) + u * sizes[k][1] + v

    def left(g, d, x):
        c, c2 = C.src_of(g), C.tgt_of(g)
        k, u, v = split(c2, d, x)
        a = generators[k][0]
        return join(c, d, k, C.position(C.compose(C.hom(c2, a)[u], g)), v)

    def right(c, h, x):
        d, d2 = D.src_of(h), D.tgt_of(h)
        k, u, v = split(c, d, x)
        b = generators[k][1]
        return join(c, d2, k, u, D.position(D.compose(h, D.hom(b, d)[v])))

    return Profunctor.from_callables(C, D, value, left, right)


def constant_profunctor(C: FinCat, D: FinCat) -> Profunctor:
    """The terminal profunctor: one element at every pair of objects"""
    return Profunctor.from_callables(C, D, lambda c, d: FinSet(1), lambda g, d, x: 0, lambda c, h, x: 0)


def to_ob_matrix(F: Profunctor) -> ObMatrix:
    """The matrix of value sets, one row per target object"""
    return ObMatrix.from_callable(F.src_cat.objects.size, F.tgt_cat.objects.size,
                                  lambda d, c: F.value(c, d))


# ---------- canonical isomorphisms ----------

def _witness(source: Profunctor, target: Profunctor, forward, backward, name: str) -> IsoWitness:
    """
    forward(c, d) is the component table; backward(c, d) maps the sum
    presenting target(c, d) back to source(c, d) and must factor through the
    quotient and invert forward.
    """
    C, D = source.src_cat, source.tgt_cat
    rows = []
    for c in C.objects.elements():
        row = []
        for d in D.objects.elements():
            comp = FinFunction(source.value(c, d), target.value(c, d), tuple(forward(c, d)))
            pres = target.presentation[c][d]
            raw = FinFunction(pres.quotient.dom, source.value(c, d), tuple(backward(c, d)))
            inverse = coequalizer_mediator(pres.quotient, raw)
            if not compose_fn(inverse, comp).is_identity() or not comp.is_bijective():
                raise CoherenceError(f"{name} component at ({c}, {d}) is not a bijection")
            row.append(comp)
        rows.append(tuple(row))
    return IsoWitness(source, target, tuple(rows))


def coyoneda_iso(F: Profunctor, side: str = "source") -> IsoWitness:
    """
    F => F after hom (side "source") or hom after F (side "target").

    x goes to the class of (id, x), resp. (x, id); the inverse acts on a
    representative (f, x) by F(f, -) x, resp. F(-, f) x.
    """
    C, D = F.src_cat, F.tgt_cat
    if side == "source":
        target = prof_compose(F, prof_id(C))

        def forward(c, d):
            width = F.value(c, d).size
            return [target.presentation[c][d].class_of(c, C.position(C.identity(c)) * width + x)
                    for x in F.value(c, d).elements()]

        def backward(c, d):
            out = []
            for a, k in target.presentation[c][d].elements():
                u, x = divmod(k, F.value(a, d).size)
                out.append(F.act_left(C.hom(c, a)[u], d)(x))
            return out
    elif side == "target":
        target = prof_compose(prof_id(D), F)

        def forward(c, d):
            width = D.hom_set(d, d).size
            return [target.presentation[c][d].class_of(d, x * width + D.position(D.identity(d)))
                    for x in F.value(c, d).elements()]

        def backward(c, d):
            out = []
            for b, k in target.presentation[c][d].elements():
                x, v = divmod(k, D.hom_set(b, d).size)
                out.append(F.act_right(c, D.hom(b, d)[v])(x))
            return out
    else:
        raise ShapeError(f"Co-Yoneda side must be 'source' or 'target', got {side!r}")
    return _witness(F, target, forward, backward, "co-Yoneda")


def prof_associator(H: Profunctor, G: Profunctor, F: Profunctor) -> IsoWitness:
    """(H G) F => H (G F), regrouping ((x, [y, z])) as ([x, y], z)"""
    HG, GF = prof_compose(H, G), prof_compose(G, F)
    source, target = prof_compose(HG, F), prof_compose(H, GF)
    C, X = F.src_cat, H.tgt_cat

    def forward(c, x_obj):
        pres = source.presentation[c][x_obj]
        table = []
        for d, k in pres.elements():
            x, cls = divmod(k, HG.value(d, x_obj).size)
            e, k2 = HG.presentation[d][x_obj].representative(cls)
            y, z = divmod(k2, H.value(e, x_obj).size)
            gf_cls = GF.presentation[c][e].class_of(d, x * G.value(d, e).size + y)
            table.append(target.presentation[c][x_obj].class_of(e, gf_cls * H.value(e, x_obj).size + z))
        raw = FinFunction(pres.quotient.dom, target.value(c, x_obj), tuple(table))
        return coequalizer_mediator(pres.quotient, raw).table

    def backward(c, x_obj):
        pres = target.presentation[c][x_obj]
        out = []
        for e, k in pres.elements():
            cls, z = divmod(k, H.value(e, x_obj).size)
            d, k2 = GF.presentation[c][e].representative(cls)
            x, y = divmod(k2, G.value(d, e).size)
            hg_cls = HG.presentation[d][x_obj].class_of(e, y * H.value(e, x_obj).size + z)
            out.append(source.presentation[c][x_obj].class_of(d, x * HG.value(d, x_obj).size + hg_cls))
        return out

    return _witness(source, target, forward, backward, "associator")


def prof_duality(C: FinCat) -> Tuple[FinCat, Profunctor, Profunctor]:
    """
    C^op together with i: 1 -|-> C x C^op, i(*, (a, a')) = hom(a', a), and
    e: C^op x C -|-> 1, e((a', a), *) = hom(a, a').
    """
    Cop = opposite(C)
    one = terminal_category()
    n, m = C.objects.size, C.morphisms.size

    def unit_value(_, obj):
        a, a2 = divmod(obj, n)
        return C.hom_set(a2, a)

    def unit_right(_, mor, x):
        f, g = divmod(mor, m)
        a, a2 = C.src_of(f), C.tgt_of(g)
        return C.position(C.compose(f, C.compose(C.hom(a2, a)[x], g)))

    def counit_value(obj, _):
        a2, a = divmod(obj, n)
        return C.hom_set(a, a2)

    def counit_left(mor, _, x):
        g, f = divmod(mor, m)
        b, b2 = C.tgt_of(f), C.src_of(g)
        return C.position(C.compose(g, C.compose(C.hom(b, b2)[x], f)))

    unit = Profunctor.from_callables(one, product_category(C, Cop), unit_value,
                                     lambda g, d, x: x, unit_right)
    counit = Profunctor.from_callables(product_category(Cop, C), one, counit_value,
                                       counit_left, lambda c, h, x: x)
    return Cop, unit, counit


def prof_zigzag_check(C: FinCat) -> IsoWitness:
    """
    hom => (A e)(i A), the zig-zag on the zeta side.

    f: c -> c'' goes to the class of ((id, id), (f, id)) at the middle object
    (c, c, c); a representative ((u, v), (w, t)) goes back to w u t v.
    """
    _, i, e = prof_duality(C)
    ident = prof_id(C)
    inner = external_product(i, ident)
    outer = external_product(ident, e)
    zigzag = prof_compose(outer, inner)
    n = C.objects.size

    def forward(c, c2):
        pres = zigzag.presentation[c][c2]
        middle = lex_index((c, c, c), (n, n, n))
        ident_pos = C.position(C.identity(c))
        endo = C.hom_set(c, c).size
        inner_index = ident_pos * endo + ident_pos
        width = outer.value(middle, c2).size
        return [pres.class_of(middle, inner_index * width + C.position(f) * endo + ident_pos)
                for f in C.hom(c, c2)]

    def backward(c, c2):
        pres = zigzag.presentation[c][c2]
        out = []
        for obj, k in pres.elements():
            a, a2, b = lex_coords(obj, (n, n, n))
            inner_index, outer_index = divmod(k, outer.value(obj, c2).size)
            u_pos, v_pos = divmod(inner_index, C.hom_set(c, b).size)
            w_pos, t_pos = divmod(outer_index, C.hom_set(b, a2).size)
            u, v = C.hom(a2, a)[u_pos], C.hom(c, b)[v_pos]
            w, t = C.hom(a, c2)[w_pos], C.hom(b, a2)[t_pos]
            out.append(C.position(C.compose(w, C.compose(u, C.compose(t, v)))))
        return out

    witness = _witness(ident, zigzag, forward, backward, "zig-zag")
    if not validate_iso_witness(witness):
        raise CoherenceError("Zig-zag witness is not natural")
    return witness
