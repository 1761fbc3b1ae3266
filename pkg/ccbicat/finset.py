"""
Finite sets and functions between them

Elements of a FinSet are the indices 0..size-1 and functions are tables.
Every universal construction fixes the order of the elements it builds:
products and pullbacks are lexicographic (left-major), coproducts put the
left summand first, quotients number their classes by first appearance.
Because of that, the canonical isomorphisms between constructed sets are
plain table computations and 2-cell equality is table equality.
"""

import itertools
import logging
import operator
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, NamedTuple, Optional, Tuple

from .errors import CompositionError, ShapeError
from .utils import first_occurrence

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Provenance:
    """How a set was built; diagnostics only"""
    kind: str
    parts: Tuple["Provenance", ...] = ()

    def __str__(self):
        if not self.parts:
            return self.kind
        return f"{self.kind}({', '.join(str(p) for p in self.parts)})"


ATOM = Provenance("atom")


@dataclass(frozen=True)
class FinSet:
    """A finite set {0, ..., size-1}. Equality ignores provenance."""
    size: int
    provenance: Optional[Provenance] = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if isinstance(self.size, bool) or int(self.size) != self.size or self.size < 0:
            raise ShapeError(f"FinSet size must be a non-negative integer, got {self.size!r}")
        object.__setattr__(self, "size", int(self.size))

    def elements(self) -> range:
        return range(self.size)

    def is_empty(self) -> bool:
        return self.size == 0

    def describe(self) -> str:
        return f"{self.size} [{self.provenance or ATOM}]"


def terminal() -> FinSet:
    return FinSet(1, ATOM)


def initial() -> FinSet:
    return FinSet(0, ATOM)


def _tag(kind: str, *sets: FinSet) -> Provenance:
    return Provenance(kind, tuple(s.provenance or ATOM for s in sets))


def _table_entry(x, position: int) -> int:
    """Integers only, numpy integers included; no silent truncation of 1.5 or True"""
    if isinstance(x, bool):
        raise ShapeError(f"Table entry {x!r} at position {position} is not an integer")
    try:
        return operator.index(x)
    except TypeError:
        raise ShapeError(f"Table entry {x!r} at position {position} is not an integer") from None


@dataclass(frozen=True)
class FinFunction:
    """A function dom -> cod given by its table of codomain indices"""
    dom: FinSet
    cod: FinSet
    table: Tuple[int, ...]

    def __post_init__(self):
        table = tuple(_table_entry(x, i) for i, x in enumerate(self.table))
        object.__setattr__(self, "table", table)
        if len(table) != self.dom.size:
            raise ShapeError(
                f"Table length {len(table)} does not match domain size {self.dom.size}")
        for i, x in enumerate(table):
            if not 0 <= x < self.cod.size:
                raise ShapeError(
                    f"Table entry {x} at position {i} is outside codomain of size {self.cod.size}")

    def __call__(self, i: int) -> int:
        return self.table[i]

    @classmethod
    def identity(cls, A: FinSet) -> "FinFunction":
        return cls(A, A, tuple(range(A.size)))

    @classmethod
    def bang(cls, A: FinSet) -> "FinFunction":
        """The unique map into the terminal set"""
        return cls(A, terminal(), (0,) * A.size)

    @classmethod
    def from_initial(cls, A: FinSet) -> "FinFunction":
        """The unique map out of the empty set"""
        return cls(initial(), A, ())

    @classmethod
    def from_callable(cls, dom: FinSet, cod: FinSet, fn) -> "FinFunction":
        return cls(dom, cod, tuple(fn(i) for i in dom.elements()))

    def is_injective(self) -> bool:
        return len(set(self.table)) == len(self.table)

    def is_surjective(self) -> bool:
        return len(set(self.table)) == self.cod.size

    def is_bijective(self) -> bool:
        return self.dom.size == self.cod.size and self.is_injective()

    def is_identity(self) -> bool:
        return self.dom == self.cod and self.table == tuple(range(self.dom.size))

    def inverse(self) -> "FinFunction":
        if not self.is_bijective():
            raise CompositionError(f"Function {self.table} is not a bijection")
        inv = [0] * self.cod.size
        for i, x in enumerate(self.table):
            inv[x] = i
        return FinFunction(self.cod, self.dom, tuple(inv))

    def fibers(self) -> List[List[int]]:
        """Preimage of every codomain element, each listed ascending"""
        out: List[List[int]] = [[] for _ in range(self.cod.size)]
        for i, x in enumerate(self.table):
            out[x].append(i)
        return out


class Cone(NamedTuple):
    apex: FinSet
    left: FinFunction
    right: FinFunction


class Cocone(NamedTuple):
    apex: FinSet
    left: FinFunction
    right: FinFunction


class Quotient(NamedTuple):
    apex: FinSet
    q: FinFunction


class ImageFactorization(NamedTuple):
    image: FinSet
    surjection: FinFunction
    mono_pair: Tuple[FinFunction, FinFunction]


def compose_fn(g: FinFunction, f: FinFunction) -> FinFunction:
    """g after f"""
    if f.cod != g.dom:
        raise CompositionError(
            f"Cannot compose: codomain of f has size {f.cod.size}, domain of g has size {g.dom.size}")
    return FinFunction(f.dom, g.cod, tuple(g.table[x] for x in f.table))


def compose_all(*fns: FinFunction) -> FinFunction:
    """compose_all(h, g, f) == h after g after f"""
    result = fns[-1]
    for fn in reversed(fns[:-1]):
        result = compose_fn(fn, result)
    return result


# ---------- products ----------

def product(X: FinSet, Y: FinSet) -> Cone:
    P = FinSet(X.size * Y.size, _tag("product", X, Y))
    p1 = FinFunction(P, X, tuple(k // Y.size for k in range(P.size)))
    p2 = FinFunction(P, Y, tuple(k % Y.size for k in range(P.size)))
    return Cone(P, p1, p2)


def pairing(f: FinFunction, g: FinFunction) -> FinFunction:
    """The unique h: Z -> f.cod x g.cod with p1 h = f and p2 h = g"""
    if f.dom != g.dom:
        raise CompositionError("Pairing needs two functions out of the same set")
    P = product(f.cod, g.cod).apex
    return FinFunction(f.dom, P, tuple(f(z) * g.cod.size + g(z) for z in f.dom.elements()))


def product_map(f: FinFunction, g: FinFunction) -> FinFunction:
    """f x g"""
    left = product(f.dom, g.dom)
    return pairing(compose_fn(f, left.left), compose_fn(g, left.right))


def swap(X: FinSet, Y: FinSet) -> FinFunction:
    """The symmetry X x Y -> Y x X"""
    P = product(X, Y)
    return pairing(P.right, P.left)


def diagonal(X: FinSet) -> FinFunction:
    ident = FinFunction.identity(X)
    return pairing(ident, ident)


def reassociate(X: FinSet, Y: FinSet, Z: FinSet) -> FinFunction:
    """(X x Y) x Z -> X x (Y x Z), built from projections and pairings"""
    xy = product(X, Y)
    outer = product(xy.apex, Z)
    x = compose_fn(xy.left, outer.left)
    y = compose_fn(xy.right, outer.left)
    return pairing(x, pairing(y, outer.right))


# ---------- pullbacks ----------

def _pullback_pairs(f: FinFunction, g: FinFunction) -> List[Tuple[int, int]]:
    if f.cod != g.cod:
        raise CompositionError(
            f"Pullback needs a common codomain, got sizes {f.cod.size} and {g.cod.size}")
    g_fibers = g.fibers()
    return [(s, t) for s in f.dom.elements() for t in g_fibers[f(s)]]


def pullback(f: FinFunction, g: FinFunction) -> Cone:
    """Pairs (s, t) with f(s) = g(t), lexicographic in (s, t)"""
    pairs = _pullback_pairs(f, g)
    P = FinSet(len(pairs), _tag("pullback", f.dom, g.dom))
    pi_f = FinFunction(P, f.dom, tuple(s for s, _ in pairs))
    pi_g = FinFunction(P, g.dom, tuple(t for _, t in pairs))
    logger.debug("pullback of %s -> %s <- %s has %s elements",
                 f.dom.size, f.cod.size, g.dom.size, P.size)
    return Cone(P, pi_f, pi_g)


def pullback_mediator(f: FinFunction, g: FinFunction, u: FinFunction, v: FinFunction) -> FinFunction:
    """The unique map Z -> pullback(f, g) through which u: Z -> f.dom and v: Z -> g.dom factor"""
    if u.dom != v.dom or u.cod != f.dom or v.cod != g.dom:
        raise CompositionError("Mediator legs do not form a cone over the cospan")
    pairs = _pullback_pairs(f, g)
    index: Dict[Tuple[int, int], int] = {pair: k for k, pair in enumerate(pairs)}
    P = FinSet(len(pairs), _tag("pullback", f.dom, g.dom))
    table = []
    for z in u.dom.elements():
        pair = (u(z), v(z))
        if pair not in index:
            raise CompositionError(f"Cone does not commute at element {z}: {pair}")
        table.append(index[pair])
    return FinFunction(u.dom, P, tuple(table))


# ---------- coproducts ----------

def coproduct(X: FinSet, Y: FinSet) -> Cocone:
    C = FinSet(X.size + Y.size, _tag("coproduct", X, Y))
    i1 = FinFunction(X, C, tuple(range(X.size)))
    i2 = FinFunction(Y, C, tuple(X.size + j for j in range(Y.size)))
    return Cocone(C, i1, i2)


def copairing(f: FinFunction, g: FinFunction) -> FinFunction:
    """The unique h: X + Y -> W with h i1 = f and h i2 = g"""
    if f.cod != g.cod:
        raise CompositionError("Copairing needs two functions into the same set")
    C = coproduct(f.dom, g.dom).apex
    return FinFunction(C, f.cod, f.table + g.table)


def coproduct_map(f: FinFunction, g: FinFunction) -> FinFunction:
    """f + g"""
    right = coproduct(f.cod, g.cod)
    return copairing(compose_fn(right.left, f), compose_fn(right.right, g))


# ---------- quotients ----------

class UnionFind:
    """Disjoint sets over 0..size-1; the root of a class is always its smallest member"""

    def __init__(self, size: int):
        self.parent = list(range(size))

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        # path compression
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: int, y: int) -> None:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return
        if rx < ry:
            self.parent[ry] = rx
        else:
            self.parent[rx] = ry

    def labels(self) -> Tuple[int, List[int]]:
        """Number the classes by order of first appearance of their smallest member"""
        label = [0] * len(self.parent)
        count = 0
        for i in range(len(self.parent)):
            root = self.find(i)
            if root == i:
                label[i] = count
                count += 1
            else:
                label[i] = label[root]
        return count, label


def coequalizer(f: FinFunction, g: FinFunction) -> Quotient:
    if f.dom != g.dom or f.cod != g.cod:
        raise ShapeError("Coequalizer needs a parallel pair of functions")
    uf = UnionFind(f.cod.size)
    for a in f.dom.elements():
        uf.union(f(a), g(a))
    count, label = uf.labels()
    Q = FinSet(count, _tag("quotient", f.cod))
    logger.debug("coequalizer merged %s elements into %s classes", f.cod.size, count)
    return Quotient(Q, FinFunction(f.cod, Q, tuple(label)))


def coequalizer_mediator(q: FinFunction, h: FinFunction) -> FinFunction:
    """Factor h: B -> W through the quotient map q: B -> Q"""
    if q.dom != h.dom:
        raise CompositionError("Quotient map and function must share a domain")
    table: List[Optional[int]] = [None] * q.cod.size
    for b in q.dom.elements():
        cls = q(b)
        if table[cls] is None:
            table[cls] = h(b)
        elif table[cls] != h(b):
            raise CompositionError(f"Function is not constant on class {cls}")
    if any(x is None for x in table):
        raise CompositionError("Quotient map is not surjective")
    return FinFunction(q.cod, h.cod, tuple(table))


# ---------- pushouts ----------

def pushout(f: FinFunction, g: FinFunction) -> Cocone:
    """Juxtapose the codomains, then identify f(a) with g(a)"""
    if f.dom != g.dom:
        raise CompositionError(
            f"Pushout needs a common domain, got sizes {f.dom.size} and {g.dom.size}")
    C = coproduct(f.cod, g.cod)
    Q = coequalizer(compose_fn(C.left, f), compose_fn(C.right, g))
    P = FinSet(Q.apex.size, _tag("pushout", f.cod, g.cod))
    q = FinFunction(C.apex, P, Q.q.table)
    return Cocone(P, compose_fn(q, C.left), compose_fn(q, C.right))


def pushout_mediator(f: FinFunction, g: FinFunction, u: FinFunction, v: FinFunction) -> FinFunction:
    """The unique map pushout(f, g) -> W through which u: f.cod -> W and v: g.cod -> W factor"""
    if u.dom != f.cod or v.dom != g.cod or u.cod != v.cod:
        raise CompositionError("Mediator legs do not form a cocone over the span")
    C = coproduct(f.cod, g.cod)
    Q = coequalizer(compose_fn(C.left, f), compose_fn(C.right, g))
    through_quotient = coequalizer_mediator(Q.q, copairing(u, v))
    P = FinSet(Q.apex.size, _tag("pushout", f.cod, g.cod))
    return FinFunction(P, u.cod, through_quotient.table)


# ---------- images ----------

def image_factorization(p: FinFunction, q: FinFunction) -> ImageFactorization:
    """Factor the span (p, q) as a surjection followed by a jointly monic pair"""
    if p.dom != q.dom:
        raise CompositionError("Image factorization needs two functions out of the same set")
    pairs = [(p(s), q(s)) for s in p.dom.elements()]
    distinct = first_occurrence(pairs)
    index = {pair: k for k, pair in enumerate(distinct)}
    Im = FinSet(len(distinct), _tag("image", p.dom))
    surj = FinFunction(p.dom, Im, tuple(index[pair] for pair in pairs))
    m1 = FinFunction(Im, p.cod, tuple(a for a, _ in distinct))
    m2 = FinFunction(Im, q.cod, tuple(b for _, b in distinct))
    return ImageFactorization(Im, surj, (m1, m2))


def is_jointly_monic(p: FinFunction, q: FinFunction) -> bool:
    return image_factorization(p, q).surjection.is_bijective()


# ---------- enumeration ----------

def all_functions(X: FinSet, Y: FinSet) -> Iterator[FinFunction]:
    """Every function X -> Y, in lexicographic order of tables"""
    for table in itertools.product(range(Y.size), repeat=X.size):
        yield FinFunction(X, Y, table)
