"""
The compact closed bicategory Mat(R) over a 2-rig R

Objects are natural numbers, a 1-cell n -> m is an m x n grid of rig
objects and a 2-cell is a grid of rig morphisms between parallel grids.
Composition is the matrix product with the rig tensor in place of
multiplication and left-associated coproducts in place of addition.
"""

import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Any, Callable, List, Sequence, Tuple

import numpy as np

from .errors import CoherenceError, CompositionError, ShapeError
from .finset import (
    FinFunction, FinSet, compose_fn, copairing, coproduct, initial, product,
    product_map, reassociate, swap, terminal,
)

logger = logging.getLogger(__name__)


class TwoRig(ABC):
    """A symmetric monoidal category with finite coproducts the tensor distributes over"""

    @abstractmethod
    def unit(self) -> Any:
        pass

    @abstractmethod
    def zero(self) -> Any:
        pass

    @abstractmethod
    def tensor(self, X, Y) -> Any:
        pass

    @abstractmethod
    def plus(self, X, Y) -> Any:
        pass

    @abstractmethod
    def dom(self, f) -> Any:
        pass

    @abstractmethod
    def cod(self, f) -> Any:
        pass

    @abstractmethod
    def identity(self, X) -> Any:
        pass

    @abstractmethod
    def compose(self, g, f) -> Any:
        """g after f"""

    @abstractmethod
    def tensor_mor(self, f, g) -> Any:
        pass

    @abstractmethod
    def inl(self, X, Y) -> Any:
        pass

    @abstractmethod
    def inr(self, X, Y) -> Any:
        pass

    @abstractmethod
    def copair(self, f, g) -> Any:
        pass

    @abstractmethod
    def initial_map(self, X) -> Any:
        pass

    @abstractmethod
    def associator(self, X, Y, Z) -> Any:
        """(X Y) Z -> X (Y Z)"""

    @abstractmethod
    def left_unitor(self, X) -> Any:
        """I X -> X"""

    @abstractmethod
    def right_unitor(self, X) -> Any:
        """X I -> X"""

    @abstractmethod
    def symmetry(self, X, Y) -> Any:
        pass

    @abstractmethod
    def annihilate_left(self, X) -> Any:
        """0 X -> 0"""

    @abstractmethod
    def annihilate_right(self, X) -> Any:
        """X 0 -> 0"""

    @abstractmethod
    def distributor_left(self, X, Y, Z) -> Any:
        """X (Y + Z) -> X Y + X Z"""

    @abstractmethod
    def distributor_right(self, X, Y, Z) -> Any:
        """(X + Y) Z -> X Z + Y Z"""

    @abstractmethod
    def invert(self, f) -> Any:
        pass

    @abstractmethod
    def is_iso(self, f) -> bool:
        pass

    def size(self, X) -> int:
        raise NotImplementedError(f"{type(self).__name__} has no cardinality for objects")


class FinSetRig(TwoRig):
    """Finite sets with cartesian product as tensor and disjoint union as sum"""

    def unit(self) -> FinSet:
        return terminal()

    def zero(self) -> FinSet:
        return initial()

    def tensor(self, X: FinSet, Y: FinSet) -> FinSet:
        return product(X, Y).apex

    def plus(self, X: FinSet, Y: FinSet) -> FinSet:
        return coproduct(X, Y).apex

    def dom(self, f: FinFunction) -> FinSet:
        return f.dom

    def cod(self, f: FinFunction) -> FinSet:
        return f.cod

    def identity(self, X: FinSet) -> FinFunction:
        return FinFunction.identity(X)

    def compose(self, g: FinFunction, f: FinFunction) -> FinFunction:
        return compose_fn(g, f)

    def tensor_mor(self, f: FinFunction, g: FinFunction) -> FinFunction:
        return product_map(f, g)

    def inl(self, X: FinSet, Y: FinSet) -> FinFunction:
        return coproduct(X, Y).left

    def inr(self, X: FinSet, Y: FinSet) -> FinFunction:
        return coproduct(X, Y).right

    def copair(self, f: FinFunction, g: FinFunction) -> FinFunction:
        return copairing(f, g)

    def initial_map(self, X: FinSet) -> FinFunction:
        return FinFunction.from_initial(X)

    def associator(self, X: FinSet, Y: FinSet, Z: FinSet) -> FinFunction:
        return reassociate(X, Y, Z)

    def left_unitor(self, X: FinSet) -> FinFunction:
        return product(terminal(), X).right

    def right_unitor(self, X: FinSet) -> FinFunction:
        return product(X, terminal()).left

    def symmetry(self, X: FinSet, Y: FinSet) -> FinFunction:
        return swap(X, Y)

    def annihilate_left(self, X: FinSet) -> FinFunction:
        return FinFunction(product(initial(), X).apex, initial(), ())

    def annihilate_right(self, X: FinSet) -> FinFunction:
        return FinFunction(product(X, initial()).apex, initial(), ())

    def distributor_left(self, X: FinSet, Y: FinSet, Z: FinSet) -> FinFunction:
        sums = coproduct(Y, Z)
        ident = FinFunction.identity(X)
        return copairing(product_map(ident, sums.left), product_map(ident, sums.right)).inverse()

    def distributor_right(self, X: FinSet, Y: FinSet, Z: FinSet) -> FinFunction:
        sums = coproduct(X, Y)
        ident = FinFunction.identity(Z)
        return copairing(product_map(sums.left, ident), product_map(sums.right, ident)).inverse()

    def invert(self, f: FinFunction) -> FinFunction:
        if not f.is_bijective():
            raise CoherenceError(f"Rig morphism {f.table} is not invertible")
        return f.inverse()

    def is_iso(self, f: FinFunction) -> bool:
        return f.is_bijective()

    def size(self, X: FinSet) -> int:
        return X.size


FINSET_RIG = FinSetRig()


# ---------- n-ary sums ----------

def sum_objects(rig: TwoRig, xs: Sequence) -> Any:
    """x0 + x1 + ... nested to the left; the empty sum is 0"""
    if not xs:
        return rig.zero()
    total = xs[0]
    for x in xs[1:]:
        total = rig.plus(total, x)
    return total


def sum_injection(rig: TwoRig, xs: Sequence, j: int) -> Any:
    if len(xs) == 1:
        return rig.identity(xs[0])
    head = sum_objects(rig, xs[:-1])
    if j == len(xs) - 1:
        return rig.inr(head, xs[-1])
    return rig.compose(rig.inl(head, xs[-1]), sum_injection(rig, xs[:-1], j))


def sum_copair(rig: TwoRig, maps: Sequence, target) -> Any:
    if not maps:
        return rig.initial_map(target)
    result = maps[0]
    for f in maps[1:]:
        result = rig.copair(result, f)
    return result


def sum_map(rig: TwoRig, maps: Sequence) -> Any:
    """f0 + f1 + ... between left-nested sums"""
    codomains = [rig.cod(f) for f in maps]
    target = sum_objects(rig, codomains)
    return sum_copair(rig, [rig.compose(sum_injection(rig, codomains, j), f)
                            for j, f in enumerate(maps)], target)


def distribute_right(rig: TwoRig, xs: Sequence, Z) -> Any:
    """(x0 + ... + xn) Z -> x0 Z + ... + xn Z"""
    if not xs:
        return rig.annihilate_left(Z)
    if len(xs) == 1:
        return rig.identity(rig.tensor(xs[0], Z))
    head = sum_objects(rig, xs[:-1])
    split = rig.distributor_right(head, xs[-1], Z)
    rest = distribute_right(rig, xs[:-1], Z)
    last = rig.identity(rig.tensor(xs[-1], Z))
    return rig.compose(sum_map(rig, [rest, last]), split)


# ---------- matrices ----------

@dataclass(frozen=True)
class ObMatrix:
    """A 1-cell src_dim -> tgt_dim: tgt_dim rows of src_dim rig objects"""
    src_dim: int
    tgt_dim: int
    entries: Tuple[Tuple[Any, ...], ...]
    rig: TwoRig = field(default=FINSET_RIG, compare=False, repr=False)

    def __post_init__(self):
        entries = tuple(tuple(row) for row in self.entries)
        object.__setattr__(self, "entries", entries)
        if self.src_dim < 0 or self.tgt_dim < 0:
            raise ShapeError("Matrix dimensions must be non-negative")
        if len(entries) != self.tgt_dim or any(len(row) != self.src_dim for row in entries):
            raise ShapeError(f"Entries do not form a {self.tgt_dim} x {self.src_dim} grid")

    def entry(self, row: int, col: int):
        return self.entries[row][col]

    @classmethod
    def from_callable(cls, src_dim: int, tgt_dim: int, fn: Callable[[int, int], Any],
                      rig: TwoRig = FINSET_RIG) -> "ObMatrix":
        return cls(src_dim, tgt_dim,
                   tuple(tuple(fn(r, c) for c in range(src_dim)) for r in range(tgt_dim)), rig)


@dataclass(frozen=True)
class MorMatrix:
    """A 2-cell: entry (r, c) is a rig morphism source(r, c) -> target(r, c)"""
    source: ObMatrix
    target: ObMatrix
    entries: Tuple[Tuple[Any, ...], ...]

    def __post_init__(self):
        entries = tuple(tuple(row) for row in self.entries)
        object.__setattr__(self, "entries", entries)
        if (self.source.src_dim, self.source.tgt_dim) != (self.target.src_dim, self.target.tgt_dim):
            raise CompositionError("A 2-cell of matrices needs parallel 1-cells")
        if len(entries) != self.source.tgt_dim or any(len(row) != self.source.src_dim for row in entries):
            raise ShapeError("2-cell entries do not match the 1-cell shape")
        rig = self.source.rig
        for r, row in enumerate(entries):
            for c, f in enumerate(row):
                if rig.dom(f) != self.source.entry(r, c) or rig.cod(f) != self.target.entry(r, c):
                    raise ShapeError(f"2-cell entry ({r}, {c}) has the wrong domain or codomain")

    @property
    def rig(self) -> TwoRig:
        return self.source.rig

    def entry(self, row: int, col: int):
        return self.entries[row][col]

    def is_invertible(self) -> bool:
        return all(self.rig.is_iso(f) for row in self.entries for f in row)

    def is_identity(self) -> bool:
        return self == mat_id_cell(self.source)


def _cell_from_callable(source: ObMatrix, target: ObMatrix, fn: Callable[[int, int], Any]) -> MorMatrix:
    return MorMatrix(source, target,
                     tuple(tuple(fn(r, c) for c in range(source.src_dim)) for r in range(source.tgt_dim)))


def mat_identity(n: int, rig: TwoRig = FINSET_RIG) -> ObMatrix:
    """The unit object on the diagonal and the initial object elsewhere"""
    return ObMatrix.from_callable(n, n, lambda r, c: rig.unit() if r == c else rig.zero(), rig)


def _composite_terms(N: ObMatrix, M: ObMatrix, i: int, k: int) -> List:
    rig = N.rig
    return [rig.tensor(N.entry(i, j), M.entry(j, k)) for j in range(N.src_dim)]


def mat_compose(N: ObMatrix, M: ObMatrix) -> ObMatrix:
    """N after M; entry (i, k) is the sum over j of N(i, j) M(j, k)"""
    if M.tgt_dim != N.src_dim:
        raise CompositionError(
            f"Cannot compose matrices: target {M.tgt_dim} does not match source {N.src_dim}")
    rig = N.rig
    return ObMatrix.from_callable(M.src_dim, N.tgt_dim,
                                  lambda i, k: sum_objects(rig, _composite_terms(N, M, i, k)), rig)


def mat_tensor(N: ObMatrix, M: ObMatrix) -> ObMatrix:
    """Kronecker product; row (i, i') flattens to i * M.tgt_dim + i'"""
    rig = N.rig
    return ObMatrix.from_callable(
        N.src_dim * M.src_dim, N.tgt_dim * M.tgt_dim,
        lambda r, c: rig.tensor(N.entry(r // M.tgt_dim, c // M.src_dim),
                                M.entry(r % M.tgt_dim, c % M.src_dim)),
        rig)


def mat_dual(X):
    """Transpose a 1-cell, or a 2-cell together with its boundary"""
    if isinstance(X, ObMatrix):
        return ObMatrix.from_callable(X.tgt_dim, X.src_dim, lambda r, c: X.entry(c, r), X.rig)
    if isinstance(X, MorMatrix):
        return _cell_from_callable(mat_dual(X.source), mat_dual(X.target), lambda r, c: X.entry(c, r))
    raise ShapeError(f"Cannot dualize {type(X).__name__}")


def mat_unit(n: int, rig: TwoRig = FINSET_RIG) -> ObMatrix:
    """i_n: 1 -> n n, the unit object at every flattened position (k, k)"""
    return ObMatrix.from_callable(1, n * n, lambda r, c: rig.unit() if r // n == r % n else rig.zero(), rig)


def mat_counit(n: int, rig: TwoRig = FINSET_RIG) -> ObMatrix:
    return mat_dual(mat_unit(n, rig))


def mat_braiding(m: int, n: int, rig: TwoRig = FINSET_RIG) -> ObMatrix:
    """The permutation matrix m n -> n m sending (i, j) to (j, i)"""
    def entry(r, c):
        return rig.unit() if r == (c % n) * m + c // n else rig.zero()
    return ObMatrix.from_callable(m * n, n * m, entry, rig)


def size_grid(M: ObMatrix) -> np.ndarray:
    """Cardinalities of the entries as an integer array of shape (tgt_dim, src_dim)"""
    grid = np.zeros((M.tgt_dim, M.src_dim), dtype=np.int64)
    for r in range(M.tgt_dim):
        for c in range(M.src_dim):
            grid[r, c] = M.rig.size(M.entry(r, c))
    return grid


# ---------- 2-cells ----------

def mat_id_cell(M: ObMatrix) -> MorMatrix:
    return _cell_from_callable(M, M, lambda r, c: M.rig.identity(M.entry(r, c)))


def mat_vcompose(beta: MorMatrix, alpha: MorMatrix) -> MorMatrix:
    if alpha.target != beta.source:
        raise CompositionError("Vertical composite needs alpha's target to be beta's source")
    rig = alpha.rig
    return _cell_from_callable(alpha.source, beta.target,
                               lambda r, c: rig.compose(beta.entry(r, c), alpha.entry(r, c)))


def mat_hcompose(beta: MorMatrix, alpha: MorMatrix) -> MorMatrix:
    """beta * alpha: N M => N' M' for alpha: M => M' and beta: N => N'"""
    rig = alpha.rig
    source = mat_compose(beta.source, alpha.source)
    target = mat_compose(beta.target, alpha.target)
    return _cell_from_callable(
        source, target,
        lambda i, k: sum_map(rig, [rig.tensor_mor(beta.entry(i, j), alpha.entry(j, k))
                                   for j in range(beta.source.src_dim)]))


def mat_invert(alpha: MorMatrix) -> MorMatrix:
    if not alpha.is_invertible():
        raise CoherenceError("2-cell of matrices is not invertible")
    rig = alpha.rig
    return _cell_from_callable(alpha.target, alpha.source, lambda r, c: rig.invert(alpha.entry(r, c)))


def mat_assoc(P: ObMatrix, N: ObMatrix, M: ObMatrix) -> MorMatrix:
    """
    (P N) M => P (N M)

    On the summand j of entry (l, k) the cell distributes M(j, k) over the
    inner sum, reassociates each P(l, i) N(i, j) M(j, k) and injects it at
    position j of (N M)(i, k) and then at position i of the outer sum.
    """
    rig = P.rig
    PN, NM = mat_compose(P, N), mat_compose(N, M)
    source, target = mat_compose(PN, M), mat_compose(P, NM)

    def entry(l, k):
        outer_terms = _composite_terms(P, NM, l, k)
        per_j = []
        for j in range(N.src_dim):
            pn_terms = _composite_terms(P, N, l, j)
            inner = []
            for i in range(P.src_dim):
                alpha = rig.associator(P.entry(l, i), N.entry(i, j), M.entry(j, k))
                into_nm = rig.tensor_mor(rig.identity(P.entry(l, i)),
                                         sum_injection(rig, _composite_terms(N, M, i, k), j))
                inner.append(rig.compose(sum_injection(rig, outer_terms, i), rig.compose(into_nm, alpha)))
            gathered = sum_copair(rig, inner, target.entry(l, k))
            per_j.append(rig.compose(gathered, distribute_right(rig, pn_terms, M.entry(j, k))))
        return sum_copair(rig, per_j, target.entry(l, k))

    return _cell_from_callable(source, target, entry)


def mat_lunit(M: ObMatrix) -> MorMatrix:
    """id M => M: the left unitor on the diagonal summand, annihilation elsewhere"""
    rig = M.rig
    source = mat_compose(mat_identity(M.tgt_dim, rig), M)

    def entry(i, k):
        maps = [rig.left_unitor(M.entry(i, k)) if j == i
                else rig.compose(rig.initial_map(M.entry(i, k)), rig.annihilate_left(M.entry(j, k)))
                for j in range(M.tgt_dim)]
        return sum_copair(rig, maps, M.entry(i, k))

    return _cell_from_callable(source, M, entry)


def mat_runit(M: ObMatrix) -> MorMatrix:
    """M id => M"""
    rig = M.rig
    source = mat_compose(M, mat_identity(M.src_dim, rig))

    def entry(i, k):
        maps = [rig.right_unitor(M.entry(i, k)) if j == k
                else rig.compose(rig.initial_map(M.entry(i, k)), rig.annihilate_right(M.entry(i, j)))
                for j in range(M.src_dim)]
        return sum_copair(rig, maps, M.entry(i, k))

    return _cell_from_callable(source, M, entry)


def mat_pentagon_holds(Q: ObMatrix, P: ObMatrix, N: ObMatrix, M: ObMatrix) -> bool:
    direct = mat_vcompose(mat_assoc(Q, P, mat_compose(N, M)), mat_assoc(mat_compose(Q, P), N, M))
    around = mat_vcompose(
        mat_hcompose(mat_id_cell(Q), mat_assoc(P, N, M)),
        mat_vcompose(mat_assoc(Q, mat_compose(P, N), M),
                     mat_hcompose(mat_assoc(Q, P, N), mat_id_cell(M))))
    return direct == around


def mat_triangle_holds(N: ObMatrix, M: ObMatrix) -> bool:
    through = mat_vcompose(mat_hcompose(mat_id_cell(N), mat_lunit(M)),
                           mat_assoc(N, mat_identity(N.src_dim, N.rig), M))
    direct = mat_hcompose(mat_runit(N), mat_id_cell(M))
    return through == direct


STRUCTURAL_KINDS = {
    "assoc": mat_assoc,
    "lunit": mat_lunit,
    "runit": mat_runit,
    "pentagonCheck": mat_pentagon_holds,
    "triangleCheck": mat_triangle_holds,
}


def mat_structural(kind: str, *args):
    """Dispatch to a structural 2-cell constructor or equation check by name"""
    if kind not in STRUCTURAL_KINDS:
        raise ShapeError(f"Unknown structural kind {kind!r}, expected one of {sorted(STRUCTURAL_KINDS)}")
    return STRUCTURAL_KINDS[kind](*args)


def dual_compose_cell(N: ObMatrix, M: ObMatrix) -> MorMatrix:
    """dual(N M) => dual(M) dual(N), the rig symmetry on every summand"""
    rig = N.rig
    source = mat_dual(mat_compose(N, M))
    target = mat_compose(mat_dual(M), mat_dual(N))
    return _cell_from_callable(
        source, target,
        lambda k, i: sum_map(rig, [rig.symmetry(N.entry(i, j), M.entry(j, k)) for j in range(N.src_dim)]))


# ---------- cells between unit/zero patterns ----------

def _tree_object(rig: TwoRig, tree):
    if isinstance(tree, tuple):
        return rig.tensor(_tree_object(rig, tree[0]), _tree_object(rig, tree[1]))
    return tree


def _has_zero(rig: TwoRig, tree) -> bool:
    if isinstance(tree, tuple):
        return _has_zero(rig, tree[0]) or _has_zero(rig, tree[1])
    return tree == rig.zero()


def _collapse_zero(rig: TwoRig, tree):
    """tensor of a tree with a zero leaf -> 0"""
    if not isinstance(tree, tuple):
        return rig.identity(tree)
    left, right = tree
    if _has_zero(rig, left):
        return rig.compose(rig.annihilate_left(_tree_object(rig, right)),
                           rig.tensor_mor(_collapse_zero(rig, left), rig.identity(_tree_object(rig, right))))
    return rig.compose(rig.annihilate_right(_tree_object(rig, left)),
                       rig.tensor_mor(rig.identity(_tree_object(rig, left)), _collapse_zero(rig, right)))


def _collapse_unit(rig: TwoRig, tree):
    """tensor of a tree of unit objects -> I, by left unitors"""
    if not isinstance(tree, tuple):
        if tree != rig.unit():
            raise CoherenceError("Expected the unit object at every leaf")
        return rig.identity(tree)
    return rig.compose(rig.left_unitor(rig.unit()),
                       rig.tensor_mor(_collapse_unit(rig, tree[0]), _collapse_unit(rig, tree[1])))


def _term_cell(rig: TwoRig, tree, target):
    if _has_zero(rig, tree):
        return rig.compose(rig.initial_map(target), _collapse_zero(rig, tree))
    if target != rig.unit():
        raise CoherenceError("A unit term cannot land in a zero entry")
    return _collapse_unit(rig, tree)


def _plain_tree(M: ObMatrix) -> Callable[[int, int], Any]:
    return M.entry


def _tensor_tree(N: ObMatrix, M: ObMatrix) -> Callable[[int, int], Any]:
    def tree(r, c):
        return (N.entry(r // M.tgt_dim, c // M.src_dim), M.entry(r % M.tgt_dim, c % M.src_dim))
    return tree


def _collapse_composite(N: ObMatrix, M: ObMatrix, upper, lower, target: ObMatrix) -> MorMatrix:
    """The canonical cell N M => target when every entry involved is I or 0"""
    rig = N.rig

    def entry(i, k):
        maps = [_term_cell(rig, (upper(i, j), lower(j, k)), target.entry(i, k)) for j in range(N.src_dim)]
        return sum_copair(rig, maps, target.entry(i, k))

    return _cell_from_callable(mat_compose(N, M), target, entry)


def braid_twice_cell(m: int, n: int, rig: TwoRig = FINSET_RIG) -> MorMatrix:
    """b(n, m) b(m, n) => id"""
    first, second = mat_braiding(m, n, rig), mat_braiding(n, m, rig)
    return _collapse_composite(second, first, _plain_tree(second), _plain_tree(first),
                               mat_identity(m * n, rig))


def rig_triangle_holds(rig: TwoRig, X, Y) -> bool:
    """(X l_Y) a(X, I, Y) == r_X Y"""
    lhs = rig.compose(rig.tensor_mor(rig.identity(X), rig.left_unitor(Y)), rig.associator(X, rig.unit(), Y))
    rhs = rig.tensor_mor(rig.right_unitor(X), rig.identity(Y))
    return lhs == rhs


def _zigzag_factors(n: int, side: str, rig: TwoRig):
    ident, i, e = mat_identity(n, rig), mat_unit(n, rig), mat_counit(n, rig)
    if side == "zeta":
        return (ident, e), (i, ident)
    if side == "theta":
        return (e, ident), (ident, i)
    raise ShapeError(f"Zig-zag side must be 'zeta' or 'theta', got {side!r}")


def zigzag_composite(n: int, side: str = "zeta", rig: TwoRig = FINSET_RIG) -> Tuple[ObMatrix, ObMatrix]:
    """
    The two factors of a zig-zag on n.

    zeta: (A e)(i A); theta: (e A)(A i). The object associators and unitors
    of Mat are identities on flattened indices, so the chain reduces to these
    two factors.
    """
    upper, lower = _zigzag_factors(n, side, rig)
    return mat_tensor(*upper), mat_tensor(*lower)


def mat_zigzag_check(n: int, side: str = "zeta", rig: TwoRig = FINSET_RIG) -> MorMatrix:
    """
    The canonical invertible 2-cell from the zig-zag composite to id_n.

    Every summand of the composite is a tensor of four unit-or-zero entries;
    the all-unit summand collapses by left unitors and the rest annihilate.
    Also asserts the rig triangle equation at (I, I), to which the
    swallowtail reduces.
    """
    if not rig_triangle_holds(rig, rig.unit(), rig.unit()):
        raise CoherenceError("Rig triangle equation fails at (I, I)")
    upper, lower = _zigzag_factors(n, side, rig)
    cell = _collapse_composite(mat_tensor(*upper), mat_tensor(*lower),
                               _tensor_tree(*upper), _tensor_tree(*lower), mat_identity(n, rig))
    if not cell.is_invertible():
        raise CoherenceError(f"Zig-zag cell on {n} is not invertible")
    logger.debug("zig-zag %s cell on %s built", side, n)
    return cell


def mat_swallowtail_holds(n: int, rig: TwoRig = FINSET_RIG) -> bool:
    """
    Swallowtail for the self-dual object n.

    Building the zig-zag cells already proves they exist and are invertible;
    the round trips below only confirm mat_invert and hold for any
    invertible cell. Only the rig triangle at (I, I) carries weight.
    """
    for side in ("zeta", "theta"):
        cell = mat_zigzag_check(n, side, rig)
        if mat_vcompose(mat_invert(cell), cell) != mat_id_cell(cell.source):
            return False
        if mat_vcompose(cell, mat_invert(cell)) != mat_id_cell(cell.target):
            return False
    return rig_triangle_holds(rig, rig.unit(), rig.unit())


def mat_syllepsis_holds(m: int, n: int, rig: TwoRig = FINSET_RIG) -> bool:
    """Braiding twice is canonically the identity and the rig symmetry is involutive"""
    cell = braid_twice_cell(m, n, rig)
    if mat_vcompose(mat_invert(cell), cell) != mat_id_cell(cell.source):
        return False
    I = rig.unit()
    return rig.compose(rig.symmetry(I, I), rig.symmetry(I, I)) == rig.identity(rig.tensor(I, I))


def check_rig_laws(rig: TwoRig, objects: Sequence) -> bool:
    """Distributors, associators and unitors are invertible; symmetry is involutive; triangles hold"""
    for X in objects:
        if not (rig.is_iso(rig.left_unitor(X)) and rig.is_iso(rig.right_unitor(X))):
            return False
        for Y in objects:
            twice = rig.compose(rig.symmetry(Y, X), rig.symmetry(X, Y))
            if twice != rig.identity(rig.tensor(X, Y)) or not rig_triangle_holds(rig, X, Y):
                return False
            for Z in objects:
                for cell in (rig.associator(X, Y, Z), rig.distributor_left(X, Y, Z),
                             rig.distributor_right(X, Y, Z)):
                    if not rig.is_iso(cell):
                        return False
    return True
