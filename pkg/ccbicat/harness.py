"""
Seeded random instances and the law suites that run on them

Every case draws from its own generator seeded by (seed, case index), so a
failure replays from the two numbers stored in its report, and cases can
run in any order or in parallel.
"""

import logging
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Dict, Iterator, List, NamedTuple, Optional, Sequence, Tuple, Union

import numpy as np

from . import codec
from .errors import CcbicatError, ShapeError
from .finset import FinFunction, FinSet, compose_fn
from .laws import LAW_CATALOG, Bicategory, Law, parse_bicategory, parse_law
from .matrices import (
    ObMatrix, mat_compose, mat_pentagon_holds, mat_swallowtail_holds, mat_syllepsis_holds,
    mat_tensor, mat_triangle_holds, mat_zigzag_check, size_grid,
)
from .profunctors import (
    FinCat, Profunctor, constant_profunctor, coyoneda_iso, discrete, free_profunctor, monoid_category,
    preorder_category, prof_associator, prof_compose, prof_zigzag_check, terminal_category,
    to_ob_matrix, validate_iso_witness, walking_arrow,
)
from .relations import (
    Relation, rel_associativity_holds, rel_compact_structure, rel_compose, rel_unit_holds,
    rel_zigzag_holds, relation_from_pairs,
)
from .resnet import (
    NetCospan, ResNet, ResNetMorphism, circuit_duality, circuit_swallowtail_check, cospan_compose,
    cospan_pentagon_holds, cospan_tensor, cospan_triangle_holds, edgeless,
)
from .spans import (
    Span, SpanMap, compose_spans, double_braiding_iso, duality, id_map, interchange_holds, invert,
    pentagon_holds, structural_modification, swallowtail_check, tensor_spans, triangle_holds,
    unit_object, vcompose,
)

logger = logging.getLogger(__name__)

EMPTY_PROBABILITY = 0.1
# entry and dimension caps for suites whose cells grow with the fourth power of the sizes
SMALL_ENTRY = 2
SMALL_OBJECT = 3
# the swallowtail suites always reach this size
SWALLOWTAIL_SIZE = 6


@dataclass(frozen=True)
class GenConfig:
    seed: int = 0
    max_set_size: int = 4
    max_dim: int = 3
    max_edges: int = 3
    cases: int = 100
    workers: int = 1

    def __post_init__(self):
        for name in ("seed", "max_set_size", "max_dim", "max_edges", "cases"):
            if getattr(self, name) < 0:
                raise ShapeError(f"{name} must be non-negative, got {getattr(self, name)}")
        if self.seed >= 2 ** 64:
            raise ShapeError("seed must fit in 64 bits")
        if self.workers < 1:
            raise ShapeError("workers must be at least 1")


@dataclass(frozen=True)
class Failure:
    case_index: int
    seed: int
    message: str
    counterexample: Dict[str, Any]

    def to_dict(self) -> Dict[str, Any]:
        return {"case": self.case_index, "seed": self.seed, "message": self.message,
                "counterexample": self.counterexample}


@dataclass
class LawReport:
    law: str
    bicategory: str
    status: str
    cases_run: int = 0
    failures: List[Failure] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.status == "passed"

    @property
    def supported(self) -> bool:
        return self.status != "unsupported"

    def to_dict(self) -> Dict[str, Any]:
        return {"law": self.law, "bicategory": self.bicategory, "status": self.status,
                "cases": self.cases_run, "failures": [f.to_dict() for f in self.failures]}

    def to_json(self) -> str:
        return codec.dumps(self.to_dict())


def case_rng(seed: int, case_index: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence([seed, case_index]))


# ---------- random values ----------

def random_size(rng: np.random.Generator, bound: int, allow_empty: bool = True) -> int:
    """0 with probability EMPTY_PROBABILITY, otherwise uniform in 1..bound"""
    if bound <= 0:
        return 0
    if allow_empty and rng.random() < EMPTY_PROBABILITY:
        return 0
    return int(rng.integers(1, bound + 1))


def random_finset(rng: np.random.Generator, cfg: GenConfig, bound: Optional[int] = None) -> FinSet:
    return FinSet(random_size(rng, cfg.max_set_size if bound is None else bound))


def random_function(rng: np.random.Generator, X: FinSet, Y: FinSet) -> FinFunction:
    if Y.is_empty() and not X.is_empty():
        raise ShapeError("No function from a non-empty set into the empty set")
    table = rng.integers(0, max(Y.size, 1), size=X.size) if X.size else ()
    return FinFunction(X, Y, tuple(int(x) for x in table))


def random_span(rng: np.random.Generator, cfg: GenConfig, X: FinSet, Y: FinSet) -> Span:
    apex = FinSet(0 if X.is_empty() or Y.is_empty() else random_size(rng, cfg.max_set_size))
    return Span.from_legs(random_function(rng, apex, X), random_function(rng, apex, Y))


def random_span_chain(rng: np.random.Generator, cfg: GenConfig, length: int) -> List[Span]:
    """length composable spans, first to last"""
    objects = [random_finset(rng, cfg) for _ in range(length + 1)]
    return [random_span(rng, cfg, objects[k], objects[k + 1]) for k in range(length)]


def random_span_map_into(rng: np.random.Generator, cfg: GenConfig, target: Span) -> SpanMap:
    """A map of spans into target whose source apex is drawn at random"""
    S = FinSet(0 if target.apex.is_empty() else random_size(rng, cfg.max_set_size))
    h = random_function(rng, S, target.apex)
    source = Span(target.src, target.tgt, S, compose_fn(target.src_leg, h), compose_fn(target.tgt_leg, h))
    return SpanMap(source, target, h)


def random_relation(rng: np.random.Generator, X: FinSet, Y: FinSet) -> Relation:
    grid = rng.random((X.size, Y.size)) < 0.4
    return relation_from_pairs(X, Y, [(int(x), int(y)) for x, y in zip(*np.nonzero(grid))])


def random_matrix(rng: np.random.Generator, src_dim: int, tgt_dim: int, entry_bound: int) -> ObMatrix:
    return ObMatrix.from_callable(src_dim, tgt_dim, lambda r, c: FinSet(random_size(rng, entry_bound)))


def random_category(rng: np.random.Generator) -> FinCat:
    """A small category: at most 3 objects and 8 morphisms"""
    choice = int(rng.integers(0, 5))
    if choice == 0:
        return terminal_category()
    if choice == 1:
        return discrete(int(rng.integers(0, 4)))
    if choice == 2:
        return walking_arrow()
    if choice == 3:
        return monoid_category([[0, 1], [1, 0]])
    n = int(rng.integers(1, 4))
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n) if rng.random() < 0.5]
    return preorder_category(n, pairs)


def random_profunctor(rng: np.random.Generator, C: FinCat, D: FinCat) -> Profunctor:
    """
    Mostly a sum of at most two representable pieces (no pieces gives the
    empty profunctor). Otherwise the constant profunctor, or a free one
    followed by the constant profunctor out of a random middle category,
    a quotient whose values count connected components.
    """
    if C.objects.is_empty() or D.objects.is_empty():
        return free_profunctor(C, D, [])
    roll = rng.random()
    if roll < EMPTY_PROBABILITY:
        return free_profunctor(C, D, [])
    if roll < 0.65:
        return free_profunctor(C, D, _random_generators(rng, C, D))
    if roll < 0.8:
        return constant_profunctor(C, D)
    M = random_category(rng)
    if M.objects.is_empty():
        return constant_profunctor(C, D)
    return prof_compose(constant_profunctor(M, D), free_profunctor(C, M, _random_generators(rng, C, M)))


def _random_generators(rng: np.random.Generator, C: FinCat, D: FinCat) -> List[Tuple[int, int]]:
    return [(int(rng.integers(0, C.objects.size)), int(rng.integers(0, D.objects.size)))
            for _ in range(int(rng.integers(1, 3)))]


def random_discrete_profunctor(rng: np.random.Generator, cfg: GenConfig, C: FinCat, D: FinCat) -> Profunctor:
    """Any grid of sets is a profunctor between discrete categories"""
    values = [[FinSet(random_size(rng, cfg.max_set_size)) for _ in D.objects.elements()]
              for _ in C.objects.elements()]
    return Profunctor.from_callables(C, D, lambda c, d: values[c][d],
                                     lambda g, d, x: x, lambda c, h, x: x)


def random_resistance(rng: np.random.Generator) -> Fraction:
    return Fraction(int(rng.integers(1, 10)), int(rng.integers(1, 5)))


def random_network(rng: np.random.Generator, cfg: GenConfig, min_vertices: int = 0) -> ResNet:
    n = max(random_size(rng, cfg.max_set_size), min_vertices)
    m = 0 if n == 0 else int(rng.integers(0, cfg.max_edges + 1))
    edges = [(int(rng.integers(0, n)), int(rng.integers(0, n)), random_resistance(rng)) for _ in range(m)]
    return ResNet.build(n, edges)


def _foot_leg(rng: np.random.Generator, foot: ResNet, apex: ResNet) -> ResNetMorphism:
    return ResNetMorphism(foot, apex, FinFunction.from_initial(apex.edges),
                          random_function(rng, foot.vertices, apex.vertices))


def random_circuit(rng: np.random.Generator, cfg: GenConfig, X: ResNet, Y: ResNet) -> NetCospan:
    """A cospan X -> apex <- Y of networks with edgeless feet X and Y"""
    needs_vertex = not (X.vertices.is_empty() and Y.vertices.is_empty())
    apex = random_network(rng, cfg, 1 if needs_vertex else 0)
    return NetCospan.from_legs(_foot_leg(rng, X, apex), _foot_leg(rng, Y, apex))


def random_circuit_chain(rng: np.random.Generator, cfg: GenConfig, length: int) -> List[NetCospan]:
    feet = [edgeless(random_size(rng, cfg.max_set_size)) for _ in range(length + 1)]
    return [random_circuit(rng, cfg, feet[k], feet[k + 1]) for k in range(length)]


# ---------- instance streams ----------

def _stream(cfg: GenConfig, draw: Callable[[np.random.Generator], Any]) -> Iterator[Any]:
    for index in range(cfg.cases):
        yield draw(case_rng(cfg.seed, index))


def gen_finset(cfg: GenConfig) -> Iterator[FinSet]:
    return _stream(cfg, lambda rng: random_finset(rng, cfg))


def gen_span(cfg: GenConfig) -> Iterator[Span]:
    return _stream(cfg, lambda rng: random_span_chain(rng, cfg, 1)[0])


def gen_matrix(cfg: GenConfig) -> Iterator[ObMatrix]:
    def draw(rng):
        return random_matrix(rng, random_size(rng, cfg.max_dim), random_size(rng, cfg.max_dim), cfg.max_set_size)
    return _stream(cfg, draw)


def gen_profunctor(cfg: GenConfig) -> Iterator[Profunctor]:
    return _stream(cfg, lambda rng: random_profunctor(rng, random_category(rng), random_category(rng)))


def gen_network(cfg: GenConfig) -> Iterator[ResNet]:
    return _stream(cfg, lambda rng: random_network(rng, cfg))


GENERATORS = {
    Bicategory.SPAN: gen_span,
    Bicategory.REL: lambda cfg: _stream(cfg, lambda rng: random_relation(
        rng, random_finset(rng, cfg), random_finset(rng, cfg))),
    Bicategory.MAT: gen_matrix,
    Bicategory.PROF: gen_profunctor,
    Bicategory.NET: lambda cfg: _stream(cfg, lambda rng: random_circuit_chain(rng, cfg, 1)[0]),
}


def generate(bicat: Union[str, Bicategory], cfg: GenConfig) -> Iterator[Any]:
    """Instance stream of 1-cells (spans, relations, matrices, profunctors, circuits)"""
    return GENERATORS[parse_bicategory(bicat)](cfg)


# ---------- law cases ----------

class LawCase(NamedTuple):
    """build draws an instance from a case generator, check decides the law on it"""
    build: Callable[[np.random.Generator, GenConfig], Dict[str, Any]]
    check: Callable[[Dict[str, Any]], bool]


def _small_objects(rng, cfg, count):
    return [random_finset(rng, cfg, min(cfg.max_set_size, SMALL_OBJECT)) for _ in range(count)]


def _roundtrip_identity(cell: SpanMap) -> bool:
    return cell.is_invertible() and vcompose(invert(cell), cell) == id_map(cell.source)


def _span_interchange_build(rng, cfg):
    r, s = random_span_chain(rng, cfg, 2)
    a2 = random_span_map_into(rng, cfg, r)
    a1 = random_span_map_into(rng, cfg, a2.source)
    b2 = random_span_map_into(rng, cfg, s)
    b1 = random_span_map_into(rng, cfg, b2.source)
    return {"cells": [b2, b1, a2, a1]}


def _span_cardinality(inst) -> bool:
    r, s = inst["spans"]
    fiber_r = np.bincount(np.asarray(r.tgt_leg.table, dtype=np.int64), minlength=r.tgt.size)
    fiber_s = np.bincount(np.asarray(s.src_leg.table, dtype=np.int64), minlength=s.src.size)
    composite_ok = compose_spans(s, r).apex.size == int(fiber_r @ fiber_s)
    return composite_ok and tensor_spans(r, s).apex.size == r.apex.size * s.apex.size


def _relation_matrix(r: Relation) -> np.ndarray:
    grid = np.zeros((r.src.size, r.tgt.size), dtype=bool)
    for x, y in r.pairs():
        grid[x, y] = True
    return grid


def _rel_cardinality(inst) -> bool:
    r, s = inst["relations"]
    oracle = (_relation_matrix(r).astype(np.int64) @ _relation_matrix(s).astype(np.int64)) > 0
    return np.array_equal(_relation_matrix(rel_compose(s, r)), oracle)


def _rel_chain(rng, cfg, length):
    objects = [random_finset(rng, cfg) for _ in range(length + 1)]
    return [random_relation(rng, objects[k], objects[k + 1]) for k in range(length)]


def _mat_chain(rng, max_dim, length, entry_bound):
    dims = [random_size(rng, max_dim) for _ in range(length + 1)]
    return [random_matrix(rng, dims[k], dims[k + 1], entry_bound) for k in range(length)]


def _mat_cardinality(inst) -> bool:
    M, N = inst["composable"]
    P, Q = inst["tensor"]
    composite_ok = np.array_equal(size_grid(mat_compose(N, M)), size_grid(N) @ size_grid(M))
    return composite_ok and np.array_equal(size_grid(mat_tensor(P, Q)), np.kron(size_grid(P), size_grid(Q)))


def _prof_chain(rng, length):
    cats = [random_category(rng) for _ in range(length + 1)]
    return [random_profunctor(rng, cats[k], cats[k + 1]) for k in range(length)]


def _prof_cardinality_build(rng, cfg):
    C, D, E = (discrete(random_size(rng, cfg.max_dim)) for _ in range(3))
    return {"profunctors": [random_discrete_profunctor(rng, cfg, C, D), random_discrete_profunctor(rng, cfg, D, E)]}


def _prof_cardinality(inst) -> bool:
    F, G = inst["profunctors"]
    composite = to_ob_matrix(prof_compose(G, F))
    return np.array_equal(size_grid(composite), size_grid(to_ob_matrix(G)) @ size_grid(to_ob_matrix(F)))


def _net_cardinality(inst) -> bool:
    c1, c2 = inst["circuits"]
    composite = cospan_compose(c2, c1)
    edges_ok = composite.apex.edges.size == c1.apex.edges.size + c2.apex.edges.size
    resistances_ok = Counter(composite.apex.r) == Counter(c1.apex.r) + Counter(c2.apex.r)
    both = cospan_tensor(c1, c2)
    tensor_ok = (both.apex.vertices.size == c1.apex.vertices.size + c2.apex.vertices.size
                 and both.apex.edges.size == c1.apex.edges.size + c2.apex.edges.size)
    return edges_ok and resistances_ok and tensor_ok


def _swallowtail_size(rng, cfg):
    return int(rng.integers(0, max(cfg.max_set_size, SWALLOWTAIL_SIZE) + 1))


def _zigzags_invertible(data) -> bool:
    return data.zeta.is_invertible() and data.theta.is_invertible()


LAW_CASES: Dict[Tuple[Law, Bicategory], LawCase] = {
    (Law.PENTAGON, Bicategory.SPAN): LawCase(
        lambda rng, cfg: {"spans": random_span_chain(rng, cfg, 4), "objects": _small_objects(rng, cfg, 4)},
        lambda inst: (pentagon_holds(*reversed(inst["spans"]))
                      and structural_modification("pi", *inst["objects"]).is_invertible())),
    (Law.TRIANGLE, Bicategory.SPAN): LawCase(
        lambda rng, cfg: {"spans": random_span_chain(rng, cfg, 2), "objects": _small_objects(rng, cfg, 2)},
        lambda inst: (triangle_holds(*reversed(inst["spans"]))
                      and structural_modification("mu", inst["objects"][0], unit_object(),
                                                  inst["objects"][1]).is_invertible())),
    (Law.INTERCHANGE, Bicategory.SPAN): LawCase(
        _span_interchange_build, lambda inst: interchange_holds(*inst["cells"])),
    (Law.HEX_R, Bicategory.SPAN): LawCase(
        lambda rng, cfg: {"objects": _small_objects(rng, cfg, 3)},
        lambda inst: _roundtrip_identity(structural_modification("R", *inst["objects"]))),
    (Law.HEX_S, Bicategory.SPAN): LawCase(
        lambda rng, cfg: {"objects": _small_objects(rng, cfg, 3)},
        lambda inst: _roundtrip_identity(structural_modification("S", *inst["objects"]))),
    (Law.SYLLEPSIS, Bicategory.SPAN): LawCase(
        lambda rng, cfg: {"objects": _small_objects(rng, cfg, 2)},
        lambda inst: (structural_modification("v", *inst["objects"]).is_identity()
                      and _roundtrip_identity(double_braiding_iso(*inst["objects"])))),
    (Law.ZIGZAG, Bicategory.SPAN): LawCase(
        lambda rng, cfg: {"object": random_finset(rng, cfg)},
        lambda inst: _zigzags_invertible(duality(inst["object"]))),
    (Law.SWALLOWTAIL, Bicategory.SPAN): LawCase(
        lambda rng, cfg: {"object": FinSet(_swallowtail_size(rng, cfg))},
        lambda inst: swallowtail_check(inst["object"]).is_identity()),
    (Law.CARDINALITY, Bicategory.SPAN): LawCase(
        lambda rng, cfg: {"spans": random_span_chain(rng, cfg, 2)}, _span_cardinality),

    (Law.PENTAGON, Bicategory.REL): LawCase(
        lambda rng, cfg: {"relations": _rel_chain(rng, cfg, 4)},
        lambda inst: rel_associativity_holds(*reversed(inst["relations"]))),
    (Law.TRIANGLE, Bicategory.REL): LawCase(
        lambda rng, cfg: {"relations": _rel_chain(rng, cfg, 2)},
        lambda inst: rel_unit_holds(*reversed(inst["relations"]))),
    (Law.ZIGZAG, Bicategory.REL): LawCase(
        lambda rng, cfg: {"object": random_finset(rng, cfg)},
        lambda inst: (rel_compact_structure(inst["object"]) is not None
                      and rel_zigzag_holds(inst["object"]))),
    (Law.CARDINALITY, Bicategory.REL): LawCase(
        lambda rng, cfg: {"relations": _rel_chain(rng, cfg, 2)}, _rel_cardinality),

    (Law.PENTAGON, Bicategory.MAT): LawCase(
        lambda rng, cfg: {"matrices": _mat_chain(rng, min(cfg.max_dim, SMALL_ENTRY), 4,
                                                 min(cfg.max_set_size, SMALL_ENTRY))},
        lambda inst: mat_pentagon_holds(*reversed(inst["matrices"]))),
    (Law.TRIANGLE, Bicategory.MAT): LawCase(
        lambda rng, cfg: {"matrices": _mat_chain(rng, cfg.max_dim, 2, min(cfg.max_set_size, SMALL_OBJECT))},
        lambda inst: mat_triangle_holds(*reversed(inst["matrices"]))),
    (Law.SYLLEPSIS, Bicategory.MAT): LawCase(
        lambda rng, cfg: {"dims": [random_size(rng, cfg.max_dim), random_size(rng, cfg.max_dim)]},
        lambda inst: mat_syllepsis_holds(*inst["dims"])),
    (Law.ZIGZAG, Bicategory.MAT): LawCase(
        lambda rng, cfg: {"dim": random_size(rng, cfg.max_dim)},
        lambda inst: all(mat_zigzag_check(inst["dim"], side).is_invertible() for side in ("zeta", "theta"))),
    (Law.SWALLOWTAIL, Bicategory.MAT): LawCase(
        lambda rng, cfg: {"dim": random_size(rng, cfg.max_dim)},
        lambda inst: mat_swallowtail_holds(inst["dim"])),
    (Law.CARDINALITY, Bicategory.MAT): LawCase(
        lambda rng, cfg: {"composable": _mat_chain(rng, cfg.max_dim, 2, cfg.max_set_size),
                          "tensor": [random_matrix(rng, random_size(rng, cfg.max_dim),
                                                   random_size(rng, cfg.max_dim), cfg.max_set_size)
                                     for _ in range(2)]},
        _mat_cardinality),

    (Law.PENTAGON, Bicategory.PROF): LawCase(
        lambda rng, cfg: {"profunctors": _prof_chain(rng, 3)},
        lambda inst: validate_iso_witness(prof_associator(*reversed(inst["profunctors"])))),
    (Law.COYONEDA, Bicategory.PROF): LawCase(
        lambda rng, cfg: {"profunctors": _prof_chain(rng, 1)},
        lambda inst: all(validate_iso_witness(coyoneda_iso(inst["profunctors"][0], side))
                         for side in ("source", "target"))),
    (Law.ZIGZAG, Bicategory.PROF): LawCase(
        lambda rng, cfg: {"category": random_category(rng)},
        lambda inst: validate_iso_witness(prof_zigzag_check(inst["category"]))),
    (Law.CARDINALITY, Bicategory.PROF): LawCase(_prof_cardinality_build, _prof_cardinality),

    (Law.PENTAGON, Bicategory.NET): LawCase(
        lambda rng, cfg: {"circuits": random_circuit_chain(rng, cfg, 4)},
        lambda inst: cospan_pentagon_holds(*reversed(inst["circuits"]))),
    (Law.TRIANGLE, Bicategory.NET): LawCase(
        lambda rng, cfg: {"circuits": random_circuit_chain(rng, cfg, 2)},
        lambda inst: cospan_triangle_holds(*reversed(inst["circuits"]))),
    (Law.ZIGZAG, Bicategory.NET): LawCase(
        lambda rng, cfg: {"foot": edgeless(random_size(rng, cfg.max_set_size))},
        lambda inst: _zigzags_invertible(circuit_duality(inst["foot"]))),
    (Law.SWALLOWTAIL, Bicategory.NET): LawCase(
        lambda rng, cfg: {"foot": edgeless(_swallowtail_size(rng, cfg))},
        lambda inst: circuit_swallowtail_check(inst["foot"]).is_identity()),
    (Law.CARDINALITY, Bicategory.NET): LawCase(
        lambda rng, cfg: {"circuits": random_circuit_chain(rng, cfg, 2)}, _net_cardinality),
}


def _encode_value(value: Any) -> Any:
    if isinstance(value, (list, tuple)):
        return [_encode_value(v) for v in value]
    if isinstance(value, int):
        return value
    return codec.encode(value)


def encode_instance(instance: Dict[str, Any]) -> Dict[str, Any]:
    return {key: _encode_value(value) for key, value in instance.items()}


def run_case(law: Law, bicat: Bicategory, cfg: GenConfig, case_index: int) -> Optional[Failure]:
    """Run one case; None when the law holds"""
    case = LAW_CASES[(law, bicat)]
    instance = case.build(case_rng(cfg.seed, case_index), cfg)
    try:
        if case.check(instance):
            return None
        message = f"{law.value} does not hold"
    except CcbicatError as e:
        message = f"{type(e).__name__}: {e}"
    except Exception as e:
        logger.exception("case %s of %s/%s raised outside the library errors",
                         case_index, bicat.value, law.value)
        message = f"{type(e).__name__}: {e}"
    logger.debug("case %s of %s/%s failed: %s", case_index, bicat.value, law.value, message)
    return Failure(case_index, cfg.seed, message, encode_instance(instance))


def _run_indexed(args: Tuple[Law, Bicategory, GenConfig, int]) -> Optional[Failure]:
    return run_case(*args)


def run_law_suite(law: Union[str, Law], bicat: Union[str, Bicategory], cfg: GenConfig) -> LawReport:
    law, bicat = parse_law(law), parse_bicategory(bicat)
    if (law, bicat) not in LAW_CASES or not LAW_CATALOG.is_supported(law, bicat):
        logger.info("%s is not supported for %s", law.value, bicat.value)
        return LawReport(law.value, bicat.value, "unsupported")

    logger.info("running %s on %s: %s cases from seed %s", law.value, bicat.value, cfg.cases, cfg.seed)
    jobs = [(law, bicat, cfg, index) for index in range(cfg.cases)]
    if cfg.workers > 1 and cfg.cases > 1:
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            outcomes = list(pool.map(_run_indexed, jobs))
    else:
        outcomes = [_run_indexed(job) for job in jobs]

    failures = sorted((f for f in outcomes if f is not None), key=lambda f: f.case_index)
    report = LawReport(law.value, bicat.value, "failed" if failures else "passed", cfg.cases, failures)
    if failures:
        logger.warning("%s on %s: %s of %s cases failed", law.value, bicat.value, len(failures), cfg.cases)
    else:
        logger.info("%s on %s: all %s cases passed", law.value, bicat.value, cfg.cases)
    return report


def run_all(cfg: GenConfig, pairs: Optional[Sequence[Tuple[Law, Bicategory]]] = None) -> List[LawReport]:
    """Every supported (law, bicategory) pair, or the given ones"""
    return [run_law_suite(law, bicat, cfg) for law, bicat in (pairs or LAW_CATALOG.supported_pairs())]
