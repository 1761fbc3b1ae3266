"""
Canonical JSON for every value type

Canonical means sorted keys and no insignificant whitespace, so that
serializing a parsed file reproduces it byte for byte.
"""

import json
import logging
from fractions import Fraction
from functools import wraps
from typing import Any, Callable, Dict, List

from .errors import CoherenceError, ParseError
from .finset import FinFunction, FinSet
from .matrices import FINSET_RIG, MorMatrix, ObMatrix
from .profunctors import FinCat, Profunctor, validate_fincat, validate_profunctor
from .relations import Relation, span_to_rel
from .resnet import NetCospan, ResNet, ResNetMorphism
from .spans import Span, SpanMap

logger = logging.getLogger(__name__)

JSONDict = Dict[str, Any]


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def loads(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"Invalid JSON: {e}") from e


def _parser(kind: str):
    """Turn missing keys, wrong types and invalid tables into ParseError"""
    def decorate(fn: Callable[[Any], Any]) -> Callable[[Any], Any]:
        @wraps(fn)
        def wrapper(*args, **kwargs):
            try:
                return fn(*args, **kwargs)
            except ParseError:
                raise
            except (KeyError, TypeError, ValueError, IndexError, ZeroDivisionError, CoherenceError) as e:
                raise ParseError(f"Cannot read {kind}: {e}") from e
        return wrapper
    return decorate


def _int(x: Any) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise ParseError(f"Expected an integer, got {x!r}")
    return x


def _ints(xs: Any) -> List[int]:
    if not isinstance(xs, list):
        raise ParseError(f"Expected a list of integers, got {xs!r}")
    return [_int(x) for x in xs]


# ---------- finite sets ----------

def encode_finset(A: FinSet) -> JSONDict:
    return {"size": A.size}


@_parser("FinSet")
def decode_finset(obj: JSONDict) -> FinSet:
    return FinSet(_int(obj["size"]))


def encode_function(f: FinFunction) -> JSONDict:
    return {"dom": f.dom.size, "cod": f.cod.size, "table": list(f.table)}


@_parser("FinFunction")
def decode_function(obj: JSONDict) -> FinFunction:
    return FinFunction(FinSet(_int(obj["dom"])), FinSet(_int(obj["cod"])), tuple(_ints(obj["table"])))


# ---------- spans and relations ----------

def encode_span(s: Span) -> JSONDict:
    return {"src": s.src.size, "tgt": s.tgt.size, "apex": s.apex.size,
            "srcLeg": list(s.src_leg.table), "tgtLeg": list(s.tgt_leg.table)}


@_parser("Span")
def decode_span(obj: JSONDict) -> Span:
    X, Y, S = FinSet(_int(obj["src"])), FinSet(_int(obj["tgt"])), FinSet(_int(obj["apex"]))
    return Span(X, Y, S, FinFunction(S, X, tuple(_ints(obj["srcLeg"]))),
                FinFunction(S, Y, tuple(_ints(obj["tgtLeg"]))))


def encode_span_map(m: SpanMap) -> JSONDict:
    return {"from": encode_span(m.source), "to": encode_span(m.target), "h": list(m.h.table)}


@_parser("SpanMap")
def decode_span_map(obj: JSONDict) -> SpanMap:
    source, target = decode_span(obj["from"]), decode_span(obj["to"])
    return SpanMap(source, target, FinFunction(source.apex, target.apex, tuple(_ints(obj["h"]))))


def encode_relation(r: Relation) -> JSONDict:
    return encode_span(r.span)


@_parser("Relation")
def decode_relation(obj: JSONDict, strict: bool = True) -> Relation:
    """With strict=False a span that is not jointly monic is replaced by its image"""
    s = decode_span(obj)
    if not s.is_jointly_monic():
        if strict:
            raise ParseError("Relation file is not jointly monic")
        return span_to_rel(s)
    return Relation(s)


# ---------- matrices ----------

def encode_ob_matrix(M: ObMatrix) -> JSONDict:
    return {"src": M.src_dim, "tgt": M.tgt_dim,
            "entries": [[encode_finset(x) for x in row] for row in M.entries]}


@_parser("ObMatrix")
def decode_ob_matrix(obj: JSONDict) -> ObMatrix:
    rows = obj["entries"]
    return ObMatrix(_int(obj["src"]), _int(obj["tgt"]),
                    tuple(tuple(decode_finset(x) for x in row) for row in rows), FINSET_RIG)


def encode_mor_matrix(alpha: MorMatrix) -> JSONDict:
    return {"from": encode_ob_matrix(alpha.source), "to": encode_ob_matrix(alpha.target),
            "entries": [[encode_function(f) for f in row] for row in alpha.entries]}


@_parser("MorMatrix")
def decode_mor_matrix(obj: JSONDict) -> MorMatrix:
    return MorMatrix(decode_ob_matrix(obj["from"]), decode_ob_matrix(obj["to"]),
                     tuple(tuple(decode_function(f) for f in row) for row in obj["entries"]))


# ---------- categories and profunctors ----------

def encode_fincat(C: FinCat) -> JSONDict:
    return {"objects": C.objects.size, "src": list(C.src_of.table), "tgt": list(C.tgt_of.table),
            "id": list(C.id_of.table), "comp": [list(t) for t in C.composition]}


@_parser("FinCat")
def decode_fincat(obj: JSONDict) -> FinCat:
    comp = [tuple(_ints(t)) for t in obj["comp"]]
    C = FinCat.build(_int(obj["objects"]), _ints(obj["src"]), _ints(obj["tgt"]), _ints(obj["id"]), comp)
    if not validate_fincat(C):
        raise ParseError("Category tables violate the category laws")
    return C


def encode_profunctor(F: Profunctor) -> JSONDict:
    return {"src": encode_fincat(F.src_cat), "tgt": encode_fincat(F.tgt_cat),
            "values": [[x.size for x in row] for row in F.values],
            "left": [[list(f.table) for f in row] for row in F.left_action],
            "right": [[list(f.table) for f in row] for row in F.right_action]}


@_parser("Profunctor")
def decode_profunctor(obj: JSONDict) -> Profunctor:
    C, D = decode_fincat(obj["src"]), decode_fincat(obj["tgt"])
    values = tuple(tuple(FinSet(_int(n)) for n in row) for row in obj["values"])
    left, right = obj["left"], obj["right"]

    def value(c, d):
        return values[c][d]

    F = Profunctor.from_callables(C, D, value,
                                  lambda g, d, x: _int(left[g][d][x]),
                                  lambda c, h, x: _int(right[c][h][x]))
    if not validate_profunctor(F):
        raise ParseError("Profunctor actions are not functorial")
    return F


# ---------- networks ----------

def _encode_fraction(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _decode_fraction(text: Any) -> Fraction:
    if not isinstance(text, str):
        raise ParseError(f"Resistances are 'p/q' strings, got {text!r}")
    return Fraction(text)


def encode_network(N: ResNet) -> JSONDict:
    return {"V": N.vertices.size, "E": N.edges.size, "s": list(N.s.table), "t": list(N.t.table),
            "r": [_encode_fraction(x) for x in N.r]}


@_parser("ResNet")
def decode_network(obj: JSONDict) -> ResNet:
    V, E = FinSet(_int(obj["V"])), FinSet(_int(obj["E"]))
    return ResNet(V, E, FinFunction(E, V, tuple(_ints(obj["s"]))), FinFunction(E, V, tuple(_ints(obj["t"]))),
                  tuple(_decode_fraction(x) for x in obj["r"]))


def _encode_leg(m: ResNetMorphism) -> JSONDict:
    return {"eps": list(m.eps.table), "ups": list(m.ups.table)}


def _decode_leg(obj: JSONDict, source: ResNet, target: ResNet) -> ResNetMorphism:
    return ResNetMorphism(source, target, FinFunction(source.edges, target.edges, tuple(_ints(obj["eps"]))),
                          FinFunction(source.vertices, target.vertices, tuple(_ints(obj["ups"]))))


def encode_cospan(c: NetCospan) -> JSONDict:
    return {"src": encode_network(c.src_foot), "tgt": encode_network(c.tgt_foot),
            "apex": encode_network(c.apex),
            "srcLeg": _encode_leg(c.src_leg), "tgtLeg": _encode_leg(c.tgt_leg)}


@_parser("NetCospan")
def decode_cospan(obj: JSONDict) -> NetCospan:
    X, Y, apex = decode_network(obj["src"]), decode_network(obj["tgt"]), decode_network(obj["apex"])
    return NetCospan(X, Y, apex, _decode_leg(obj["srcLeg"], X, apex), _decode_leg(obj["tgtLeg"], Y, apex))


# ---------- dispatch ----------

ENCODERS = {
    FinSet: encode_finset,
    FinFunction: encode_function,
    Span: encode_span,
    SpanMap: encode_span_map,
    Relation: encode_relation,
    ObMatrix: encode_ob_matrix,
    MorMatrix: encode_mor_matrix,
    FinCat: encode_fincat,
    Profunctor: encode_profunctor,
    ResNet: encode_network,
    NetCospan: encode_cospan,
}

ONE_CELL_DECODERS = {
    "span": decode_span,
    "rel": decode_relation,
    "mat": decode_ob_matrix,
    "prof": decode_profunctor,
    "net": decode_cospan,
}


def encode(value: Any) -> JSONDict:
    encoder = ENCODERS.get(type(value))
    if encoder is None:
        raise TypeError(f"No JSON encoding for {type(value).__name__}")
    return encoder(value)


def to_json(value: Any) -> str:
    return dumps(encode(value))


def decode_one_cell(bicat: str, text: str):
    """Parse the 1-cell file format of the given bicategory"""
    decoder = ONE_CELL_DECODERS.get(bicat)
    if decoder is None:
        raise ParseError(f"Unknown bicategory '{bicat}'; expected one of {sorted(ONE_CELL_DECODERS)}")
    value = decoder(loads(text))
    logger.debug("parsed %s 1-cell", bicat)
    return value
