"""
Finite compact closed bicategories

Executable Span(FinSet), Rel, Mat over a 2-rig, profunctors between finite
categories, and cospans of resistor networks, with every coherence cell
built as an explicit table and checked by exact equality.
"""

from .errors import (
    CcbicatError, CoherenceError, CompositionError, ParseError, ShapeError, UnsupportedLawError,
)
from .finset import FinFunction, FinSet
from .harness import GenConfig, LawReport, run_all, run_law_suite
from .laws import LAW_CATALOG, Bicategory, Law
from .matrices import FINSET_RIG, FinSetRig, MorMatrix, ObMatrix, TwoRig
from .profunctors import FinCat, IsoWitness, Profunctor
from .relations import Relation
from .resnet import Circuit, CospanMap, NetCospan, ResNet, ResNetMorphism
from .spans import Span, SpanMap

__all__ = [
    'CcbicatError', 'CoherenceError', 'CompositionError', 'ParseError', 'ShapeError', 'UnsupportedLawError',
    'FinFunction', 'FinSet',
    'Span', 'SpanMap', 'Relation',
    'TwoRig', 'FinSetRig', 'FINSET_RIG', 'ObMatrix', 'MorMatrix',
    'FinCat', 'Profunctor', 'IsoWitness',
    'ResNet', 'ResNetMorphism', 'NetCospan', 'CospanMap', 'Circuit',
    'Law', 'Bicategory', 'LAW_CATALOG', 'GenConfig', 'LawReport', 'run_law_suite', 'run_all',
]
