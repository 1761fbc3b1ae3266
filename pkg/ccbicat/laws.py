"""
Coherence laws, bicategories, and which pairs the harness can check
"""

from enum import Enum
from typing import Any, Dict, List, Union

from .errors import UnsupportedLawError


class Law(Enum):
    """Laws a suite can check"""
    PENTAGON = "pentagon"
    TRIANGLE = "triangle"
    INTERCHANGE = "interchange"
    HEX_R = "hexR"
    HEX_S = "hexS"
    SYLLEPSIS = "syllepsis"
    ZIGZAG = "zigzag"
    SWALLOWTAIL = "swallowtail"
    COYONEDA = "coyoneda"
    CARDINALITY = "cardinality"


class Bicategory(Enum):
    SPAN = "span"
    REL = "rel"
    MAT = "mat"
    PROF = "prof"
    NET = "net"


def parse_law(name: Union[str, Law]) -> Law:
    if isinstance(name, Law):
        return name
    try:
        return Law(name)
    except ValueError:
        raise ValueError(f"Unknown law '{name}'; expected one of {[law.value for law in Law]}") from None


def parse_bicategory(name: Union[str, Bicategory]) -> Bicategory:
    if isinstance(name, Bicategory):
        return name
    try:
        return Bicategory(name)
    except ValueError:
        raise ValueError(
            f"Unknown bicategory '{name}'; expected one of {[b.value for b in Bicategory]}") from None


class LawCatalog:
    """
    Law configurations and metadata
    """

    def __init__(self):
        self.law_configs = {
            Law.PENTAGON: {
                'name': 'Pentagon',
                'description': 'The two ways of reassociating a fourfold composite agree',
                'bicategories': [Bicategory.SPAN, Bicategory.REL, Bicategory.MAT, Bicategory.PROF, Bicategory.NET],
            },
            Law.TRIANGLE: {
                'name': 'Triangle',
                'description': 'Associator and unitors agree on a composite with an identity in the middle',
                'bicategories': [Bicategory.SPAN, Bicategory.REL, Bicategory.MAT, Bicategory.NET],
            },
            Law.INTERCHANGE: {
                'name': 'Interchange',
                'description': 'Horizontal and vertical composition of 2-cells commute',
                'bicategories': [Bicategory.SPAN],
            },
            Law.HEX_R: {
                'name': 'Hexagon R',
                'description': 'Braiding past a tensor pair on the right, via the R modification',
                'bicategories': [Bicategory.SPAN],
            },
            Law.HEX_S: {
                'name': 'Hexagon S',
                'description': 'Braiding past a tensor pair on the left, via the S modification',
                'bicategories': [Bicategory.SPAN],
            },
            Law.SYLLEPSIS: {
                'name': 'Syllepsis',
                'description': 'The double braiding is the identity up to a canonical 2-cell',
                'bicategories': [Bicategory.SPAN, Bicategory.MAT],
            },
            Law.ZIGZAG: {
                'name': 'Zig-zag',
                'description': 'The snake composites of unit and counit are invertibly the identity',
                'bicategories': [Bicategory.SPAN, Bicategory.REL, Bicategory.MAT, Bicategory.PROF, Bicategory.NET],
            },
            Law.SWALLOWTAIL: {
                'name': 'Swallowtail',
                'description': 'The pasting of the zig-zag isomorphisms is the identity on the unit',
                'bicategories': [Bicategory.SPAN, Bicategory.MAT, Bicategory.NET],
            },
            Law.COYONEDA: {
                'name': 'Co-Yoneda',
                'description': 'Composing with a hom profunctor is naturally isomorphic to the identity',
                'bicategories': [Bicategory.PROF],
            },
            Law.CARDINALITY: {
                'name': 'Cardinality',
                'description': 'Sizes of composites and tensors agree with an independent integer oracle',
                'bicategories': [Bicategory.SPAN, Bicategory.REL, Bicategory.MAT, Bicategory.PROF, Bicategory.NET],
            },
        }

    def get_law_config(self, law: Law) -> Dict[str, Any]:
        """Get configuration for a specific law"""
        return self.law_configs.get(law, {})

    def get_available_laws(self) -> List[Dict[str, Any]]:
        return [
            {
                'law': law.value,
                'name': config['name'],
                'description': config['description'],
                'bicategories': [b.value for b in config['bicategories']],
            }
            for law, config in self.law_configs.items()
        ]

    def is_supported(self, law: Law, bicat: Bicategory) -> bool:
        return bicat in self.get_law_config(law).get('bicategories', [])

    def require_supported(self, law: Law, bicat: Bicategory) -> None:
        if not self.is_supported(law, bicat):
            raise UnsupportedLawError(law.value, bicat.value)

    def supported_pairs(self) -> List[tuple]:
        """Every (law, bicategory) pair, ordered by bicategory then law"""
        return [(law, bicat) for bicat in Bicategory for law in Law if self.is_supported(law, bicat)]

    def laws_for(self, bicat: Bicategory) -> List[Law]:
        return [law for law in Law if self.is_supported(law, bicat)]


LAW_CATALOG = LawCatalog()
