"""
Exception hierarchy for the compact closed bicategory toolkit
"""


class CcbicatError(Exception):
    """Base class for every error raised by the package"""


class ShapeError(CcbicatError, ValueError):
    """A value was built from malformed tables (wrong lengths, out-of-range entries, bad arity)"""


class CompositionError(CcbicatError, ValueError):
    """Two cells were composed whose boundaries do not match"""


class CoherenceError(CcbicatError):
    """A constructed structure cell does not commute, is not invertible, or a law failed"""


class ParseError(CcbicatError, ValueError):
    """Serialized input could not be decoded"""


class UnsupportedLawError(CcbicatError):
    """The requested law is not implemented for the requested bicategory"""

    def __init__(self, law, bicategory):
        self.law = law
        self.bicategory = bicategory
        super().__init__(f"Law '{law}' is not supported for bicategory '{bicategory}'")
