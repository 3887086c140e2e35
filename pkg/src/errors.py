"""
Error types for the signed-lattice toolkit

All errors subclass ValueError so callers can keep catching ValueError.
Verification failures are reported in report objects, never raised.
"""


class LatticeError(ValueError):
    """Base class for toolkit errors"""


class ShapeError(LatticeError):
    """Shape is invalid, too large to enumerate, or unsupported by an operation"""


class ShapeMismatchError(LatticeError):
    """Operands belong to different shapes, or an index is out of range"""


class StringParseError(LatticeError):
    """Text is not a valid rendering of a lattice string"""


class RationalParseError(LatticeError):
    """Text is not a decimal or p/q rational"""


class WeightFunctionError(LatticeError):
    """Weight function input is malformed"""


class OutOfRangeError(LatticeError):
    """A requested count or size lies outside the admissible interval"""


class BoundaryCaseError(LatticeError):
    """The request is served by an extremal construction, not by a level decomposition"""


class InvalidBasisError(LatticeError):
    """Basis violates disjointness, the antichain property, or B1-B3"""
