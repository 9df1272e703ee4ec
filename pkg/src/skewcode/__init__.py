"""Bivariate skew polynomial rings over finite rings and 2-D skew constacyclic codes."""

from .errors import (
    CapExceededError,
    NoDegreeError,
    NotAGeneratorError,
    NotAUnitError,
    SkewCodeError,
    TheoremViolation,
    UnsupportedDivisorError,
    UsageError,
)
from .poly import QuasiDegree, SkewPoly, SkewRing, psi, right_divide, right_divides, star_mul
from .quotient import QuotientContext, ResidueClass, reduce, reduce_diamond, star_mul_mod
from .ring import AutomorphismPair, Element, RingSpec

__version__ = "0.1.0"

__all__ = [
    "AutomorphismPair",
    "CapExceededError",
    "Element",
    "NoDegreeError",
    "NotAGeneratorError",
    "NotAUnitError",
    "QuasiDegree",
    "QuotientContext",
    "ResidueClass",
    "RingSpec",
    "SkewCodeError",
    "SkewPoly",
    "SkewRing",
    "TheoremViolation",
    "UnsupportedDivisorError",
    "UsageError",
    "psi",
    "reduce",
    "reduce_diamond",
    "right_divide",
    "right_divides",
    "star_mul",
    "star_mul_mod",
]
