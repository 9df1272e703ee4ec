"""Exception hierarchy shared by every skewcode module."""


class SkewCodeError(Exception):
    """Base class for all domain errors raised by skewcode."""


class UsageError(SkewCodeError, ValueError):
    """Invalid arguments: mismatched rings, bad shapes, violated preconditions."""


class NotAUnitError(SkewCodeError, ArithmeticError):
    """Inversion of a ring element that is not a unit."""


class NoDegreeError(SkewCodeError, ValueError):
    """The zero polynomial has no quasi-degree or leading coefficient."""


class UnsupportedDivisorError(SkewCodeError, ValueError):
    """Right division was requested with a divisor that is not monic."""


class NotAGeneratorError(SkewCodeError, ValueError):
    """A polynomial does not right-divide the code modulus.

    The nonzero remainder is kept on the exception so callers can show it.
    """

    def __init__(self, message, remainder=None):
        super().__init__(message)
        self.remainder = remainder


class CapExceededError(SkewCodeError, RuntimeError):
    """An enumeration or search would exceed its configured budget."""


class TheoremViolation(SkewCodeError, AssertionError):
    """A proved statement failed on a concrete instance (should never fire)."""
