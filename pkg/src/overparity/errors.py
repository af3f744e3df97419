"""Exception hierarchy shared by every module."""


class OverparityError(Exception):
    """Base class for all errors raised by this package."""


class DuplicateOverline(OverparityError, ValueError):
    """Two overlined parts of the same size were supplied."""


class EmptyInput(OverparityError, ValueError):
    pass


class NotInDomain(OverparityError, ValueError):
    """A map was applied outside its declared domain."""


class PreconditionViolated(OverparityError):
    """A part that the construction of a map requires does not exist."""


class UndefinedWitness(OverparityError, ValueError):
    pass


class NonUnitDivisor(OverparityError, ZeroDivisionError):
    pass


class OrderMismatch(OverparityError, ValueError):
    pass


class DivergentProduct(OverparityError, ValueError):
    pass


class OddCoefficient(OverparityError, ArithmeticError):
    """Halving a series whose coefficients are not all even."""
