"""Exception hierarchy shared by all modrank modules."""

from __future__ import annotations


class ModrankError(Exception):
    """Base class for every error raised by this package."""


# field / poly
class NotPrime(ModrankError, ValueError):
    pass


class DegreeTooLarge(ModrankError, ValueError):
    pass


class DivisionByZero(ModrankError, ZeroDivisionError):
    pass


class ZeroPolynomial(ModrankError, ValueError):
    pass


# linalg
class AmbientMismatch(ModrankError, ValueError):
    pass


class SingularMatrix(ModrankError, ValueError):
    pass


# group
class OrderLimitExceeded(ModrankError, ValueError):
    pass


class InvalidPermutation(ModrankError, ValueError):
    pass


class PrimeDoesNotDivideOrder(ModrankError, ValueError):
    pass


class NotNormal(ModrankError, ValueError):
    pass


class NotASubgroup(ModrankError, ValueError):
    pass


class InvalidFieldSize(ModrankError, ValueError):
    pass


# modules
class NotInvertible(ModrankError, ValueError):
    pass


class NotAHomomorphism(ModrankError, ValueError):
    """The generator matrices do not define a representation.

    ``pair`` is ``(x, y)`` with ``M(x) M(y) != M(xy)``.
    """

    def __init__(self, message: str, pair: tuple[int, int]):
        super().__init__(message)
        self.pair = pair


class ActionTooLarge(ModrankError, ValueError):
    pass


class NonTerminating(ModrankError, RuntimeError):
    pass


class NotInvariant(ModrankError, ValueError):
    pass


class NotCertifiedIrreducible(ModrankError, ValueError):
    pass


class ZeroModule(ModrankError, ValueError):
    pass


class NotSemisimple(ModrankError, ValueError):
    pass


class NotSemisimpleAlgebra(ModrankError, ValueError):
    pass


class SylowNotNormal(ModrankError, ValueError):
    pass


class BudgetExceeded(ModrankError, RuntimeError):
    """Raised when a brute-force search would exceed its budget.

    ``interval`` is ``(lb, ub)`` when the caller could still bound the answer.
    """

    def __init__(self, message: str, interval: tuple[int, int] | None = None):
        super().__init__(message)
        self.interval = interval


# instances
class ParseError(ModrankError, ValueError):
    pass


class ValidationError(ModrankError, ValueError):
    pass


class UnknownFixture(ModrankError, KeyError):
    pass
