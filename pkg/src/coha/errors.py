"""Exception hierarchy shared by every module.

The CLI maps :class:`InputError` subclasses to exit code 2; everything else
that escapes is a bug.
"""


class CohaError(Exception):
    """Base class for all library errors."""


class InputError(CohaError):
    """Invalid user-supplied data."""


class InternalError(CohaError):
    """A consistency check that theory guarantees has failed."""


# quiver data
class CycleFound(InputError):
    pass


class OrderViolation(InputError):
    pass


class LengthMismatch(InputError):
    pass


class NotConnected(InputError):
    pass


class NotDisjointCover(InputError):
    pass


class ContractionCyclic(InputError):
    pass


class NotOrdered(InputError):
    def __init__(self, message, suggestion=None):
        super().__init__(message)
        self.suggestion = suggestion


class NotDynkin(InputError):
    pass


class E8Block(InputError):
    pass


# roots
class NoValidOrder(InternalError):
    pass


# polynomials
class NotDivisible(CohaError):
    pass


class BadPartition(InputError):
    pass


class ParseError(InputError):
    pass


# CoHA elements
class NotSymmetric(InputError):
    pass


class VariableOutOfRange(InputError):
    pass


class QuiverMismatch(InputError):
    pass


class GradeMismatch(InputError):
    pass


class InternalNotDivisible(InternalError):
    pass


class NoUnitCoordinate(InputError):
    pass


class BadMarker(InputError):
    pass


# quantum algebra
class BoxMismatch(InputError):
    pass


class ZeroVector(InputError):
    pass


class SignMismatch(InternalError):
    pass


class NegativeCodim(InternalError):
    pass


class NonInteger(InternalError):
    pass
