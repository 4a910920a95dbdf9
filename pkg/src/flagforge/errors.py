"""Exception hierarchy shared by all flagforge modules."""


class FlagforgeError(Exception):
    """Base class for every error raised by flagforge."""


class NotPrime(FlagforgeError, ValueError):
    pass


class TooLarge(FlagforgeError, ValueError):
    pass


class DivisionByZero(FlagforgeError, ZeroDivisionError):
    pass


class FieldMismatch(FlagforgeError, ValueError):
    pass


class DimensionMismatch(FlagforgeError, ValueError):
    pass


class InvalidDelta(FlagforgeError, ValueError):
    pass


class InvalidT(FlagforgeError, ValueError):
    pass


class ZeroMatrix(FlagforgeError, ValueError):
    pass


class AmbientMismatch(FlagforgeError, ValueError):
    pass


class LengthMismatch(FlagforgeError, ValueError):
    pass


class TypeMismatch(FlagforgeError, ValueError):
    pass


class BadParams(FlagforgeError, ValueError):
    pass


class BadTypeSet(FlagforgeError, ValueError):
    pass


class BadTick(FlagforgeError, ValueError):
    pass


class DimMismatch(FlagforgeError, ValueError):
    pass


class NotInvertible(FlagforgeError, ValueError):
    pass


class TooSmall(FlagforgeError, ValueError):
    pass


class FormatError(FlagforgeError, ValueError):
    """A serialized document is malformed or inconsistent."""


class InternalAssert(FlagforgeError, AssertionError):
    """A construction invariant failed; indicates a bug, never bad input."""


class CharacterizationMismatch(FlagforgeError, AssertionError):
    """The distance-based and projection-based ODFC tests disagree."""
