"""Exception hierarchy shared by every module of the package."""


class CodingError(Exception):
    """Base class for all errors raised by ehzcodes."""


# field construction / arithmetic
class NotPrime(CodingError, ValueError):
    pass


class NotIrreducible(CodingError, ValueError):
    pass


class NotMonic(CodingError, ValueError):
    pass


class FieldTooLarge(CodingError, ValueError):
    pass


class FieldMismatch(CodingError, TypeError):
    pass


class DivisionByZero(CodingError, ZeroDivisionError):
    pass


class ParseError(CodingError, ValueError):
    pass


class NoGenerator(CodingError, ValueError):
    pass


# linear algebra
class DimensionMismatch(CodingError, ValueError):
    pass


class NotSquare(DimensionMismatch):
    pass


# codes
class BadDimension(CodingError, ValueError):
    pass


class DuplicatePoints(CodingError, ValueError):
    pass


class NotInVk(CodingError, ValueError):
    pass


class WrongKind(CodingError, ValueError):
    pass


class GuardExceeded(CodingError, RuntimeError):
    """An exhaustive enumeration would exceed its configured budget."""


# ECP machinery
class GammaInS(CodingError, ValueError):
    pass


class NoValidPair(CodingError, RuntimeError):
    pass


# deep holes / extensions
class BadCoefficients(CodingError, ValueError):
    pass


class NotMds(CodingError, ValueError):
    pass


class NotDeepHole(CodingError, ValueError):
    pass


class ShapeMismatch(CodingError, ValueError):
    pass
