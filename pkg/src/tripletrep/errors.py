"""Exception classes raised across the package."""


class TripletRepError(Exception):
    """Base class for every error raised by this package."""


# scalar
class ZeroAtNegativeExponent(TripletRepError, ZeroDivisionError):
    pass


class DivisionByZero(TripletRepError, ZeroDivisionError):
    pass


class ModulusMismatch(TripletRepError, ValueError):
    pass


# linalg
class DimensionMismatch(TripletRepError, ValueError):
    pass


class PositionOutOfRange(TripletRepError, IndexError):
    pass


class NotSquare(TripletRepError, ValueError):
    pass


class NotInvertible(TripletRepError, ValueError):
    pass


class CapExceeded(TripletRepError, RuntimeError):
    pass


# freegroup
class NonMonomialImage(TripletRepError, ValueError):
    pass


# groups
class UnsupportedN(TripletRepError, ValueError):
    pass


class IndexOrder(TripletRepError, ValueError):
    pass


class UnassignedGenerator(TripletRepError, KeyError):
    pass


class NotInvertibleImage(TripletRepError, ValueError):
    pass


class UnsupportedPresentation(TripletRepError, ValueError):
    pass


class WordParseError(TripletRepError, ValueError):
    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position


# reps
class ZeroParameter(TripletRepError, ValueError):
    pass


class DomainViolation(TripletRepError, ValueError):
    def __init__(self, constraint):
        super().__init__(f"parameter constraint violated: {constraint}")
        self.constraint = constraint


class NotTwoLocal(TripletRepError, ValueError):
    pass
