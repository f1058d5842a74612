"""Exception classes shared across the package."""


class DimensionMismatch(ValueError):
    pass


class NonSquare(ValueError):
    pass


class WrongBidegree(ValueError):
    pass


class DegreeMismatch(ValueError):
    pass


class ZeroDivisor(ZeroDivisionError):
    pass


class ZeroInput(ValueError):
    pass


class DegenerateInput(ValueError):
    """The triple has a common zero on P1 x P1 (resultant vanishes)."""


class DegenerateClass(ValueError):
    pass


class GenericInstance(ValueError):
    """Raised when an operation needs a non-generic triple."""


class NotCompleteIntersection(ValueError):
    pass


class InternalNonExactDivision(ArithmeticError):
    pass


class InternalInvariantViolation(RuntimeError):
    pass


class FactorizationFailure(RuntimeError):
    pass


class LiftInconsistent(RuntimeError):
    pass


class VerificationFailure(RuntimeError):
    def __init__(self, message, where=None):
        super().__init__(message if where is None else f"{message} at {where}")
        self.where = where


class ParseError(ValueError):
    pass


class GenerationExhausted(RuntimeError):
    pass
