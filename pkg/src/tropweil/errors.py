"""Exception hierarchy shared by all tropweil modules."""


class TropWeilError(Exception):
    """Base class for every error raised by tropweil."""


class RationalParseError(TropWeilError, ValueError):
    pass


class SingularSystemError(TropWeilError, ArithmeticError):
    """The linear system has no unique solution."""


class CurveError(TropWeilError, ValueError):
    pass


class NonPositiveLengthError(CurveError):
    pass


class DanglingEndpointError(CurveError):
    pass


class DuplicateIdError(CurveError):
    pass


class DisconnectedCurveError(CurveError):
    pass


class InvalidPointError(CurveError):
    """A point literal does not lie on the curve."""


class InvalidDirectionError(CurveError):
    """A direction is not incident to the given point."""


class CurveMismatchError(TropWeilError, ValueError):
    """Two objects living on different curves were combined."""


class FunctionError(TropWeilError, ValueError):
    """A piecewise-linear function document violates its invariants."""


class DegreeError(TropWeilError, ValueError):
    """A divisor of degree zero was required."""


class NotIntegralError(TropWeilError, ValueError):
    """An integral divisor was required."""


class ConsistencyError(TropWeilError, AssertionError):
    """Two routes that must agree by a theorem disagreed."""


class ExpressionSyntaxError(TropWeilError, ValueError):
    def __init__(self, message, position):
        super().__init__(f"{message} at position {position}")
        self.position = position


class DocumentError(TropWeilError, ValueError):
    """Malformed JSON document."""
