"""Exception types shared by every wrapkit module (and both arithmetic backends)."""


class WrapkitError(Exception):
    pass


class IncompatibleRadicands(WrapkitError, ValueError):
    """Raised when two irrational operands live in different quadratic fields."""


class DivisionByZero(WrapkitError, ZeroDivisionError):
    pass


class InvalidParams(WrapkitError, ValueError):
    pass


class NonPositiveB(WrapkitError, ValueError):
    pass


class InconsistentStripData(WrapkitError, ValueError):
    pass


class DegeneratePolygon(WrapkitError, ValueError):
    pass


class ZeroEdge(WrapkitError, ValueError):
    pass


class MalformedSquare(WrapkitError, ValueError):
    pass


class InvalidSpec(WrapkitError, ValueError):
    pass


class MarginTooSmall(WrapkitError, ValueError):
    pass


class AmbiguousAtBoundary(WrapkitError, ValueError):
    pass


class NonIntegerProjection(WrapkitError, ValueError):
    pass


class ExpressionSyntaxError(WrapkitError, ValueError):
    def __init__(self, message, position):
        super().__init__(f"{message} at position {position}")
        self.position = position


class MixedRadicands(WrapkitError, ValueError):
    pass


class DocumentError(WrapkitError, ValueError):
    pass
