"""Exception types shared across the package."""


class LieGsbError(Exception):
    """Base class for all errors raised by this package."""


class InvalidWordError(LieGsbError):
    """A word fails a structural precondition (empty, not an ALSW, ...)."""


class OccurrenceError(LieGsbError):
    """A claimed subword occurrence does not exist at the stated position."""


class NotLieElementError(LieGsbError):
    """An associative element has no preimage in the free Lie algebra."""


class ZeroElementError(LieGsbError):
    """The zero element was passed where a nonzero one is required."""


class CompositionError(LieGsbError):
    """A composition is requested for a pair that does not admit it."""


class CapsExceededError(LieGsbError):
    """An input lies outside the requested degree caps."""


class BudgetExceededError(LieGsbError):
    """A completion run hit its element or round budget before stabilizing."""


class PresentationError(LieGsbError):
    """A presentation file or expression failed to parse."""

    def __init__(self, message, line=None):
        if line is not None:
            message = "line %d: %s" % (line, message)
        super().__init__(message)
        self.line = line
