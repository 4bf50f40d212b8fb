class HalrectError(Exception):
    """Base class for library errors."""


class NotFoundError(HalrectError, KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else ""


class UnsupportedOperationError(HalrectError):
    pass


class CatalogError(HalrectError):
    """A catalog entry failed its optimum self-check."""


class InvalidStateError(HalrectError):
    pass


class InternalError(HalrectError, AssertionError):
    """Solver bookkeeping went out of sync; indicates a bug, not bad input."""


class EvaluationError(HalrectError):
    """The objective raised while being evaluated."""
