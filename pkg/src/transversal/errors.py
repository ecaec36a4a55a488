class TransversalError(Exception):
    """Base class for errors raised by this package."""


class CollectionError(TransversalError, ValueError):
    """Malformed or invalid graph-collection input."""


class NotAStarError(CollectionError):
    """A graph that must be a star K_{1,d} (d >= 2) is not one."""


class NotATreeError(CollectionError):
    """A graph that must be a tree is not one, or has the wrong order."""


class ParameterError(TransversalError, ValueError):
    """Parameters outside the supported regime."""


class PreconditionError(TransversalError):
    """An operation's documented precondition does not hold for its input."""


class ClaimViolation(TransversalError, AssertionError):
    """A structural inequality that must hold for rainbow-free input failed."""


class BudgetExceeded(TransversalError, RuntimeError):
    """An exact search ran out of its node budget before finishing."""

    def __init__(self, message: str, nodes: int):
        super().__init__(message)
        self.nodes = nodes
