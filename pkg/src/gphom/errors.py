"""Exception types shared across the package."""


class GphomError(Exception):
    """Base class for all package errors."""


class InvalidGraph(GphomError):
    """A graph or morphism violates a structural invariant."""


class InvalidInput(GphomError):
    """Malformed or out-of-contract user input (JSON, CLI args)."""


class BudgetExceeded(GphomError):
    """An exhaustive search ran past its node budget."""


class NotAnNGraph(GphomError):
    """Graph is not an N-graph (some node has indegree != 1)."""


class NotRealizable(GphomError):
    """A ghost sequence does not come from any almost-finite Z-set."""


class IntegralityViolation(GphomError):
    """Internal consistency failure: a provably integral quantity was not."""


class InternalInconsistency(GphomError):
    """Two independent computations of the same fact disagreed."""
