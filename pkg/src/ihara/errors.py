"""Exception and warning types raised across the package."""


class IharaError(Exception):
    """Base class for all errors raised by this package."""


class GraphError(IharaError, ValueError):
    """Invalid graph input."""


class SelfLoopError(GraphError):
    pass


class DuplicateEdgeError(GraphError):
    pass


class DisconnectedError(GraphError):
    pass


class EmptyGraphError(GraphError):
    pass


class BadOrderError(GraphError):
    """A generator was asked for an order below its lower bound."""


class BudgetExceededError(IharaError):
    """Cycle enumeration would exceed the configured node budget."""


class NonTransitiveError(IharaError, ValueError):
    """The graph is not flagged vertex-transitive."""


class BranchAmbiguityError(IharaError, ValueError):
    """No real positive n-th root exists at the requested point."""


class BadCoinError(IharaError, ValueError):
    pass


class NormDriftError(IharaError, ArithmeticError):
    pass


class MappingDomainError(IharaError, ArithmeticError):
    """A transition eigenvalue fell outside [-1, 1]."""


class SingularTermError(IharaError, ValueError):
    pass


class DomainViolationError(IharaError, ValueError):
    pass


class DomainWarning(UserWarning):
    """A logarithm argument left the positive reals; principal branch used."""
