"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain where a quantity is defined."""


class ConvergenceError(ArithmeticError):
    """An improper integral failed to settle within its segment budget.

    ``iterates`` holds the last accelerated estimates (oldest first) so the
    caller can judge how far off the result was.
    """

    def __init__(self, message, iterates=()):
        super().__init__(message)
        self.iterates = tuple(iterates)


class DegenerateDistributionError(DomainError):
    """Raised when a density is requested for a point mass (scale ``c = 0``)."""


class PreconditionError(DomainError):
    """A hypothesis an operation relies on was found violated numerically."""
