"""Exception hierarchy shared by all modules."""


class CouplingError(Exception):
    """Base class for every error raised by peri_couple."""


class GridError(CouplingError, ValueError):
    pass


class NonDivisibleSpacing(GridError):
    pass


class OverlapOutOfDomain(GridError):
    pass


class DomainTooNarrow(GridError):
    pass


class StencilOutOfRange(GridError):
    pass


class InconsistentDofMap(CouplingError, ValueError):
    pass


class GridMismatch(CouplingError, ValueError):
    pass


class UnknownProblem(CouplingError, KeyError):
    pass


class SingularMatrix(CouplingError, ArithmeticError):
    pass


class NoConvergence(CouplingError, ArithmeticError):
    """Iterative estimate did not converge; ``estimate`` holds the best value seen."""

    def __init__(self, message, estimate=None):
        super().__init__(message)
        self.estimate = estimate


class QuadratureFailure(CouplingError, ArithmeticError):
    pass
