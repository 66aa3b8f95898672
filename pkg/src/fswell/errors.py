"""Exception types shared across the package."""


class FswellError(Exception):
    """Base class for all package-specific errors."""


class DomainError(FswellError, ValueError):
    """Input lies outside an operation's mathematical domain."""


class UnsupportedDimensionError(DomainError):
    """Dimension outside the supported range, or a documented exclusion
    (the zero-range regularization is undefined here for even d >= 4)."""


class SingularPointError(FswellError, ArithmeticError):
    """Evaluation requested exactly at a spectral singularity.

    Carries ``location`` (the offending dimensionless argument, e.g. eta*b)
    so callers can report the pole rather than crash on division by zero.
    """

    def __init__(self, message: str, location: float | None = None):
        super().__init__(message)
        self.location = location


class StepUnderflowError(FswellError, ArithmeticError):
    """Finite-difference step too small for stable differencing."""


class ConvergenceError(FswellError, RuntimeError):
    """An iterative scheme (quadrature, extrapolation, root scan) failed
    to stabilize within its budget."""


class NoNodeError(DomainError):
    """The exterior scattering wavefunction has no real node beyond the
    well edge (a <= b, or a < 0: the node is only a backward extrapolation)."""


class NoSolutionError(FswellError, RuntimeError):
    """A tuning/inversion problem has no solution on the requested branch.

    Carries ``bracket`` describing the interval that was searched.
    """

    def __init__(self, message: str, bracket: tuple[float, float] | None = None):
        super().__init__(message)
        self.bracket = bracket
