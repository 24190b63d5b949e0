"""Exception types shared across the package."""


class NonConvergentConfigError(ValueError):
    """No relaxation parameter in (0, 2) converges for this configuration.

    Raised for all-Neumann boundary sets (singular problem, r = 1) and
    whenever a mode-amplification factor r reaches or exceeds 1.
    """


class FormulaDomainError(ValueError):
    """Inputs fall outside the domain of a closed-form prediction.

    Examples: a non-positive denominator in a line-SOR r formula, or an
    imaginary square root in the compact-scheme perturbation constants.
    """


class NoRootError(RuntimeError):
    """Neither characteristic equation produced a usable wavenumber root."""


class SingularSystemError(RuntimeError):
    """Zero (or denormal) pivot encountered in a tridiagonal solve."""


class TooManyUnknownsError(ValueError):
    """Dense sweep-matrix assembly refused: too many unknowns."""


class SolveFailure(RuntimeError):
    """Base class for iteration failures; carries the partial report."""

    def __init__(self, message, report):
        super().__init__(message)
        self.report = report


class NotConvergedError(SolveFailure):
    """Iteration budget exhausted before the norm dropped below tolerance."""


class DivergedError(SolveFailure):
    """Iterate norm exceeded the divergence guard (1e100)."""
