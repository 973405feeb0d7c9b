"""Exception types shared across the package.

Two broad families matter to callers: problems with the input data
(bad CSV, non-finite values, degenerate kernels) and problems arising
inside the numerics (inconsistent spectra, solver breakdown).  The CLI
maps them to distinct exit codes.
"""


class DataError(ValueError):
    """Invalid or degenerate input data."""


class DegenerateKernelError(DataError):
    """A Gram matrix diagonal entry is (numerically) zero, so the
    trace-one normalization is undefined."""


class NumericalError(RuntimeError):
    """A numerical routine produced an inconsistent or unusable result."""


class InconsistentSpectrumError(NumericalError):
    """Top eigenvalue estimates sum to more than one beyond tolerance."""


class InvalidEigenvalueError(NumericalError):
    """An eigenvalue estimate is negative beyond tolerance."""


class BreakdownError(NumericalError):
    """The Krylov iteration found an invariant subspace before producing
    the requested number of Ritz values."""


class GradientUndefinedError(NumericalError):
    """The entropy gradient is singular for the given spectrum and order."""
