"""Bitwise-reproducible wrappers for dense LAPACK decompositions.

Multi-threaded LAPACK reductions (syevd, gesdd) are not guaranteed to
produce bit-identical results across BLAS thread-count settings, which
would leak into seeded pipelines.  These wrappers pin the decomposition
to a single BLAS thread; level-3 matrix products elsewhere stay
parallel, so thread settings affect speed only, never values.
"""

import numpy as np
from threadpoolctl import threadpool_limits

from .errors import NumericalError


def eigvalsh(A):
    """Eigenvalues of a symmetric matrix, ascending, reproducibly."""
    try:
        with threadpool_limits(limits=1):
            return np.linalg.eigvalsh(A)
    except np.linalg.LinAlgError as exc:
        raise NumericalError(f"symmetric eigensolver failed: {exc}") from exc


def eigh(A):
    """Eigenvalues and eigenvectors of a symmetric matrix, reproducibly."""
    try:
        with threadpool_limits(limits=1):
            return np.linalg.eigh(A)
    except np.linalg.LinAlgError as exc:
        raise NumericalError(f"symmetric eigensolver failed: {exc}") from exc


def svdvals(A):
    """Singular values, descending, reproducibly."""
    try:
        with threadpool_limits(limits=1):
            return np.linalg.svd(A, compute_uv=False)
    except np.linalg.LinAlgError as exc:
        raise NumericalError(f"SVD failed: {exc}") from exc
