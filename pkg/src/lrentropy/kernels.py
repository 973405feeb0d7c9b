"""Gram matrix construction and trace-one normalization.

All entropy computations in this package consume an n x n symmetric
positive semi-definite matrix with unit trace and diagonal entries equal
to 1/n (the "normalized kernel matrix").  This module builds raw Gram
matrices from data, normalizes them, and forms the Hadamard-product
joints used by the multivariate information measures.

Everything operates on plain float64 numpy arrays; matrices are never
modified in place.
"""

import csv

import numpy as np

from .errors import DataError, DegenerateKernelError

# Relative tolerance for symmetry / trace checks on normalized kernels.
KERNEL_TOL = 1e-12
# Tolerance on the smallest eigenvalue of a numerically PSD matrix.
PSD_TOL = 1e-10
# A Gram diagonal at or below this is treated as an exact zero.
DIAG_TOL = 1e-300


def validate_data(X, labels=None):
    """Validate a sample matrix and optional label vector.

    X must be n x d with n >= 2, d >= 1, all entries finite.  Labels,
    when given, must be length-n non-negative integers.  Returns the
    validated (X, labels) pair as float64 / int64 arrays.
    """
    X = np.asarray(X, dtype=np.float64)
    if X.ndim != 2:
        raise DataError(f"expected a 2-d sample matrix, got shape {X.shape}")
    n, d = X.shape
    if n < 2:
        raise DataError(f"need at least 2 samples, got {n}")
    if d < 1:
        raise DataError("need at least 1 feature column")
    finite = np.isfinite(X).all(axis=1)
    if not finite.all():
        bad = int(np.flatnonzero(~finite)[0])
        raise DataError(f"non-finite value in sample row {bad}")
    if labels is not None:
        labels = np.asarray(labels)
        if labels.shape != (n,):
            raise DataError(
                f"label vector has length {labels.shape}, expected ({n},)")
        as_int = np.asarray(labels, dtype=np.int64)
        if not np.array_equal(np.asarray(labels, dtype=np.float64), as_int):
            raise DataError("labels must be integer class ids")
        if (as_int < 0).any():
            raise DataError("labels must be >= 0")
        labels = as_int
    return X, labels


def gaussian_gram(X, columns=None, sigma=1.0):
    """Raw Gaussian (RBF) Gram matrix K_ij = exp(-||x_i - x_j||^2 / (2 sigma^2)).

    Parameters
    ----------
    X : (n, d) array of samples, one per row.
    columns : optional sequence of column indices; distances are taken
        over this feature subset only.
    sigma : kernel width, > 0.
    """
    if sigma <= 0:
        raise ValueError(f"sigma must be positive, got {sigma}")
    X, _ = validate_data(X)
    if columns is not None:
        columns = np.atleast_1d(np.asarray(columns, dtype=np.intp))
        if columns.size == 0:
            raise ValueError("column subset must be nonempty")
        X = X[:, columns]
    # Expanded form ||x||^2 + ||y||^2 - 2<x,y>; clamp the tiny negatives
    # it produces for near-identical rows.
    sq = np.einsum("ij,ij->i", X, X)
    d2 = sq[:, None] + sq[None, :] - 2.0 * (X @ X.T)
    np.maximum(d2, 0.0, out=d2)
    K = np.exp(-d2 / (2.0 * sigma * sigma))
    np.fill_diagonal(K, 1.0)
    return K


def linear_gram(X):
    """Raw linear Gram matrix K_ij = <x_i, x_j>."""
    X, _ = validate_data(X)
    return X @ X.T


def delta_gram(labels):
    """Kronecker-delta Gram matrix on a discrete vector: K_ij = [u_i == u_j]."""
    u = np.asarray(labels)
    if u.ndim != 1 or u.shape[0] < 2:
        raise DataError("delta kernel needs a vector of at least 2 values")
    return (u[:, None] == u[None, :]).astype(np.float64)


def normalize(K):
    """Trace-one normalization A_ij = (1/n) K_ij / sqrt(K_ii K_jj).

    The result is symmetrized by averaging with its transpose, has unit
    trace, diagonal exactly 1/n, and is PSD whenever K is.  A diagonal
    entry of K at (numerical) zero makes the normalization undefined and
    raises DegenerateKernelError.
    """
    K = np.asarray(K, dtype=np.float64)
    if K.ndim != 2 or K.shape[0] != K.shape[1]:
        raise DataError(f"Gram matrix must be square, got shape {K.shape}")
    n = K.shape[0]
    diag = np.diag(K).copy()
    small = diag <= DIAG_TOL
    if small.any():
        bad = int(np.flatnonzero(small)[0])
        raise DegenerateKernelError(
            f"Gram diagonal entry {bad} is {diag[bad]:.3g}; "
            "cannot normalize a degenerate kernel")
    d = np.sqrt(diag)
    A = K / np.outer(d, d)
    A = (A + A.T) / (2.0 * n)
    # The cosine normalization makes the diagonal exactly one before the
    # 1/n scaling; re-pin it to absorb sqrt rounding.
    np.fill_diagonal(A, 1.0 / n)
    return A


def hadamard_joint(mats):
    """Entrywise product of normalized kernels, renormalized to unit trace.

    All inputs must share the dimension n.  The product of L trace-one
    kernels has diagonal n^(1-L)/n, so the renormalization restores the
    diagonal to exactly 1/n; PSD-ness is preserved by the Schur product
    theorem.
    """
    mats = list(mats)
    if len(mats) < 2:
        raise ValueError("need at least two kernels to form a joint")
    n = np.asarray(mats[0]).shape[0]
    out = np.asarray(mats[0], dtype=np.float64).copy()
    for M in mats[1:]:
        M = np.asarray(M, dtype=np.float64)
        if M.shape != (n, n):
            raise ValueError(
                f"kernel dimension mismatch: {M.shape} vs ({n}, {n})")
        out *= M
    tr = np.trace(out)
    if tr <= 0:
        raise DegenerateKernelError("Hadamard joint has non-positive trace")
    out /= tr
    # Inputs with constant diagonal (every proper normalized kernel) give
    # the joint a diagonal of exactly 1/n after renormalization; re-pin it
    # when that holds, but leave relaxed trace-one inputs untouched.
    if np.abs(np.diag(out) * n - 1.0).max() <= 1e-9:
        np.fill_diagonal(out, 1.0 / n)
    return (out + out.T) / 2.0


def validate_kernel(A, unit_diag=True):
    """Check the normalized-kernel invariants; raise DataError on failure.

    Verifies symmetry (1e-12 relative), unit trace (1e-12), diagonal
    1/n (when unit_diag), and numerical PSD-ness (smallest eigenvalue
    >= -1e-10).  Returns A unchanged so calls can be chained.
    """
    A = np.asarray(A, dtype=np.float64)
    n = A.shape[0]
    scale = max(1.0, float(np.abs(A).max()))
    if np.abs(A - A.T).max() > KERNEL_TOL * scale:
        raise DataError("kernel matrix is not symmetric")
    if abs(np.trace(A) - 1.0) > KERNEL_TOL * n:
        raise DataError(f"kernel trace is {np.trace(A)!r}, expected 1")
    if unit_diag and np.abs(np.diag(A) - 1.0 / n).max() > KERNEL_TOL:
        raise DataError("kernel diagonal deviates from 1/n")
    lo = float(np.linalg.eigvalsh(A)[0])
    if lo < -PSD_TOL:
        raise DataError(f"kernel smallest eigenvalue {lo:.3g} < -{PSD_TOL}")
    return A


def load_csv(path, label=None, header=False):
    """Load a sample matrix (and optional label column) from a CSV file.

    One sample per row, comma-separated, '.' decimal; a header row is
    consumed when header=True.  The label column may be selected by name
    (requires a header) or by integer index; remaining columns are parsed
    as float64 features.

    Returns (X, labels, feature_names); labels is None when no label
    column was requested, and feature_names is a list of column names
    (synthesized as c0, c1, ... without a header).
    """
    with open(path, newline="", encoding="utf-8") as fh:
        rows = [r for r in csv.reader(fh) if r]
    if not rows:
        raise DataError(f"{path}: empty file")
    if header:
        names = [c.strip() for c in rows[0]]
        rows = rows[1:]
    else:
        names = [f"c{i}" for i in range(len(rows[0]))]
    if not rows:
        raise DataError(f"{path}: no data rows")
    ncol = len(names)

    label_idx = None
    if label is not None:
        if isinstance(label, str) and not label.lstrip("-").isdigit():
            if label not in names:
                raise DataError(f"{path}: no column named {label!r}")
            label_idx = names.index(label)
        else:
            label_idx = int(label)
            if not -ncol <= label_idx < ncol:
                raise DataError(f"{path}: label index {label_idx} out of range")
            label_idx %= ncol

    data = np.empty((len(rows), ncol), dtype=np.float64)
    for i, row in enumerate(rows):
        if len(row) != ncol:
            raise DataError(
                f"{path}: row {i} has {len(row)} fields, expected {ncol}")
        try:
            data[i] = [float(v) for v in row]
        except ValueError as exc:
            raise DataError(f"{path}: row {i}: {exc}") from exc

    if label_idx is None:
        X, y = data, None
        feat_names = names
    else:
        keep = [j for j in range(ncol) if j != label_idx]
        if not keep:
            raise DataError(f"{path}: no feature columns besides the label")
        X = data[:, keep]
        yf = data[:, label_idx]
        if not np.isfinite(yf).all() or not np.array_equal(yf, np.round(yf)):
            raise DataError(f"{path}: label column must hold integers")
        y = np.asarray(np.round(yf), dtype=np.int64)
        if (y < 0).any():
            raise DataError(f"{path}: labels must be >= 0")
        feat_names = [names[j] for j in keep]
    X, y = validate_data(X, y)
    return X, y, feat_names
