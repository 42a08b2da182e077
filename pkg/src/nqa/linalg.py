"""Dense real kernels and the symmetric eigensolver used as the spectral oracle.

Dense matrices and state vectors are plain float64 numpy arrays; the thin
wrappers here add the shape checking the rest of the package relies on.
The eigensolver is a hand-written cyclic Jacobi iteration (no library
eigensolver is used anywhere in the package), so spectra reported by the
algorithm and correlation modules rest on nothing beyond matrix products
and plane rotations.
"""

from __future__ import annotations

import numpy as np

from .errors import DimensionError, NumericError

__all__ = [
    "MAX_EIG_DIM",
    "mat_mul",
    "mat_transpose",
    "mat_vec",
    "max_norm",
    "sym_eigenvalues",
    "determinant",
]

MAX_EIG_DIM = 4096
_MAX_SWEEPS = 100


def _as_square(a) -> np.ndarray:
    m = np.asarray(a, dtype=np.float64)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DimensionError(f"expected a square matrix, got shape {m.shape}")
    return m


def mat_mul(a, b) -> np.ndarray:
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    if a.ndim != 2 or b.ndim != 2 or a.shape[1] != b.shape[0]:
        raise DimensionError(f"cannot multiply shapes {a.shape} and {b.shape}")
    return a @ b


def mat_transpose(a) -> np.ndarray:
    return np.asarray(a, dtype=np.float64).T.copy()


def mat_vec(a, v) -> np.ndarray:
    a = np.asarray(a, dtype=np.float64)
    v = np.asarray(v, dtype=np.float64)
    if a.ndim != 2 or v.ndim != 1 or a.shape[1] != v.shape[0]:
        raise DimensionError(f"cannot apply shape {a.shape} to vector of length {v.shape}")
    return a @ v


def max_norm(a) -> float:
    """Largest absolute entry; call as max_norm(a - b) for comparisons."""
    a = np.asarray(a, dtype=np.float64)
    return float(np.max(np.abs(a))) if a.size else 0.0


def sym_eigenvalues(a, tol: float = 1e-12) -> np.ndarray:
    """Eigenvalues of a symmetric matrix, ascending, by cyclic Jacobi rotations.

    Sweeps rotate every (p, q) plane in turn until the off-diagonal
    Frobenius mass drops below tol * max(1, ||A||_F).  Non-symmetric input
    and failure to converge within the sweep limit are hard errors.
    """
    work = _as_square(a)
    n = work.shape[0]
    if n > MAX_EIG_DIM:
        raise DimensionError(f"eigensolver capped at n <= {MAX_EIG_DIM}, got n={n}")
    scale = max(1.0, max_norm(work))
    if max_norm(work - work.T) > tol * scale:
        raise NumericError("sym_eigenvalues needs a symmetric matrix")
    if n == 1:
        return work.diagonal().copy()

    work = (work + work.T) / 2.0
    total = float(np.sqrt(np.sum(work * work)))
    threshold = tol * max(1.0, total)
    for _ in range(_MAX_SWEEPS):
        off = float(np.sqrt(max(np.sum(work * work) - np.sum(work.diagonal() ** 2), 0.0)))
        if off <= threshold:
            return np.sort(work.diagonal())
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = work[p, q]
                if apq == 0.0:
                    continue
                tau = (work[q, q] - work[p, p]) / (2.0 * apq)
                if tau >= 0.0:
                    t = 1.0 / (tau + np.sqrt(tau * tau + 1.0))
                else:
                    t = -1.0 / (-tau + np.sqrt(tau * tau + 1.0))
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                col_p = work[:, p].copy()
                col_q = work[:, q].copy()
                work[:, p] = c * col_p - s * col_q
                work[:, q] = s * col_p + c * col_q
                row_p = work[p, :].copy()
                row_q = work[q, :].copy()
                work[p, :] = c * row_p - s * row_q
                work[q, :] = s * row_p + c * row_q
                work[p, q] = 0.0
                work[q, p] = 0.0
    raise NumericError(f"Jacobi iteration did not converge in {_MAX_SWEEPS} sweeps")


def determinant(a) -> float:
    """Determinant by LU with partial pivoting (intended for small n)."""
    lu = _as_square(a).copy()
    n = lu.shape[0]
    det = 1.0
    for k in range(n):
        pivot = k + int(np.argmax(np.abs(lu[k:, k])))
        if lu[pivot, k] == 0.0:
            return 0.0
        if pivot != k:
            lu[[k, pivot], :] = lu[[pivot, k], :]
            det = -det
        det *= lu[k, k]
        lu[k + 1 :, k:] -= np.outer(lu[k + 1 :, k] / lu[k, k], lu[k, k:])
    return float(det)
