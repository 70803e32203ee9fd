"""Dense real-symmetric eigendecomposition.

One solver serves two roles: production solver for the reduced per-frequency
blocks and brute-force oracle for full supra-Laplacians. The heavy kernels
live in the compiled extension `supralap._eigencore` when it was built, with
`supralap._eigenpure` as a drop-in NumPy fallback; selection happens at
import and can be forced with the SUPRALAP_BACKEND environment variable
("compiled" or "python").

Output is deterministic: fixed iteration order, ascending eigenvalues, and a
repo-wide sign convention (largest-magnitude component of each eigenvector
is positive, ties to the lowest index).
"""

from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np

from supralap.errors import (
    DimensionMismatchError,
    NoConvergenceError,
    NotSymmetricError,
)
from supralap import _eigenpure

try:
    from supralap import _eigencore
except ImportError:  # extension not built; pure fallback only
    _eigencore = None

__all__ = [
    "SpectralResult",
    "available_backends",
    "default_backend",
    "eig_residual",
    "eigh",
    "fix_signs",
    "MAX_SWEEPS",
    "SYM_ATOL",
]

MAX_SWEEPS = 64
SYM_ATOL = 1e-12


def available_backends() -> tuple[str, ...]:
    return ("compiled", "python") if _eigencore is not None else ("python",)


def default_backend() -> str:
    forced = os.environ.get("SUPRALAP_BACKEND")
    if forced:
        if forced not in ("compiled", "python"):
            raise ValueError(f"unknown SUPRALAP_BACKEND {forced!r}")
        if forced == "compiled" and _eigencore is None:
            raise ImportError("compiled eigensolver requested but not built")
        return forced
    return "compiled" if _eigencore is not None else "python"


def _kernel(backend: str | None):
    name = backend if backend is not None else default_backend()
    if name == "compiled":
        if _eigencore is None:
            raise ImportError("compiled eigensolver backend is not available")
        return _eigencore
    if name == "python":
        return _eigenpure
    raise ValueError(f"unknown backend {name!r}")


@dataclass(frozen=True)
class SpectralResult:
    """Eigenvalues (ascending) with orthonormal eigenvector columns.

    ``provenance`` records how the decomposition was obtained: "dense" for a
    direct solve, "reduced" for a per-frequency block (with ``block_index``
    set to the frequency).
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    provenance: str = "dense"
    block_index: int | None = None

    def __post_init__(self):
        self.eigenvalues.flags.writeable = False
        self.eigenvectors.flags.writeable = False


def fix_signs(vectors: np.ndarray) -> np.ndarray:
    """Flip columns so each one's largest-magnitude entry is positive.

    Ties in magnitude resolve to the lowest row index (argmax convention),
    making golden-file comparisons deterministic.
    """
    if vectors.size == 0:
        return vectors
    rows = np.argmax(np.abs(vectors), axis=0)
    signs = np.sign(vectors[rows, np.arange(vectors.shape[1])])
    signs[signs == 0.0] = 1.0
    return vectors * signs


def _order_exact_ties(eigenvalues: np.ndarray, vectors: np.ndarray) -> None:
    """Within runs of bit-equal eigenvalues, order columns by the value of
    their first nonzero component (ascending). In-place on ``vectors``."""
    n = eigenvalues.size
    i = 0
    while i < n:
        j = i + 1
        while j < n and eigenvalues[j] == eigenvalues[i]:
            j += 1
        if j - i > 1:
            keys = np.empty(j - i)
            for c in range(i, j):
                col = vectors[:, c]
                nz = np.flatnonzero(col)
                keys[c - i] = col[nz[0]] if nz.size else 0.0
            order = np.argsort(keys, kind="stable")
            vectors[:, i:j] = vectors[:, i + order]
        i = j


def eigh(m: np.ndarray, backend: str | None = None) -> SpectralResult:
    """Full eigendecomposition of a symmetric matrix.

    Raises NotSymmetricError when max|M - M^T| exceeds 1e-12 and
    NoConvergenceError when the QL iteration exceeds 64 sweeps for some
    eigenvalue. The input is symmetrized as (M + M^T)/2 before the solve.
    """
    m = np.asarray(m, dtype=np.float64)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DimensionMismatchError(f"expected a square matrix, got {m.shape}")
    if m.size and np.abs(m - m.T).max() > SYM_ATOL:
        raise NotSymmetricError(
            f"matrix of order {m.shape[0]} is not symmetric within {SYM_ATOL}"
        )
    sym = (m + m.T) / 2.0
    d, v, status = _kernel(backend).decompose(sym, MAX_SWEEPS)
    if status != 0:
        raise NoConvergenceError(order=m.shape[0], cap=MAX_SWEEPS)
    order = np.argsort(d, kind="stable")
    eigenvalues = np.ascontiguousarray(d[order])
    vectors = fix_signs(np.ascontiguousarray(v[:, order]))
    _order_exact_ties(eigenvalues, vectors)
    return SpectralResult(eigenvalues=eigenvalues, eigenvectors=vectors)


def eig_residual(m: np.ndarray, result: SpectralResult) -> float:
    """max_i ||M v_i - lambda_i v_i||, the acceptance-suite residual."""
    m = np.asarray(m, dtype=np.float64)
    v = result.eigenvectors
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] != v.shape[0]:
        raise DimensionMismatchError(
            f"matrix {m.shape} does not match eigenvectors {v.shape}"
        )
    if result.eigenvalues.size != v.shape[1]:
        raise DimensionMismatchError("eigenvalue/eigenvector count mismatch")
    residuals = m @ v - v * result.eigenvalues[None, :]
    if residuals.size == 0:
        return 0.0
    return float(np.linalg.norm(residuals, axis=0).max())
