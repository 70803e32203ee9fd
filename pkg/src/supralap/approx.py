"""Approximation of supra-Laplacian eigenvectors by per-layer zero modes.

Each layer contributes one zero mode (its degree-weighted constant vector,
zero-padded to NT dimensions); the T modes have disjoint supports and form
an exactly orthonormal basis. For every eigenvector of the coupled
supra-Laplacian we record the least-squares residual against that basis;
the index where the residual jumps marks the transition from block-level to
within-layer structure.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

import numpy as np

from supralap import eigen
from supralap.errors import DimensionMismatchError
from supralap.graph import zero_mode
from supralap.supra import TemporalNetwork, supra_laplacian

__all__ = [
    "ApproxReport",
    "ZeroModeBasis",
    "detect_lambda_star",
    "error_profile",
    "project_residual",
    "zero_mode_basis",
]

DEFAULT_RATIO_THRESHOLD = 10.0
DEFAULT_ABS_FLOOR = 1e-3
DEGENERATE_TOL = 1e-9


@dataclass(frozen=True)
class ZeroModeBasis:
    """Orthonormal (NT, T) basis of zero-padded layer zero modes."""

    vectors: np.ndarray
    n_per_layer: int
    n_layers: int

    def __post_init__(self):
        self.vectors.flags.writeable = False


@dataclass(frozen=True)
class ApproxReport:
    """Residuals of the analyzed eigenvectors plus the detected jump.

    ``errors[i]`` is the residual of eigenvector i (ascending eigenvalue
    order, 0-based storage; reported indices are 1-based), ``coefficients``
    the per-layer projection coefficients, ``lambda_star_index`` the 1-based
    first index whose residual jumps (None when no jump occurs). ``config``
    echoes whatever generation parameters were known to the caller.
    """

    eigenvalues: np.ndarray
    errors: np.ndarray
    coefficients: np.ndarray
    lambda_star_index: int | None
    ratio_threshold: float
    abs_floor: float
    config: dict[str, Any] = field(default_factory=dict)


def zero_mode_basis(net: TemporalNetwork) -> ZeroModeBasis:
    """One column per layer: the layer's unit zero mode in its own block,
    zeros elsewhere. Disjoint supports make the columns exactly orthonormal."""
    n, t = net.n_nodes, net.n_layers
    vectors = np.zeros((n * t, t))
    for i, layer in enumerate(net.layers):
        vectors[i * n : (i + 1) * n, i] = zero_mode(layer)
    return ZeroModeBasis(vectors=vectors, n_per_layer=n, n_layers=t)


def project_residual(
    v: np.ndarray, basis: ZeroModeBasis
) -> tuple[np.ndarray, float]:
    """Best-approximation coefficients and residual norm for one vector.

    Because the basis is orthonormal the least-squares solution is the
    plain inner-product vector; the residual is computed explicitly as
    ||v - B a||.
    """
    v = np.asarray(v, dtype=np.float64)
    if v.shape != (basis.vectors.shape[0],):
        raise DimensionMismatchError(
            f"vector shape {v.shape} does not match basis {basis.vectors.shape}"
        )
    alpha = basis.vectors.T @ v
    epsilon = float(np.linalg.norm(v - basis.vectors @ alpha))
    return alpha, epsilon


def detect_lambda_star(
    errors: np.ndarray,
    ratio_threshold: float = DEFAULT_RATIO_THRESHOLD,
    abs_floor: float = DEFAULT_ABS_FLOOR,
) -> int | None:
    """1-based index of the first residual jump.

    A jump at i means errors[i] > max(ratio_threshold * errors[i-1],
    abs_floor); entries after the first jump cannot change the result.
    """
    errors = np.asarray(errors, dtype=np.float64)
    if errors.size == 0:
        raise ValueError("errors must be non-empty")
    for i in range(1, errors.size):
        if errors[i] > max(ratio_threshold * errors[i - 1], abs_floor):
            return i + 1
    return None


def _degenerate_groups(eigenvalues: np.ndarray, tol: float) -> list[tuple[int, int]]:
    """Half-open [start, stop) runs of eigenvalues chained by gaps < tol."""
    groups = []
    start = 0
    for i in range(1, eigenvalues.size):
        if eigenvalues[i] - eigenvalues[i - 1] >= tol:
            groups.append((start, i))
            start = i
    groups.append((start, eigenvalues.size))
    return groups


def error_profile(
    spectral: eigen.SpectralResult,
    basis: ZeroModeBasis,
    n_vectors: int,
    ratio_threshold: float = DEFAULT_RATIO_THRESHOLD,
    abs_floor: float = DEFAULT_ABS_FLOOR,
    config: dict[str, Any] | None = None,
) -> ApproxReport:
    """Residuals for the n_vectors smallest-eigenvalue eigenvectors.

    Eigenvectors whose eigenvalues coincide within 1e-9 are treated as one
    invariant subspace: they share the worst-case residual of the whole
    subspace (largest singular value of its projection defect), which keeps
    the jump detector stable under in-plane rotations of degenerate pairs.
    Per-vector projection coefficients are reported unchanged.
    """
    nt = basis.vectors.shape[0]
    if spectral.eigenvectors.shape[0] != nt:
        raise DimensionMismatchError("spectral result does not match the basis")
    if not 0 < n_vectors <= spectral.eigenvalues.size:
        raise DimensionMismatchError(
            f"need 1 <= n_vectors <= {spectral.eigenvalues.size}, got {n_vectors}"
        )
    errors = np.empty(n_vectors)
    for start, stop in _degenerate_groups(spectral.eigenvalues, DEGENERATE_TOL):
        if start >= n_vectors:
            break
        block = spectral.eigenvectors[:, start:stop]
        defect = block - basis.vectors @ (basis.vectors.T @ block)
        if stop - start == 1:
            eps = float(np.linalg.norm(defect))
        else:
            eps = float(np.linalg.svd(defect, compute_uv=False)[0])
        errors[start : min(stop, n_vectors)] = eps
    coefficients = (basis.vectors.T @ spectral.eigenvectors[:, :n_vectors]).T
    star = detect_lambda_star(errors, ratio_threshold, abs_floor)
    return ApproxReport(
        eigenvalues=spectral.eigenvalues[:n_vectors].copy(),
        errors=errors,
        coefficients=coefficients,
        lambda_star_index=star,
        ratio_threshold=float(ratio_threshold),
        abs_floor=float(abs_floor),
        config=dict(config or {}),
    )


def supra_error_profile(
    net: TemporalNetwork,
    n_vectors: int,
    ratio_threshold: float = DEFAULT_RATIO_THRESHOLD,
    abs_floor: float = DEFAULT_ABS_FLOOR,
    config: dict[str, Any] | None = None,
    backend: str | None = None,
) -> ApproxReport:
    """Dense-solve the supra-Laplacian of ``net`` and run `error_profile`."""
    spectral = eigen.eigh(supra_laplacian(net).entries, backend=backend)
    return error_profile(
        spectral,
        zero_mode_basis(net),
        n_vectors=min(n_vectors, spectral.eigenvalues.size),
        ratio_threshold=ratio_threshold,
        abs_floor=abs_floor,
        config=config,
    )
