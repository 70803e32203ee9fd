"""Spectra of the periodic constant-block model via per-frequency reduction.

The periodic block-tridiagonal supra-Laplacian block-diagonalizes under a
discrete Fourier transform across layers: for each frequency k the N x N
matrix ``diag_block + 2 cos(2 pi k / T) * coupling`` carries one slice of the
spectrum, and the union over k = 0..T-1 reproduces the full NT-point
spectrum with multiplicities. Reduced eigenvectors lift back to NT
dimensions as cosine/sine block profiles.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from supralap import eigen
from supralap.errors import (
    BadDimensionError,
    BadLengthError,
    IndexOutOfRangeError,
)
from supralap.supra import ConstantModelBlocks

__all__ = [
    "LiftedEigenpair",
    "MergedSpectrum",
    "ReducedBlock",
    "block_cosine",
    "dft_blocks",
    "eigenvalue_table",
    "full_spectrum",
    "inverse_dft_blocks",
    "lift_eigenvector",
    "reduced_matrix",
]


def block_cosine(k: int, n_layers: int) -> float:
    """cos(2 pi k / T), evaluated at min(k, T-k) so that the frequencies k
    and T-k produce bitwise-identical reduced matrices."""
    return math.cos(2.0 * math.pi * min(k, n_layers - k) / n_layers)


@dataclass(frozen=True)
class ReducedBlock:
    """One N x N frequency block of the periodic constant-block model."""

    k: int
    matrix: np.ndarray
    cosine: float

    def __post_init__(self):
        self.matrix.flags.writeable = False


@dataclass(frozen=True)
class MergedSpectrum:
    """Union of the reduced spectra, globally sorted ascending.

    Entry i keeps its source frequency ``block_indices[i]`` and its
    N-dimensional reduced eigenvector ``vectors[:, i]``. Ties in eigenvalue
    are ordered by frequency, so the output is deterministic.
    """

    eigenvalues: np.ndarray
    block_indices: np.ndarray
    vectors: np.ndarray
    n_per_layer: int
    n_layers: int

    def __post_init__(self):
        self.eigenvalues.flags.writeable = False
        self.block_indices.flags.writeable = False
        self.vectors.flags.writeable = False


@dataclass(frozen=True)
class LiftedEigenpair:
    """NT-dimensional eigenvector(s) lifted from a reduced eigenpair.

    ``psi_r`` carries the cosine block profile and is always present;
    ``psi_i`` carries the sine profile and is absent exactly when the sine
    vanishes identically (k = 0, or k = T/2 for even T).
    """

    eigenvalue: float
    k: int
    psi_r: np.ndarray
    psi_i: np.ndarray | None

    def __post_init__(self):
        self.psi_r.flags.writeable = False
        if self.psi_i is not None:
            self.psi_i.flags.writeable = False


def reduced_matrix(blocks: ConstantModelBlocks, k: int) -> ReducedBlock:
    """diag_block + 2 cos(2 pi k / T) * coupling, for 0 <= k <= T-1."""
    t = blocks.n_layers
    if not 0 <= k <= t - 1:
        raise IndexOutOfRangeError(f"frequency {k} outside 0..{t - 1}")
    cosine = block_cosine(k, t)
    matrix = blocks.diag_block.copy()
    step = matrix.shape[0] + 1
    matrix.ravel()[::step] += 2.0 * cosine * blocks.offdiag_entries
    return ReducedBlock(k=int(k), matrix=matrix, cosine=cosine)


def full_spectrum(
    blocks: ConstantModelBlocks, backend: str | None = None
) -> MergedSpectrum:
    """Solve all T reduced blocks and merge their spectra.

    The merged multiset equals the spectrum of the expanded NT x NT matrix;
    entries are sorted by (eigenvalue, frequency). The per-frequency solves
    are independent and the merge does not depend on their order.
    """
    n, t = blocks.n_per_layer, blocks.n_layers
    eigenvalues = np.empty(n * t)
    block_indices = np.empty(n * t, dtype=np.int64)
    vectors = np.empty((n, n * t))
    for k in range(t):
        sr = eigen.eigh(reduced_matrix(blocks, k).matrix, backend=backend)
        sl = slice(k * n, (k + 1) * n)
        eigenvalues[sl] = sr.eigenvalues
        block_indices[sl] = k
        vectors[:, sl] = sr.eigenvectors
    order = np.lexsort((block_indices, eigenvalues))
    return MergedSpectrum(
        eigenvalues=eigenvalues[order],
        block_indices=block_indices[order],
        vectors=np.ascontiguousarray(vectors[:, order]),
        n_per_layer=n,
        n_layers=t,
    )


def lift_eigenvector(
    v: np.ndarray, eigenvalue: float, k: int, n_layers: int
) -> LiftedEigenpair:
    """Lift a reduced eigenvector to NT dimensions as block sinusoids.

    Block j of the cosine lift is cos(2 pi j k / T) * v, of the sine lift
    sin(2 pi j k / T) * v; each is normalized to unit length after assembly.
    Both satisfy the full eigenvalue equation of the expanded matrix.
    """
    v = np.asarray(v, dtype=np.float64)
    t = int(n_layers)
    if not 0 <= k <= t - 1:
        raise IndexOutOfRangeError(f"frequency {k} outside 0..{t - 1}")
    angles = 2.0 * np.pi * np.arange(t) * k / t
    psi_r = (np.cos(angles)[:, None] * v[None, :]).ravel()
    psi_r /= np.linalg.norm(psi_r)
    sine_vanishes = k == 0 or (t % 2 == 0 and k == t // 2)
    if sine_vanishes:
        psi_i = None
    else:
        psi_i = (np.sin(angles)[:, None] * v[None, :]).ravel()
        psi_i /= np.linalg.norm(psi_i)
    return LiftedEigenpair(eigenvalue=float(eigenvalue), k=int(k), psi_r=psi_r, psi_i=psi_i)


def dft_blocks(psi: np.ndarray, n_layers: int) -> np.ndarray:
    """Blockwise DFT: row k is sum_j exp(-2 pi i j k / T) * psi_block_j.

    Returns a complex (T, N) array. The naive O(T^2 N) transform is exact
    enough and T stays small here.
    """
    psi = np.asarray(psi)
    t = int(n_layers)
    if t < 1 or psi.ndim != 1 or psi.size % t != 0:
        raise BadLengthError(f"vector of length {psi.size} is not {t} blocks")
    n = psi.size // t
    j = np.arange(t)
    phases = np.exp(-2j * np.pi * np.outer(j, j) / t)
    return phases @ psi.reshape(t, n)


def inverse_dft_blocks(hat: np.ndarray) -> np.ndarray:
    """Invert `dft_blocks`: block j is (1/T) sum_k exp(2 pi i j k / T) hat_k."""
    hat = np.asarray(hat)
    if hat.ndim != 2:
        raise BadLengthError("expected a (T, N) array of frequency blocks")
    t = hat.shape[0]
    j = np.arange(t)
    phases = np.exp(2j * np.pi * np.outer(j, j) / t)
    return (phases @ hat).ravel() / t


def eigenvalue_table(
    blocks: ConstantModelBlocks, n_smallest: int, backend: str | None = None
) -> np.ndarray:
    """(m, T) table whose column k holds the m smallest eigenvalues of the
    frequency-k reduced block, ascending."""
    n, t = blocks.n_per_layer, blocks.n_layers
    if not 0 <= n_smallest <= n:
        raise BadDimensionError(f"need 0 <= m <= {n}, got {n_smallest}")
    table = np.empty((n_smallest, t))
    for k in range(t):
        sr = eigen.eigh(reduced_matrix(blocks, k).matrix, backend=backend)
        table[:, k] = sr.eigenvalues[:n_smallest]
    return table
