"""Temporal networks and their supra-matrices.

A temporal network is an ordered sequence of layers on a common node set,
coupled node-to-node between consecutive layers (and between the last and
first layer under periodic coupling). This module assembles the dense
supra-adjacency and normalized supra-Laplacian, plus the closed-form blocks
of the periodic constant-block model (identical layers, uniform coupling
weight), whose expansion is a block-tridiagonal matrix with wrap-around
corners.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from supralap.errors import (
    BadDimensionError,
    DimensionMismatchError,
    ZeroDegreeError,
)
from supralap.graph import LayerGraph, degree_vector

__all__ = [
    "PATH",
    "PERIODIC",
    "ConstantModelBlocks",
    "InterLayerWeights",
    "SupraMatrix",
    "TemporalNetwork",
    "assemble_supra_adjacency",
    "constant_model_blocks",
    "expand_constant_model",
    "supra_degree",
    "supra_laplacian",
]

PATH = "path"
PERIODIC = "periodic"


@dataclass(frozen=True)
class InterLayerWeights:
    """Non-negative coupling weights between consecutive layers.

    Uniform mode applies one weight everywhere; per-node mode carries a
    (n_pairs, N) table whose row p holds the weights on the coupling between
    layers p and p+1 (row T-1 is the wrap-around pair under periodic
    coupling). Weights for non-consecutive layer pairs do not exist.
    """

    coupling: str
    omega: float | None = None
    table: np.ndarray | None = None

    def __post_init__(self):
        if self.coupling not in (PATH, PERIODIC):
            raise ValueError(f"coupling must be {PATH!r} or {PERIODIC!r}")
        if (self.omega is None) == (self.table is None):
            raise ValueError("exactly one of omega/table must be given")
        if self.omega is not None and self.omega < 0:
            raise ValueError("inter-layer weight must be >= 0")
        if self.table is not None:
            table = np.array(self.table, dtype=float)
            if table.ndim != 2:
                raise ValueError("per-node weight table must be 2-D")
            if (table < 0).any():
                raise ValueError("inter-layer weights must be >= 0")
            table.flags.writeable = False
            object.__setattr__(self, "table", table)

    @classmethod
    def uniform(cls, omega: float, coupling: str = PATH) -> "InterLayerWeights":
        return cls(coupling=coupling, omega=float(omega))

    @classmethod
    def per_node(cls, table: np.ndarray, coupling: str = PATH) -> "InterLayerWeights":
        return cls(coupling=coupling, table=table)

    @property
    def is_uniform(self) -> bool:
        return self.omega is not None

    def n_pairs(self, n_layers: int) -> int:
        return n_layers if self.coupling == PERIODIC else n_layers - 1

    def pair_values(self, pair: int, n_nodes: int, n_layers: int) -> np.ndarray:
        """Weights on the coupling between layers ``pair`` and ``pair+1 mod T``."""
        if not 0 <= pair < self.n_pairs(n_layers):
            raise IndexError(f"pair index {pair} out of range")
        if self.omega is not None:
            return np.full(n_nodes, self.omega)
        return np.asarray(self.table)[pair]


@dataclass(frozen=True)
class TemporalNetwork:
    """Ordered layers on a fixed node set plus inter-layer weights."""

    layers: tuple[LayerGraph, ...]
    weights: InterLayerWeights

    def __post_init__(self):
        layers = tuple(self.layers)
        object.__setattr__(self, "layers", layers)
        if len(layers) < 2:
            raise ValueError("a temporal network needs at least 2 layers")
        if self.weights.coupling == PERIODIC and len(layers) < 3:
            # With T = 2 both neighbours of a layer coincide and the wrap
            # weight would be double-counted; rejected outright.
            raise ValueError("periodic coupling needs at least 3 layers")
        n = layers[0].n_nodes
        if any(g.n_nodes != n for g in layers):
            raise DimensionMismatchError("all layers must share the node count")
        if self.weights.table is not None:
            expect = (self.weights.n_pairs(len(layers)), n)
            if self.weights.table.shape != expect:
                raise DimensionMismatchError(
                    f"weight table shape {self.weights.table.shape} != {expect}"
                )

    @property
    def n_nodes(self) -> int:
        return self.layers[0].n_nodes

    @property
    def n_layers(self) -> int:
        return len(self.layers)


@dataclass(frozen=True)
class SupraMatrix:
    """Dense symmetric NT x NT matrix with its block geometry."""

    entries: np.ndarray
    n_per_layer: int
    n_layers: int
    kind: str  # "adjacency" | "laplacian"

    def __post_init__(self):
        self.entries.flags.writeable = False

    @property
    def order(self) -> int:
        return self.n_per_layer * self.n_layers


@dataclass(frozen=True)
class ConstantModelBlocks:
    """N x N blocks of the periodic constant-block supra-Laplacian.

    ``diag_block`` sits on the block diagonal; ``offdiag_entries`` is the
    diagonal of the (diagonal) coupling block on the first off-diagonals and
    the two wrap-around corners. Entries are -omega / (degree + 2 omega),
    hence always <= 0.
    """

    diag_block: np.ndarray
    offdiag_entries: np.ndarray
    omega: float
    n_layers: int

    def __post_init__(self):
        self.diag_block.flags.writeable = False
        self.offdiag_entries.flags.writeable = False

    @property
    def n_per_layer(self) -> int:
        return self.offdiag_entries.shape[0]


def _pair_blocks(net: TemporalNetwork) -> list[tuple[int, int, np.ndarray]]:
    """(layer, next layer, weights) for every coupled consecutive pair."""
    n, t = net.n_nodes, net.n_layers
    return [
        (p, (p + 1) % t, net.weights.pair_values(p, n, t))
        for p in range(net.weights.n_pairs(t))
    ]


def assemble_supra_adjacency(net: TemporalNetwork) -> SupraMatrix:
    """Stack layer adjacencies on the block diagonal and put diagonal weight
    blocks on every coupled pair of consecutive layers."""
    n, t = net.n_nodes, net.n_layers
    entries = np.zeros((n * t, n * t))
    for i, layer in enumerate(net.layers):
        sl = slice(i * n, (i + 1) * n)
        entries[sl, sl] = layer.adjacency
    for a, b, w in _pair_blocks(net):
        ra = np.arange(a * n, (a + 1) * n)
        rb = np.arange(b * n, (b + 1) * n)
        entries[ra, rb] = w
        entries[rb, ra] = w
    return SupraMatrix(entries=entries, n_per_layer=n, n_layers=t, kind="adjacency")


def supra_degree(net: TemporalNetwork) -> np.ndarray:
    """Multilayer degrees: within-layer degree plus incident coupling
    weights, layer-major order (the diagonal of the supra degree matrix)."""
    n, t = net.n_nodes, net.n_layers
    degrees = np.concatenate([degree_vector(g) for g in net.layers])
    for a, b, w in _pair_blocks(net):
        degrees[a * n : (a + 1) * n] += w
        degrees[b * n : (b + 1) * n] += w
    return degrees


def supra_laplacian(net: TemporalNetwork) -> SupraMatrix:
    """Normalized supra-Laplacian I - S^{-1/2} A S^{-1/2} with S the
    multilayer degree matrix. Raises ZeroDegreeError if any multilayer
    degree vanishes."""
    adjacency = assemble_supra_adjacency(net).entries
    degrees = supra_degree(net)
    if (degrees == 0).any():
        raise ZeroDegreeError("supra-Laplacian needs every multilayer degree > 0")
    inv_sqrt = 1.0 / np.sqrt(degrees)
    lap = -(inv_sqrt[:, None] * adjacency * inv_sqrt[None, :])
    np.fill_diagonal(lap, 1.0)
    lap = (lap + lap.T) / 2.0
    return SupraMatrix(
        entries=lap, n_per_layer=net.n_nodes, n_layers=net.n_layers, kind="laplacian"
    )


def constant_model_blocks(
    layer: LayerGraph, omega: float, n_layers: int
) -> ConstantModelBlocks:
    """Closed-form blocks for identical layers with uniform weight omega.

    Diagonal block: I - (D + 2wI)^{-1/2} A (D + 2wI)^{-1/2}; off-diagonal
    coupling block: -w (D + 2wI)^{-1}, stored as its diagonal.
    """
    if omega < 0:
        raise ValueError("inter-layer weight must be >= 0")
    if n_layers < 3:
        raise BadDimensionError("the periodic constant model needs >= 3 layers")
    deg = degree_vector(layer)
    shifted = deg + 2.0 * omega
    if (shifted == 0).any():
        raise ZeroDegreeError("every shifted degree must be > 0")
    inv_sqrt = 1.0 / np.sqrt(shifted)
    diag_block = -(inv_sqrt[:, None] * layer.adjacency * inv_sqrt[None, :])
    np.fill_diagonal(diag_block, 1.0)
    offdiag = -omega / shifted
    return ConstantModelBlocks(
        diag_block=diag_block,
        offdiag_entries=offdiag,
        omega=float(omega),
        n_layers=int(n_layers),
    )


def expand_constant_model(blocks: ConstantModelBlocks, n_layers: int) -> SupraMatrix:
    """Expand the blocks into the full NT x NT periodic block-tridiagonal
    supra-Laplacian (coupling blocks on the two first off-diagonals and the
    two corners)."""
    if n_layers != blocks.n_layers:
        raise BadDimensionError(
            f"expansion size {n_layers} != blocks.n_layers {blocks.n_layers}"
        )
    n, t = blocks.n_per_layer, blocks.n_layers
    entries = np.zeros((n * t, n * t))
    idx = np.arange(n)
    for i in range(t):
        sl = slice(i * n, (i + 1) * n)
        entries[sl, sl] = blocks.diag_block
    for a in range(t):
        b = (a + 1) % t
        entries[a * n + idx, b * n + idx] = blocks.offdiag_entries
        entries[b * n + idx, a * n + idx] = blocks.offdiag_entries
    return SupraMatrix(entries=entries, n_per_layer=n, n_layers=t, kind="laplacian")
