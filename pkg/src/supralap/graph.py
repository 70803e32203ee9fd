"""Single-layer graphs: validation, degrees, normalized Laplacian, zero mode.

A layer is an undirected, unweighted, connected graph on N nodes, stored as a
dense 0/1 adjacency matrix. All operations are pure functions over immutable
inputs; `LayerGraph` freezes its adjacency array at construction.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from supralap.errors import ZeroDegreeError

__all__ = [
    "LayerGraph",
    "degree_vector",
    "is_connected",
    "normalized_laplacian",
    "zero_mode",
]

# Exact symmetry is required of the 0/1 adjacency itself; derived real
# matrices are held to this absolute tolerance instead.
SYM_ATOL = 1e-12


def _as_adjacency(g) -> np.ndarray:
    return g.adjacency if isinstance(g, LayerGraph) else np.asarray(g, dtype=float)


@dataclass(frozen=True)
class LayerGraph:
    """One time layer: a connected simple graph on ``n_nodes`` nodes.

    The adjacency matrix must be symmetric, binary, zero on the diagonal and
    describe a single connected component. It is stored read-only so layers
    can be shared freely across threads.
    """

    adjacency: np.ndarray
    n_nodes: int = field(init=False)

    def __post_init__(self):
        adj = np.array(self.adjacency, dtype=float)
        if adj.ndim != 2 or adj.shape[0] != adj.shape[1]:
            raise ValueError(f"adjacency must be square, got shape {adj.shape}")
        n = adj.shape[0]
        if n < 1:
            raise ValueError("adjacency must have at least one node")
        if not np.array_equal(adj, adj.T):
            raise ValueError("adjacency must be symmetric")
        if np.trace(np.abs(adj)) != 0:
            raise ValueError("adjacency must have a zero diagonal")
        if not np.isin(adj, (0.0, 1.0)).all():
            raise ValueError("adjacency entries must be 0 or 1")
        if not is_connected(adj):
            raise ValueError("graph must be connected")
        adj.flags.writeable = False
        object.__setattr__(self, "adjacency", adj)
        object.__setattr__(self, "n_nodes", n)


def degree_vector(g: LayerGraph | np.ndarray) -> np.ndarray:
    """Row sums of the adjacency matrix."""
    return _as_adjacency(g).sum(axis=1)


def is_connected(g: LayerGraph | np.ndarray) -> bool:
    """True iff every node is reachable from node 0.

    Accepts a raw adjacency matrix so candidates can be screened before
    `LayerGraph` construction; the matrix must already be symmetric with a
    zero diagonal.
    """
    adj = _as_adjacency(g) != 0
    n = adj.shape[0]
    reached = np.zeros(n, dtype=bool)
    reached[0] = True
    frontier = reached.copy()
    while frontier.any():
        frontier = adj[frontier].any(axis=0) & ~reached
        reached |= frontier
    return bool(reached.all())


def normalized_laplacian(g: LayerGraph | np.ndarray) -> np.ndarray:
    """I - D^{-1/2} A D^{-1/2} for a connected layer.

    Raises ZeroDegreeError when any node is isolated (this covers the N = 1
    layer, whose single node has degree zero).
    """
    adj = _as_adjacency(g)
    deg = adj.sum(axis=1)
    if (deg == 0).any():
        raise ZeroDegreeError("normalized Laplacian needs every degree > 0")
    inv_sqrt = 1.0 / np.sqrt(deg)
    lap = -(inv_sqrt[:, None] * adj * inv_sqrt[None, :])
    np.fill_diagonal(lap, 1.0)
    return (lap + lap.T) / 2.0


def zero_mode(g: LayerGraph | np.ndarray) -> np.ndarray:
    """Unit eigenvector of the normalized Laplacian at eigenvalue zero.

    For a connected graph this is D^{1/2} 1 normalized to unit length; the
    zero eigenvalue is simple, so the vector is unique up to sign and is
    returned with all entries positive.
    """
    deg = degree_vector(g)
    if (deg == 0).any():
        raise ZeroDegreeError("zero mode needs every degree > 0")
    v = np.sqrt(deg)
    return v / np.linalg.norm(v)
