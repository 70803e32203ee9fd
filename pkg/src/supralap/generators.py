"""Seeded benchmark generators: temporal Erdos-Renyi and nested-block layers.

Reproducibility contract: every layer is drawn from its own Philox4x64-10
counter-based stream keyed by (seed, generator kind, layer index), and edges
are decided by comparing raw 64-bit outputs against a fixed integer
threshold. The draw therefore does not depend on call order or thread
count, and ports in other languages can reproduce graphs bit-for-bit from
the published Philox algorithm. The test suite freezes a reference slice of
the raw stream and a reference edge list.

Layers are conditioned on connectedness by rejection: a failed candidate is
discarded and the next one uses the subsequent chunk of the same stream.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from supralap.errors import GenerationFailedError, InfeasibleCalibrationError
from supralap.graph import LayerGraph, is_connected
from supralap.supra import PATH, InterLayerWeights, TemporalNetwork

__all__ = [
    "ErConfig",
    "SalesPardoConfig",
    "er_layer",
    "er_temporal",
    "layer_stream",
    "sales_pardo_layer",
    "sales_pardo_temporal",
    "tier_probabilities",
]

MAX_REJECTIONS = 1000

ER_STREAM = 0
SALES_PARDO_STREAM = 1


@dataclass(frozen=True)
class ErConfig:
    """Erdos-Renyi benchmark parameters; one independent draw per layer."""

    n_nodes: int
    edge_prob: float
    n_layers: int
    seed: int

    def __post_init__(self):
        if self.n_nodes < 2:
            raise ValueError("need at least 2 nodes")
        if not 0.0 < self.edge_prob < 1.0:
            raise ValueError("edge probability must lie in (0, 1)")
        if self.n_layers < 1:
            raise ValueError("need at least one layer")


@dataclass(frozen=True)
class SalesPardoConfig:
    """Nested-block benchmark: recursive groups with geometrically decaying
    cross-group densities.

    ``levels`` counts the distinct pair-relation tiers (innermost block,
    next enclosing group, ...); nodes are partitioned ``levels - 1`` times
    into ``branching`` groups each. ``rho`` sets the density ratio between
    consecutive tiers (factor 1/(1+rho)); tier probabilities are calibrated
    so the expected mean degree equals ``avg_degree``.
    """

    n_layers: int
    seed: int
    n_nodes: int = 640
    levels: int = 3
    branching: int = 4
    avg_degree: float = 16.0
    rho: float = 1.0

    def __post_init__(self):
        if self.levels < 1:
            raise ValueError("need at least one level")
        if self.levels > 1 and self.branching < 2:
            raise ValueError("branching must be >= 2")
        if self.rho <= 0:
            raise ValueError("rho must be > 0")
        if self.avg_degree <= 0:
            raise ValueError("avg_degree must be > 0")
        if self.n_nodes < 2:
            raise ValueError("need at least 2 nodes")
        if self.n_layers < 1:
            raise ValueError("need at least one layer")
        groups = self.branching ** (self.levels - 1)
        if self.n_nodes % groups != 0 or self.n_nodes // groups < 2:
            raise ValueError(
                f"n_nodes must be a multiple of branching^(levels-1) = {groups} "
                "with innermost blocks of at least 2 nodes"
            )


def layer_stream(seed: int, stream_kind: int, layer_index: int) -> np.random.Philox:
    """Philox4x64-10 stream keyed by (seed, kind << 32 | layer index)."""
    if not 0 <= seed < 2**64:
        raise ValueError("seed must fit in 64 unsigned bits")
    key = np.array(
        [seed, (stream_kind << 32) | layer_index], dtype=np.uint64
    )
    return np.random.Philox(key=key)


def _probability_threshold(p: float) -> np.uint64:
    """Integer threshold so that P[raw u64 < threshold] = p."""
    return np.uint64(min(int(p * 2.0**64), 2**64 - 1))


def _sample_connected(
    bit_gen: np.random.Philox, n_nodes: int, pair_thresholds: np.ndarray
) -> np.ndarray:
    """Draw pair indicators until the resulting graph is connected."""
    rows, cols = np.triu_indices(n_nodes, 1)
    for _ in range(MAX_REJECTIONS):
        raw = bit_gen.random_raw(rows.size)
        mask = raw < pair_thresholds
        adjacency = np.zeros((n_nodes, n_nodes))
        adjacency[rows[mask], cols[mask]] = 1.0
        adjacency += adjacency.T
        if is_connected(adjacency):
            return adjacency
    raise GenerationFailedError(
        f"no connected draw within {MAX_REJECTIONS} attempts "
        "(edge probability too small for this size?)"
    )


def er_layer(cfg: ErConfig, layer_index: int) -> LayerGraph:
    """One connected Erdos-Renyi layer, reproducible from (seed, index)."""
    stream = layer_stream(cfg.seed, ER_STREAM, layer_index)
    threshold = _probability_threshold(cfg.edge_prob)
    thresholds = np.full(cfg.n_nodes * (cfg.n_nodes - 1) // 2, threshold)
    return LayerGraph(_sample_connected(stream, cfg.n_nodes, thresholds))


def er_temporal(
    cfg: ErConfig,
    omega: float,
    coupling: str = PATH,
    constant: bool = False,
) -> TemporalNetwork:
    """T-layer temporal network with uniform coupling weights.

    ``constant=True`` replicates layer 0 across all layers (the exact
    constant-block model); otherwise layers are independent draws.
    """
    if constant:
        layers = (er_layer(cfg, 0),) * cfg.n_layers
    else:
        layers = tuple(er_layer(cfg, t) for t in range(cfg.n_layers))
    return TemporalNetwork(
        layers=layers, weights=InterLayerWeights.uniform(omega, coupling)
    )


def tier_probabilities(cfg: SalesPardoConfig) -> np.ndarray:
    """Edge probability per pair tier, innermost first.

    Tier l+1 is 1/(1+rho) times as dense as tier l; the innermost value is
    calibrated so the expected mean degree equals cfg.avg_degree. Raises
    InfeasibleCalibrationError when any tier probability leaves (0, 1).
    """
    inner = cfg.n_nodes // cfg.branching ** (cfg.levels - 1)
    sizes = np.array([inner * cfg.branching**l for l in range(cfg.levels)])
    members = np.diff(sizes, prepend=1)  # nodes first reachable at each tier
    decay = (1.0 / (1.0 + cfg.rho)) ** np.arange(cfg.levels)
    p_inner = cfg.avg_degree / float(members @ decay)
    probs = p_inner * decay
    if not ((probs > 0.0) & (probs < 1.0)).all():
        raise InfeasibleCalibrationError(
            f"avg_degree={cfg.avg_degree} with rho={cfg.rho} needs tier "
            f"probabilities {np.array2string(probs, precision=4)} outside (0, 1)"
        )
    return probs


def _pair_tiers(cfg: SalesPardoConfig) -> np.ndarray:
    """Tier (1-based, innermost=1) of every node pair in triu order."""
    rows, cols = np.triu_indices(cfg.n_nodes, 1)
    inner = cfg.n_nodes // cfg.branching ** (cfg.levels - 1)
    tiers = np.full(rows.size, cfg.levels, dtype=np.int64)
    for level in range(cfg.levels - 1, 0, -1):
        size = inner * cfg.branching ** (level - 1)
        same_group = (rows // size) == (cols // size)
        tiers[same_group] = level
    return tiers


def sales_pardo_layer(cfg: SalesPardoConfig, layer_index: int) -> LayerGraph:
    """One connected nested-block layer, reproducible from (seed, index)."""
    probs = tier_probabilities(cfg)
    thresholds = np.array([_probability_threshold(p) for p in probs])
    pair_thresholds = thresholds[_pair_tiers(cfg) - 1]
    stream = layer_stream(cfg.seed, SALES_PARDO_STREAM, layer_index)
    return LayerGraph(_sample_connected(stream, cfg.n_nodes, pair_thresholds))


def sales_pardo_temporal(
    cfg: SalesPardoConfig,
    omega: float,
    coupling: str = PATH,
    constant: bool = False,
) -> TemporalNetwork:
    """T nested-block layers with uniform coupling weights; ``constant=True``
    replicates layer 0 (constant-block model)."""
    if constant:
        layers = (sales_pardo_layer(cfg, 0),) * cfg.n_layers
    else:
        layers = tuple(sales_pardo_layer(cfg, t) for t in range(cfg.n_layers))
    return TemporalNetwork(
        layers=layers, weights=InterLayerWeights.uniform(omega, coupling)
    )
