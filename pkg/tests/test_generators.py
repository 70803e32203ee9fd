"""Generator determinism, distribution moments, and block structure."""

import numpy as np
import pytest

from supralap.errors import GenerationFailedError, InfeasibleCalibrationError
from supralap.generators import (
    ER_STREAM,
    ErConfig,
    SalesPardoConfig,
    er_layer,
    er_temporal,
    layer_stream,
    sales_pardo_layer,
    sales_pardo_temporal,
    tier_probabilities,
)
from supralap.graph import is_connected

# Reference slice of the keyed RNG stream (Philox4x64-10, key = (seed, kind
# << 32 | layer)): freezing it pins the exact bit stream that the edge draws
# consume, so ports can replicate graphs exactly.
PHILOX_42_0_RAW = [
    15129985323320379406,
    3490965594592278910,
    16005516994917231875,
    7278743398533373529,
    6790771320172045267,
    8014118860574412892,
]

# First ER layer at (seed=7, N=6, p=0.5) under that stream contract.
ER_REFERENCE_EDGES = [(0, 2), (0, 3), (0, 4), (0, 5), (1, 3), (1, 5), (3, 4)]


class TestStreamContract:
    def test_reference_raw_sequence(self):
        bg = layer_stream(42, ER_STREAM, 0)
        assert bg.random_raw(6).tolist() == PHILOX_42_0_RAW

    def test_reference_er_layer(self):
        g = er_layer(ErConfig(n_nodes=6, edge_prob=0.5, n_layers=1, seed=7), 0)
        rows, cols = np.nonzero(np.triu(g.adjacency))
        assert list(zip(rows.tolist(), cols.tolist())) == ER_REFERENCE_EDGES

    def test_streams_differ_across_layers_and_kinds(self):
        a = layer_stream(1, 0, 0).random_raw(4).tolist()
        b = layer_stream(1, 0, 1).random_raw(4).tolist()
        c = layer_stream(1, 1, 0).random_raw(4).tolist()
        assert a != b and a != c and b != c


class TestErLayer:
    def test_bit_identical_repeats(self):
        cfg = ErConfig(n_nodes=100, edge_prob=0.1, n_layers=3, seed=123)
        assert np.array_equal(er_layer(cfg, 1).adjacency, er_layer(cfg, 1).adjacency)

    def test_layers_are_independent_of_order(self):
        cfg = ErConfig(n_nodes=30, edge_prob=0.2, n_layers=3, seed=5)
        late_first = er_layer(cfg, 2).adjacency
        _ = er_layer(cfg, 0)
        assert np.array_equal(er_layer(cfg, 2).adjacency, late_first)

    def test_near_one_probability_gives_complete_graph(self):
        g = er_layer(ErConfig(n_nodes=5, edge_prob=0.999, n_layers=1, seed=0), 0)
        assert g.adjacency.sum() == 5 * 4  # K5

    def test_edge_count_moment(self):
        # 100 independent layers at N=100, p=0.1: mean edge count within
        # 3 sigma of the binomial mean 495 (sd of the mean: ~2.11)
        cfg = ErConfig(n_nodes=100, edge_prob=0.1, n_layers=100, seed=42)
        counts = [er_layer(cfg, t).adjacency.sum() / 2 for t in range(100)]
        n_pairs = 100 * 99 / 2
        expect = n_pairs * 0.1
        sd_mean = np.sqrt(n_pairs * 0.1 * 0.9 / 100)
        assert abs(np.mean(counts) - expect) <= 3 * sd_mean

    def test_generation_failure_when_too_sparse(self):
        with pytest.raises(GenerationFailedError):
            er_layer(ErConfig(n_nodes=60, edge_prob=0.001, n_layers=1, seed=1), 0)

    def test_layers_pass_graph_invariants(self):
        cfg = ErConfig(n_nodes=40, edge_prob=0.12, n_layers=5, seed=77)
        for t in range(5):
            g = er_layer(cfg, t)
            adj = g.adjacency
            assert np.array_equal(adj, adj.T)
            assert np.trace(adj) == 0
            assert set(np.unique(adj)) <= {0.0, 1.0}
            assert is_connected(adj)


class TestErTemporal:
    def test_constant_mode_replicates_layer_zero(self):
        cfg = ErConfig(n_nodes=12, edge_prob=0.3, n_layers=4, seed=3)
        net = er_temporal(cfg, omega=1.0, coupling="periodic", constant=True)
        first = net.layers[0].adjacency
        assert all(np.array_equal(g.adjacency, first) for g in net.layers)
        assert np.array_equal(first, er_layer(cfg, 0).adjacency)

    def test_independent_mode_distinct_layers(self):
        cfg = ErConfig(n_nodes=12, edge_prob=0.3, n_layers=4, seed=3)
        net = er_temporal(cfg, omega=0.5, coupling="path")
        assert not np.array_equal(net.layers[0].adjacency, net.layers[1].adjacency)
        assert net.weights.omega == 0.5

    def test_whole_network_deterministic(self):
        cfg = ErConfig(n_nodes=15, edge_prob=0.25, n_layers=6, seed=9)
        n1 = er_temporal(cfg, omega=0.1)
        n2 = er_temporal(cfg, omega=0.1)
        for a, b in zip(n1.layers, n2.layers):
            assert np.array_equal(a.adjacency, b.adjacency)


class TestSalesPardo:
    def test_levels_one_degenerates_to_er(self):
        cfg = SalesPardoConfig(
            n_layers=1, seed=0, n_nodes=20, levels=1, branching=4, avg_degree=6.0
        )
        probs = tier_probabilities(cfg)
        assert probs.shape == (1,)
        assert probs[0] == pytest.approx(6.0 / 19.0)

    def test_tier_probabilities_decay_geometrically(self):
        cfg = SalesPardoConfig(
            n_layers=1, seed=0, n_nodes=64, levels=3, branching=4,
            avg_degree=8.0, rho=1.0,
        )
        probs = tier_probabilities(cfg)
        assert probs.shape == (3,)
        assert probs[1] == pytest.approx(probs[0] / 2)
        assert probs[2] == pytest.approx(probs[0] / 4)
        # calibration: expected mean degree equals the target
        members = np.array([3, 12, 48])
        assert members @ probs == pytest.approx(8.0)

    def test_infeasible_calibration_raises(self):
        cfg = SalesPardoConfig(
            n_layers=1, seed=0, n_nodes=64, levels=3, branching=4,
            avg_degree=16.0, rho=3.0,
        )
        with pytest.raises(InfeasibleCalibrationError):
            tier_probabilities(cfg)

    def test_rejects_indivisible_sizes(self):
        with pytest.raises(ValueError):
            SalesPardoConfig(n_layers=1, seed=0, n_nodes=66, levels=3, branching=4)

    def test_three_distinct_density_tiers_ordered(self):
        # N=64, levels=3: three distinct pair-tier densities, empirically
        # ordered innermost > middle > outermost when pooled over layers
        cfg = SalesPardoConfig(
            n_layers=100, seed=11, n_nodes=64, levels=3, branching=4,
            avg_degree=16.0, rho=1.0,
        )
        sums = np.zeros(3)
        counts = np.zeros(3)
        from supralap.generators import _pair_tiers

        tiers = _pair_tiers(cfg)
        rows, cols = np.triu_indices(64, 1)
        for t in range(100):
            adj = sales_pardo_layer(cfg, t).adjacency
            edges = adj[rows, cols]
            for lvl in (1, 2, 3):
                mask = tiers == lvl
                sums[lvl - 1] += edges[mask].sum()
                counts[lvl - 1] += mask.sum()
        densities = sums / counts
        assert densities[0] > densities[1] > densities[2]

    def test_per_layer_innermost_beats_cross_outermost(self):
        cfg = SalesPardoConfig(
            n_layers=20, seed=13, n_nodes=64, levels=3, branching=4,
            avg_degree=16.0, rho=1.0,
        )
        from supralap.generators import _pair_tiers

        tiers = _pair_tiers(cfg)
        rows, cols = np.triu_indices(64, 1)
        for t in range(20):
            adj = sales_pardo_layer(cfg, t).adjacency
            edges = adj[rows, cols]
            inner = edges[tiers == 1].mean()
            outer = edges[tiers == 3].mean()
            assert inner > outer

    def test_deterministic(self):
        cfg = SalesPardoConfig(n_layers=2, seed=21, n_nodes=32, levels=2,
                               branching=4, avg_degree=8.0)
        a = sales_pardo_layer(cfg, 1).adjacency
        b = sales_pardo_layer(cfg, 1).adjacency
        assert np.array_equal(a, b)

    def test_temporal_constant_mode(self):
        cfg = SalesPardoConfig(n_layers=4, seed=2, n_nodes=32, levels=2,
                               branching=4, avg_degree=8.0)
        net = sales_pardo_temporal(cfg, omega=1.0, coupling="periodic", constant=True)
        first = net.layers[0].adjacency
        assert all(np.array_equal(g.adjacency, first) for g in net.layers)
