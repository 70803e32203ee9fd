"""Eigensolver: both backends against analytic cases and the NumPy oracle."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from supralap import eigen
from supralap.errors import DimensionMismatchError, NotSymmetricError
from supralap.graph import LayerGraph, normalized_laplacian
from tests.test_graph import random_connected_adjacency

BACKENDS = eigen.available_backends()


def random_symmetric(n, seed):
    rng = np.random.default_rng(seed)
    a = rng.standard_normal((n, n))
    return (a + a.T) / 2


def test_compiled_backend_is_built():
    # the packaged build is expected to include the extension
    assert "compiled" in BACKENDS


@pytest.mark.parametrize("backend", BACKENDS)
class TestBothBackends:
    def test_k2_laplacian_analytic(self, backend):
        r = eigen.eigh(np.array([[1.0, -1.0], [-1.0, 1.0]]), backend=backend)
        assert np.allclose(r.eigenvalues, [0.0, 2.0], atol=1e-12)
        s = 1 / np.sqrt(2)
        assert np.allclose(np.abs(r.eigenvectors), [[s, s], [s, s]], atol=1e-12)
        # sign convention: largest-magnitude component positive, ties to the
        # lowest index
        assert r.eigenvectors[0, 0] > 0
        assert r.eigenvectors[0, 1] > 0

    def test_identity_order_5(self, backend):
        r = eigen.eigh(np.eye(5), backend=backend)
        assert np.array_equal(r.eigenvalues, np.ones(5))

    def test_reconstruction_er30(self, backend):
        lap = normalized_laplacian(
            LayerGraph(random_connected_adjacency(30, 0.3, seed=3))
        )
        r = eigen.eigh(lap, backend=backend)
        recon = r.eigenvectors @ np.diag(r.eigenvalues) @ r.eigenvectors.T
        assert np.linalg.norm(lap - recon) <= 1e-8

    def test_against_numpy_oracle(self, backend):
        for seed, n in ((0, 2), (1, 7), (2, 24), (3, 83), (4, 140)):
            a = random_symmetric(n, seed)
            r = eigen.eigh(a, backend=backend)
            w, v = np.linalg.eigh(a)
            assert np.abs(r.eigenvalues - w).max() <= 1e-10 * max(1, np.abs(w).max())
            # subspace agreement per eigenvalue cluster
            for i in range(n):
                mask = np.abs(w - r.eigenvalues[i]) <= 1e-8
                basis = v[:, mask]
                inside = np.linalg.norm(basis @ (basis.T @ r.eigenvectors[:, i]))
                assert inside == pytest.approx(1.0, abs=1e-8)

    def test_residual_and_orthonormality_bounds(self, backend):
        a = random_symmetric(200, seed=11)
        r = eigen.eigh(a, backend=backend)
        scale = max(1.0, np.linalg.norm(a))
        assert eigen.eig_residual(a, r) <= 1e-8 * scale
        gram = r.eigenvectors.T @ r.eigenvectors
        assert np.abs(gram - np.eye(200)).max() <= 1e-9

    def test_trace_preservation(self, backend):
        a = random_symmetric(60, seed=5)
        r = eigen.eigh(a, backend=backend)
        tr = np.trace(a)
        assert r.eigenvalues.sum() == pytest.approx(tr, abs=1e-8 * max(1, abs(tr)))

    def test_psd_laplacian_first_eigenvalue(self, backend):
        lap = normalized_laplacian(
            LayerGraph(random_connected_adjacency(25, 0.3, seed=7))
        )
        r = eigen.eigh(lap, backend=backend)
        assert r.eigenvalues[0] >= -1e-9

    def test_determinism_bitwise(self, backend):
        a = random_symmetric(50, seed=9)
        r1 = eigen.eigh(a, backend=backend)
        r2 = eigen.eigh(a, backend=backend)
        assert np.array_equal(r1.eigenvalues, r2.eigenvalues)
        assert np.array_equal(r1.eigenvectors, r2.eigenvectors)

    def test_rejects_nonsymmetric(self, backend):
        a = np.array([[0.0, 1.0], [0.5, 0.0]])
        with pytest.raises(NotSymmetricError):
            eigen.eigh(a, backend=backend)

    def test_rejects_nonsquare(self, backend):
        with pytest.raises(DimensionMismatchError):
            eigen.eigh(np.zeros((3, 4)), backend=backend)

    def test_residual_detects_perturbed_eigenvalues(self, backend):
        a = random_symmetric(12, seed=13)
        r = eigen.eigh(a, backend=backend)
        shifted = eigen.SpectralResult(
            eigenvalues=r.eigenvalues + 0.1, eigenvectors=r.eigenvectors.copy()
        )
        assert eigen.eig_residual(a, shifted) >= 0.09

    def test_residual_dimension_mismatch(self, backend):
        a = random_symmetric(4, seed=15)
        r = eigen.eigh(a, backend=backend)
        with pytest.raises(DimensionMismatchError):
            eigen.eig_residual(random_symmetric(5, seed=16), r)

    def test_order_one_matrix(self, backend):
        r = eigen.eigh(np.array([[4.0]]), backend=backend)
        assert r.eigenvalues.tolist() == [4.0]
        assert r.eigenvectors.tolist() == [[1.0]]

    @given(seed=st.integers(0, 10_000), n=st.integers(1, 40))
    @settings(max_examples=30, deadline=None)
    def test_property_random_matrices(self, backend, seed, n):
        a = random_symmetric(n, seed)
        r = eigen.eigh(a, backend=backend)
        assert (np.diff(r.eigenvalues) >= 0).all()
        assert eigen.eig_residual(a, r) <= 1e-8 * max(1.0, np.linalg.norm(a))
        w = np.linalg.eigvalsh(a)
        assert np.abs(r.eigenvalues - w).max() <= 1e-9 * max(1.0, np.abs(w).max())


def test_backends_agree_within_tolerance():
    if len(BACKENDS) < 2:
        pytest.skip("only one backend built")
    a = random_symmetric(90, seed=21)
    rc = eigen.eigh(a, backend="compiled")
    rp = eigen.eigh(a, backend="python")
    assert np.abs(rc.eigenvalues - rp.eigenvalues).max() <= 1e-10


def test_sign_convention_tie_lowest_index():
    vecs = np.array([[-0.5, 0.5], [0.5, 0.5], [-0.5, -0.5], [0.5, -0.5]])
    fixed = eigen.fix_signs(vecs.copy())
    # all magnitudes tie within each column -> entry 0 made positive
    assert fixed[0, 0] > 0
    assert fixed[0, 1] > 0
