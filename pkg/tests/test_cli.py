"""CLI: command wiring, exit codes, determinism, output contracts."""

import json

import numpy as np
import pytest

from supralap.cli import main
from supralap.fileio import read_edgelist


def run(argv, capsys=None):
    code = main([str(a) for a in argv])
    return code


def gen_constant(tmp_path, n=10, p=0.4, t=4, omega=1.0, seed=1):
    path = tmp_path / "net.sl"
    code = run(
        ["gen", "--model", "constant-er", "--n", n, "--p", p, "--t", t,
         "--omega", omega, "--coupling", "periodic", "--seed", seed,
         "--out", path]
    )
    assert code == 0
    return path


class TestGen:
    def test_er_writes_file_and_echo(self, tmp_path, capsys):
        out = tmp_path / "er.sl"
        code = run(
            ["gen", "--model", "er", "--n", 12, "--p", 0.3, "--t", 3,
             "--omega", 0.01, "--coupling", "path", "--seed", 7, "--out", out]
        )
        assert code == 0
        echo = json.loads(capsys.readouterr().out)
        assert echo["n_nodes"] == 12 and echo["coupling"] == "path"
        net = read_edgelist(out)
        assert net.n_layers == 3 and net.weights.omega == 0.01

    def test_same_flags_identical_files(self, tmp_path):
        a, b = tmp_path / "a.sl", tmp_path / "b.sl"
        flags = ["gen", "--model", "er", "--n", 15, "--p", 0.25, "--t", 4,
                 "--omega", 0.5, "--coupling", "path", "--seed", 3]
        assert run(flags + ["--out", a]) == 0
        assert run(flags + ["--out", b]) == 0
        assert a.read_bytes() == b.read_bytes()

    def test_usage_error_is_2(self, tmp_path):
        assert run(["gen", "--model", "er", "--n", 10]) == 2

    def test_missing_p_for_er_is_2(self, tmp_path):
        assert (
            run(["gen", "--model", "er", "--n", 10, "--t", 3, "--omega", 1,
                 "--seed", 1, "--out", tmp_path / "x.sl"])
            == 2
        )

    def test_generation_failure_is_3(self, tmp_path):
        assert (
            run(["gen", "--model", "er", "--n", 80, "--p", 0.0005, "--t", 2,
                 "--omega", 0, "--coupling", "path", "--seed", 1,
                 "--out", tmp_path / "x.sl"])
            == 3
        )

    def test_infeasible_sales_pardo_is_3(self, tmp_path):
        assert (
            run(["gen", "--model", "sales-pardo", "--n", 64, "--t", 3,
                 "--omega", 1, "--seed", 1, "--rho", 3.0, "--avg-degree", 16,
                 "--out", tmp_path / "x.sl"])
            == 3
        )

    def test_sales_pardo_model(self, tmp_path):
        out = tmp_path / "sp.sl"
        code = run(
            ["gen", "--model", "constant-sales-pardo", "--n", 32, "--t", 3,
             "--omega", 1, "--coupling", "periodic", "--seed", 2,
             "--levels", 2, "--branching", 4, "--avg-degree", 8,
             "--out", out]
        )
        assert code == 0
        net = read_edgelist(out)
        assert net.n_nodes == 32
        assert np.array_equal(net.layers[0].adjacency, net.layers[1].adjacency)


class TestSpectrum:
    def test_dense_and_blockdft_agree(self, tmp_path):
        net_path = gen_constant(tmp_path)
        dense_csv = tmp_path / "dense.csv"
        block_csv = tmp_path / "block.csv"
        assert run(["spectrum", "--method", "dense", "--in", net_path,
                    "--out", dense_csv]) == 0
        assert run(["spectrum", "--method", "block-dft", "--in", net_path,
                    "--out", block_csv]) == 0
        dense = [l.split(",") for l in dense_csv.read_text().splitlines()[1:]]
        block = [l.split(",") for l in block_csv.read_text().splitlines()[1:]]
        assert len(dense) == len(block) == 40
        dlam = np.array([float(r[1]) for r in dense])
        blam = np.array([float(r[1]) for r in block])
        assert np.abs(dlam - blam).max() <= 1e-8
        assert all(r[2] == "" for r in dense)
        assert all(r[2] != "" for r in block)

    def test_block_dft_needs_constant_input(self, tmp_path):
        path = tmp_path / "er.sl"
        run(["gen", "--model", "er", "--n", 8, "--p", 0.4, "--t", 3,
             "--omega", 1, "--coupling", "periodic", "--seed", 5, "--out", path])
        assert run(["spectrum", "--method", "block-dft", "--in", path,
                    "--out", tmp_path / "x.csv"]) == 4

    def test_block_dft_needs_periodic(self, tmp_path):
        path = tmp_path / "p.sl"
        run(["gen", "--model", "constant-er", "--n", 8, "--p", 0.4, "--t", 3,
             "--omega", 1, "--coupling", "path", "--seed", 5, "--out", path])
        assert run(["spectrum", "--method", "block-dft", "--in", path,
                    "--out", tmp_path / "x.csv"]) == 4

    def test_top_zero_header_only(self, tmp_path):
        net_path = gen_constant(tmp_path)
        out = tmp_path / "spectrum.csv"
        assert run(["spectrum", "--method", "dense", "--in", net_path,
                    "--out", out, "--top", 0]) == 0
        assert out.read_text() == "index,eigenvalue,k,method\n"

    def test_dense_cap_respected(self, tmp_path, monkeypatch):
        net_path = gen_constant(tmp_path)  # order 40
        monkeypatch.setenv("SUPRALAP_MAX_DENSE_ORDER", "30")
        assert run(["spectrum", "--method", "dense", "--in", net_path,
                    "--out", tmp_path / "x.csv"]) == 4
        monkeypatch.setenv("SUPRALAP_MAX_DENSE_ORDER", "40")
        assert run(["spectrum", "--method", "dense", "--in", net_path,
                    "--out", tmp_path / "x.csv"]) == 0

    def test_timing_sidecar(self, tmp_path):
        net_path = gen_constant(tmp_path)
        timing = tmp_path / "t.json"
        assert run(["spectrum", "--method", "block-dft", "--in", net_path,
                    "--out", tmp_path / "s.csv", "--timing", timing]) == 0
        payload = json.loads(timing.read_text())
        assert payload["method"] == "block-dft"
        assert payload["order"] == 40
        assert payload["solve_seconds"] > 0

    def test_vectors_sidecar_block_dft_satisfies_eigenequations(self, tmp_path):
        from supralap.supra import supra_laplacian

        net_path = gen_constant(tmp_path, n=6, t=5, omega=0.8, seed=3)
        out, vec = tmp_path / "s.csv", tmp_path / "v.csv"
        assert run(["spectrum", "--method", "block-dft", "--in", net_path,
                    "--out", out, "--vectors", vec]) == 0
        lap = supra_laplacian(read_edgelist(net_path)).entries
        rows = [l.split(",") for l in out.read_text().splitlines()[1:]]
        lams = np.array([float(r[1]) for r in rows])
        data = np.loadtxt(vec, delimiter=",", skiprows=1)[:, 1:]
        assert data.shape == (30, 30)
        for i in range(30):
            v = data[:, i]
            assert np.linalg.norm(v) == pytest.approx(1.0, abs=1e-9)
            assert np.linalg.norm(lap @ v - lams[i] * v) <= 1e-7

    def test_missing_input_is_2(self, tmp_path):
        assert run(["spectrum", "--method", "dense", "--in", tmp_path / "no.sl",
                    "--out", tmp_path / "x.csv"]) == 2


class TestApprox:
    def test_report_and_csv(self, tmp_path):
        path = tmp_path / "er.sl"
        run(["gen", "--model", "er", "--n", 10, "--p", 0.4, "--t", 4,
             "--omega", 0.0, "--coupling", "path", "--seed", 11, "--out", path])
        out = tmp_path / "rep.json"
        assert run(["approx", "--in", path, "--out", out, "--top", 12]) == 0
        report = json.loads(out.read_text())
        # uncoupled: exact zero-mode span for the first T vectors
        assert report["lambda_star_index"] == 5
        assert report["config"]["omega"] == 0.0
        csv_lines = (tmp_path / "rep.csv").read_text().splitlines()
        assert csv_lines[0] == "index,eigenvalue,epsilon"
        eps = np.array([float(l.split(",")[2]) for l in csv_lines[1:]])
        assert (eps[:4] <= 1e-8).all()

    def test_custom_thresholds_echoed(self, tmp_path):
        path = tmp_path / "er.sl"
        run(["gen", "--model", "er", "--n", 8, "--p", 0.5, "--t", 3,
             "--omega", 0.1, "--coupling", "path", "--seed", 2, "--out", path])
        out = tmp_path / "rep.json"
        assert run(["approx", "--in", path, "--out", out, "--top", 10,
                    "--ratio", 4, "--floor", 1e-2]) == 0
        report = json.loads(out.read_text())
        assert report["ratio_threshold"] == 4.0
        assert report["abs_floor"] == 0.01


class TestApproxSweep:
    def test_grid_aggregate_and_stars(self, tmp_path):
        out, stars = tmp_path / "sweep.csv", tmp_path / "stars.csv"
        code = run(["approx-sweep", "--n", 8, "--t", 3, "--coupling", "path",
                    "--grid", "p=0.3,0.5", "omega=0.0,0.1", "--seeds", 3,
                    "--top", 10, "--out", out, "--stars", stars])
        assert code == 0
        lines = out.read_text().splitlines()
        assert lines[0] == "p,omega,index,mean_epsilon,sd_epsilon"
        assert len(lines) == 1 + 2 * 2 * 10
        star_lines = stars.read_text().splitlines()
        assert star_lines[0] == "p,omega,seed,lambda_star_index"
        assert len(star_lines) == 1 + 2 * 2 * 3

    def test_jobs_parallel_matches_serial(self, tmp_path):
        base = ["approx-sweep", "--n", 8, "--t", 3, "--grid", "p=0.4",
                "omega=0.05", "--seeds", 2, "--top", 8]
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        assert run(base + ["--out", a, "--jobs", 1]) == 0
        assert run(base + ["--out", b, "--jobs", 2]) == 0
        assert a.read_bytes() == b.read_bytes()

    def test_bad_grid_is_2(self, tmp_path):
        assert run(["approx-sweep", "--n", 8, "--t", 3, "--grid", "p=0.4",
                    "q=1", "--seeds", 1, "--out", tmp_path / "x.csv"]) == 2


class TestReduced:
    def test_table_output(self, tmp_path):
        net_path = gen_constant(tmp_path, n=10, t=5)
        out = tmp_path / "red.csv"
        assert run(["reduced", "--in", net_path, "--out", out, "--top", 4]) == 0
        lines = out.read_text().splitlines()
        assert lines[0] == "k,j,eigenvalue,cos"
        assert len(lines) == 1 + 5 * 4
        ks = [int(l.split(",")[0]) for l in lines[1:]]
        assert ks == sorted(ks)

    def test_columns_pair_bitwise(self, tmp_path):
        net_path = gen_constant(tmp_path, n=10, t=6)
        out = tmp_path / "red.csv"
        assert run(["reduced", "--in", net_path, "--out", out, "--top", 10]) == 0
        rows = [l.split(",") for l in out.read_text().splitlines()[1:]]
        by_k = {}
        for k, j, lam, cos in rows:
            by_k.setdefault(int(k), []).append((lam, cos))
        for k in range(1, 6):
            assert by_k[k] == by_k[6 - k]

    def test_requires_constant_model(self, tmp_path):
        path = tmp_path / "er.sl"
        run(["gen", "--model", "er", "--n", 8, "--p", 0.4, "--t", 3,
             "--omega", 1, "--coupling", "periodic", "--seed", 4, "--out", path])
        assert run(["reduced", "--in", path, "--out", tmp_path / "x.csv"]) == 4


def test_unknown_command_is_2():
    assert main(["frobnicate"]) == 2
