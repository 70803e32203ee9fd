"""Command-line front end.

Subcommands: gen, spectrum, approx, approx-sweep, reduced. Exit codes:
0 success, 2 usage or unparseable input, 3 generation failure, 4 method/
input mismatch, 5 numeric failure. All outputs are deterministic given the
flags; wall-clock only ever appears in the opt-in --timing sidecar.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

import numpy as np

from supralap import approx, blockdft, eigen, fileio, generators
from supralap.errors import (
    GenerationFailedError,
    InfeasibleCalibrationError,
    MethodMismatchError,
    NoConvergenceError,
    SupralapError,
)
from supralap.fileio import FileFormatError
from supralap.supra import (
    PATH,
    PERIODIC,
    TemporalNetwork,
    constant_model_blocks,
    supra_laplacian,
)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_GENERATION = 3
EXIT_METHOD = 4
EXIT_NUMERIC = 5

DENSE_ORDER_ENV = "SUPRALAP_MAX_DENSE_ORDER"
DEFAULT_MAX_DENSE_ORDER = 4000


def _max_dense_order() -> int:
    return int(os.environ.get(DENSE_ORDER_ENV, DEFAULT_MAX_DENSE_ORDER))


def _check_dense_order(order: int) -> None:
    cap = _max_dense_order()
    if order > cap:
        raise MethodMismatchError(
            f"dense decomposition of order {order} exceeds the cap of {cap}; "
            f"raise {DENSE_ORDER_ENV} to override"
        )


def _constant_model(net: TemporalNetwork):
    """The (layer, omega) of a constant periodic model, or raise."""
    if net.weights.coupling != PERIODIC:
        raise MethodMismatchError("input must use periodic coupling")
    if not net.weights.is_uniform:
        raise MethodMismatchError("input must use uniform inter-layer weights")
    first = net.layers[0]
    if any(not np.array_equal(g.adjacency, first.adjacency) for g in net.layers[1:]):
        raise MethodMismatchError("input layers must be identical")
    return first, net.weights.omega


def _echo(payload: dict) -> None:
    print(json.dumps(payload, sort_keys=True))


def _cmd_gen(args) -> int:
    coupling = args.coupling
    er_models = ("er", "constant-er")
    sp_models = ("sales-pardo", "constant-sales-pardo")
    if args.model in er_models:
        if args.p is None:
            raise argparse.ArgumentTypeError("--p is required for ER models")
        cfg = generators.ErConfig(
            n_nodes=args.n, edge_prob=args.p, n_layers=args.t, seed=args.seed
        )
        net = generators.er_temporal(
            cfg, args.omega, coupling, constant=args.model == "constant-er"
        )
        echo = {"model": args.model, "n_nodes": args.n, "edge_prob": args.p}
    elif args.model in sp_models:
        cfg = generators.SalesPardoConfig(
            n_nodes=args.n,
            n_layers=args.t,
            seed=args.seed,
            levels=args.levels,
            branching=args.branching,
            avg_degree=args.avg_degree,
            rho=args.rho,
        )
        net = generators.sales_pardo_temporal(
            cfg, args.omega, coupling, constant=args.model == "constant-sales-pardo"
        )
        echo = {
            "model": args.model,
            "n_nodes": args.n,
            "levels": args.levels,
            "branching": args.branching,
            "avg_degree": args.avg_degree,
            "rho": args.rho,
        }
    else:  # pragma: no cover - argparse chokes first
        raise ValueError(f"unknown model {args.model}")
    fileio.write_edgelist(args.out, net)
    echo.update(
        {
            "n_layers": args.t,
            "omega": args.omega,
            "coupling": coupling,
            "seed": args.seed,
            "out": str(args.out),
        }
    )
    _echo(echo)
    return EXIT_OK


def _cmd_spectrum(args) -> int:
    net = fileio.read_edgelist(args.infile)
    nt = net.n_nodes * net.n_layers
    if args.method == "dense":
        _check_dense_order(nt)
        matrix = supra_laplacian(net).entries
        t0 = time.perf_counter()
        result = eigen.eigh(matrix)
        solve_seconds = time.perf_counter() - t0
        eigenvalues, block_indices = result.eigenvalues, None
        vector_columns = result.eigenvectors
    else:
        layer, omega = _constant_model(net)
        blocks = constant_model_blocks(layer, omega, net.n_layers)
        t0 = time.perf_counter()
        merged = blockdft.full_spectrum(blocks)
        solve_seconds = time.perf_counter() - t0
        eigenvalues, block_indices = merged.eigenvalues, merged.block_indices
        vector_columns = None
        if args.vectors:
            vector_columns = _lifted_columns(merged, args.top)
    top = args.top if args.top is not None else nt
    fileio.write_spectrum_csv(
        args.out, eigenvalues, block_indices, args.method, top=top
    )
    if args.vectors:
        count = min(top, nt)
        fileio.write_vectors_csv(args.vectors, vector_columns[:, :count])
    if args.timing:
        fileio.write_timing_json(
            args.timing,
            {"method": args.method, "order": nt, "solve_seconds": solve_seconds},
        )
    return EXIT_OK


def _lifted_columns(merged: blockdft.MergedSpectrum, top: int | None) -> np.ndarray:
    """One lifted NT-vector per merged entry: the cosine lift for k <= T/2,
    the sine lift for k > T/2. Together these span the full eigenbasis."""
    nt = merged.eigenvalues.size
    count = nt if top is None else min(top, nt)
    t = merged.n_layers
    columns = np.empty((nt, count))
    for i in range(count):
        k = int(merged.block_indices[i])
        lift = blockdft.lift_eigenvector(
            merged.vectors[:, i], merged.eigenvalues[i], k, t
        )
        columns[:, i] = lift.psi_i if 2 * k > t else lift.psi_r
    return columns


def _file_config(net: TemporalNetwork, path) -> dict:
    return {
        "source": str(path),
        "n_nodes": net.n_nodes,
        "n_layers": net.n_layers,
        "omega": net.weights.omega if net.weights.is_uniform else None,
        "coupling": net.weights.coupling,
        "edge_prob": None,
        "seed": None,
    }


def _cmd_approx(args) -> int:
    net = fileio.read_edgelist(args.infile)
    nt = net.n_nodes * net.n_layers
    _check_dense_order(nt)
    report = approx.supra_error_profile(
        net,
        n_vectors=min(args.top, nt),
        ratio_threshold=args.ratio,
        abs_floor=args.floor,
        config=_file_config(net, args.infile),
    )
    fileio.write_approx_json(args.out, report)
    csv_path = args.csv or Path(args.out).with_suffix(".csv")
    fileio.write_approx_csv(csv_path, report.eigenvalues, report.errors)
    return EXIT_OK


def _parse_grid(tokens: list[str]) -> dict[str, list[float]]:
    grid: dict[str, list[float]] = {}
    for token in tokens:
        name, _, values = token.partition("=")
        if name not in ("p", "omega") or not values:
            raise argparse.ArgumentTypeError(
                f"grid token {token!r} is not p=... or omega=..."
            )
        grid[name] = [float(v) for v in values.split(",")]
    if set(grid) != {"p", "omega"}:
        raise argparse.ArgumentTypeError("grid needs both p=... and omega=...")
    return grid


def _sweep_task(task) -> tuple:
    n, t, coupling, p, omega, seed, top, ratio, floor = task
    cfg = generators.ErConfig(n_nodes=n, edge_prob=p, n_layers=t, seed=seed)
    net = generators.er_temporal(cfg, omega, coupling)
    report = approx.supra_error_profile(
        net, n_vectors=top, ratio_threshold=ratio, abs_floor=floor
    )
    return p, omega, seed, report.errors, report.lambda_star_index


def _cmd_approx_sweep(args) -> int:
    grid = _parse_grid(args.grid)
    top = min(args.top, args.n * args.t)
    tasks = [
        (args.n, args.t, args.coupling, p, omega, seed, top, args.ratio, args.floor)
        for p in grid["p"]
        for omega in grid["omega"]
        for seed in range(args.seeds)
    ]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_sweep_task, tasks, chunksize=1))
    else:
        results = [_sweep_task(task) for task in tasks]
    by_cell: dict[tuple, dict[int, tuple]] = {}
    for p, omega, seed, errors, star in results:
        by_cell.setdefault((p, omega), {})[seed] = (errors, star)

    sweep_rows = []
    star_rows = []
    for p in grid["p"]:
        for omega in grid["omega"]:
            cell = by_cell[(p, omega)]
            stacked = np.vstack([cell[s][0] for s in sorted(cell)])
            means = stacked.mean(axis=0)
            sds = stacked.std(axis=0, ddof=1) if stacked.shape[0] > 1 else np.zeros(top)
            sweep_rows.extend(
                (p, omega, i + 1, means[i], sds[i]) for i in range(top)
            )
            star_rows.extend((p, omega, s, cell[s][1]) for s in sorted(cell))
    fileio.write_sweep_csv(args.out, sweep_rows)
    if args.stars:
        fileio.write_stars_csv(args.stars, star_rows)
    return EXIT_OK


def _cmd_reduced(args) -> int:
    net = fileio.read_edgelist(args.infile)
    layer, omega = _constant_model(net)
    blocks = constant_model_blocks(layer, omega, net.n_layers)
    m = min(args.top, net.n_nodes)
    table = blockdft.eigenvalue_table(blocks, m)
    cosines = np.array(
        [blockdft.block_cosine(k, net.n_layers) for k in range(net.n_layers)]
    )
    fileio.write_reduced_csv(args.out, table, cosines)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="supralap",
        description="Supra-Laplacian spectra of temporal multilayer networks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a benchmark temporal network")
    gen.add_argument(
        "--model",
        required=True,
        choices=["er", "constant-er", "sales-pardo", "constant-sales-pardo"],
    )
    gen.add_argument("--n", type=int, required=True, help="nodes per layer")
    gen.add_argument("--p", type=float, help="ER edge probability")
    gen.add_argument("--t", type=int, required=True, help="number of layers")
    gen.add_argument("--omega", type=float, required=True, help="coupling weight")
    gen.add_argument("--coupling", choices=[PATH, PERIODIC], default=PATH)
    gen.add_argument("--seed", type=int, required=True)
    gen.add_argument("--levels", type=int, default=3)
    gen.add_argument("--branching", type=int, default=4)
    gen.add_argument("--avg-degree", type=float, default=16.0, dest="avg_degree")
    gen.add_argument("--rho", type=float, default=1.0)
    gen.add_argument("--out", required=True)
    gen.set_defaults(func=_cmd_gen)

    spectrum = sub.add_parser("spectrum", help="compute the supra-Laplacian spectrum")
    spectrum.add_argument("--method", required=True, choices=["dense", "block-dft"])
    spectrum.add_argument("--in", dest="infile", required=True)
    spectrum.add_argument("--out", required=True)
    spectrum.add_argument("--top", type=int, default=None, help="rows to write")
    spectrum.add_argument("--vectors", help="eigenvector sidecar CSV")
    spectrum.add_argument("--timing", help="timing sidecar JSON")
    spectrum.set_defaults(func=_cmd_spectrum)

    ap = sub.add_parser("approx", help="zero-mode approximation residuals")
    ap.add_argument("--in", dest="infile", required=True)
    ap.add_argument("--out", required=True, help="JSON report path")
    ap.add_argument("--csv", help="epsilon CSV path (default: out with .csv)")
    ap.add_argument("--top", type=int, default=100)
    ap.add_argument("--ratio", type=float, default=approx.DEFAULT_RATIO_THRESHOLD)
    ap.add_argument("--floor", type=float, default=approx.DEFAULT_ABS_FLOOR)
    ap.set_defaults(func=_cmd_approx)

    sweep = sub.add_parser(
        "approx-sweep", help="residual profiles over a (p, omega) grid of ER draws"
    )
    sweep.add_argument("--n", type=int, required=True)
    sweep.add_argument("--t", type=int, required=True)
    sweep.add_argument("--coupling", choices=[PATH, PERIODIC], default=PATH)
    sweep.add_argument(
        "--grid", nargs=2, required=True, metavar=("p=...", "omega=..."),
        help="e.g. --grid p=0.03,0.1 omega=0.01,1",
    )
    sweep.add_argument("--seeds", type=int, required=True)
    sweep.add_argument("--top", type=int, default=100)
    sweep.add_argument("--ratio", type=float, default=approx.DEFAULT_RATIO_THRESHOLD)
    sweep.add_argument("--floor", type=float, default=approx.DEFAULT_ABS_FLOOR)
    sweep.add_argument("--jobs", type=int, default=1)
    sweep.add_argument("--out", required=True)
    sweep.add_argument("--stars", help="per-seed lambda-star CSV")
    sweep.set_defaults(func=_cmd_approx_sweep)

    reduced = sub.add_parser(
        "reduced", help="per-frequency eigenvalue table of a constant model"
    )
    reduced.add_argument("--in", dest="infile", required=True)
    reduced.add_argument("--out", required=True)
    reduced.add_argument("--top", type=int, default=100)
    reduced.set_defaults(func=_cmd_reduced)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except (argparse.ArgumentTypeError, FileFormatError, FileNotFoundError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (GenerationFailedError, InfeasibleCalibrationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GENERATION
    except MethodMismatchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_METHOD
    except (NoConvergenceError, FloatingPointError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except SupralapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
