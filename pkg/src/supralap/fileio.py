"""File formats: layered edge lists, spectrum/reduced/sweep CSVs, JSON reports.

The edge-list format is line-oriented text:

    # supralap v1 N=<int> T=<int>
    <t> <i> <j>            one line per edge; t is the 1-based layer,
                           i < j are 0-based node ids
    # weights <uniform|per-node> <path|periodic>
    <omega>                uniform mode: a single value
    <t> <i> <omega>        per-node mode: one line per (pair, node);
                           pair t couples layers t and t+1 (T wraps to 1)

The weights section is optional; a file without one reads back with uniform
weight 0 and path coupling. Floats are written with 17 significant digits,
which round-trips float64 losslessly, and all writers are atomic (temp file
+ rename). Writing is deterministic, so write -> read -> write is
byte-identical.
"""

from __future__ import annotations

import json
import os
import tempfile
from pathlib import Path
from typing import Any, Iterable

import numpy as np

from supralap.errors import SupralapError
from supralap.graph import LayerGraph
from supralap.supra import PATH, PERIODIC, InterLayerWeights, TemporalNetwork

__all__ = [
    "FileFormatError",
    "read_edgelist",
    "write_edgelist",
    "write_approx_csv",
    "write_approx_json",
    "write_reduced_csv",
    "write_spectrum_csv",
    "write_sweep_csv",
    "write_timing_json",
    "write_vectors_csv",
]

MAGIC = "# supralap v1"
WEIGHTS_MARK = "# weights"


class FileFormatError(SupralapError):
    """An input file does not conform to the documented format."""


def fmt(x: float) -> str:
    return format(float(x), ".17g")


def atomic_write_text(path: str | Path, text: str) -> None:
    path = Path(path)
    fd, tmp = tempfile.mkstemp(dir=path.parent or Path("."), suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as handle:
            handle.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def write_edgelist(path: str | Path, net: TemporalNetwork) -> None:
    n, t = net.n_nodes, net.n_layers
    lines = [f"{MAGIC} N={n} T={t}"]
    for t_idx, layer in enumerate(net.layers, start=1):
        rows, cols = np.nonzero(np.triu(layer.adjacency))
        lines.extend(f"{t_idx} {i} {j}" for i, j in zip(rows, cols))
    w = net.weights
    if w.is_uniform:
        lines.append(f"{WEIGHTS_MARK} uniform {w.coupling}")
        lines.append(fmt(w.omega))
    else:
        lines.append(f"{WEIGHTS_MARK} per-node {w.coupling}")
        for pair in range(w.n_pairs(t)):
            values = w.pair_values(pair, n, t)
            lines.extend(f"{pair + 1} {i} {fmt(v)}" for i, v in enumerate(values))
    atomic_write_text(path, "\n".join(lines) + "\n")


def _parse_header(line: str) -> tuple[int, int]:
    parts = line.split()
    if (
        len(parts) != 5
        or parts[:3] != ["#", "supralap", "v1"]
        or not parts[3].startswith("N=")
        or not parts[4].startswith("T=")
    ):
        raise FileFormatError(f"bad header line: {line!r}")
    try:
        return int(parts[3][2:]), int(parts[4][2:])
    except ValueError as exc:
        raise FileFormatError(f"bad header line: {line!r}") from exc


def read_edgelist(path: str | Path) -> TemporalNetwork:
    text = Path(path).read_text()
    lines = text.splitlines()
    if not lines:
        raise FileFormatError("empty file")
    n, t = _parse_header(lines[0])
    if n < 1 or t < 2:
        raise FileFormatError(f"need N >= 1 and T >= 2, got N={n} T={t}")

    adjacencies = [np.zeros((n, n)) for _ in range(t)]
    pos = 1
    while pos < len(lines) and not lines[pos].startswith("#"):
        parts = lines[pos].split()
        if len(parts) != 3:
            raise FileFormatError(f"bad edge line {pos + 1}: {lines[pos]!r}")
        try:
            layer, i, j = (int(p) for p in parts)
        except ValueError as exc:
            raise FileFormatError(f"bad edge line {pos + 1}: {lines[pos]!r}") from exc
        if not (1 <= layer <= t and 0 <= i < j < n):
            raise FileFormatError(f"edge out of range at line {pos + 1}: {lines[pos]!r}")
        adjacencies[layer - 1][i, j] = adjacencies[layer - 1][j, i] = 1.0
        pos += 1

    if pos < len(lines):
        parts = lines[pos].split()
        if parts[:2] != ["#", "weights"] or len(parts) != 4:
            raise FileFormatError(f"bad weights marker: {lines[pos]!r}")
        mode, coupling = parts[2], parts[3]
        if coupling not in (PATH, PERIODIC):
            raise FileFormatError(f"unknown coupling {coupling!r}")
        pos += 1
        if mode == "uniform":
            if pos >= len(lines):
                raise FileFormatError("missing uniform weight value")
            try:
                omega = float(lines[pos])
            except ValueError as exc:
                raise FileFormatError(f"bad weight value: {lines[pos]!r}") from exc
            pos += 1
            weights = InterLayerWeights.uniform(omega, coupling)
        elif mode == "per-node":
            n_pairs = t if coupling == PERIODIC else t - 1
            table = np.zeros((n_pairs, n))
            while pos < len(lines) and lines[pos].strip():
                parts = lines[pos].split()
                if len(parts) != 3:
                    raise FileFormatError(f"bad weight line {pos + 1}: {lines[pos]!r}")
                try:
                    pair, node, value = int(parts[0]), int(parts[1]), float(parts[2])
                except ValueError as exc:
                    raise FileFormatError(
                        f"bad weight line {pos + 1}: {lines[pos]!r}"
                    ) from exc
                if not (1 <= pair <= n_pairs and 0 <= node < n):
                    raise FileFormatError(
                        f"weight out of range at line {pos + 1}: {lines[pos]!r}"
                    )
                table[pair - 1, node] = value
                pos += 1
            weights = InterLayerWeights.per_node(table, coupling)
        else:
            raise FileFormatError(f"unknown weights mode {mode!r}")
    else:
        weights = InterLayerWeights.uniform(0.0, PATH)

    while pos < len(lines):
        if lines[pos].strip():
            raise FileFormatError(f"trailing content at line {pos + 1}: {lines[pos]!r}")
        pos += 1

    try:
        layers = tuple(LayerGraph(a) for a in adjacencies)
        return TemporalNetwork(layers=layers, weights=weights)
    except ValueError as exc:
        raise FileFormatError(f"invalid temporal network in {path}: {exc}") from exc


SPECTRUM_HEADER = "index,eigenvalue,k,method"
REDUCED_HEADER = "k,j,eigenvalue,cos"
APPROX_HEADER = "index,eigenvalue,epsilon"
SWEEP_HEADER = "p,omega,index,mean_epsilon,sd_epsilon"


def write_spectrum_csv(
    path: str | Path,
    eigenvalues: np.ndarray,
    block_indices: np.ndarray | None,
    method: str,
    top: int | None = None,
) -> None:
    count = eigenvalues.size if top is None else min(top, eigenvalues.size)
    lines = [SPECTRUM_HEADER]
    for i in range(count):
        k = "" if block_indices is None else str(int(block_indices[i]))
        lines.append(f"{i + 1},{fmt(eigenvalues[i])},{k},{method}")
    atomic_write_text(path, "\n".join(lines) + "\n")


def write_vectors_csv(path: str | Path, columns: np.ndarray) -> None:
    """Eigenvector sidecar: one row per component, one column per vector."""
    n_rows, n_cols = columns.shape
    lines = [",".join(["component", *(f"v{i + 1}" for i in range(n_cols))])]
    for r in range(n_rows):
        lines.append(",".join([str(r + 1), *(fmt(x) for x in columns[r])]))
    atomic_write_text(path, "\n".join(lines) + "\n")


def write_reduced_csv(
    path: str | Path, table: np.ndarray, cosines: np.ndarray
) -> None:
    """Per-frequency eigenvalue table; rows grouped by frequency k."""
    m, t = table.shape
    lines = [REDUCED_HEADER]
    for k in range(t):
        for j in range(m):
            lines.append(f"{k},{j + 1},{fmt(table[j, k])},{fmt(cosines[k])}")
    atomic_write_text(path, "\n".join(lines) + "\n")


def write_approx_csv(path: str | Path, eigenvalues, errors) -> None:
    lines = [APPROX_HEADER]
    for i, (lam, eps) in enumerate(zip(eigenvalues, errors)):
        lines.append(f"{i + 1},{fmt(lam)},{fmt(eps)}")
    atomic_write_text(path, "\n".join(lines) + "\n")


def write_approx_json(path: str | Path, report) -> None:
    payload: dict[str, Any] = {
        "lambda_star_index": report.lambda_star_index,
        "ratio_threshold": report.ratio_threshold,
        "abs_floor": report.abs_floor,
        "n_vectors": int(report.errors.size),
        "config": report.config,
    }
    atomic_write_text(path, json.dumps(payload, sort_keys=True, indent=2) + "\n")


def write_sweep_csv(path: str | Path, rows: Iterable[tuple]) -> None:
    """Aggregate sweep output: (p, omega, index, mean, sd) per row."""
    lines = [SWEEP_HEADER]
    for p, omega, index, mean, sd in rows:
        lines.append(f"{fmt(p)},{fmt(omega)},{index},{fmt(mean)},{fmt(sd)}")
    atomic_write_text(path, "\n".join(lines) + "\n")


def write_stars_csv(path: str | Path, rows: Iterable[tuple]) -> None:
    lines = ["p,omega,seed,lambda_star_index"]
    for p, omega, seed, star in rows:
        star_txt = "" if star is None else str(star)
        lines.append(f"{fmt(p)},{fmt(omega)},{seed},{star_txt}")
    atomic_write_text(path, "\n".join(lines) + "\n")


def write_timing_json(path: str | Path, payload: dict[str, Any]) -> None:
    atomic_write_text(path, json.dumps(payload, sort_keys=True, indent=2) + "\n")
