"""Pure NumPy eigensolver kernels.

Fallback used when the compiled extension is unavailable. Same algorithm as
the compiled core: Householder reduction to tridiagonal form followed by
implicit-shift QL iteration with accumulated transformations. The outer loops
run in Python; all O(n) inner work is vectorized, which keeps the fallback
usable up to a few thousand rows (minutes, not hours).

Both kernels are deterministic: no randomness, fixed iteration order.
"""

from __future__ import annotations

import numpy as np

_EPS = np.finfo(np.float64).eps


def tridiagonalize(a: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Reduce a symmetric matrix to tridiagonal form.

    Returns (d, e, q): diagonal, subdiagonal (e[0] = 0) and the accumulated
    orthogonal matrix with q.T @ a @ q tridiagonal. ``a`` is not modified.
    """
    z = np.array(a, dtype=np.float64)
    n = z.shape[0]
    d = np.zeros(n)
    e = np.zeros(n)
    hs = np.zeros(n)  # per-step squared reflector norms; 0 marks "no reflector"

    for i in range(n - 1, 0, -1):
        l = i - 1
        if l == 0:
            e[i] = z[i, 0]
            continue
        row = z[i, :i]
        scale = np.abs(row).sum()
        if scale == 0.0:
            e[i] = z[i, l]
            continue
        row /= scale
        h = row @ row
        f = row[l]
        g = -np.sqrt(h) if f >= 0.0 else np.sqrt(h)
        e[i] = scale * g
        h -= f * g
        row[l] = f - g
        # Symmetric rank-2 update of the leading block: both triangles are
        # kept valid so the matvec below can use plain matrix products.
        p = z[:i, :i] @ row / h
        k = (row @ p) / (2.0 * h)
        q = p - k * row
        z[:i, :i] -= np.outer(row, q) + np.outer(q, row)
        z[:i, i] = row / h  # reflector/h kept in column i for accumulation
        hs[i] = h

    # Accumulate the transformations front to back.
    q = z  # reuse storage, NR-style
    for i in range(n):
        if hs[i] != 0.0:
            g = q[i, :i] @ q[:i, :i]
            q[:i, :i] -= np.outer(q[:i, i], g)
        d[i] = q[i, i]
        q[i, i] = 1.0
        q[i, :i] = 0.0
        q[:i, i] = 0.0
    return d, e, q


def tql2(d: np.ndarray, e: np.ndarray, qt: np.ndarray, max_iter: int = 64) -> int:
    """Implicit-shift QL iteration on a tridiagonal matrix.

    d and e are the diagonal/subdiagonal from `tridiagonalize` (modified in
    place; d receives the eigenvalues, unordered). ``qt`` holds the
    accumulated basis with eigenvectors as ROWS and is rotated in place.
    Returns 0 on success, or 1 + (eigenvalue index) when the per-eigenvalue
    iteration cap is exceeded.
    """
    n = d.shape[0]
    if n == 1:
        return 0
    e[:-1] = e[1:]
    e[-1] = 0.0
    for l in range(n):
        iters = 0
        while True:
            for m in range(l, n - 1):
                if abs(e[m]) <= _EPS * (abs(d[m]) + abs(d[m + 1])):
                    break
            else:
                m = n - 1
            if m == l:
                break
            if iters == max_iter:
                return 1 + l
            iters += 1
            # Wilkinson-style shift from the 2x2 at the deflation point.
            g = (d[l + 1] - d[l]) / (2.0 * e[l])
            r = np.hypot(g, 1.0)
            g = d[m] - d[l] + e[l] / (g + (r if g >= 0.0 else -r))
            s = c = 1.0
            p = 0.0
            underflow = False
            for i in range(m - 1, l - 1, -1):
                f = s * e[i]
                b = c * e[i]
                r = np.hypot(f, g)
                e[i + 1] = r
                if r == 0.0:
                    d[i + 1] -= p
                    e[m] = 0.0
                    underflow = True
                    break
                s = f / r
                c = g / r
                g = d[i + 1] - p
                r = (d[i] - g) * s + 2.0 * c * b
                p = s * r
                d[i + 1] = g + p
                g = c * r - b
                row_i = qt[i].copy()
                qt[i] = c * row_i - s * qt[i + 1]
                qt[i + 1] = s * row_i + c * qt[i + 1]
            if underflow:
                continue
            d[l] -= p
            e[l] = g
            e[m] = 0.0
    return 0


def decompose(a: np.ndarray, max_iter: int = 64) -> tuple[np.ndarray, np.ndarray, int]:
    """Full symmetric eigendecomposition.

    Returns (eigenvalues, eigenvector-columns, status); status as in `tql2`.
    Eigenvalues are NOT sorted here; ordering and sign conventions live in
    the caller.
    """
    d, e, q = tridiagonalize(a)
    qt = np.ascontiguousarray(q.T)
    status = tql2(d, e, qt, max_iter=max_iter)
    return d, qt.T, status
