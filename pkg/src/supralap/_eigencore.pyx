# cython: language_level=3
"""Compiled eigensolver kernels.

Same algorithm as the pure fallback (`supralap._eigenpure`): Householder
reduction to tridiagonal form, then implicit-shift QL iteration with
accumulated transformations. Inner loops run over contiguous rows so the
compiler can vectorize the rank updates and plane rotations.
"""

import numpy as np

from libc.math cimport fabs, hypot, sqrt

cdef double EPS = 2.220446049250313e-16


cpdef void tridiagonalize(double[:, ::1] z, double[::1] d, double[::1] e,
                          double[::1] hs):
    """Householder-reduce symmetric z in place; z becomes the orthogonal
    basis (columns) with z_in = z_out @ tridiag(d, e) @ z_out.T."""
    cdef Py_ssize_t n = z.shape[0]
    cdef Py_ssize_t i, j, k, l
    cdef double scale, h, f, g, kk, inv_scale, inv_h
    cdef double[::1] p = np.zeros(n)
    cdef double[::1] q = np.zeros(n)

    for i in range(n - 1, 0, -1):
        l = i - 1
        if l == 0:
            e[i] = z[i, 0]
            continue
        scale = 0.0
        for k in range(i):
            scale += fabs(z[i, k])
        if scale == 0.0:
            e[i] = z[i, l]
            continue
        inv_scale = 1.0 / scale
        h = 0.0
        for k in range(i):
            z[i, k] *= inv_scale
            h += z[i, k] * z[i, k]
        f = z[i, l]
        g = -sqrt(h) if f >= 0.0 else sqrt(h)
        e[i] = scale * g
        h -= f * g
        z[i, l] = f - g
        inv_h = 1.0 / h
        # p = (leading block) @ u / h; both triangles of the block are valid.
        for j in range(i):
            f = 0.0
            for k in range(i):
                f += z[j, k] * z[i, k]
            p[j] = f * inv_h
        kk = 0.0
        for j in range(i):
            kk += z[i, j] * p[j]
        kk *= 0.5 * inv_h
        for j in range(i):
            q[j] = p[j] - kk * z[i, j]
        for j in range(i):
            f = z[i, j]
            g = q[j]
            for k in range(i):
                z[j, k] -= f * q[k] + g * z[i, k]
        for j in range(i):
            z[j, i] = z[i, j] * inv_h
        hs[i] = h

    for i in range(n):
        if hs[i] != 0.0:
            for j in range(i):
                p[j] = 0.0
            for k in range(i):
                f = z[i, k]
                for j in range(i):
                    p[j] += f * z[k, j]
            for k in range(i):
                f = z[k, i]
                for j in range(i):
                    z[k, j] -= f * p[j]
        d[i] = z[i, i]
        z[i, i] = 1.0
        for j in range(i):
            z[i, j] = 0.0
            z[j, i] = 0.0


cpdef int tql2(double[::1] d, double[::1] e, double[:, ::1] qt, int max_iter):
    """Implicit-shift QL on tridiag(d, e); rotates the rows of qt along.

    Returns 0 on success, 1 + eigenvalue index on iteration-cap overrun.
    """
    cdef Py_ssize_t n = d.shape[0]
    cdef Py_ssize_t i, k, l, m
    cdef int iters, underflow
    cdef double b, c, dd, f, g, p, r, s, t0, t1

    if n == 1:
        return 0
    for i in range(1, n):
        e[i - 1] = e[i]
    e[n - 1] = 0.0
    for l in range(n):
        iters = 0
        while True:
            m = l
            while m < n - 1:
                dd = fabs(d[m]) + fabs(d[m + 1])
                if fabs(e[m]) <= EPS * dd:
                    break
                m += 1
            if m == l:
                break
            if iters == max_iter:
                return 1 + <int> l
            iters += 1
            g = (d[l + 1] - d[l]) / (2.0 * e[l])
            r = hypot(g, 1.0)
            g = d[m] - d[l] + e[l] / (g + (r if g >= 0.0 else -r))
            s = 1.0
            c = 1.0
            p = 0.0
            underflow = 0
            for i in range(m - 1, l - 1, -1):
                f = s * e[i]
                b = c * e[i]
                r = hypot(f, g)
                e[i + 1] = r
                if r == 0.0:
                    d[i + 1] -= p
                    e[m] = 0.0
                    underflow = 1
                    break
                s = f / r
                c = g / r
                g = d[i + 1] - p
                r = (d[i] - g) * s + 2.0 * c * b
                p = s * r
                d[i + 1] = g + p
                g = c * r - b
                for k in range(n):
                    t0 = qt[i, k]
                    t1 = qt[i + 1, k]
                    qt[i, k] = c * t0 - s * t1
                    qt[i + 1, k] = s * t0 + c * t1
            if underflow:
                continue
            d[l] -= p
            e[l] = g
            e[m] = 0.0
    return 0


def decompose(a, int max_iter=64):
    """Full symmetric eigendecomposition; mirrors `_eigenpure.decompose`."""
    z = np.array(a, dtype=np.float64, order="C")
    n = z.shape[0]
    d = np.zeros(n)
    e = np.zeros(n)
    hs = np.zeros(n)
    tridiagonalize(z, d, e, hs)
    qt = np.ascontiguousarray(z.T)
    cdef int status = tql2(d, e, qt, max_iter)
    return d, qt.T, status
