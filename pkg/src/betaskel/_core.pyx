# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled inner loop for pair blocking thresholds.

Same arithmetic and operation order as ``_kernels_py.pair_death_betas``; the
extension is built with floating-point contraction disabled so results match
the numpy fallback bit for bit.
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport INFINITY, sqrt

cnp.import_array()


def pair_death_betas(points, pairs, double eps_rel, bint closed):
    """Death beta for each candidate pair against all other points."""
    cdef const double[:, ::1] pts = np.ascontiguousarray(points, dtype=np.float64)
    cdef const cnp.int64_t[:, ::1] prs = np.ascontiguousarray(pairs, dtype=np.int64)
    cdef Py_ssize_t n = pts.shape[0]
    cdef Py_ssize_t m = prs.shape[0]
    out_arr = np.empty(m, dtype=np.float64)
    cdef double[::1] out = out_arr
    cdef Py_ssize_t k, r, i, j
    cdef double px, py, qx, qy, vx, vy, d2, d, s, e2
    cdef double u1x, u1y, u2x, u2y, a1, a2, n1, n2, den1, den2, t1, t2, t, best
    cdef double sign = 1.0 if closed else -1.0

    with nogil:
        for k in range(m):
            i = prs[k, 0]
            j = prs[k, 1]
            px = pts[i, 0]
            py = pts[i, 1]
            qx = pts[j, 0]
            qy = pts[j, 1]
            vx = qx - px
            vy = qy - py
            d2 = vx * vx + vy * vy
            d = sqrt(d2)
            s = sign * (eps_rel * d2)
            e2 = eps_rel * d
            e2 = e2 * e2
            best = INFINITY
            for r in range(n):
                if r == i or r == j:
                    continue
                u1x = pts[r, 0] - px
                u1y = pts[r, 1] - py
                a1 = u1x * vx + u1y * vy
                den1 = 2.0 * (a1 + s)
                if den1 <= 0.0:
                    continue
                u2x = pts[r, 0] - qx
                u2y = pts[r, 1] - qy
                a2 = -(u2x * vx + u2y * vy)
                den2 = 2.0 * (a2 + s)
                if den2 <= 0.0:
                    continue
                n1 = u1x * u1x + u1y * u1y - e2
                if n1 < 0.0:
                    n1 = 0.0
                n2 = u2x * u2x + u2y * u2y - e2
                if n2 < 0.0:
                    n2 = 0.0
                t1 = n1 / den1
                t2 = n2 / den2
                t = t1 if t1 >= t2 else t2
                if t < best:
                    best = t
            out[k] = 2.0 * best
    return out_arr
