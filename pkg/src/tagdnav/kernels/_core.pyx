# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels: ray casting against axis-aligned rectangles and
brute-force nearest-neighbor search. Mirrors `_numpy_impl` exactly."""

import numpy as np

cimport numpy as cnp
from libc.math cimport cos, sin, sqrt

cnp.import_array()


def raycast_rects(double ox, double oy, angles, rects, double max_range):
    angles_arr = np.ascontiguousarray(angles, dtype=np.float64)
    rects_arr = np.ascontiguousarray(np.asarray(rects, dtype=np.float64).reshape(-1, 4))
    cdef double[::1] ang = angles_arr
    cdef double[:, ::1] rc = rects_arr
    cdef Py_ssize_t n_beams = ang.shape[0]
    cdef Py_ssize_t n_rects = rc.shape[0]
    out_arr = np.empty(n_beams, dtype=np.float64)
    cdef double[::1] out = out_arr

    cdef Py_ssize_t b, m
    cdef double dx, dy, best, t1, t2, tmp, tmin, tmax
    for b in range(n_beams):
        dx = cos(ang[b])
        dy = sin(ang[b])
        best = max_range
        for m in range(n_rects):
            if dx != 0.0:
                t1 = (rc[m, 0] - ox) / dx
                t2 = (rc[m, 2] - ox) / dx
                if t1 > t2:
                    tmp = t1; t1 = t2; t2 = tmp
                tmin = t1
                tmax = t2
            else:
                if ox < rc[m, 0] or ox > rc[m, 2]:
                    continue
                tmin = -1e300
                tmax = 1e300
            if dy != 0.0:
                t1 = (rc[m, 1] - oy) / dy
                t2 = (rc[m, 3] - oy) / dy
                if t1 > t2:
                    tmp = t1; t1 = t2; t2 = tmp
                if t1 > tmin:
                    tmin = t1
                if t2 < tmax:
                    tmax = t2
            else:
                if oy < rc[m, 1] or oy > rc[m, 3]:
                    continue
            if tmin < 0.0:
                tmin = 0.0
            if tmax < tmin:
                continue
            if tmin < best:
                best = tmin
        out[b] = best
    return out_arr


def nearest_neighbors(src, dst):
    src_arr = np.ascontiguousarray(np.asarray(src, dtype=np.float64).reshape(-1, 2))
    dst_arr = np.ascontiguousarray(np.asarray(dst, dtype=np.float64).reshape(-1, 2))
    cdef double[:, ::1] s = src_arr
    cdef double[:, ::1] d = dst_arr
    cdef Py_ssize_t n = s.shape[0]
    cdef Py_ssize_t m = d.shape[0]
    idx_arr = np.empty(n, dtype=np.int64)
    dist_arr = np.empty(n, dtype=np.float64)
    cdef long long[::1] idx = idx_arr
    cdef double[::1] dist = dist_arr

    cdef Py_ssize_t i, j, best_j
    cdef double best, ddx, ddy, d2
    for i in range(n):
        best = 1e300
        best_j = 0
        for j in range(m):
            ddx = s[i, 0] - d[j, 0]
            ddy = s[i, 1] - d[j, 1]
            d2 = ddx * ddx + ddy * ddy
            if d2 < best:
                best = d2
                best_j = j
        idx[i] = best_j
        dist[i] = sqrt(best)
    return idx_arr, dist_arr
