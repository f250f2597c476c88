"""Pure-numpy implementations of the hot kernels.

Used when the compiled extension is unavailable (or explicitly forced via
TAGDNAV_KERNELS=python). Same contracts as `tagdnav.kernels._core`.
"""
from __future__ import annotations

import numpy as np


def raycast_rects(ox: float, oy: float, angles: np.ndarray, rects: np.ndarray,
                  max_range: float) -> np.ndarray:
    """Nearest slab-test intersection of rays with axis-aligned rectangles.

    angles: (B,) world-frame ray directions. rects: (M, 4) as
    [xmin, ymin, xmax, ymax]. Returns (B,) distances; rays that hit nothing
    within max_range report max_range. A ray starting inside a rectangle
    reports 0.
    """
    angles = np.asarray(angles, dtype=float)
    rects = np.asarray(rects, dtype=float).reshape(-1, 4)
    n_beams = angles.shape[0]
    if rects.shape[0] == 0:
        return np.full(n_beams, max_range)

    dx = np.cos(angles)
    dy = np.sin(angles)
    xmin, ymin, xmax, ymax = rects[:, 0], rects[:, 1], rects[:, 2], rects[:, 3]

    with np.errstate(divide="ignore", invalid="ignore"):
        tx1 = (xmin[None, :] - ox) / dx[:, None]
        tx2 = (xmax[None, :] - ox) / dx[:, None]
        ty1 = (ymin[None, :] - oy) / dy[:, None]
        ty2 = (ymax[None, :] - oy) / dy[:, None]
    txmin = np.minimum(tx1, tx2)
    txmax = np.maximum(tx1, tx2)
    tymin = np.minimum(ty1, ty2)
    tymax = np.maximum(ty1, ty2)

    # Rays parallel to an axis: the slab is either the whole line or empty.
    par_x = dx == 0.0
    if par_x.any():
        inside_x = (ox >= xmin) & (ox <= xmax)
        txmin[par_x] = np.where(inside_x, -np.inf, np.inf)
        txmax[par_x] = np.where(inside_x, np.inf, -np.inf)
    par_y = dy == 0.0
    if par_y.any():
        inside_y = (oy >= ymin) & (oy <= ymax)
        tymin[par_y] = np.where(inside_y, -np.inf, np.inf)
        tymax[par_y] = np.where(inside_y, np.inf, -np.inf)

    tmin = np.maximum(txmin, tymin)
    tmax = np.minimum(txmax, tymax)
    t_entry = np.where(tmin >= 0.0, tmin, 0.0)
    hit = (tmax >= t_entry) & (tmax >= 0.0)
    t_entry = np.where(hit, t_entry, np.inf)
    return np.minimum(t_entry.min(axis=1), max_range)


def nearest_neighbors(src: np.ndarray, dst: np.ndarray):
    """Brute-force nearest neighbor of each src point among dst points.

    Returns (indices (N,) int64, distances (N,) float64).
    """
    src = np.asarray(src, dtype=float).reshape(-1, 2)
    dst = np.asarray(dst, dtype=float).reshape(-1, 2)
    d2 = ((src[:, None, :] - dst[None, :, :]) ** 2).sum(axis=2)
    idx = np.argmin(d2, axis=1)
    dist = np.sqrt(d2[np.arange(src.shape[0]), idx])
    return idx.astype(np.int64), dist
