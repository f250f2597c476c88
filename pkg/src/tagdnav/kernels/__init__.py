"""Hot-loop kernels with a compiled core and a pure-numpy fallback.

The backend is picked once at import time. Set TAGDNAV_KERNELS=python to
force the numpy fallback, or TAGDNAV_KERNELS=compiled to require the
extension (raises if it is not built). `BACKEND` reports the choice.
"""
from __future__ import annotations

import os

import numpy as np

from . import _numpy_impl

_requested = os.environ.get("TAGDNAV_KERNELS", "auto").lower()
if _requested not in ("auto", "compiled", "python"):
    raise ValueError(f"TAGDNAV_KERNELS must be auto|compiled|python, got {_requested!r}")

if _requested == "python":
    _impl = _numpy_impl
    BACKEND = "python"
else:
    try:
        from . import _core as _impl  # type: ignore[no-redef]

        BACKEND = "compiled"
    except ImportError:
        if _requested == "compiled":
            raise
        _impl = _numpy_impl
        BACKEND = "python"


def raycast_rects(ox: float, oy: float, angles: np.ndarray, rects: np.ndarray,
                  max_range: float) -> np.ndarray:
    """Distance to the nearest rectangle along each ray, capped at max_range."""
    return _impl.raycast_rects(float(ox), float(oy), angles, rects, float(max_range))


def nearest_neighbors(src: np.ndarray, dst: np.ndarray):
    """Index into dst and distance of the closest dst point, per src point."""
    return _impl.nearest_neighbors(src, dst)


def backends() -> dict:
    """Available implementations keyed by name (for benchmarks and parity tests)."""
    found = {"python": _numpy_impl}
    try:
        from . import _core

        found["compiled"] = _core
    except ImportError:
        pass
    return found
