"""Kernel selection: compiled ``_speedups`` when importable, else ``_purepy``.

Set ``EDGEPOLY_PURE_PYTHON=1`` to force the fallback.
"""
from __future__ import annotations

import os

from . import _purepy

if os.environ.get("EDGEPOLY_PURE_PYTHON"):
    _impl = _purepy
else:
    try:
        from . import _speedups as _impl
    except ImportError:  # extension not built
        _impl = _purepy

BACKEND = "python" if _impl is _purepy else "cython"

search = _impl.search
classify = _impl.classify
brute_force = _impl.brute_force


def connected_masks(n: int, lo: int, hi: int) -> list[int]:
    if _impl is not _purepy and n <= 11:
        return _impl.connected_masks(n, lo, hi)
    return _purepy.connected_masks(n, lo, hi)


def available_backends() -> dict:
    """Name -> kernel module, for equivalence tests and benchmarks."""
    out = {"python": _purepy}
    try:
        from . import _speedups
    except ImportError:
        pass
    else:
        out["cython"] = _speedups
    return out
