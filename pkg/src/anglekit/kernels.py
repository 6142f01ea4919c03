"""Kernel dispatch: the compiled extension when available, else pure Python.

Set ``ANGLEKIT_PURE=1`` to force the fallback.
"""
from __future__ import annotations

import os

from . import _fallback

BACKEND = "python"
subset_dfs = _fallback.subset_dfs
grid_cost = _fallback.grid_cost

if not os.environ.get("ANGLEKIT_PURE"):
    try:
        from . import _speedups
    except ImportError:  # pragma: no cover - depends on the build
        pass
    else:
        BACKEND = "cython"
        subset_dfs = _speedups.subset_dfs
        grid_cost = _speedups.grid_cost
