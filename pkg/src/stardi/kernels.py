"""Backend selection for the search kernels.

The compiled extension (Cython) is used when it imported cleanly and the
instance fits in 64-bit masks; otherwise the pure-Python twin takes over.
Set STARDI_KERNEL=python or STARDI_KERNEL=compiled to force a backend.
Both backends explore identical search trees, so results never depend on
which one ran.
"""

from __future__ import annotations

import os

from . import _kernels_py

try:
    from . import _kernels_cy
except ImportError:  # extension not built on this install
    _kernels_cy = None

_env = os.environ.get("STARDI_KERNEL")
if _env in (None, ""):
    _default = _kernels_cy if _kernels_cy is not None else _kernels_py
elif _env == "python":
    _default = _kernels_py
elif _env == "compiled":
    if _kernels_cy is None:
        raise ImportError(
            "STARDI_KERNEL=compiled but the stardi._kernels_cy extension is not built"
        )
    _default = _kernels_cy
else:
    raise ValueError(f"unknown STARDI_KERNEL value {_env!r}")


def backend_name() -> str:
    """Name of the default backend: "compiled" or "python"."""
    return _default.BACKEND


def available_backends() -> tuple[str, ...]:
    return ("python",) if _kernels_cy is None else ("compiled", "python")


def get_backend(name: str):
    """The kernel module for an explicit backend name."""
    if name == "python":
        return _kernels_py
    if name == "compiled":
        if _kernels_cy is None:
            raise ValueError("compiled backend is not available")
        return _kernels_cy
    raise ValueError(f"unknown backend {name!r}")


def _module_for(n: int):
    limit = _default.MAX_VERTICES
    if limit is not None and n > limit:
        return _kernels_py
    return _default


def search_acyclic(n, k, d, out_masks, order):
    return _module_for(n).search_acyclic(n, k, d, out_masks, order)


def search_circular(n, k, d, out_masks, in_masks, order):
    return _module_for(n).search_circular(n, k, d, out_masks, in_masks, order)


def search_tree(n, k, d, adj_masks, order):
    return _module_for(n).search_tree(n, k, d, adj_masks, order)
