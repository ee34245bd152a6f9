"""Kernel backend selection.

Set POLYFENCE_KERNEL=numpy to force the pure-numpy path, or
POLYFENCE_KERNEL=numba to require the compiled path (raising if numba is
missing). Default: numba when importable, numpy otherwise.
"""
import os
from types import SimpleNamespace

KERNEL_ENV = "POLYFENCE_KERNEL"

_FUNCTIONS = (
    "exterior_rows",
    "enclosed_rows",
    "popcount_rows",
    "count_regions",
    "board_stats",
    "dilate_rows",
    "rows_overlap",
    "enumerate_fences",
    "relocation_scan",
)


def _numpy_backend():
    from . import _numpy
    return SimpleNamespace(name="numpy", **{f: getattr(_numpy, f) for f in _FUNCTIONS})


def _numba_backend():
    import numba

    from . import _impl

    jit = numba.njit(cache=True)
    compiled = {}
    # compile bottom-up so the njit functions call each other's compiled forms
    exec_order = (
        "flood", "exterior_rows", "enclosed_rows", "popcount_rows",
        "count_regions", "board_stats", "dilate_rows", "rows_overlap",
        "_pieces_connected", "enumerate_fences", "relocation_scan",
    )
    import numpy as np

    # keep module metadata so numba's on-disk cache can rebuild the env
    glb = {"np": np, "__name__": _impl.__name__}
    for fname in exec_order:
        src = getattr(_impl, fname)
        func = jit(_rebind(src, glb))
        glb[fname] = func
        compiled[fname] = func
    return SimpleNamespace(name="numba", **{f: compiled[f] for f in _FUNCTIONS})


def _rebind(func, glb):
    """Clone a function with globals replaced so compiled callees are used."""
    import types

    return types.FunctionType(func.__code__, glb, func.__name__,
                              func.__defaults__, func.__closure__)


_backends = {}


def get_backend(name: str):
    if name not in _backends:
        if name == "numpy":
            _backends[name] = _numpy_backend()
        elif name == "numba":
            _backends[name] = _numba_backend()
        else:
            raise ValueError(f"unknown kernel backend {name!r}")
    return _backends[name]


def default_backend():
    choice = os.environ.get(KERNEL_ENV, "").strip().lower()
    if choice in ("numpy", "numba"):
        return get_backend(choice)
    try:
        return get_backend("numba")
    except ImportError:
        return get_backend("numpy")


active = default_backend()


def backend_name() -> str:
    return active.name
