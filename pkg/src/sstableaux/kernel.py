"""Backtracking kernel selection.

The compiled extension is used when it imports; otherwise the pure-Python
implementation is used.  :func:`set_backend` switches explicitly.
"""

from . import _pykernel

try:
    from . import _ckernel
except ImportError:  # extension not built
    _ckernel = None

BACKENDS = {"python": _pykernel}
if _ckernel is not None:
    BACKENDS["compiled"] = _ckernel

_active = "compiled" if _ckernel is not None else "python"


def backend() -> str:
    """Name of the active backend."""
    return _active


def set_backend(name: str) -> None:
    global _active
    if name not in BACKENDS:
        raise ValueError(f"backend {name!r} unavailable; have {sorted(BACKENDS)}")
    _active = name


def enumerate_fillings(shape, weight):
    return BACKENDS[_active].enumerate_fillings(shape, weight)


def count_fillings(shape, weight):
    return BACKENDS[_active].count_fillings(shape, weight)
