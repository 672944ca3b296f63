"""Kernel backend selection.

The compiled extension is preferred when present; the pure-Python module is
the fallback. Both expose the same four functions with bit-identical output,
so the choice only affects speed. Set SNAKEDNA_KERNELS=pure|native to force
a backend (native raises if the extension is not built), or call
use_backend() at runtime, e.g. from the benchmark harness.
"""

from __future__ import annotations

import os

from snakedna._kernels import pure as _pure

try:
    from snakedna._kernels import _native as _native
except ImportError:
    _native = None

_BACKENDS = {"pure": _pure}
if _native is not None:
    _BACKENDS["native"] = _native


def _initial_backend() -> str:
    forced = os.environ.get("SNAKEDNA_KERNELS", "").strip().lower()
    if forced:
        if forced not in _BACKENDS:
            raise ImportError(
                f"SNAKEDNA_KERNELS={forced!r} but available backends are {sorted(_BACKENDS)}"
            )
        return forced
    return "native" if _native is not None else "pure"


_active_name = _initial_backend()
_active = _BACKENDS[_active_name]


def available_backends() -> list[str]:
    return sorted(_BACKENDS)


def backend_name() -> str:
    """Name of the backend that kernel calls currently dispatch to."""
    return _active_name


def use_backend(name: str) -> None:
    """Switch the active backend; raises ImportError for unavailable names."""
    global _active, _active_name
    if name not in _BACKENDS:
        raise ImportError(f"backend {name!r} not available (have {sorted(_BACKENDS)})")
    _active_name = name
    _active = _BACKENDS[name]


def get_backend(name: str):
    """Return the backend module itself (for side-by-side benchmarking)."""
    if name not in _BACKENDS:
        raise ImportError(f"backend {name!r} not available (have {sorted(_BACKENDS)})")
    return _BACKENDS[name]


def logistic_stream(r, x0, burn_in, n):
    return _active.logistic_stream(r, x0, burn_in, n)


def apply_swaps(values, targets):
    return _active.apply_swaps(values, targets)


def invert_swaps(values, targets):
    return _active.invert_swaps(values, targets)


def substitute_bytes(values, selectors, tables):
    return _active.substitute_bytes(values, selectors, tables)
