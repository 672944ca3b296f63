"""Pure-Python kernel backend.

Bit-compatibility contract: every function here must produce output that is
byte-identical to the compiled backend. The logistic recurrence is evaluated
as ``t = 1.0 - x; x = (r * x) * t`` in 64-bit IEEE floats with exactly that
association; CPython float arithmetic and the C double arithmetic in the
compiled module agree operation-for-operation, which is what makes
encrypt/decrypt interoperable across backends.
"""

from __future__ import annotations

import numpy as np

from snakedna.errors import DegenerateStreamError


def logistic_stream(r: float, x0: float, burn_in: int, n: int) -> np.ndarray:
    """Iterate the logistic map from x0, drop burn_in iterates, emit the next n."""
    x = float(x0)
    r = float(r)
    for _ in range(burn_in):
        t = 1.0 - x
        x = (r * x) * t
        if x == 0.0 or x == 1.0:
            raise DegenerateStreamError(
                f"trajectory hit {x} during burn-in (r={r!r}, x0={x0!r})"
            )
    out = np.empty(n, dtype=np.float64)
    for i in range(n):
        t = 1.0 - x
        x = (r * x) * t
        if x == 0.0 or x == 1.0:
            raise DegenerateStreamError(
                f"trajectory hit {x} at emitted index {i} (r={r!r}, x0={x0!r})"
            )
        out[i] = x
    return out


def apply_swaps(values: np.ndarray, targets: np.ndarray) -> np.ndarray:
    """Exchange positions (i, targets[i]) for i ascending; returns a new array."""
    out = values.tolist()
    for i, j in enumerate(targets.tolist()):
        out[i], out[j] = out[j], out[i]
    return np.asarray(out, dtype=values.dtype)


def invert_swaps(values: np.ndarray, targets: np.ndarray) -> np.ndarray:
    """Exchange positions (i, targets[i]) for i descending; inverse of apply_swaps."""
    out = values.tolist()
    tlist = targets.tolist()
    for i in range(len(tlist) - 1, -1, -1):
        j = tlist[i]
        out[i], out[j] = out[j], out[i]
    return np.asarray(out, dtype=values.dtype)


def substitute_bytes(values: np.ndarray, selectors: np.ndarray, tables: np.ndarray) -> np.ndarray:
    """Per-byte lookup: out[i] = tables[selectors[i], values[i]]."""
    return tables[selectors, values]
