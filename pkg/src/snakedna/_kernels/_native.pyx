# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernel backend for the sequential hot loops.

Must stay bit-identical to the pure backend: the logistic recurrence is
``t = 1.0 - x; x = (r * x) * t`` in plain IEEE doubles (the build passes
-ffp-contract=off so no FMA contraction can change rounding).
"""

import numpy as np

from snakedna.errors import DegenerateStreamError


def logistic_stream(double r, double x0, long burn_in, long n):
    """Iterate the logistic map from x0, drop burn_in iterates, emit the next n."""
    cdef double x = x0
    cdef double t
    cdef long i
    out = np.empty(n, dtype=np.float64)
    cdef double[::1] view = out
    for i in range(burn_in):
        t = 1.0 - x
        x = (r * x) * t
        if x == 0.0 or x == 1.0:
            raise DegenerateStreamError(
                f"trajectory hit {x} during burn-in (r={r!r}, x0={x0!r})"
            )
    for i in range(n):
        t = 1.0 - x
        x = (r * x) * t
        if x == 0.0 or x == 1.0:
            raise DegenerateStreamError(
                f"trajectory hit {x} at emitted index {i} (r={r!r}, x0={x0!r})"
            )
        view[i] = x
    return out


def apply_swaps(values, targets):
    """Exchange positions (i, targets[i]) for i ascending; returns a new array."""
    out = np.array(values, dtype=np.uint8, copy=True)
    cdef unsigned char[::1] v = out
    cdef const long long[::1] t = targets
    cdef Py_ssize_t i, j
    cdef unsigned char tmp
    for i in range(t.shape[0]):
        j = t[i]
        tmp = v[i]
        v[i] = v[j]
        v[j] = tmp
    return out


def invert_swaps(values, targets):
    """Exchange positions (i, targets[i]) for i descending; inverse of apply_swaps."""
    out = np.array(values, dtype=np.uint8, copy=True)
    cdef unsigned char[::1] v = out
    cdef const long long[::1] t = targets
    cdef Py_ssize_t i, j
    cdef unsigned char tmp
    for i in range(t.shape[0] - 1, -1, -1):
        j = t[i]
        tmp = v[i]
        v[i] = v[j]
        v[j] = tmp
    return out


def substitute_bytes(values, selectors, tables):
    """Per-byte lookup: out[i] = tables[selectors[i], values[i]]."""
    out = np.empty(len(values), dtype=np.uint8)
    cdef unsigned char[::1] o = out
    cdef const unsigned char[::1] v = values
    cdef const unsigned char[::1] s = selectors
    cdef const unsigned char[:, ::1] tab = tables
    cdef Py_ssize_t i
    for i in range(v.shape[0]):
        o[i] = tab[s[i], v[i]]
    return out
