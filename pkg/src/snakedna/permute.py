"""Snake row permutation and the keyed Fisher-Yates shuffle with exact inverse.

The snake keeps odd rows (1-based) and reverses even rows; applying it twice
is the identity, so it is its own inverse. The shuffle consumes one chaotic
draw per position: for position i the exchange partner is
j = i + min(floor(draw * (L - i)), L - i - 1), which avoids modulo bias and
is branch-free. Decryption never persists the trace; it regenerates the same
draws from the key and replays the exchanges backwards.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from snakedna import _kernels
from snakedna.errors import DrawCountMismatchError, TraceLengthMismatchError
from snakedna.imagegrid import PixelGrid


@dataclass(frozen=True)
class ShuffleTrace:
    """Record of the exchanges: entry k is the swap (k, targets[k])."""

    targets: np.ndarray  # int64, k <= targets[k] < L

    def __len__(self) -> int:
        return len(self.targets)

    @property
    def swaps(self) -> list[tuple[int, int]]:
        return [(i, int(j)) for i, j in enumerate(self.targets)]


def snake(grid: PixelGrid) -> PixelGrid:
    """Reverse every even row (1-based); involution, preserves shape and values."""
    arr = grid.pixels.copy()
    arr[1::2] = arr[1::2, ::-1]
    return PixelGrid(arr)


def _as_code_array(seq) -> tuple[np.ndarray, bool]:
    if isinstance(seq, str):
        return np.frombuffer(seq.encode("ascii"), dtype=np.uint8), True
    return np.asarray(seq, dtype=np.uint8), False


def swap_targets(draws: np.ndarray, length: int) -> np.ndarray:
    """Exchange partner for each position, from one draw in (0, 1) per position."""
    draws = np.asarray(draws, dtype=np.float64)
    if draws.shape != (max(length - 1, 0),):
        raise DrawCountMismatchError(
            f"need {max(length - 1, 0)} draws for a length-{length} sequence, got {draws.shape[0]}"
        )
    if length < 2:
        return np.empty(0, dtype=np.int64)
    span = length - np.arange(length - 1, dtype=np.int64)  # L, L-1, ..., 2
    offset = (draws * span).astype(np.int64)  # floor, draws are non-negative
    np.minimum(offset, span - 1, out=offset)
    return np.arange(length - 1, dtype=np.int64) + offset


def keyed_shuffle(seq, draws: np.ndarray):
    """Fisher-Yates permutation of seq driven by draws; returns (permuted, trace).

    seq may be a str (returned as str) or a uint8 array (returned as uint8
    array). len(draws) must be len(seq) - 1.
    """
    values, was_str = _as_code_array(seq)
    targets = swap_targets(draws, len(values))
    out = _kernels.apply_swaps(values, targets)
    if was_str:
        return out.tobytes().decode("ascii"), ShuffleTrace(targets)
    return out, ShuffleTrace(targets)


def invert_shuffle(seq, trace: ShuffleTrace):
    """Replay the trace's exchanges in reverse order; exact inverse of keyed_shuffle."""
    values, was_str = _as_code_array(seq)
    targets = np.asarray(trace.targets, dtype=np.int64)
    if targets.shape != (max(len(values) - 1, 0),):
        raise TraceLengthMismatchError(
            f"trace length {targets.shape[0]} does not match sequence length {len(values)}"
        )
    out = _kernels.invert_swaps(values, targets)
    if was_str:
        return out.tobytes().decode("ascii")
    return out
