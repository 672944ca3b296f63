"""Deterministic logistic-map streams and their quantizers.

All key material lives here: a CipherKey is three independent logistic
parameter sets, one per stream consumer (S-box selection, symbol shuffle,
XOR keystream). Stream generation is bit-deterministic: the recurrence
x' = (r * x) * (1 - x) is evaluated in 64-bit IEEE floats with a fixed
association, so the same key always regenerates the same streams, which is
what makes decryption possible without storing any per-image state.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from snakedna import _kernels
from snakedna.errors import InvalidKeyError

CHAOTIC_R_MIN = 3.57
CHAOTIC_R_MAX = 4.0

_KEY_FIELDS = (
    "selector_r",
    "selector_x0",
    "shuffle_r",
    "shuffle_x0",
    "xor_r",
    "xor_x0",
    "burn_in",
)


@dataclass(frozen=True)
class LogisticParams:
    """Control parameter r, initial state x0 and burn-in count for one stream."""

    r: float
    x0: float
    burn_in: int = 1000


@dataclass(frozen=True)
class CipherKey:
    """Three independent logistic streams: S-box selector, shuffle, XOR keystream."""

    selector: LogisticParams
    shuffle: LogisticParams
    xor: LogisticParams


def logistic_step(x: float, r: float) -> float:
    """One map iterate, fixed evaluation order: t = 1 - x, then (r * x) * t."""
    t = 1.0 - x
    return (r * x) * t


def stream(params: LogisticParams, n: int) -> np.ndarray:
    """n float64 iterates after burn-in; raises DegenerateStreamError on 0.0/1.0."""
    return _kernels.logistic_stream(params.r, params.x0, params.burn_in, n)


def quantize_selector(x: float) -> int:
    """Map a state in (0,1) to an S-box index in {0, 1, 2}."""
    return min(int(x * 3.0), 2)


def quantize_byte(x: float) -> int:
    """Map a state in (0,1) to a keystream byte in [0, 255]."""
    return min(int(x * 256.0), 255)


def selector_stream(params: LogisticParams, n: int) -> np.ndarray:
    """n quantized S-box indices as uint8 (vectorized quantize_selector)."""
    xs = stream(params, n)
    return np.minimum((xs * 3.0).astype(np.int64), 2).astype(np.uint8)


def byte_stream(params: LogisticParams, n: int) -> np.ndarray:
    """n keystream bytes as uint8 (vectorized quantize_byte)."""
    xs = stream(params, n)
    return np.minimum((xs * 256.0).astype(np.int64), 255).astype(np.uint8)


def _check_params(name: str, p: LogisticParams) -> None:
    if not isinstance(p.burn_in, int) or isinstance(p.burn_in, bool) or p.burn_in < 0:
        raise InvalidKeyError(f"{name}.burn_in must be a non-negative integer, got {p.burn_in!r}")
    if not (CHAOTIC_R_MIN <= p.r <= CHAOTIC_R_MAX):
        raise InvalidKeyError(
            f"{name}.r = {p.r!r} outside the chaotic regime [{CHAOTIC_R_MIN}, {CHAOTIC_R_MAX}]"
        )
    if not (0.0 < p.x0 < 1.0):
        raise InvalidKeyError(f"{name}.x0 = {p.x0!r} outside the open interval (0, 1)")


def validate_key(key: CipherKey) -> None:
    """Raise InvalidKeyError naming the offending field if any invariant fails."""
    _check_params("selector", key.selector)
    _check_params("shuffle", key.shuffle)
    _check_params("xor", key.xor)


def format_key_text(key: CipherKey) -> str:
    """Canonical key-file text: one name=value per line, fixed field order.

    Floats are written with repr so parsing the text back reproduces the
    exact same 64-bit values. All three streams share one burn_in in the
    file format; writing a key with differing burn-ins is rejected.
    """
    if not (key.selector.burn_in == key.shuffle.burn_in == key.xor.burn_in):
        raise InvalidKeyError("key file format carries a single burn_in shared by all streams")
    lines = [
        f"selector_r={key.selector.r!r}",
        f"selector_x0={key.selector.x0!r}",
        f"shuffle_r={key.shuffle.r!r}",
        f"shuffle_x0={key.shuffle.x0!r}",
        f"xor_r={key.xor.r!r}",
        f"xor_x0={key.xor.x0!r}",
        f"burn_in={key.selector.burn_in}",
    ]
    return "\n".join(lines) + "\n"


def parse_key_text(text: str) -> CipherKey:
    """Parse key-file text; unknown, missing or duplicate names -> InvalidKeyError."""
    values: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        name, sep, value = line.partition("=")
        name = name.strip()
        if not sep:
            raise InvalidKeyError(f"line {lineno}: expected name=value, got {raw!r}")
        if name not in _KEY_FIELDS:
            raise InvalidKeyError(f"line {lineno}: unknown key field {name!r}")
        if name in values:
            raise InvalidKeyError(f"line {lineno}: duplicate key field {name!r}")
        values[name] = value.strip()

    missing = [f for f in _KEY_FIELDS if f not in values]
    if missing:
        raise InvalidKeyError(f"key file is missing fields: {', '.join(missing)}")

    def as_float(name: str) -> float:
        try:
            return float(values[name])
        except ValueError:
            raise InvalidKeyError(f"{name} is not a decimal literal: {values[name]!r}") from None

    try:
        burn_in = int(values["burn_in"])
    except ValueError:
        raise InvalidKeyError(f"burn_in is not an integer: {values['burn_in']!r}") from None

    key = CipherKey(
        selector=LogisticParams(as_float("selector_r"), as_float("selector_x0"), burn_in),
        shuffle=LogisticParams(as_float("shuffle_r"), as_float("shuffle_x0"), burn_in),
        xor=LogisticParams(as_float("xor_r"), as_float("xor_x0"), burn_in),
    )
    validate_key(key)
    return key
