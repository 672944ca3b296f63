"""Pixel-matrix representation and bit-exact binary PGM (P5) I/O.

The on-disk format is deliberately the plainest lossless 8-bit grayscale
container there is: ``P5\\n<width> <height>\\n255\\n`` followed by row-major
pixel bytes. Maxval is fixed at 255. Header comments (``#`` to end of line)
are skipped; trailing bytes after the payload are ignored but reported via
the warnings channel.
"""

from __future__ import annotations

import warnings

import numpy as np

from snakedna.errors import (
    DimensionMismatchError,
    MalformedHeaderError,
    TruncatedPayloadError,
    UnsupportedMaxvalError,
)

_WHITESPACE = b" \t\n\r\x0b\x0c"


class TrailingDataWarning(UserWarning):
    """PGM stream carried bytes past the declared pixel payload."""


class PixelGrid:
    """Immutable M x N matrix of 8-bit intensities.

    ``width`` is the number of columns (N), ``height`` the number of rows (M).
    The pixel array is row-major and marked read-only, so grids are safe to
    share across threads.
    """

    __slots__ = ("_pixels",)

    def __init__(self, pixels: np.ndarray):
        arr = np.asarray(pixels)
        if arr.ndim != 2:
            raise DimensionMismatchError(f"expected a 2-D pixel array, got ndim={arr.ndim}")
        if arr.shape[0] < 1 or arr.shape[1] < 1:
            raise DimensionMismatchError(f"grid must be at least 1x1, got shape {arr.shape}")
        if arr.dtype != np.uint8:
            if not np.issubdtype(arr.dtype, np.integer):
                raise DimensionMismatchError(f"pixel values must be integers, got dtype {arr.dtype}")
            if arr.size and (arr.min() < 0 or arr.max() > 255):
                raise DimensionMismatchError("pixel values must lie in [0, 255]")
            arr = arr.astype(np.uint8)
        else:
            arr = arr.copy()
        arr.flags.writeable = False
        self._pixels = arr

    @classmethod
    def from_raw(cls, width: int, height: int, data) -> "PixelGrid":
        """Build a grid from row-major pixel data; lengths must agree exactly."""
        if width < 1 or height < 1:
            raise DimensionMismatchError(f"width and height must be >= 1, got {width}x{height}")
        flat = np.frombuffer(data, dtype=np.uint8) if isinstance(data, (bytes, bytearray)) else np.asarray(data)
        flat = flat.reshape(-1)
        if flat.size != width * height:
            raise DimensionMismatchError(
                f"data length {flat.size} does not equal width*height = {width * height}"
            )
        return cls(flat.reshape(height, width))

    @property
    def pixels(self) -> np.ndarray:
        """Read-only (height, width) uint8 array."""
        return self._pixels

    @property
    def width(self) -> int:
        return self._pixels.shape[1]

    @property
    def height(self) -> int:
        return self._pixels.shape[0]

    def tobytes(self) -> bytes:
        return self._pixels.tobytes()

    def __eq__(self, other) -> bool:
        if not isinstance(other, PixelGrid):
            return NotImplemented
        return self._pixels.shape == other._pixels.shape and np.array_equal(
            self._pixels, other._pixels
        )

    def __hash__(self):
        return hash((self._pixels.shape, self._pixels.tobytes()))

    def __repr__(self) -> str:
        return f"PixelGrid(width={self.width}, height={self.height})"


def from_raw(width: int, height: int, data) -> PixelGrid:
    return PixelGrid.from_raw(width, height, data)


def _next_token(buf: bytes, pos: int) -> tuple[bytes, int]:
    """Return (token, position after token), skipping whitespace and # comments."""
    n = len(buf)
    while pos < n:
        c = buf[pos : pos + 1]
        if c == b"#":
            eol = buf.find(b"\n", pos)
            if eol < 0:
                raise MalformedHeaderError("unterminated comment in PGM header")
            pos = eol + 1
        elif c in _WHITESPACE:
            pos += 1
        else:
            break
    if pos >= n:
        raise MalformedHeaderError("PGM header ended before all fields were read")
    start = pos
    while pos < n and buf[pos : pos + 1] not in _WHITESPACE and buf[pos : pos + 1] != b"#":
        pos += 1
    return buf[start:pos], pos


def _parse_dim(token: bytes, name: str) -> int:
    if not token.isdigit():
        raise MalformedHeaderError(f"non-numeric {name} field: {token!r}")
    return int(token)


def read_pgm(data: bytes) -> PixelGrid:
    """Parse a binary PGM (P5) byte stream into a PixelGrid.

    Raises MalformedHeaderError, UnsupportedMaxvalError or
    TruncatedPayloadError; warns with TrailingDataWarning if the stream
    continues past the declared payload.
    """
    if not isinstance(data, (bytes, bytearray, memoryview)):
        raise TypeError("read_pgm expects a byte sequence")
    buf = bytes(data)

    magic, pos = _next_token(buf, 0)
    if magic != b"P5":
        raise MalformedHeaderError(f"magic number is {magic!r}, expected b'P5'")
    width_tok, pos = _next_token(buf, pos)
    height_tok, pos = _next_token(buf, pos)
    maxval_tok, pos = _next_token(buf, pos)

    width = _parse_dim(width_tok, "width")
    height = _parse_dim(height_tok, "height")
    maxval = _parse_dim(maxval_tok, "maxval")
    if width < 1 or height < 1:
        raise MalformedHeaderError(f"dimensions must be positive, got {width}x{height}")
    if maxval != 255:
        raise UnsupportedMaxvalError(f"maxval {maxval} not supported, must be 255")

    # Exactly one whitespace byte separates the header from the payload.
    if pos >= len(buf) or buf[pos : pos + 1] not in _WHITESPACE:
        raise MalformedHeaderError("missing whitespace byte between maxval and payload")
    pos += 1

    expected = width * height
    payload = buf[pos : pos + expected]
    if len(payload) < expected:
        raise TruncatedPayloadError(
            f"payload holds {len(payload)} bytes, header declares {expected}"
        )
    extra = len(buf) - pos - expected
    if extra > 0:
        warnings.warn(
            f"ignoring {extra} trailing byte(s) after PGM payload", TrailingDataWarning
        )
    return PixelGrid.from_raw(width, height, payload)


def write_pgm(grid: PixelGrid) -> bytes:
    """Serialize a grid as binary PGM; read_pgm(write_pgm(g)) == g byte-for-byte."""
    header = f"P5\n{grid.width} {grid.height}\n255\n".encode("ascii")
    return header + grid.tobytes()
