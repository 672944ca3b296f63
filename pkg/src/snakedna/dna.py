"""Nucleotide coding of pixel bytes.

Each byte is read MSB-first as four 2-bit fields. Two fixed field-to-symbol
tables are in play and they are NOT inverses of each other:

  encoding table:  00 -> T   01 -> G   10 -> C   11 -> A
  decoding table:  A -> 00   C -> 01   G -> 10   T -> 11

Composing decode after encode therefore complements every bit, i.e.
decode(encode(byte)) == byte ^ 0xFF. Both tables are kept exactly as defined
because the cipher pipeline uses them asymmetrically; the *_inverse
operations below are the true inverses needed to run the pipeline backwards.

Symbols are stored as a 2-bit code vector (A=0, C=1, G=2, T=3), which makes
the decoding table the identity on codes and the encoding table a bitwise
complement; the string alphabet is the interface contract.
"""

from __future__ import annotations

import numpy as np

from snakedna.errors import LengthMismatchError
from snakedna.imagegrid import PixelGrid

ALPHABET = "ACGT"

_CODE_TO_LETTER = np.frombuffer(b"ACGT", dtype=np.uint8)
_LETTER_TO_CODE = np.full(256, 255, dtype=np.uint8)
for _i, _c in enumerate(b"ACGT"):
    _LETTER_TO_CODE[_c] = _i


class DnaSequence:
    """Immutable symbol sequence over {A, C, G, T}, one pixel = four symbols."""

    __slots__ = ("_codes",)

    def __init__(self, codes: np.ndarray):
        arr = np.asarray(codes, dtype=np.uint8)
        if arr.ndim != 1:
            raise LengthMismatchError("symbol codes must be one-dimensional")
        if arr.size % 4 != 0:
            raise LengthMismatchError(f"length {arr.size} is not a multiple of 4")
        if arr.size and arr.max() > 3:
            raise LengthMismatchError("symbol codes must lie in [0, 3]")
        arr = arr.copy()
        arr.flags.writeable = False
        self._codes = arr

    @classmethod
    def from_text(cls, text: str) -> "DnaSequence":
        raw = np.frombuffer(text.encode("ascii"), dtype=np.uint8)
        codes = _LETTER_TO_CODE[raw]
        if codes.size and codes.max() > 3:
            bad = text[int(np.argmax(codes > 3))]
            raise LengthMismatchError(f"symbol {bad!r} outside alphabet {ALPHABET}")
        return cls(codes)

    @property
    def codes(self) -> np.ndarray:
        """Read-only uint8 codes, A=0 C=1 G=2 T=3."""
        return self._codes

    def to_text(self) -> str:
        return _CODE_TO_LETTER[self._codes].tobytes().decode("ascii")

    def __len__(self) -> int:
        return self._codes.size

    def __eq__(self, other) -> bool:
        if not isinstance(other, DnaSequence):
            return NotImplemented
        return np.array_equal(self._codes, other._codes)

    def __hash__(self):
        return hash(self._codes.tobytes())

    def __repr__(self) -> str:
        head = self.to_text()[:12]
        ellipsis = "..." if len(self) > 12 else ""
        return f"DnaSequence({head!r}{ellipsis}, length={len(self)})"


def _byte_pairs(grid: PixelGrid) -> np.ndarray:
    """Four 2-bit fields per pixel, MSB-first, row-major."""
    flat = grid.pixels.reshape(-1)
    pairs = np.empty(flat.size * 4, dtype=np.uint8)
    pairs[0::4] = flat >> 6
    pairs[1::4] = (flat >> 4) & 3
    pairs[2::4] = (flat >> 2) & 3
    pairs[3::4] = flat & 3
    return pairs


def _pack_pairs(pairs: np.ndarray, width: int, height: int) -> PixelGrid:
    if pairs.size != 4 * width * height:
        raise LengthMismatchError(
            f"sequence length {pairs.size} does not equal 4*{width}*{height}"
        )
    quads = pairs.reshape(-1, 4)
    flat = (quads[:, 0] << 6) | (quads[:, 1] << 4) | (quads[:, 2] << 2) | quads[:, 3]
    return PixelGrid(flat.astype(np.uint8).reshape(height, width))


def encode_grid(grid: PixelGrid) -> DnaSequence:
    """Encoding table applied to every 2-bit field (00->T 01->G 10->C 11->A)."""
    return DnaSequence(_byte_pairs(grid) ^ 3)


def decode_sequence(seq: DnaSequence, width: int, height: int) -> PixelGrid:
    """Decoding table applied to every symbol (A->00 C->01 G->10 T->11)."""
    return _pack_pairs(seq.codes, width, height)


def encode_grid_inverse(seq: DnaSequence, width: int, height: int) -> PixelGrid:
    """Exact inverse of encode_grid: symbols back through the encoding table."""
    return _pack_pairs(seq.codes ^ 3, width, height)


def decode_sequence_inverse(grid: PixelGrid) -> DnaSequence:
    """Exact inverse of decode_sequence: 2-bit fields back through the decoding table."""
    return DnaSequence(_byte_pairs(grid))
