"""Bijective byte substitution tables and the nibble-indexed lookup rule.

A table is conceptually a 16x16 grid: the high nibble of the input byte picks
the row, the low nibble the column (1-based in prose, so byte 0x55 reads cell
(6, 6)). Under row-major layout that cell is exactly table[byte], and tests
assert the equivalence exhaustively.

The default set derives all three boxes from the AES substitution table
(multiplicative inverse in GF(2^8) followed by the standard affine map):
box 0 is that table itself, box 1 is it composed with itself, box 2 is it
XORed with 0x5A. Composition with a bijection and XOR with a constant both
preserve bijectivity, so all three are invertible by construction. The boxes
are public; all secrecy lives in the CipherKey.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from snakedna.errors import InvalidSBoxError


@dataclass(frozen=True)
class SBox:
    """A bijection on [0, 255] with its precomputed inverse."""

    table: np.ndarray
    inverse: np.ndarray

    @classmethod
    def from_table(cls, table) -> "SBox":
        arr = np.asarray(table, dtype=np.int64).reshape(-1)
        if arr.size != 256:
            raise InvalidSBoxError(f"table has {arr.size} entries, expected 256")
        if arr.min() < 0 or arr.max() > 255:
            raise InvalidSBoxError("table entries must lie in [0, 255]")
        if np.unique(arr).size != 256:
            raise InvalidSBoxError("table is not a bijection on [0, 255]")
        tab = arr.astype(np.uint8)
        inv = np.empty(256, dtype=np.uint8)
        inv[tab] = np.arange(256, dtype=np.uint8)
        tab.flags.writeable = False
        inv.flags.writeable = False
        return cls(table=tab, inverse=inv)


@dataclass(frozen=True)
class SBoxSet:
    """Exactly three boxes, indexed 0..2 to match the selector stream."""

    boxes: tuple[SBox, SBox, SBox]

    def __post_init__(self):
        if len(self.boxes) != 3:
            raise InvalidSBoxError(f"need exactly 3 boxes, got {len(self.boxes)}")

    def stacked_tables(self) -> np.ndarray:
        """(3, 256) uint8 array of forward tables, for bulk substitution."""
        return np.stack([b.table for b in self.boxes])

    def stacked_inverses(self) -> np.ndarray:
        return np.stack([b.inverse for b in self.boxes])


def substitute(value: int, box: SBox) -> int:
    """Grid lookup at (high nibble + 1, low nibble + 1), i.e. table[value]."""
    return int(box.table[value])


def substitute_inverse(value: int, box: SBox) -> int:
    return int(box.inverse[value])


def lookup_by_nibbles(value: int, box: SBox) -> int:
    """The row/column form of substitute; kept separate so tests can prove
    it equals the flat lookup for every byte."""
    row = (value >> 4) & 0xF
    col = value & 0xF
    return int(box.table.reshape(16, 16)[row, col])


def _aes_forward_table() -> np.ndarray:
    """AES substitution table via log/antilog over the generator 0x03."""
    exp = np.zeros(256, dtype=np.int64)
    log = np.zeros(256, dtype=np.int64)
    value = 1
    for power in range(255):
        exp[power] = value
        log[value] = power
        # multiply by 0x03 = x + 1: double then add
        doubled = (value << 1) ^ (0x1B if value & 0x80 else 0)
        value = (doubled ^ value) & 0xFF
    exp[255] = exp[0]

    table = np.zeros(256, dtype=np.int64)
    for b in range(256):
        inv = 0 if b == 0 else exp[255 - log[b]]
        s = inv
        for shift in (1, 2, 3, 4):
            s ^= ((inv << shift) | (inv >> (8 - shift))) & 0xFF
        table[b] = s ^ 0x63
    return table


def default_sbox_set() -> SBoxSet:
    """Three distinct bijections derived from the AES table (see module docs)."""
    base = SBox.from_table(_aes_forward_table())
    composed = SBox.from_table(base.table[base.table])
    masked = SBox.from_table(base.table ^ 0x5A)
    return SBoxSet(boxes=(base, composed, masked))


def parse_sbox_text(text: str) -> SBoxSet:
    """Parse a 3-box file: 768 whitespace-separated integers, each 256-entry
    block validated as a permutation of [0, 255]."""
    tokens = text.split()
    if len(tokens) != 768:
        raise InvalidSBoxError(f"expected 768 integers (3 x 256), got {len(tokens)}")
    try:
        values = np.array([int(t, 10) for t in tokens], dtype=np.int64)
    except ValueError as exc:
        raise InvalidSBoxError(f"non-integer token in S-box file: {exc}") from None
    boxes = tuple(SBox.from_table(values[i * 256 : (i + 1) * 256]) for i in range(3))
    return SBoxSet(boxes=boxes)


def format_sbox_text(boxes: SBoxSet) -> str:
    """Serialize a set in the file format accepted by parse_sbox_text."""
    blocks = []
    for box in boxes.boxes:
        rows = box.table.reshape(16, 16)
        blocks.append("\n".join(" ".join(f"{v:3d}" for v in row) for row in rows))
    return "\n\n".join(blocks) + "\n"
