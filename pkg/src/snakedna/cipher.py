"""The encryption pipeline and its exact inverse.

Encryption, in order:

  1. snake the plaintext rows
  2. encode pixels to symbols (encoding table)
  3. shuffle the symbol sequence (Fisher-Yates on the shuffle stream,
     4*M*N - 1 draws)
  4. decode symbols back to a pixel matrix (decoding table)
  5. draw M*N S-box selectors from the selector stream
  6. substitute every byte through its selected box
  7. XOR with M*N keystream bytes from the xor stream

Decryption regenerates the identical streams from the key and applies the
step inverses in reverse order. Both directions are pure functions of
(grid, key, boxes); nothing is persisted between the two.
"""

from __future__ import annotations

import random
import zlib
from dataclasses import dataclass

import numpy as np

from snakedna import chaos, dna, permute
from snakedna.chaos import CipherKey, LogisticParams
from snakedna.imagegrid import PixelGrid
from snakedna.sbox import SBoxSet, default_sbox_set
from snakedna import _kernels
from snakedna.errors import DegenerateStreamError

KEYGEN_PROBE_DEPTH = 65536
KEYGEN_PROBE_TAIL = 2000
KEYGEN_MIN_DISTINCT_STATES = 1900


@dataclass(frozen=True)
class CipherOutput:
    """Cipher grid plus a short diagnostic fingerprint of the key text."""

    cipher: PixelGrid
    key_fingerprint: str


def key_fingerprint(key: CipherKey) -> str:
    """8-hex-digit CRC32 of the canonical key text. Diagnostic only, not a MAC."""
    text = chaos.format_key_text(key)
    return f"{zlib.crc32(text.encode('ascii')) & 0xFFFFFFFF:08x}"


def encrypt(plain: PixelGrid, key: CipherKey, boxes: SBoxSet | None = None) -> PixelGrid:
    """Run the seven-stage pipeline; deterministic in (plain, key, boxes)."""
    chaos.validate_key(key)
    if boxes is None:
        boxes = default_sbox_set()
    width, height = plain.width, plain.height
    pixel_count = width * height

    snaked = permute.snake(plain)
    symbols = dna.encode_grid(snaked)
    draws = chaos.stream(key.shuffle, len(symbols) - 1)
    shuffled_codes, _ = permute.keyed_shuffle(symbols.codes, draws)
    mixed = dna.decode_sequence(dna.DnaSequence(shuffled_codes), width, height)

    selectors = chaos.selector_stream(key.selector, pixel_count)
    substituted = _kernels.substitute_bytes(
        mixed.pixels.reshape(-1), selectors, boxes.stacked_tables()
    )
    keystream = chaos.byte_stream(key.xor, pixel_count)
    cipher_flat = substituted ^ keystream
    return PixelGrid(cipher_flat.reshape(height, width))


def decrypt(cipher: PixelGrid, key: CipherKey, boxes: SBoxSet | None = None) -> PixelGrid:
    """Exact inverse of encrypt under the same key and boxes."""
    chaos.validate_key(key)
    if boxes is None:
        boxes = default_sbox_set()
    width, height = cipher.width, cipher.height
    pixel_count = width * height

    keystream = chaos.byte_stream(key.xor, pixel_count)
    substituted = cipher.pixels.reshape(-1) ^ keystream
    selectors = chaos.selector_stream(key.selector, pixel_count)
    mixed_flat = _kernels.substitute_bytes(substituted, selectors, boxes.stacked_inverses())
    mixed = PixelGrid(mixed_flat.reshape(height, width))

    shuffled = dna.decode_sequence_inverse(mixed)
    draws = chaos.stream(key.shuffle, len(shuffled) - 1)
    trace = permute.ShuffleTrace(permute.swap_targets(draws, len(shuffled)))
    codes = permute.invert_shuffle(shuffled.codes, trace)
    snaked = dna.encode_grid_inverse(dna.DnaSequence(codes), width, height)
    return permute.snake(snaked)


def encrypt_with_fingerprint(
    plain: PixelGrid, key: CipherKey, boxes: SBoxSet | None = None
) -> CipherOutput:
    return CipherOutput(cipher=encrypt(plain, key, boxes), key_fingerprint=key_fingerprint(key))


def _probe_params(params: LogisticParams) -> bool:
    """True if the probe trajectory is usable key material.

    Rejects trajectories that hit 0.0/1.0 and, just as important, ones that
    collapse onto a short stable cycle (the periodic windows inside the
    nominally chaotic r range): a cycling stream repeats a handful of
    keystream bytes and absorbs small seed perturbations instead of
    amplifying them. Window keys can wander for thousands of iterates before
    settling, so the cycle check looks at the tail of a trajectory as deep
    as one full-image stream: a genuinely chaotic orbit never revisits a
    64-bit state, so any duplicate in the tail marks a cycle.
    """
    try:
        tail = chaos.stream(
            LogisticParams(params.r, params.x0, burn_in=KEYGEN_PROBE_DEPTH),
            KEYGEN_PROBE_TAIL,
        )
    except DegenerateStreamError:
        return False
    return np.unique(tail).size >= KEYGEN_MIN_DISTINCT_STATES


def keygen(seed_text: str | None = None, burn_in: int = 1000) -> CipherKey:
    """Fresh valid key: r in [3.9, 4.0), x0 in (0.1, 0.9) per stream.

    Each candidate stream is test-generated and rejected if it degenerates
    (hits 0.0/1.0 anywhere in the probe) or settles onto a short periodic
    cycle within one full-image stream depth. With seed_text the key is a
    deterministic function of the text; without it, system entropy is used
    and two calls produce distinct keys.
    """
    rng = random.Random(seed_text) if seed_text is not None else random.SystemRandom()

    def draw_params() -> LogisticParams:
        while True:
            r = 3.9 + rng.random() * 0.1
            x0 = 0.1 + rng.random() * 0.8
            if x0 <= 0.1 or x0 >= 0.9:
                continue
            params = LogisticParams(r=r, x0=x0, burn_in=burn_in)
            if _probe_params(params):
                return params

    key = CipherKey(selector=draw_params(), shuffle=draw_params(), xor=draw_params())
    chaos.validate_key(key)
    return key
