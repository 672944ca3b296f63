from pathlib import Path

import numpy as np
import pytest

from snakedna.imagegrid import PixelGrid, read_pgm
from snakedna.sbox import default_sbox_set

IMAGES_DIR = Path(__file__).resolve().parent / "images"


@pytest.fixture(scope="session")
def boxes():
    return default_sbox_set()


@pytest.fixture(scope="session")
def cameraman() -> PixelGrid:
    return read_pgm((IMAGES_DIR / "cameraman.pgm").read_bytes())


@pytest.fixture(scope="session")
def baboon() -> PixelGrid:
    return read_pgm((IMAGES_DIR / "baboon.pgm").read_bytes())


def random_grid(rng: np.random.Generator, width: int, height: int) -> PixelGrid:
    return PixelGrid(rng.integers(0, 256, size=(height, width), dtype=np.uint8))
