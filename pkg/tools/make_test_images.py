"""Regenerate the bundled 256x256 grayscale test scenes under tests/images/.

The two canonical public-domain test photographs usually used for this kind
of benchmark are not redistributable from inside this repository, so the
fixtures are built deterministically from scikit-image's bundled assets:

  cameraman.pgm  - skimage.data.camera() (a photographer, 512x512),
                   2x2 block-mean downsampled to 256x256
  baboon.pgm     - skimage.data.chelsea() (animal-fur closeup) converted to
                   luma and center-cropped to 256x256

Both are natural photographs with the high neighbor correlation and peaky
histograms the analysis suite needs from a plaintext. Requires scikit-image;
the generated PGM files are committed so the test suite itself does not.
"""

from pathlib import Path

import numpy as np
from skimage import data

from snakedna.imagegrid import PixelGrid, write_pgm

OUT_DIR = Path(__file__).resolve().parent.parent / "tests" / "images"


def downsample_2x2(img: np.ndarray) -> np.ndarray:
    h, w = img.shape
    blocks = img.reshape(h // 2, 2, w // 2, 2).astype(np.uint16)
    return (blocks.sum(axis=(1, 3)) // 4).astype(np.uint8)


def to_luma(rgb: np.ndarray) -> np.ndarray:
    weights = np.array([0.299, 0.587, 0.114])
    return np.clip(rgb.astype(np.float64) @ weights, 0, 255).astype(np.uint8)


def center_crop(img: np.ndarray, size: int) -> np.ndarray:
    h, w = img.shape
    top = (h - size) // 2
    left = (w - size) // 2
    return img[top : top + size, left : left + size]


def main() -> None:
    OUT_DIR.mkdir(parents=True, exist_ok=True)

    cam = downsample_2x2(data.camera())
    (OUT_DIR / "cameraman.pgm").write_bytes(write_pgm(PixelGrid(cam)))

    fur = center_crop(to_luma(data.chelsea()), 256)
    (OUT_DIR / "baboon.pgm").write_bytes(write_pgm(PixelGrid(fur)))

    for name in ("cameraman.pgm", "baboon.pgm"):
        print(f"wrote {OUT_DIR / name}")


if __name__ == "__main__":
    main()
