"""Statistical security metrics for grayscale images.

Implements adjacency correlation (Pearson over all in-bounds neighbor
pairs), Shannon entropy of the 256-bin histogram, an 8-level gray-level
co-occurrence matrix with homogeneity / contrast / energy, and a chi-square
uniformity statistic. A good cipher image scores entropy close to 8 bits,
correlations close to 0, contrast near 10.5, homogeneity near 0.389 and
energy near 1/64 (the closed-form expectations for independent uniform
8-level pairs), with a chi-square near its 255-degree-of-freedom mean.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from snakedna.errors import ZeroVarianceError
from snakedna.imagegrid import PixelGrid

GLCM_LEVELS = 8

DIRECTIONS = ("horizontal", "vertical", "diagonal")


@dataclass(frozen=True)
class GlcmMatrix:
    """8x8 co-occurrence counts and probabilities for horizontal neighbors."""

    levels: int
    counts: np.ndarray
    probabilities: np.ndarray


@dataclass(frozen=True)
class MetricsReport:
    """One image's full metric set. Correlation fields are None when the
    pixel-pair sample has a constant margin (the zero-variance condition)."""

    entropy: float
    corr_horizontal: float | None
    corr_vertical: float | None
    corr_diagonal: float | None
    contrast: float
    homogeneity: float
    energy: float
    histogram: np.ndarray
    chi_square: float


def _direction_pairs(grid: PixelGrid, direction: str) -> tuple[np.ndarray, np.ndarray]:
    arr = grid.pixels
    if direction == "horizontal":
        if grid.width < 2:
            raise ValueError("horizontal correlation needs width >= 2")
        return arr[:, :-1], arr[:, 1:]
    if direction == "vertical":
        if grid.height < 2:
            raise ValueError("vertical correlation needs height >= 2")
        return arr[:-1, :], arr[1:, :]
    if direction == "diagonal":
        if grid.width < 2 or grid.height < 2:
            raise ValueError("diagonal correlation needs width and height >= 2")
        return arr[:-1, :-1], arr[1:, 1:]
    raise ValueError(f"unknown direction {direction!r}")


def correlation(grid: PixelGrid, direction: str) -> float:
    """Pearson correlation over all adjacent pixel pairs in one direction.

    Raises ZeroVarianceError when either margin of the pair sample is
    constant (the coefficient is undefined there, not zero).
    """
    first, second = _direction_pairs(grid, direction)
    a = first.reshape(-1).astype(np.float64)
    b = second.reshape(-1).astype(np.float64)
    a -= a.mean()
    b -= b.mean()
    denom_a = float(np.dot(a, a))
    denom_b = float(np.dot(b, b))
    if denom_a == 0.0 or denom_b == 0.0:
        raise ZeroVarianceError(f"{direction} pair sample has a constant margin")
    return float(np.dot(a, b) / math.sqrt(denom_a * denom_b))


def entropy(grid: PixelGrid) -> float:
    """Shannon entropy in bits of the 256-bin intensity histogram."""
    counts = histogram(grid)
    p = counts[counts > 0] / grid.pixels.size
    return float(-np.sum(p * np.log2(p)))


def glcm(grid: PixelGrid) -> GlcmMatrix:
    """8-level co-occurrence of horizontal neighbor pairs (offset one column).

    Pixels are quantized to floor(v / 32); ordered pairs are counted without
    symmetrization and normalized by the pair count M * (N - 1).
    """
    if grid.width < 2:
        raise ValueError("co-occurrence needs width >= 2")
    levels = (grid.pixels >> 5).astype(np.int64)
    left = levels[:, :-1].reshape(-1)
    right = levels[:, 1:].reshape(-1)
    counts = np.bincount(left * GLCM_LEVELS + right, minlength=GLCM_LEVELS**2)
    counts = counts.reshape(GLCM_LEVELS, GLCM_LEVELS)
    probabilities = counts / left.size
    return GlcmMatrix(levels=GLCM_LEVELS, counts=counts, probabilities=probabilities)


def _level_offsets(levels: int) -> np.ndarray:
    idx = np.arange(levels)
    return idx[:, None] - idx[None, :]


def homogeneity(matrix: GlcmMatrix) -> float:
    """Sum of P(x, y) / (1 + |x - y|) over all cells."""
    weights = 1.0 / (1.0 + np.abs(_level_offsets(matrix.levels)))
    return float(np.sum(matrix.probabilities * weights))


def contrast(matrix: GlcmMatrix) -> float:
    """Sum of (x - y)^2 * P(x, y) over all cells."""
    weights = _level_offsets(matrix.levels) ** 2
    return float(np.sum(matrix.probabilities * weights))


def energy(matrix: GlcmMatrix) -> float:
    """Sum of squared cell probabilities."""
    return float(np.sum(matrix.probabilities**2))


def histogram(grid: PixelGrid) -> np.ndarray:
    """256 intensity counts; sums to width * height."""
    return np.bincount(grid.pixels.reshape(-1), minlength=256)


def chi_square(hist: np.ndarray) -> float:
    """Uniformity statistic: sum of (count - E)^2 / E with E = total / 256."""
    hist = np.asarray(hist, dtype=np.float64)
    expected = hist.sum() / 256.0
    return float(np.sum((hist - expected) ** 2) / expected)


def compute_report(grid: PixelGrid) -> MetricsReport:
    """All metrics for one image; needs at least a 2x2 grid."""
    if grid.width < 2 or grid.height < 2:
        raise ValueError("metrics report needs at least a 2x2 image")
    corr: dict[str, float | None] = {}
    for direction in DIRECTIONS:
        try:
            corr[direction] = correlation(grid, direction)
        except ZeroVarianceError:
            corr[direction] = None
    matrix = glcm(grid)
    hist = histogram(grid)
    return MetricsReport(
        entropy=entropy(grid),
        corr_horizontal=corr["horizontal"],
        corr_vertical=corr["vertical"],
        corr_diagonal=corr["diagonal"],
        contrast=contrast(matrix),
        homogeneity=homogeneity(matrix),
        energy=energy(matrix),
        histogram=hist,
        chi_square=chi_square(hist),
    )


def _number(value: float) -> str:
    # 17 significant digits, always: lossless round-trip and never below the
    # 12-digit floor the report format promises
    return f"{value:.16e}"


def report_to_json(report: MetricsReport) -> str:
    """Flat JSON object with the report field names; numbers carry at least
    12 significant digits; zero-variance correlations serialize as the
    string "ZeroVariance"."""

    def corr_value(v: float | None) -> str:
        return '"ZeroVariance"' if v is None else _number(v)

    hist = ", ".join(str(int(c)) for c in report.histogram)
    lines = [
        "{",
        f'  "entropy": {_number(report.entropy)},',
        f'  "corr_horizontal": {corr_value(report.corr_horizontal)},',
        f'  "corr_vertical": {corr_value(report.corr_vertical)},',
        f'  "corr_diagonal": {corr_value(report.corr_diagonal)},',
        f'  "contrast": {_number(report.contrast)},',
        f'  "homogeneity": {_number(report.homogeneity)},',
        f'  "energy": {_number(report.energy)},',
        f'  "histogram": [{hist}],',
        f'  "chi_square": {_number(report.chi_square)}',
        "}",
    ]
    text = "\n".join(lines)
    json.loads(text)  # guard: the hand-built text must stay valid JSON
    return text
