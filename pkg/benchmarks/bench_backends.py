"""Compare the compiled and pure-Python kernel backends.

Times the three sequential hot kernels in isolation and the full
encrypt/decrypt pipeline on a 256x256 image, then prints a speedup table.
Run from the repository root:

    python benchmarks/bench_backends.py [--repeats N]
"""

import argparse
import time

import numpy as np

from snakedna import _kernels
from snakedna.cipher import decrypt, encrypt, keygen
from snakedna.imagegrid import PixelGrid
from snakedna.sbox import default_sbox_set

SIDE = 256
PIXELS = SIDE * SIDE
SYMBOLS = 4 * PIXELS


def best_of(repeats, fn, *args):
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - start)
    return best


def kernel_cases(rng):
    values = rng.integers(0, 4, SYMBOLS, dtype=np.uint8)
    span = SYMBOLS - np.arange(SYMBOLS - 1, dtype=np.int64)
    targets = np.arange(SYMBOLS - 1, dtype=np.int64) + (
        rng.integers(0, 1 << 30, SYMBOLS - 1) % span
    )
    bytes_ = rng.integers(0, 256, PIXELS, dtype=np.uint8)
    selectors = rng.integers(0, 3, PIXELS, dtype=np.uint8)
    tables = default_sbox_set().stacked_tables()
    return [
        ("logistic_stream (262k states)", "logistic_stream", (3.99, 0.4, 1000, SYMBOLS)),
        ("apply_swaps (262k symbols)", "apply_swaps", (values, targets)),
        ("invert_swaps (262k symbols)", "invert_swaps", (values, targets)),
        ("substitute_bytes (65k bytes)", "substitute_bytes", (bytes_, selectors, tables)),
    ]


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeats", type=int, default=5, help="best-of-N timing")
    args = parser.parse_args()

    backends = _kernels.available_backends()
    if "native" not in backends:
        print("note: compiled backend not built, benchmarking pure only")

    rng = np.random.default_rng(0)
    rows = []
    for label, name, fn_args in kernel_cases(rng):
        times = {}
        for backend in backends:
            module = _kernels.get_backend(backend)
            times[backend] = best_of(args.repeats, getattr(module, name), *fn_args)
        rows.append((label, times))

    image = PixelGrid(rng.integers(0, 256, (SIDE, SIDE), dtype=np.uint8))
    key = keygen("benchmark")
    boxes = default_sbox_set()
    for label, fn in (("encrypt 256x256", encrypt), ("decrypt 256x256", decrypt)):
        times = {}
        payload = image if fn is encrypt else encrypt(image, key, boxes)
        for backend in backends:
            _kernels.use_backend(backend)
            times[backend] = best_of(args.repeats, fn, payload, key, boxes)
        rows.append((label, times))
    _kernels.use_backend("native" if "native" in backends else "pure")

    width = max(len(label) for label, _ in rows)
    header = f"{'case':<{width}}  {'pure':>10}"
    if "native" in backends:
        header += f"  {'native':>10}  {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for label, times in rows:
        line = f"{label:<{width}}  {times['pure'] * 1e3:>8.2f}ms"
        if "native" in times:
            line += f"  {times['native'] * 1e3:>8.2f}ms  {times['pure'] / times['native']:>7.1f}x"
        print(line)


if __name__ == "__main__":
    main()
