"""Backend parity: the compiled and pure kernels must agree bit-for-bit."""

import numpy as np
import pytest

from snakedna import _kernels
from snakedna.errors import DegenerateStreamError

pure = _kernels.get_backend("pure")
native = None
if "native" in _kernels.available_backends():
    native = _kernels.get_backend("native")

needs_native = pytest.mark.skipif(native is None, reason="compiled backend not built")

PARAM_SETS = [
    (3.99, 0.4, 0, 4096),
    (3.99, 0.4, 1000, 65536),
    (3.9123456, 0.7771, 57, 10000),
    (3.57, 0.123456789, 1, 2048),
    (4.0, 0.3, 500, 20000),
]


def test_backend_registry():
    assert _kernels.backend_name() in _kernels.available_backends()
    with pytest.raises(ImportError):
        _kernels.get_backend("imaginary")
    with pytest.raises(ImportError):
        _kernels.use_backend("imaginary")


@needs_native
@pytest.mark.parametrize("r,x0,burn_in,n", PARAM_SETS)
def test_logistic_stream_bitwise_parity(r, x0, burn_in, n):
    a = pure.logistic_stream(r, x0, burn_in, n)
    b = native.logistic_stream(r, x0, burn_in, n)
    assert a.tobytes() == b.tobytes()


@needs_native
def test_degenerate_raised_by_both():
    for backend in (pure, native):
        with pytest.raises(DegenerateStreamError):
            backend.logistic_stream(4.0, 0.5, 0, 2)


@needs_native
def test_swap_parity():
    rng = np.random.default_rng(17)
    for n in (1, 2, 3, 100, 65536):
        values = rng.integers(0, 4, size=n, dtype=np.uint8)
        span = n - np.arange(n - 1, dtype=np.int64)
        targets = np.arange(n - 1, dtype=np.int64) + rng.integers(0, 1 << 30, n - 1) % span
        fwd_p = pure.apply_swaps(values, targets)
        fwd_n = native.apply_swaps(values, targets)
        assert np.array_equal(fwd_p, fwd_n)
        assert np.array_equal(pure.invert_swaps(fwd_p, targets), values)
        assert np.array_equal(native.invert_swaps(fwd_n, targets), values)


@needs_native
def test_substitute_parity():
    rng = np.random.default_rng(23)
    values = rng.integers(0, 256, size=65536, dtype=np.uint8)
    selectors = rng.integers(0, 3, size=65536, dtype=np.uint8)
    tables = np.stack([rng.permutation(256).astype(np.uint8) for _ in range(3)])
    assert np.array_equal(
        pure.substitute_bytes(values, selectors, tables),
        native.substitute_bytes(values, selectors, tables),
    )


@needs_native
def test_full_pipeline_parity(cameraman, boxes):
    from snakedna.cipher import decrypt, encrypt, keygen

    key = keygen("parity")
    previous = _kernels.backend_name()
    try:
        _kernels.use_backend("native")
        cipher_native = encrypt(cameraman, key, boxes)
        _kernels.use_backend("pure")
        cipher_pure = encrypt(cameraman, key, boxes)
        assert cipher_native == cipher_pure
        assert decrypt(cipher_native, key, boxes) == cameraman
    finally:
        _kernels.use_backend(previous)
