import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from snakedna import chaos
from snakedna.chaos import (
    CipherKey,
    LogisticParams,
    byte_stream,
    format_key_text,
    logistic_step,
    parse_key_text,
    quantize_byte,
    quantize_selector,
    selector_stream,
    stream,
    validate_key,
)
from snakedna.errors import DegenerateStreamError, InvalidKeyError


def make_key(**overrides) -> CipherKey:
    params = dict(
        selector=LogisticParams(3.99, 0.4),
        shuffle=LogisticParams(3.98, 0.3),
        xor=LogisticParams(3.97, 0.2),
    )
    params.update(overrides)
    return CipherKey(**params)


class TestLogisticStep:
    def test_direct_evaluation(self):
        assert logistic_step(0.4, 3.99) == pytest.approx(0.9576, abs=1e-12)

    def test_degenerate_peak(self):
        assert logistic_step(0.5, 4.0) == 1.0

    def test_zero_fixed_point(self):
        assert logistic_step(0.0, 3.7) == 0.0

    def test_fixed_association(self):
        # the contract is (r*x) * (1-x), not r * (x*(1-x))
        x, r = 0.123456789, 3.9876
        assert logistic_step(x, r) == (r * x) * (1.0 - x)


class TestStream:
    def test_single_step_matches_scalar(self):
        out = stream(LogisticParams(3.99, 0.4, burn_in=0), 1)
        assert out[0] == logistic_step(0.4, 3.99)

    def test_degenerate_trajectory_raises(self):
        with pytest.raises(DegenerateStreamError):
            stream(LogisticParams(4.0, 0.5, burn_in=0), 2)

    def test_degenerate_during_burn_in_raises(self):
        with pytest.raises(DegenerateStreamError):
            stream(LogisticParams(4.0, 0.5, burn_in=5), 1)

    def test_sample_mean_band(self):
        # measured oracle for these parameters: 0.530903
        xs = stream(LogisticParams(3.99, 0.4, burn_in=1000), 65536)
        assert 0.45 <= xs.mean() <= 0.60

    def test_deterministic(self):
        p = LogisticParams(3.977, 0.37, burn_in=100)
        a = stream(p, 4096)
        b = stream(p, 4096)
        assert a.tobytes() == b.tobytes()

    def test_values_strictly_inside_unit_interval(self):
        xs = stream(LogisticParams(3.99, 0.4, burn_in=0), 20000)
        assert xs.min() > 0.0 and xs.max() < 1.0


class TestQuantizers:
    @pytest.mark.parametrize("x,expected", [(0.1, 0), (0.5, 1), (0.99, 2)])
    def test_selector(self, x, expected):
        assert quantize_selector(x) == expected

    @pytest.mark.parametrize("x,expected", [(0.5, 128), (0.999999, 255), (0.001, 0)])
    def test_byte(self, x, expected):
        assert quantize_byte(x) == expected

    def test_selector_histogram_covers_all_boxes(self):
        sels = selector_stream(LogisticParams(3.99, 0.4, burn_in=1000), 65536)
        assert set(np.unique(sels)) == {0, 1, 2}

    def test_vectorized_matches_scalar(self):
        p = LogisticParams(3.96, 0.61, burn_in=50)
        xs = stream(p, 500)
        assert selector_stream(p, 500).tolist() == [quantize_selector(x) for x in xs]
        assert byte_stream(p, 500).tolist() == [quantize_byte(x) for x in xs]

    @given(st.floats(min_value=1e-9, max_value=1.0, exclude_max=True))
    def test_quantizer_ranges(self, x):
        assert 0 <= quantize_selector(x) <= 2
        assert 0 <= quantize_byte(x) <= 255


class TestValidateKey:
    def test_valid_key(self):
        validate_key(make_key())  # does not raise

    def test_r_outside_chaotic_regime(self):
        with pytest.raises(InvalidKeyError, match="shuffle.r"):
            validate_key(make_key(shuffle=LogisticParams(2.5, 0.3)))

    def test_x0_zero(self):
        with pytest.raises(InvalidKeyError, match="xor.x0"):
            validate_key(make_key(xor=LogisticParams(3.9, 0.0)))

    def test_x0_one(self):
        with pytest.raises(InvalidKeyError, match="selector.x0"):
            validate_key(make_key(selector=LogisticParams(3.9, 1.0)))

    def test_negative_burn_in(self):
        with pytest.raises(InvalidKeyError, match="burn_in"):
            validate_key(make_key(xor=LogisticParams(3.9, 0.5, burn_in=-1)))

    def test_nan_r_rejected(self):
        with pytest.raises(InvalidKeyError):
            validate_key(make_key(xor=LogisticParams(float("nan"), 0.5)))


class TestKeyText:
    def test_round_trip(self):
        key = make_key()
        assert parse_key_text(format_key_text(key)) == key

    def test_field_order_and_shape(self):
        lines = format_key_text(make_key()).strip().splitlines()
        names = [line.split("=")[0] for line in lines]
        assert names == [
            "selector_r",
            "selector_x0",
            "shuffle_r",
            "shuffle_x0",
            "xor_r",
            "xor_x0",
            "burn_in",
        ]

    def test_unknown_name_rejected(self):
        text = format_key_text(make_key()) + "extra=1.0\n"
        with pytest.raises(InvalidKeyError, match="unknown"):
            parse_key_text(text)

    def test_missing_field_rejected(self):
        text = "\n".join(format_key_text(make_key()).splitlines()[:-1]) + "\n"
        with pytest.raises(InvalidKeyError, match="missing"):
            parse_key_text(text)

    def test_duplicate_field_rejected(self):
        text = format_key_text(make_key())
        with pytest.raises(InvalidKeyError, match="duplicate"):
            parse_key_text(text + "xor_r=3.9\n")

    def test_non_numeric_value_rejected(self):
        text = format_key_text(make_key()).replace("burn_in=1000", "burn_in=soon")
        with pytest.raises(InvalidKeyError):
            parse_key_text(text)

    def test_blank_lines_tolerated(self):
        text = "\n" + format_key_text(make_key()).replace("\n", "\n\n")
        assert parse_key_text(text) == make_key()

    @settings(max_examples=50, deadline=None)
    @given(
        rs=st.lists(st.floats(min_value=3.57, max_value=4.0), min_size=3, max_size=3),
        x0s=st.lists(
            st.floats(min_value=1e-6, max_value=1.0 - 1e-6), min_size=3, max_size=3
        ),
        burn=st.integers(min_value=0, max_value=5000),
    )
    def test_round_trip_exact_floats(self, rs, x0s, burn):
        key = CipherKey(
            selector=LogisticParams(rs[0], x0s[0], burn),
            shuffle=LogisticParams(rs[1], x0s[1], burn),
            xor=LogisticParams(rs[2], x0s[2], burn),
        )
        parsed = parse_key_text(format_key_text(key))
        assert parsed == key  # repr floats must round-trip bit-exactly


def test_stream_uses_burn_in():
    p0 = LogisticParams(3.99, 0.4, burn_in=0)
    p5 = LogisticParams(3.99, 0.4, burn_in=5)
    assert stream(p0, 10)[5:].tolist() == stream(p5, 5).tolist()


def test_chaotic_regime_bounds_exported():
    assert chaos.CHAOTIC_R_MIN == 3.57
    assert chaos.CHAOTIC_R_MAX == 4.0
