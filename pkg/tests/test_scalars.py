"""Scalar-family encoders: bounded, cyclic, delta, unbounded."""

import math
import random
import statistics

import pytest
from hypothesis import given, strategies as st

from sdrkit.errors import ConfigError, InputError, RangeError
from sdrkit.hashing import bucket_bit_index
from sdrkit.scalars import (
    CyclicEncoder,
    DeltaEncoder,
    ScalarEncoder,
    UnboundedScalarEncoder,
    validate_scalar_config,
)
from sdrkit.sdr import overlap

finite_floats = st.floats(allow_nan=False, allow_infinity=False, width=64)


@pytest.fixture
def temp_encoder():
    return ScalarEncoder(0, 45, 100, 10)


class TestScalarEncoder:
    def test_resolution_is_derived(self, temp_encoder):
        assert temp_encoder.resolution == 0.5

    def test_encode_interior(self, temp_encoder):
        assert temp_encoder.encode(10).active == tuple(range(20, 30))

    def test_clamps_below_minimum(self, temp_encoder):
        assert temp_encoder.encode(-5).active == tuple(range(0, 10))

    def test_clamps_above_maximum(self, temp_encoder):
        assert temp_encoder.encode(1e9).active == tuple(range(90, 100))

    def test_adjacent_buckets_share_w_minus_1(self, temp_encoder):
        a = frozenset(temp_encoder.encode(10).active)
        b = frozenset(temp_encoder.encode(10.5).active)
        assert len(a & b) == 9 == temp_encoder.w - 1

    def test_non_finite_rejected(self, temp_encoder):
        for bad in (float("nan"), float("inf"), float("-inf")):
            with pytest.raises(InputError):
                temp_encoder.encode(bad)

    @given(finite_floats)
    def test_always_exactly_w_bits_and_fixed_n(self, v):
        enc = ScalarEncoder(0, 45, 100, 10)
        out = enc.encode(v)
        assert out.n == 100
        assert out.active_count == 10

    @given(finite_floats)
    def test_deterministic(self, v):
        enc = ScalarEncoder(-3, 12, 64, 8)
        assert enc.encode(v) == enc.encode(v)

    def test_overlap_law_on_value_grid(self, temp_encoder):
        # overlap(f(a), f(b)) == max(0, w - |bucket(a) - bucket(b)|), checked
        # by brute-force set intersection over a 0.25-spaced grid
        values = [i * 0.25 for i in range(181)]
        encs = {v: frozenset(temp_encoder.encode(v).active) for v in values}
        for a in values[::3]:
            for b in values:
                expected = max(
                    0, temp_encoder.w - abs(temp_encoder.bucket(a) - temp_encoder.bucket(b))
                )
                assert len(encs[a] & encs[b]) == expected

    def test_overlap_monotone_on_aligned_grid(self):
        # with samples one per bucket, overlap never increases with distance
        enc = ScalarEncoder(0, 45, 100, 10)
        values = [i * enc.resolution + enc.resolution / 2 for i in range(91)]
        anchor = enc.encode(values[30])
        prev = enc.w
        for v in values[30:]:
            o = overlap(anchor, enc.encode(v))
            assert o <= prev
            prev = o


class TestCyclicEncoder:
    def test_day_of_week_wraps(self):
        enc = CyclicEncoder(period=7, n=7, w=3)
        assert enc.encode(6).active == (0, 1, 6)  # Saturday wraps past the end

    def test_sunday_equidistant_from_saturday_and_monday(self):
        enc = CyclicEncoder(period=7, n=7, w=3)
        sat, sun, mon = enc.encode(6), enc.encode(0), enc.encode(1)
        assert overlap(sun, sat) == overlap(sun, mon) == 2

    @given(st.floats(min_value=-1e6, max_value=1e6))
    def test_periodicity(self, v):
        enc = CyclicEncoder(period=24, n=96, w=21)
        assert enc.encode(v) == enc.encode(v + 24)

    @given(finite_floats)
    def test_exactly_w_bits(self, v):
        enc = CyclicEncoder(period=12, n=48, w=11)
        out = enc.encode(v)
        assert out.n == 48
        assert out.active_count == 11

    def test_negative_values_wrap(self):
        enc = CyclicEncoder(period=7, n=7, w=3)
        assert enc.encode(-1) == enc.encode(6)

    def test_tiny_negative_phase_edge(self):
        enc = CyclicEncoder(period=7, n=7, w=3)
        out = enc.encode(-1e-18)  # float mod may land exactly on the period
        assert out.active_count == 3

    def test_overlap_depends_only_on_circular_distance(self):
        enc = CyclicEncoder(period=12, n=12, w=4)
        codes = [enc.encode(i) for i in range(12)]
        by_distance = {}
        for i in range(12):
            for j in range(12):
                d = min(abs(i - j), 12 - abs(i - j))
                by_distance.setdefault(d, set()).add(overlap(codes[i], codes[j]))
        for d, overlaps in by_distance.items():
            assert len(overlaps) == 1, f"distance {d} gave mixed overlaps {overlaps}"

    def test_full_ring_window_allowed(self):
        enc = CyclicEncoder(period=7, n=7, w=7)
        assert enc.encode(3).active_count == 7


class TestDeltaEncoder:
    def test_first_value_encodes_zero_delta(self):
        inner = ScalarEncoder(-10, 10, 100, 21)
        delta = DeltaEncoder(ScalarEncoder(-10, 10, 100, 21))
        assert delta.encode(10) == inner.encode(0)

    def test_second_value_encodes_difference(self):
        inner = ScalarEncoder(-10, 10, 100, 21)
        delta = DeltaEncoder(ScalarEncoder(-10, 10, 100, 21))
        delta.encode(10)
        assert delta.encode(12) == inner.encode(2)

    def test_constant_input_repeats(self):
        delta = DeltaEncoder(ScalarEncoder(-10, 10, 100, 21))
        outs = [delta.encode(5), delta.encode(5), delta.encode(5)]
        assert outs[1] == outs[2]

    def test_error_leaves_state_unchanged(self):
        delta = DeltaEncoder(ScalarEncoder(-10, 10, 100, 21))
        delta.encode(3)
        with pytest.raises(InputError):
            delta.encode(float("nan"))
        assert delta.previous == 3

    def test_reset(self):
        delta = DeltaEncoder(ScalarEncoder(-10, 10, 100, 21))
        first = delta.encode(7)
        delta.encode(9)
        delta.reset()
        assert delta.encode(7) == first

    def test_requires_bounded_inner(self):
        with pytest.raises(ConfigError):
            DeltaEncoder(CyclicEncoder(7, 7, 3))


class TestUnboundedScalarEncoder:
    def test_deterministic(self):
        enc = UnboundedScalarEncoder(resolution=1, n=1000, w=25, seed=42)
        assert enc.encode(123.4) == enc.encode(123.4)

    def test_adjacent_values_share_24_of_25_buckets(self):
        enc = UnboundedScalarEncoder(resolution=1, n=1000, w=25, seed=42)
        assert enc.bucket(0) == 0
        assert enc.bucket(1) == 1
        buckets0 = set(range(0, 25))
        buckets1 = set(range(1, 26))
        assert len(buckets0 & buckets1) == 24
        # and the bit overlap equals the overlap of the hashed bucket images
        bits0 = {bucket_bit_index(b, 42, 1000) for b in buckets0}
        bits1 = {bucket_bit_index(b, 42, 1000) for b in buckets1}
        assert overlap(enc.encode(0), enc.encode(1)) == len(bits0 & bits1)

    def test_far_values_overlap_at_chance_level(self):
        enc = UnboundedScalarEncoder(resolution=1, n=1000, w=25, seed=42)
        overlaps = [
            overlap(enc.encode(k), enc.encode(k + 5000)) for k in range(1000)
        ]
        mean = statistics.mean(overlaps)
        sem = statistics.stdev(overlaps) / math.sqrt(len(overlaps))
        chance = enc.w ** 2 / enc.n
        assert mean <= chance + 3 * sem

    def test_at_most_w_bits(self):
        enc = UnboundedScalarEncoder(resolution=0.5, n=400, w=25, seed=1)
        rng = random.Random(5)
        for _ in range(500):
            out = enc.encode(rng.uniform(-1e9, 1e9))
            assert out.n == 400
            assert out.active_count <= 25

    def test_bucket_overflow_raises(self):
        enc = UnboundedScalarEncoder(resolution=1e-300, n=100, w=21)
        with pytest.raises(RangeError):
            enc.encode(1e300)

    def test_negative_values_fine(self):
        enc = UnboundedScalarEncoder(resolution=1, n=1000, w=25)
        assert enc.bucket(-3.5) == -4
        assert enc.encode(-3.5).active_count <= 25


class TestValidateScalarConfig:
    def test_recommended_sizes_pass_clean(self):
        assert validate_scalar_config(n=134, w=21, min_value=0, max_value=45) == []

    def test_small_w_warns(self):
        findings = validate_scalar_config(n=100, w=10, min_value=0, max_value=45)
        assert any("below the recommended minimum of 20" in f.message for f in findings)
        assert all(not f.is_error for f in findings)

    def test_empty_range_is_error(self):
        findings = validate_scalar_config(n=100, w=21, min_value=5, max_value=5)
        assert any(f.is_error and "empty range" in f.message for f in findings)

    def test_w_exceeding_n_is_error(self):
        findings = validate_scalar_config(n=10, w=11)
        assert any(f.is_error for f in findings)

    def test_sparsity_band_warning(self):
        findings = validate_scalar_config(n=100, w=50)
        assert any("sparsity" in f.message and not f.is_error for f in findings)

    def test_small_n_warns(self):
        findings = validate_scalar_config(n=64, w=21)
        assert any("n=64 is below" in f.message for f in findings)

    def test_bad_period_and_resolution(self):
        assert any(f.is_error for f in validate_scalar_config(n=100, w=21, period=0))
        assert any(f.is_error for f in validate_scalar_config(n=100, w=21, resolution=-1))

    def test_constructor_raises_on_errors(self):
        with pytest.raises(ConfigError):
            ScalarEncoder(5, 5, 100, 21)
        with pytest.raises(ConfigError):
            CyclicEncoder(-7, 7, 3)
        with pytest.raises(ConfigError):
            UnboundedScalarEncoder(0, 100, 21)
