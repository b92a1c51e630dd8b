"""Encoders for single numeric values.

Four variants:

* ScalarEncoder          -- bounded range, contiguous window of w bits
* CyclicEncoder          -- periodic quantities (day of week, hour of day);
                            the window wraps so both ends of the range overlap
* DeltaEncoder           -- encodes the change between consecutive inputs
* UnboundedScalarEncoder -- hash-bucketed, handles unknown/unbounded ranges
                            with a fixed number of bits

All of them emit SDRs of constant length, encode deterministically, and clamp
rather than reject out-of-range input.
"""

from __future__ import annotations

import math

from .errors import ConfigError, Finding, InputError, RangeError, raise_on_errors, warnings_only
from .hashing import bucket_bit_index
from .sdr import SDR

# Advisory sizing guidance: enough one-bits to tolerate noise and
# subsampling, enough total bits to resolve many distinct values, and
# sparsity in the band where distributed representations behave well.
MIN_RECOMMENDED_W = 20
MIN_RECOMMENDED_N = 100
SPARSITY_BAND = (0.01, 0.35)

_I64_MIN = -(1 << 63)
_I64_MAX = (1 << 63) - 1


def validate_scalar_config(
    *,
    n: int,
    w: int,
    min_value: float | None = None,
    max_value: float | None = None,
    period: float | None = None,
    resolution: float | None = None,
) -> list[Finding]:
    """Check any scalar-family parameter set.

    Structural violations come back as error findings; advisory sizing
    guidance (w >= 20, n >= 100, sparsity between 1% and 35%) as warnings.
    Never raises -- callers decide what to do with the findings.
    """
    findings: list[Finding] = []

    def err(msg: str) -> None:
        findings.append(Finding("error", msg))

    def warn(msg: str) -> None:
        findings.append(Finding("warning", msg))

    if not _is_positive_int(n):
        err(f"n must be a positive integer, got {n!r}")
    if not _is_positive_int(w):
        err(f"w must be a positive integer, got {w!r}")
    if _is_positive_int(n) and _is_positive_int(w):
        if w > n:
            err(f"w ({w}) cannot exceed n ({n})")
        else:
            if w < MIN_RECOMMENDED_W:
                warn(
                    f"w={w} is below the recommended minimum of {MIN_RECOMMENDED_W} "
                    "one-bits; small codes are fragile under noise and subsampling"
                )
            if n < MIN_RECOMMENDED_N:
                warn(f"n={n} is below the recommended minimum of {MIN_RECOMMENDED_N} bits")
            lo, hi = SPARSITY_BAND
            if not (lo <= w / n <= hi):
                warn(
                    f"sparsity w/n = {w / n:.4f} is outside the usual "
                    f"[{lo:.0%}, {hi:.0%}] band"
                )

    if min_value is not None or max_value is not None:
        if min_value is None or max_value is None:
            err("min and max must be given together")
        elif not (math.isfinite(min_value) and math.isfinite(max_value)):
            err("min and max must be finite")
        elif min_value >= max_value:
            err(f"empty range: min ({min_value}) must be below max ({max_value})")
        elif _is_positive_int(n) and _is_positive_int(w) and n - w < 1:
            err(f"n - w must be at least 1 to span a bounded range (n={n}, w={w})")

    if period is not None and (not math.isfinite(period) or period <= 0):
        err(f"period must be positive and finite, got {period!r}")

    if resolution is not None and (not math.isfinite(resolution) or resolution <= 0):
        err(f"resolution must be positive and finite, got {resolution!r}")

    return findings


def _is_positive_int(v) -> bool:
    return isinstance(v, int) and not isinstance(v, bool) and v >= 1


def _require_finite(value) -> float:
    try:
        v = float(value)
    except (TypeError, ValueError):
        raise InputError(f"expected a number, got {value!r}") from None
    if not math.isfinite(v):
        raise InputError(f"cannot encode non-finite value {v!r}")
    return v


class ScalarEncoder:
    """Bounded-range scalar encoder.

    The range [min_value, max_value] is divided into n - w + 1 buckets of
    width ``resolution`` = (max - min) / (n - w); a value in bucket b
    activates bits {b, ..., b + w - 1}.  Adjacent values therefore share
    w - 1 bits, and values more than w buckets apart share none.  Inputs
    outside the range are clamped to the extreme representations, so every
    input yields exactly w one-bits.
    """

    def __init__(self, min_value: float, max_value: float, n: int, w: int):
        findings = validate_scalar_config(
            n=n, w=w, min_value=min_value, max_value=max_value
        )
        raise_on_errors(findings)
        self.warnings = warnings_only(findings)
        self.min_value = float(min_value)
        self.max_value = float(max_value)
        self.n = n
        self.w = w

    @property
    def resolution(self) -> float:
        return (self.max_value - self.min_value) / (self.n - self.w)

    def bucket(self, value: float) -> int:
        """Clamped bucket index in [0, n - w]."""
        v = _require_finite(value)
        v = min(max(v, self.min_value), self.max_value)
        b = math.floor((v - self.min_value) / self.resolution)
        return min(max(b, 0), self.n - self.w)

    def encode(self, value: float) -> SDR:
        b = self.bucket(value)
        return SDR(self.n, tuple(range(b, b + self.w)))


class CyclicEncoder:
    """Periodic scalar encoder whose window wraps around the bit array.

    The cycle [0, period) maps onto all n bits (resolution = period / n), and
    the w-bit window starting at the value's bucket wraps modulo n, so values
    at the two ends of the cycle overlap exactly like interior neighbors.
    """

    def __init__(self, period: float, n: int, w: int):
        findings = validate_scalar_config(n=n, w=w, period=period)
        raise_on_errors(findings)
        self.warnings = warnings_only(findings)
        self.period = float(period)
        self.n = n
        self.w = w

    @property
    def resolution(self) -> float:
        return self.period / self.n

    def bucket(self, value: float) -> int:
        v = _require_finite(value)
        # float mod can land exactly on `period` for tiny negatives; the
        # final % n absorbs that edge.
        phase = ((v % self.period) + self.period) % self.period
        return math.floor(phase / self.resolution) % self.n

    def encode(self, value: float) -> SDR:
        b = self.bucket(value)
        return SDR(self.n, tuple(sorted((b + i) % self.n for i in range(self.w))))


class DeltaEncoder:
    """Encodes the change between consecutive inputs through a bounded
    scalar encoder configured over the expected delta range.

    The first input has no predecessor and encodes a delta of zero, so the
    output dimensionality and sparsity are constant from the first record.
    One instance serves one input stream; it is stateful and single-writer.
    """

    def __init__(self, inner: ScalarEncoder):
        if not isinstance(inner, ScalarEncoder):
            raise ConfigError("delta encoder requires a bounded ScalarEncoder inner")
        self.inner = inner
        self.warnings = list(inner.warnings)
        self.previous: float | None = None

    @property
    def n(self) -> int:
        return self.inner.n

    @property
    def w(self) -> int:
        return self.inner.w

    def encode(self, value: float) -> SDR:
        v = _require_finite(value)
        delta = 0.0 if self.previous is None else v - self.previous
        out = self.inner.encode(delta)  # may raise; state untouched on error
        self.previous = v
        return out

    def reset(self) -> None:
        self.previous = None


class UnboundedScalarEncoder:
    """Hash-bucketed scalar encoder for unbounded or unknown ranges.

    The value's bucket b = floor(value / resolution) can be any signed 64-bit
    integer; each of the buckets b..b+w-1 is hashed to one of the n bits.
    Values d buckets apart share exactly w - d of their hashed buckets, so
    nearby values overlap strongly while far ones overlap only at chance
    level.  Hash collisions may reduce the one-bit count slightly below w;
    they are accepted, not retried.
    """

    def __init__(self, resolution: float, n: int, w: int, seed: int = 0):
        findings = validate_scalar_config(n=n, w=w, resolution=resolution)
        raise_on_errors(findings)
        self.warnings = warnings_only(findings)
        self.resolution = float(resolution)
        self.n = n
        self.w = w
        self.seed = int(seed)

    def bucket(self, value: float) -> int:
        v = _require_finite(value)
        scaled = v / self.resolution
        if not math.isfinite(scaled):
            raise RangeError(
                f"bucket index for value {v!r} at resolution {self.resolution!r} "
                "overflows the signed 64-bit range"
            )
        b = math.floor(scaled)
        if b < _I64_MIN or b + self.w - 1 > _I64_MAX:
            raise RangeError(
                f"bucket index {b} for value {v!r} overflows the signed 64-bit range"
            )
        return b

    def encode(self, value: float) -> SDR:
        b = self.bucket(value)
        bits = {bucket_bit_index(b + i, self.seed, self.n) for i in range(self.w)}
        return SDR(self.n, tuple(sorted(bits)))


__all__ = [
    "ScalarEncoder",
    "CyclicEncoder",
    "DeltaEncoder",
    "UnboundedScalarEncoder",
    "validate_scalar_config",
    "MIN_RECOMMENDED_W",
    "MIN_RECOMMENDED_N",
    "SPARSITY_BAND",
]
