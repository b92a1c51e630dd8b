"""Deterministic 64-bit hashing primitives.

These are normative: every hash-based encoder in the package derives its bit
indices from `mix64`, so outputs are bit-identical across platforms and
process restarts.  All arithmetic is modulo 2**64; signed inputs are
reinterpreted as two's-complement bit patterns before mixing.
"""

from __future__ import annotations

MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15
_MULT1 = 0xBF58476D1CE4E5B9
_MULT2 = 0x94D049BB133111EB

# XOR-ed into the key to derive a second, decorrelated output stream
# (the subsampling order key) from the same coordinate.
ORDER_STREAM_XOR = 0x5851F42D4C957F2D


def mix64(z: int) -> int:
    """Avalanche-mix a 64-bit value.

    z <- z + 9E3779B97F4A7C15
    z <- (z ^ (z >> 30)) * BF58476D1CE4E5B9
    z <- (z ^ (z >> 27)) * 94D049BB133111EB
    return z ^ (z >> 31)
    """
    z = (z + _GOLDEN) & MASK64
    z = ((z ^ (z >> 30)) * _MULT1) & MASK64
    z = ((z ^ (z >> 27)) * _MULT2) & MASK64
    return z ^ (z >> 31)


def pack_coordinate(x: int, y: int) -> int:
    """Pack a signed 32-bit (x, y) pair into one 64-bit key: x in the high
    word, y in the low word, both as unsigned reinterpretations."""
    return ((x & 0xFFFFFFFF) << 32) | (y & 0xFFFFFFFF)


def coordinate_hash(coord, seed: int, n: int) -> tuple[int, int]:
    """Map a grid cell to its bit index in [0, n) and its 64-bit order key.

    The order key gives every cell a fixed pseudo-random rank used for
    top-w subsampling; dividing by 2**64 recovers a [0, 1) weight, but the
    integer form is canonical so that comparisons never tie by rounding.
    Values are computed on demand; nothing is stored.
    """
    x, y = coord
    key = pack_coordinate(x, y)
    bit_index = mix64((key ^ seed) & MASK64) % n
    order_key = mix64((key ^ seed ^ ORDER_STREAM_XOR) & MASK64)
    return bit_index, order_key


def bucket_bit_index(bucket: int, seed: int, n: int) -> int:
    """Bit index for an unbounded signed 64-bit bucket.

    The bucket's two's-complement 64-bit pattern is the hash key, so every
    bucket in the signed 64-bit range keys distinctly.
    """
    return mix64(((bucket & MASK64) ^ seed) & MASK64) % n


def counter_stream(seed: int, k: int) -> int:
    """k-th value of the counter-based pseudo-random stream for ``seed``.

    Purely a function of (seed, k): partitions of a sampling loop can be
    computed independently and still agree.
    """
    return mix64((seed + k * _GOLDEN) & MASK64)


__all__ = [
    "MASK64",
    "ORDER_STREAM_XOR",
    "mix64",
    "pack_coordinate",
    "coordinate_hash",
    "bucket_bit_index",
    "counter_stream",
]
