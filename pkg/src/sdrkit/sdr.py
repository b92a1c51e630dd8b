"""Sparse distributed representation: a fixed-length bit vector stored as the
sorted indices of its one-bits.

The sparse index form is canonical because every encoder in this package
produces far fewer one-bits than total bits.  Dense strings ("010010...")
exist for display and interchange; index 0 is the leftmost character.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DimensionMismatch, InvalidSdr, ParseError


@dataclass(frozen=True)
class SDR:
    """Immutable bit vector of length ``n`` with ``active`` one-bit indices.

    ``active`` is normalized to a strictly increasing tuple; duplicates or
    out-of-range indices are rejected.  ``n == 0`` is permitted as the
    degenerate empty vector (it round-trips through the empty dense string)
    but cannot be used where sparsity is undefined.
    """

    n: int
    active: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or isinstance(self.n, bool) or self.n < 0:
            raise InvalidSdr(f"total bit count must be a non-negative integer, got {self.n!r}")
        indices = tuple(int(i) for i in self.active)
        if any(indices[k] >= indices[k + 1] for k in range(len(indices) - 1)):
            ordered = tuple(sorted(indices))
            if any(ordered[k] == ordered[k + 1] for k in range(len(ordered) - 1)):
                raise InvalidSdr("active indices contain duplicates")
            indices = ordered
        if indices and (indices[0] < 0 or indices[-1] >= self.n):
            raise InvalidSdr(
                f"active indices must lie in [0, {self.n}), got range "
                f"[{indices[0]}, {indices[-1]}]"
            )
        object.__setattr__(self, "active", indices)

    @property
    def active_count(self) -> int:
        return len(self.active)

    @property
    def sparsity(self) -> float:
        return sparsity(self)

    def overlap(self, other: "SDR") -> int:
        return overlap(self, other)

    def to_dense_string(self) -> str:
        return to_dense_string(self)

    def to_sparse_string(self, self_describing: bool = False) -> str:
        return to_sparse_string(self, self_describing=self_describing)


def overlap(a: SDR, b: SDR) -> int:
    """Number of one-bit positions shared by two same-length SDRs.

    SDRs of different lengths are incomparable and raise DimensionMismatch.
    """
    if a.n != b.n:
        raise DimensionMismatch(f"cannot compare SDRs of length {a.n} and {b.n}")
    return len(frozenset(a.active) & frozenset(b.active))


def sparsity(a: SDR) -> float:
    """Fraction of bits that are one; undefined (raises) for n == 0."""
    if a.n == 0:
        raise InvalidSdr("sparsity is undefined for a zero-length SDR")
    return len(a.active) / a.n


def to_dense_string(a: SDR) -> str:
    """Render as '0'/'1' characters, index 0 leftmost."""
    chars = ["0"] * a.n
    for i in a.active:
        chars[i] = "1"
    return "".join(chars)


def from_dense_string(s: str) -> SDR:
    """Inverse of to_dense_string; any character other than 0/1 is an error."""
    active = []
    for pos, ch in enumerate(s):
        if ch == "1":
            active.append(pos)
        elif ch != "0":
            raise ParseError(f"invalid character {ch!r} at position {pos}")
    return SDR(len(s), tuple(active))


def to_sparse_string(a: SDR, self_describing: bool = False) -> str:
    """Comma-separated ascending indices, e.g. "1,4"; empty string when no
    bits are set.  The self-describing form prefixes "n=<N>;"."""
    body = ",".join(str(i) for i in a.active)
    if self_describing:
        return f"n={a.n};{body}"
    return body


def from_sparse_string(s: str, n: int | None = None) -> SDR:
    """Parse the sparse text form.  ``n`` is required unless the string is
    self-describing ("n=<N>;...")."""
    text = s.strip()
    if text.startswith("n="):
        head, sep, body = text.partition(";")
        if not sep:
            raise ParseError("self-describing form requires 'n=<N>;' prefix")
        try:
            n = int(head[2:])
        except ValueError:
            raise ParseError(f"invalid bit count {head[2:]!r}") from None
    else:
        body = text
        if n is None:
            raise ParseError("total bit count required for non-self-describing form")
    if body == "":
        return SDR(n, ())
    try:
        indices = tuple(int(part) for part in body.split(","))
    except ValueError:
        raise ParseError(f"invalid index list {body!r}") from None
    return SDR(n, indices)


def to_dense_array(a: SDR, dtype=None) -> "object":
    """Dense numpy view (uint8 by default); convenience for array workflows."""
    import numpy as np

    out = np.zeros(a.n, dtype=dtype or np.uint8)
    if a.active:
        out[list(a.active)] = 1
    return out


def random_sdr(n: int, w: int, rng) -> SDR:
    """Uniformly random SDR with w one-bits; rng is a random.Random."""
    if w > n:
        raise InvalidSdr(f"cannot place {w} one-bits in {n} bits")
    return SDR(n, tuple(sorted(rng.sample(range(n), w))))


__all__ = [
    "SDR",
    "overlap",
    "sparsity",
    "to_dense_string",
    "from_dense_string",
    "to_sparse_string",
    "from_sparse_string",
    "to_dense_array",
    "random_sdr",
]
