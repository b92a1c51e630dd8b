"""Encoder for discrete, unrelated categories.

Each category owns a dedicated block of w bits; distinct labels never share
a bit, so downstream consumers see them as maximally dissimilar.  Related or
ordered categories belong in the cyclic/scalar encoders instead.
"""

from __future__ import annotations

from typing import Sequence

from .errors import ConfigError, UnknownCategoryError
from .sdr import SDR

UNKNOWN_POLICIES = ("error", "catch_all")


class CategoryEncoder:
    """Maps each label to its own disjoint block of w contiguous bits.

    Blocks follow the declared category order -- no hashing -- so a config is
    self-documenting and stable across runs.  Unknown labels raise by
    default; with ``unknown_policy="catch_all"`` an extra trailing block
    absorbs them (opting in, because silent remapping hides data problems).
    """

    def __init__(self, categories: Sequence[str], w: int, unknown_policy: str = "error"):
        labels = list(categories)
        if not labels:
            raise ConfigError("at least one category is required")
        if len(set(labels)) != len(labels):
            raise ConfigError("category labels must be unique")
        if not isinstance(w, int) or isinstance(w, bool) or w < 1:
            raise ConfigError(f"w must be a positive integer, got {w!r}")
        if unknown_policy not in UNKNOWN_POLICIES:
            raise ConfigError(
                f"unknown_policy must be one of {UNKNOWN_POLICIES}, got {unknown_policy!r}"
            )
        self.categories = labels
        self.w = w
        self.unknown_policy = unknown_policy
        self._index = {label: i for i, label in enumerate(labels)}
        blocks = len(labels) + (1 if unknown_policy == "catch_all" else 0)
        self.n = blocks * w
        self.warnings: list = []

    def block_index(self, label: str) -> int:
        idx = self._index.get(label)
        if idx is None:
            if self.unknown_policy == "catch_all":
                return len(self.categories)
            raise UnknownCategoryError(
                f"unknown category {label!r}; known: {self.categories}"
            )
        return idx

    def encode(self, label: str) -> SDR:
        start = self.block_index(label) * self.w
        return SDR(self.n, tuple(range(start, start + self.w)))


__all__ = ["CategoryEncoder", "UNKNOWN_POLICIES"]
