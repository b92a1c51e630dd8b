"""Scoring encoders against formal semantic-similarity criteria.

A *distance score* over an input space must be non-negative, symmetric, and
zero between identical values; `check_distance_axioms` verifies those three
properties on sampled inputs.  A good encoder then maps smaller distances to
larger bit overlaps; `evaluate_semantic_consistency` measures how often an
encoder strictly violates that ordering over sampled quadruples of inputs,
and reports the rank correlation between overlap and distance over all
sample pairs.

Only the *strict* violations are counted: overlap is integer-valued, so ties
against distinct distances are unavoidable for any encoder and are treated
as neutral.  The discordance rate is a heuristic quality signal, not a hard
pass/fail -- a perfect ordering is not attainable for most input spaces.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np
from scipy import stats

from .errors import DimensionMismatch, EvaluationError, InputError
from .hashing import counter_stream
from .sdr import SDR

AXIOM_TOLERANCE = 1e-9
EXHAUSTIVE_SAMPLE_LIMIT = 40
_EXAMPLE_CAP = 10  # offending pairs kept per axiom, enough to debug with

AXIOMS = ("non_negativity", "symmetry", "identity")


@dataclass
class AxiomCheck:
    """Violation count for one axiom plus a few offending example pairs."""

    violations: int = 0
    examples: list[tuple] = field(default_factory=list)

    def record(self, example: tuple) -> None:
        self.violations += 1
        if len(self.examples) < _EXAMPLE_CAP:
            self.examples.append(example)


@dataclass
class EvaluationReport:
    """Outcome of axiom checks and/or a semantic-consistency run."""

    samples_checked: int = 0
    axiom_violations: dict[str, AxiomCheck] = field(default_factory=dict)
    quadruples_sampled: int = 0
    discordant: int = 0
    discordance_rate: float = 0.0
    rank_correlation: float = 0.0
    overlap_uninformative: bool = False

    @property
    def total_axiom_violations(self) -> int:
        return sum(c.violations for c in self.axiom_violations.values())

    def merge(self, other: "EvaluationReport") -> "EvaluationReport":
        merged = EvaluationReport(
            samples_checked=max(self.samples_checked, other.samples_checked),
            axiom_violations={**self.axiom_violations, **other.axiom_violations},
            quadruples_sampled=self.quadruples_sampled + other.quadruples_sampled,
            discordant=self.discordant + other.discordant,
            rank_correlation=(
                other.rank_correlation if other.quadruples_sampled else self.rank_correlation
            ),
            overlap_uninformative=self.overlap_uninformative or other.overlap_uninformative,
        )
        if merged.quadruples_sampled:
            merged.discordance_rate = merged.discordant / merged.quadruples_sampled
        return merged

    def to_text(self) -> str:
        lines = [f"samples_checked: {self.samples_checked}"]
        if self.axiom_violations:
            lines.append("axioms:")
            for name in AXIOMS:
                check = self.axiom_violations.get(name, AxiomCheck())
                lines.append(f"  {name}: {check.violations} violation(s)")
                for ex in check.examples:
                    lines.append(f"    offending: {ex!r}")
        if self.quadruples_sampled:
            lines.append(f"quadruples_sampled: {self.quadruples_sampled}")
            lines.append(f"discordant: {self.discordant}")
            lines.append(f"discordance_rate: {self.discordance_rate:.6f}")
            lines.append(f"rank_correlation: {self.rank_correlation:.6f}")
            if self.overlap_uninformative:
                lines.append("note: overlap has zero variance across sample pairs; "
                             "the encoder is uninformative on these samples")
        return "\n".join(lines)


def _call_distance(distance: Callable, x, y):
    try:
        return distance(x, y)
    except Exception as exc:  # surface which pair broke the user's function
        raise EvaluationError(f"distance failed on pair ({x!r}, {y!r}): {exc}") from exc


def check_distance_axioms(distance: Callable, samples: Sequence) -> EvaluationReport:
    """Verify non-negativity, symmetry, and identity-of-zero on all sample
    pairs (tolerance 1e-9 for the float comparisons)."""
    if len(samples) < 2:
        raise InputError("axiom checks need at least 2 samples")
    checks = {name: AxiomCheck() for name in AXIOMS}
    m = len(samples)
    for i in range(m):
        d_ii = _call_distance(distance, samples[i], samples[i])
        if abs(d_ii) > AXIOM_TOLERANCE:
            checks["identity"].record((samples[i], samples[i], d_ii))
        for j in range(i + 1, m):
            d_ij = _call_distance(distance, samples[i], samples[j])
            d_ji = _call_distance(distance, samples[j], samples[i])
            if d_ij < -AXIOM_TOLERANCE:
                checks["non_negativity"].record((samples[i], samples[j], d_ij))
            if d_ji < -AXIOM_TOLERANCE:
                checks["non_negativity"].record((samples[j], samples[i], d_ji))
            if abs(d_ij - d_ji) > AXIOM_TOLERANCE:
                checks["symmetry"].record((samples[i], samples[j], d_ij, d_ji))
    return EvaluationReport(samples_checked=m, axiom_violations=checks)


def _encode_all(encode: Callable[[object], SDR], samples: Sequence) -> list[SDR]:
    encodings = [encode(x) for x in samples]
    lengths = {e.n for e in encodings}
    if len(lengths) > 1:
        raise DimensionMismatch(
            f"encodings have mixed total lengths {sorted(lengths)}; "
            "an encoder must emit one fixed dimensionality"
        )
    return encodings


def _pairwise(encodings: list[SDR], distance: Callable, samples: Sequence):
    """Overlap and distance for every unordered sample pair."""
    sets = [frozenset(e.active) for e in encodings]
    m = len(samples)
    overlaps, dists = [], []
    for i in range(m):
        for j in range(i + 1, m):
            overlaps.append(len(sets[i] & sets[j]))
            dists.append(_call_distance(distance, samples[i], samples[j]))
    return overlaps, dists


def _rank_correlation(overlaps, dists) -> tuple[float, bool]:
    uninformative = len(set(overlaps)) <= 1
    if uninformative or len(set(dists)) <= 1:
        return 0.0, uninformative
    rho = stats.spearmanr(overlaps, dists).statistic
    return (0.0 if math.isnan(rho) else float(rho)), uninformative


def _is_discordant(o1: int, o2: int, d1, d2) -> bool:
    # Strict violation of "more overlap <=> smaller distance"; any tie on
    # either side is neutral.
    return (o1 > o2 and d1 > d2) or (o1 < o2 and d1 < d2)


def evaluate_semantic_consistency(
    encode: Callable[[object], SDR],
    distance: Callable,
    samples: Sequence,
    quadruple_count: int = 10_000,
    seed: int = 0,
    exhaustive: bool = False,
) -> EvaluationReport:
    """Count strict overlap-vs-distance discordances over quadruples.

    A quadruple (w, x, y, z) is discordant when pair (w, x) overlaps strictly
    more than (y, z) yet is strictly farther, or vice versa.  Sampling uses a
    counter-based generator keyed by (seed, ordinal), so reports are
    reproducible and independent of any partitioning of the loop.  With
    ``exhaustive=True`` (at most 40 samples) every ordered quadruple is
    enumerated instead.
    """
    if len(samples) < 4:
        raise InputError("consistency evaluation needs at least 4 samples")
    encodings = _encode_all(encode, samples)
    overlaps, dists = _pairwise(encodings, distance, samples)
    rho, uninformative = _rank_correlation(overlaps, dists)

    if exhaustive:
        if len(samples) > EXHAUSTIVE_SAMPLE_LIMIT:
            raise InputError(
                f"exhaustive mode enumerates len(samples)**4 quadruples and is "
                f"limited to {EXHAUSTIVE_SAMPLE_LIMIT} samples, got {len(samples)}"
            )
        discordant, total = _exhaustive_discordance(encodings, distance, samples)
    else:
        discordant, total = _sampled_discordance(
            encodings, distance, samples, quadruple_count, seed
        )

    return EvaluationReport(
        samples_checked=len(samples),
        quadruples_sampled=total,
        discordant=discordant,
        discordance_rate=discordant / total if total else 0.0,
        rank_correlation=rho,
        overlap_uninformative=uninformative,
    )


def _sampled_discordance(encodings, distance, samples, quadruple_count, seed):
    m = len(samples)
    sets = [frozenset(e.active) for e in encodings]
    discordant = 0
    for q in range(quadruple_count):
        w_, x_, y_, z_ = (
            counter_stream(seed, 4 * q + j) % m for j in range(4)
        )
        o1 = len(sets[w_] & sets[x_])
        o2 = len(sets[y_] & sets[z_])
        if o1 == o2:
            continue
        d1 = _call_distance(distance, samples[w_], samples[x_])
        d2 = _call_distance(distance, samples[y_], samples[z_])
        if _is_discordant(o1, o2, d1, d2):
            discordant += 1
    return discordant, quadruple_count


def _exhaustive_discordance(encodings, distance, samples):
    m = len(samples)
    sets = [frozenset(e.active) for e in encodings]
    O = np.empty((m, m), dtype=np.int64)
    D = np.empty((m, m), dtype=np.float64)
    for i in range(m):
        for j in range(m):
            O[i, j] = len(sets[i] & sets[j])
            D[i, j] = _call_distance(distance, samples[i], samples[j])
    o_flat = O.reshape(-1)
    d_flat = D.reshape(-1)
    discordant = 0
    chunk = 4096  # bounds the (chunk, m*m) comparison matrices
    for s in range(0, o_flat.size, chunk):
        o = o_flat[s : s + chunk, None]
        d = d_flat[s : s + chunk, None]
        discordant += int(
            np.count_nonzero(
                ((o > o_flat) & (d > d_flat)) | ((o < o_flat) & (d < d_flat))
            )
        )
    return discordant, int(o_flat.size) ** 2


def evaluate_encoder(
    encode: Callable[[object], SDR],
    distance: Callable,
    samples: Sequence,
    quadruple_count: int = 10_000,
    seed: int = 0,
    exhaustive: bool = False,
) -> EvaluationReport:
    """Full report: axiom checks plus semantic consistency in one pass."""
    axioms = check_distance_axioms(distance, samples)
    consistency = evaluate_semantic_consistency(
        encode, distance, samples, quadruple_count=quadruple_count,
        seed=seed, exhaustive=exhaustive,
    )
    return axioms.merge(consistency)


# --- Ready-made distance scores -------------------------------------------
#
# Conveniences for common input spaces; nothing downstream privileges them,
# and callers are free to supply their own callables.

def absolute_difference(a, b) -> float:
    return abs(a - b)


def circular_distance(period: float) -> Callable[[float, float], float]:
    """Shortest way around a cycle of the given period."""
    if period <= 0:
        raise InputError(f"period must be positive, got {period!r}")

    def dist(a: float, b: float) -> float:
        d = abs(a - b) % period
        return min(d, period - d)

    return dist


def chebyshev_distance(a, b) -> float:
    """Chessboard distance between grid coordinates."""
    (ax, ay), (bx, by) = a, b
    return float(max(abs(ax - bx), abs(ay - by)))


def discrete_distance(a, b) -> float:
    """0 for equal values, 1 otherwise (categorical inputs)."""
    return 0.0 if a == b else 1.0


__all__ = [
    "AXIOM_TOLERANCE",
    "EXHAUSTIVE_SAMPLE_LIMIT",
    "AxiomCheck",
    "EvaluationReport",
    "check_distance_axioms",
    "evaluate_semantic_consistency",
    "evaluate_encoder",
    "absolute_difference",
    "circular_distance",
    "chebyshev_distance",
    "discrete_distance",
]
