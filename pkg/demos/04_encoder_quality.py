#!/usr/bin/env python3
"""Scoring an encoder: does more bit overlap really mean smaller distance?

Three encoders face the same distance function on the same samples:
a well-aligned scalar encoder (expect zero strict discordance), a constant
encoder (uninformative: all ties), and a bucket-permuted saboteur (locality
destroyed, discordance everywhere).
"""

import random

from sdrkit import (
    SDR,
    ScalarEncoder,
    absolute_difference,
    check_distance_axioms,
    evaluate_encoder,
)

encoder = ScalarEncoder(min_value=0, max_value=45, n=221, w=21)
samples = [(i + 0.5) * encoder.resolution for i in range(200)]

print("=== first, vet the distance itself ===")
report = check_distance_axioms(absolute_difference, samples[:50])
print(f"|a-b| on 50 samples: {report.total_axiom_violations} axiom violations")

bogus = check_distance_axioms(lambda a, b: a - b, samples[:50])
print(f"signed a-b:          {bogus.total_axiom_violations} violations "
      f"(symmetry: {bogus.axiom_violations['symmetry'].violations}, "
      f"sign: {bogus.axiom_violations['non_negativity'].violations})")

print()
print("=== a well-built encoder: overlap tracks distance perfectly ===")
good = evaluate_encoder(encoder.encode, absolute_difference, samples,
                        quadruple_count=10_000, seed=0)
print(good.to_text())

print()
print("=== degenerate control: one fixed code for everything ===")
fixed = SDR(221, tuple(range(21)))
flat = evaluate_encoder(lambda v: fixed, absolute_difference, samples,
                        quadruple_count=2_000, seed=0)
print(flat.to_text())

print()
print("=== sabotaged control: same encoder, buckets shuffled ===")
perm = list(range(encoder.n - encoder.w + 1))
random.Random(0).shuffle(perm)


def scrambled(value):
    b = perm[encoder.bucket(value)]
    return SDR(encoder.n, tuple(range(b, b + encoder.w)))


bad = evaluate_encoder(scrambled, absolute_difference, samples,
                       quadruple_count=10_000, seed=0)
print(bad.to_text())

print()
print(f"summary: discordance {good.discordance_rate:.3f} (good) vs "
      f"{bad.discordance_rate:.3f} (scrambled); rank correlation "
      f"{good.rank_correlation:+.2f} vs {bad.rank_correlation:+.2f}")
