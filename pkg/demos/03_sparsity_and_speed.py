"""
When sparsity pays
==================

The match count M = |{(i, j) : a[i] == b[j]}| is the real size of the
problem for the sparse engine. Over an alphabet of sigma symbols a random
pair has M of about n*m / sigma, so growing the alphabet starves the
instance of matches while n*m stays put. This script sweeps sigma and
watches the crossover, then runs the classic best case: permutations,
where every value matches exactly once and M = n.
"""

import os

from lcbs import count_matches, gen_pair, solve_pair
from lcbs.core import SequencePair

FAST = os.environ.get("LCBS_DEMO_FAST") == "1"
size = 1000 if FAST else 4000

# warm the engines so the first table row is not charged the JIT cache load
for _eng in ("rolling", "sparse"):
    solve_pair(gen_pair(64, 64, 4, "warm"), _eng)

print(f"n = m = {size}, sigma sweep")
print()
print("  sigma      M    M/(n*m)   rolling ms   sparse ms   sparse probes")
for sigma in (4, 64, 1024, 16384):
    pair = gen_pair(size, size, sigma, f"sweep:{sigma}")
    ro = solve_pair(pair, "rolling")
    sp = solve_pair(pair, "sparse")
    assert ro.length == sp.length
    density = ro.stats.match_count / (size * size)
    print(f"  {sigma:5d} {ro.stats.match_count:8d}   {density:7.4f}"
          f"   {ro.stats.elapsed_ms:9.1f}   {sp.stats.elapsed_ms:9.1f}"
          f"   {sp.stats.probes:13d}")
print()

# Permutations: M = n exactly, the sparse engine's home turf. The probe
# count grows like M log M while the rolling engine grinds all n*m cells.
size = 4000 if FAST else 20_000
import random

rng = random.Random("perm")
pa = list(range(size))
pb = list(range(size))
rng.shuffle(pa)
rng.shuffle(pb)
pair = SequencePair(tuple(pa), tuple(pb))
assert count_matches(pair) == size

sp = solve_pair(pair, "sparse")
ro = solve_pair(pair, "rolling")
assert sp.length == ro.length
print(f"permutations of {size} symbols: length {sp.length}")
print(f"  sparse  {sp.stats.elapsed_ms:8.1f} ms   {sp.stats.probes} probes")
print(f"  rolling {ro.stats.elapsed_ms:8.1f} ms   {size * size} cells")
print(f"  speedup {ro.stats.elapsed_ms / sp.stats.elapsed_ms:.1f}x")
