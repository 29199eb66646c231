"""
The dominance index, hands on
=============================

The sparse engine's workhorse answers one question fast: among raised
points strictly left of and strictly below a given point, what is the
best score? This script drives the index directly: raise a few points,
query some rectangles, watch the probe counter, and race the three
backends against a linear-scan reference.
"""

import random

from lcbs.dominance import DominanceIndex, RankedPoint
from lcbs.oracle import brute_dominance

# A tiny session by hand. Coordinates are 1-based ranks; a query takes
# inclusive bounds and returns (best score, payload of the first raise
# that reached it), or (0, None) for an empty rectangle.
idx = DominanceIndex(8, 8, "dense")
idx.raise_value(RankedPoint(2, 3), 1, payload=10)
idx.raise_value(RankedPoint(4, 1), 2, payload=11)
idx.raise_value(RankedPoint(5, 6), 3, payload=12)

print("three points raised on an 8 x 8 rank grid")
for xb, yb in [(8, 8), (4, 4), (3, 3), (1, 1), (0, 5)]:
    print(f"  best in x <= {xb}, y <= {yb}: {idx.max_in_prefix(xb, yb)}")
print()

# Ties go to the earliest raise: a later equal score does not steal the
# cell, and a query that sees two equal scores reports the older one.
idx.raise_value(RankedPoint(5, 6), 3, payload=99)
assert idx.max_in_prefix(8, 8) == (3, 12)
print("an equal re-raise at (5, 6) did not displace the original payload")
print()

# The probe counter prices each operation in Fenwick node touches. The
# whole point of the structure: prices stay logarithmic-ish in the grid,
# not linear in the number of points.
before = idx.probes.touched
idx.max_in_prefix(8, 8)
print(f"that full-rectangle query touched {idx.probes.touched - before} nodes")
print()

# Three interchangeable backends. dense allocates the full rank grid up
# front; csr lays out exactly the slots its preregistered points need;
# mapped allocates nodes lazily in dictionaries. Same answers, different
# footprints.
rng = random.Random("playground")
X = Y = 200
points = [(rng.randint(1, X), rng.randint(1, Y)) for _ in range(500)]
backends = {
    "dense": DominanceIndex(X, Y, "dense"),
    "csr": DominanceIndex.create(X, Y, len(points), points=points,
                                 backend="csr"),
    "mapped": DominanceIndex(X, Y, "mapped"),
}

entries = []
checked = 0
for x, y in points:
    score = rng.randint(1, 60)
    payload = len(entries)
    for idx in backends.values():
        idx.raise_value((x, y), score, payload)
    entries.append((x, y, score, payload))
    if rng.random() < 0.3:
        xb, yb = rng.randint(0, X), rng.randint(0, Y)
        want = brute_dominance(entries, xb, yb)
        for name, idx in backends.items():
            got = idx.max_in_prefix(xb, yb)
            assert got == want, (name, xb, yb, got, want)
        checked += 1

print(f"{len(points)} raises, {checked} interleaved queries: "
      f"all backends match the linear scan")
print()
print("  backend   elements held   nodes touched")
for name, idx in backends.items():
    print(f"  {name:7s} {idx.element_count:15d} {idx.probes.touched:15d}")
