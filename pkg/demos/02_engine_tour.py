"""
Three engines, one answer
=========================

The same problem solved three ways, with the trade-offs on display:

* dense    labels every match through row DP tables, O(n*m) time,
           keeps all M match entries, reconstructs witnesses.
* rolling  the same DP squeezed into four rows of the shorter side,
           O(n*m) time but O(min(n, m)) memory; witnesses cost a
           second pass over a prefix of the rows.
* sparse   work scales with the match count M instead of n*m, driven
           by a dominance index over compressed ranks.

"auto" inspects the instance and picks one of the three.
"""

import os

from lcbs import SequencePair, choose_engine, gen_pair, solve_pair, validate_witness

FAST = os.environ.get("LCBS_DEMO_FAST") == "1"

# the first call in a process pays the compile-cache load; warm each
# engine up so the timings below measure the algorithms, not the JIT
for _eng in ("dense", "rolling", "sparse"):
    solve_pair(gen_pair(64, 64, 4, "warm"), _eng, want_witness=True)


def show(title, pair):
    print(title)
    print(f"  n = {pair.n}, m = {pair.m}, auto picks {choose_engine(pair)!r}")
    for engine in ("dense", "rolling", "sparse"):
        out = solve_pair(pair, engine, want_witness=True)
        assert validate_witness(pair, out.witness).ok
        print(f"  {engine:8s} length {out.length:4d}"
              f"  M {out.stats.match_count:7d}"
              f"  {out.stats.elapsed_ms:8.2f} ms"
              f"  aux {out.stats.aux_elements:9d} elements")
    print()


# A mid-sized random instance over a small alphabet: matches are plentiful
# (M is about n*m / sigma), which favors the n*m engines.
size = 300 if FAST else 1200
show("dense alphabet, many matches", gen_pair(size, size, 12, "tour:dense"))

# The same size over a huge alphabet: matches are rare and the sparse
# engine touches far fewer cells than n*m.
show("huge alphabet, rare matches",
     gen_pair(size, size, 10 * size, "tour:sparse"))

# Asymmetric shapes: rolling keeps only four rows over the shorter side,
# so a long-by-thin instance costs it almost no memory at all.
show("long by thin", gen_pair(40 if FAST else 150, 30 * size, 9, "tour:thin"))

# Length-only calls skip witness reconstruction; for rolling that avoids
# the backtrack pass entirely.
out = solve_pair(gen_pair(size, size, 12, "tour:dense"), "rolling")
print(f"length-only rolling run: length {out.length}, witness {out.witness}, "
      f"aux {out.stats.aux_elements} elements")

# Sequences can be swapped or reversed (both at once) without changing the
# answer; handy as a quick self-check on any instance.
pair = gen_pair(size // 3, size // 2, 7, "tour:sym")
base = solve_pair(pair, "auto").length
assert solve_pair(SequencePair(pair.b, pair.a), "auto").length == base
assert solve_pair(SequencePair(pair.a[::-1], pair.b[::-1]), "auto").length == base
print(f"symmetry checks pass at length {base}")
