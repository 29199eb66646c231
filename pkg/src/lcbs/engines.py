"""Engine registry, automatic selection, and the one-call entry point."""

from __future__ import annotations

import math
from collections import Counter
from typing import Optional

from .core import LcbsOutcome, SequencePair
from .dense import dense_lcbs
from .oracle import brute_lcbs_outcome
from .rolling import rolling_lcbs
from .sparse import sparse_lcbs

ENGINE_IDS = ("dense", "rolling", "sparse", "auto", "oracle")


def _match_count_capped(pair: SequencePair, cap: int) -> tuple[int, bool]:
    """Exact match count, or (count_so_far, True) once it reaches cap."""
    ca = Counter(pair.a)
    cb = Counter(pair.b)
    if len(cb) < len(ca):
        ca, cb = cb, ca
    total = 0
    for v, c in ca.items():
        d = cb.get(v)
        if d:
            total += c * d
            if total >= cap:
                return total, True
    return total, False


def choose_engine(pair: SequencePair) -> str:
    """Pick sparse when its match-count work bound beats the grid's.

    Sparse costs about M log^2 M index work against the row DP's n*m cells;
    the crossover test is 8 * M * ceil(log2(M+2))^2 < n*m. Counting stops
    early once M alone settles the comparison.
    """
    nm = pair.n * pair.m
    if nm == 0:
        return "rolling"
    cap = nm // 8 + 1
    M, capped = _match_count_capped(pair, cap)
    if capped:
        return "rolling"
    if M == 0:
        return "sparse"
    lg = math.ceil(math.log2(M + 2))
    return "sparse" if 8 * M * lg * lg < nm else "rolling"


def solve_pair(pair: SequencePair, engine: str = "auto",
               want_witness: bool = False,
               index_backend: Optional[str] = None) -> LcbsOutcome:
    """Solve one instance with the named engine ("auto" picks one).

    The oracle engine refuses large instances by raising OracleSizeError;
    it exists for cross-checking, not for production sizes.
    """
    if not isinstance(pair, SequencePair):
        raise TypeError("solve_pair expects a SequencePair")
    if engine == "auto":
        engine = choose_engine(pair)
    if engine == "dense":
        return dense_lcbs(pair, want_witness)
    if engine == "rolling":
        return rolling_lcbs(pair, want_witness)
    if engine == "sparse":
        return sparse_lcbs(pair, want_witness, index_backend)
    if engine == "oracle":
        return brute_lcbs_outcome(pair)
    raise ValueError(f"unknown engine {engine!r}; expected one of {ENGINE_IDS}")
