"""Brute-force references the engines are tested against.

Deliberately naive and independent of the production code paths: the LCBS
oracle enumerates match chains by DFS, the single-sequence oracle is the
classical quadratic bitonic DP, and the dominance oracle is a linear scan.
All refuse inputs large enough to make exhaustive search dishonest.
"""

from __future__ import annotations

from typing import Optional, Sequence

from .core import (
    EMPTY_WITNESS,
    LcbsOutcome,
    MatchPoint,
    RunStats,
    SequencePair,
    Symbol,
    Witness,
    count_matches,
)


class OracleSizeError(ValueError):
    """Raised when an instance is too large for exhaustive search."""


def _enumerate_matches_naive(pair: SequencePair) -> list[MatchPoint]:
    return [
        MatchPoint(i, j, va)
        for i, va in enumerate(pair.a)
        for j, vb in enumerate(pair.b)
        if va == vb
    ]


def brute_lcbs(
    pair: SequencePair,
    max_matches: int = 22,
    max_side: int = 12,
) -> tuple[int, Witness]:
    """Exhaustive LCBS by DFS over match chains, with admissible pruning.

    Guard: refuses unless the match count is at most max_matches or both
    sides are at most max_side long. Returns the first optimum found when
    matches are explored in (i, j) order, so the result is deterministic.
    """
    matches = _enumerate_matches_naive(pair)
    M = len(matches)
    if M > max_matches and (pair.n > max_side or pair.m > max_side):
        raise OracleSizeError(
            f"instance too large for the exhaustive oracle: "
            f"{M} matches, sides {pair.n}x{pair.m} "
            f"(limits: {max_matches} matches or {max_side}x{max_side})"
        )

    best_len = 0
    best_chain: list[int] = []
    chain: list[int] = []

    def extend(last: int, rising: bool) -> None:
        nonlocal best_len, best_chain
        if len(chain) > best_len:
            best_len = len(chain)
            best_chain = chain.copy()
        p = matches[last]
        for k in range(last + 1, M):
            # every later chain element has a strictly larger ordinal, so the
            # remaining-ordinal count is an admissible bound
            if len(chain) + (M - k) <= best_len:
                break
            q = matches[k]
            if q.i <= p.i or q.j <= p.j:
                continue
            if rising and q.value > p.value:
                chain.append(k)
                extend(k, True)
                chain.pop()
            if q.value < p.value:
                chain.append(k)
                extend(k, False)
                chain.pop()

    for k in range(M):
        if 1 + (M - 1 - k) <= best_len:
            break
        chain.append(k)
        extend(k, True)
        chain.pop()

    if best_len == 0:
        return 0, EMPTY_WITNESS
    pts = tuple(matches[k] for k in best_chain)
    # peak = last element of the strictly rising prefix
    h = 0
    while h + 1 < len(pts) and pts[h + 1].value > pts[h].value:
        h += 1
    return best_len, Witness(points=pts, peak_pos=h)


def brute_lcbs_outcome(pair: SequencePair) -> LcbsOutcome:
    """brute_lcbs wrapped in the common engine outcome shape."""
    import time

    t0 = time.perf_counter()
    length, w = brute_lcbs(pair)
    elapsed = (time.perf_counter() - t0) * 1000.0
    peak = w.points[w.peak_pos] if w.points else None
    stats = RunStats(
        match_count=count_matches(pair),
        engine="oracle",
        elapsed_ms=elapsed,
        aux_elements=0,
    )
    return LcbsOutcome(length=length, witness=w, peak=peak, stats=stats)


def brute_lbs(a: Sequence[Symbol], max_side: int = 5000) -> int:
    """Longest strictly bitonic subsequence of one sequence, classical O(n^2).

    rise[i] and fall[i] are the longest strictly increasing run ending at i
    and strictly decreasing run starting at i; the answer is the best
    rise[i] + fall[i] - 1, or 0 for an empty input.
    """
    n = len(a)
    if n > max_side:
        raise OracleSizeError(f"sequence of length {n} exceeds oracle limit {max_side}")
    if n == 0:
        return 0
    rise = [1] * n
    fall = [1] * n
    for i in range(n):
        for k in range(i):
            if a[k] < a[i] and rise[k] + 1 > rise[i]:
                rise[i] = rise[k] + 1
    for i in range(n - 1, -1, -1):
        for k in range(i + 1, n):
            if a[k] < a[i] and fall[k] + 1 > fall[i]:
                fall[i] = fall[k] + 1
    return max(rise[i] + fall[i] - 1 for i in range(n))


def brute_dominance(
    entries: Sequence[tuple[int, int, int, int]],
    x_bound: int,
    y_bound: int,
) -> tuple[int, Optional[int]]:
    """Reference for prefix-rectangle max queries.

    entries are (x, y, score, payload) in raise order; the result is the best
    score among entries with x <= x_bound and y <= y_bound under max-merge
    semantics per point, ties broken by earliest entry. (0, None) when the
    rectangle is empty.
    """
    best_score = 0
    best_payload: Optional[int] = None
    seen: dict[tuple[int, int], int] = {}
    for x, y, score, payload in entries:
        prev = seen.get((x, y), 0)
        if score <= prev:
            continue  # max-merged per point: only strict improvements land
        seen[(x, y)] = score
        if x <= x_bound and y <= y_bound and score > best_score:
            best_score = score
            best_payload = payload
    return best_score, best_payload


def brute_inc_dec(pair: SequencePair) -> dict[tuple[int, int], tuple[int, int]]:
    """Definition-level chain maxima per match, O(M^2).

    inc at (i, j) is the longest strictly increasing common chain ending
    there; dec is the longest strictly decreasing common chain starting
    there. Used to pin the per-vertex labels of the faster engines.
    """
    matches = _enumerate_matches_naive(pair)
    M = len(matches)
    inc = [1] * M
    dec = [1] * M
    for k in range(M):
        pk = matches[k]
        for q in range(k):
            pq = matches[q]
            if pq.i < pk.i and pq.j < pk.j and pq.value < pk.value:
                if inc[q] + 1 > inc[k]:
                    inc[k] = inc[q] + 1
    for k in range(M - 1, -1, -1):
        pk = matches[k]
        for q in range(k + 1, M):
            pq = matches[q]
            if pq.i > pk.i and pq.j > pk.j and pq.value < pk.value:
                if dec[q] + 1 > dec[k]:
                    dec[k] = dec[q] + 1
    return {(p.i, p.j): (inc[k], dec[k]) for k, p in enumerate(matches)}
