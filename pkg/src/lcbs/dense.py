"""Quadratic engine with full per-match tables and parent links.

Runs the row-sweep rising-chain DP twice, once forward and once on both
sequences reversed, which labels every match with the longest strictly
rising chain ending at it (inc) and the longest strictly falling chain
starting at it (dec). The answer is max over matches of inc + dec - 1;
ties go to the smallest (i, j). Parent links from both sweeps give a
witness by two walks from the chosen peak.
"""

from __future__ import annotations

import time
from typing import Mapping, Optional, Sequence, Union

import numpy as np

from . import _kernels
from .core import (EMPTY_WITNESS, LcbsOutcome, MatchPoint, RunStats,
                   SequencePair, Witness)

Entry = tuple[int, int]


def reconstruct(parents: Mapping[Entry, Optional[Entry]],
                start: Union[Entry, MatchPoint], reverse: bool,
                a: Sequence[int]) -> list[int]:
    """Walk a parent table from start and read off the values.

    Emits the walk order by default (useful for falling halves, which walk
    forward); reverse=True flips it (rising halves walk back to the chain
    head). Raises on a cycle instead of looping.
    """
    if isinstance(start, MatchPoint):
        node: Optional[Entry] = (start.i, start.j)
    else:
        node = (start[0], start[1])
    seq: list[int] = []
    limit = len(parents) + 1
    while node is not None:
        if len(seq) >= limit:
            raise ValueError("parent walk cycles")
        seq.append(a[node[0]])
        node = parents.get(node)
    if reverse:
        seq.reverse()
    return seq


def _match_coords(a: np.ndarray, b: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    order = np.argsort(a, kind="stable")
    a_sorted = a[order]
    lo = np.searchsorted(a_sorted, b, side="left")
    hi = np.searchsorted(a_sorted, b, side="right")
    total = int((hi - lo).sum())
    dummy = np.zeros(b.shape[0], np.int32)
    _, _, mi, mj = _kernels.fill_matches(order, lo, hi, dummy, dummy,
                                         a.shape[0], total, True)
    return mi, mj


def dense_lcbs(pair: SequencePair, want_witness: bool = False) -> LcbsOutcome:
    """Solve with the two-sweep table DP; peak is always reported."""
    t0 = time.perf_counter()
    a = np.asarray(pair.a, np.int64)
    b = np.asarray(pair.b, np.int64)
    n, m = a.shape[0], b.shape[0]
    mi, mj = _match_coords(a, b)
    M = mi.shape[0]
    if M == 0:
        elapsed = (time.perf_counter() - t0) * 1e3
        stats = RunStats(0, "dense", elapsed, 0)
        return LcbsOutcome(0, EMPTY_WITNESS if want_witness else None,
                           None, stats)
    inc, parent_inc = _kernels.lcis_table_kernel(a, b, mi, mj)

    # the reversed sweep sees matches in (n-1-i, m-1-j) order, which is the
    # original order read backwards
    mi_r = np.ascontiguousarray((n - 1 - mi.astype(np.int64))[::-1]).astype(np.int32)
    mj_r = np.ascontiguousarray((m - 1 - mj.astype(np.int64))[::-1]).astype(np.int32)
    inc_r, parent_r = _kernels.lcis_table_kernel(
        np.ascontiguousarray(a[::-1]), np.ascontiguousarray(b[::-1]), mi_r, mj_r)
    dec = np.ascontiguousarray(inc_r[::-1])
    pr = np.ascontiguousarray(parent_r[::-1])
    parent_dec = np.where(pr >= 0, M - 1 - pr, np.int64(-1))

    best, arg = _kernels.peak_argmax(inc, dec)
    length = int(best)
    k = int(arg)
    peak = MatchPoint(int(mi[k]), int(mj[k]), pair.a[int(mi[k])])

    witness: Optional[Witness] = None
    if want_witness:
        rise = []
        cur = k
        while cur >= 0:
            rise.append(cur)
            cur = int(parent_inc[cur])
            if len(rise) > M:
                raise AssertionError("rising parent walk cycles")
        rise.reverse()
        fall = []
        cur = int(parent_dec[k])
        while cur >= 0:
            fall.append(cur)
            cur = int(parent_dec[cur])
            if len(fall) > M:
                raise AssertionError("falling parent walk cycles")
        if len(rise) != int(inc[k]) or len(fall) != int(dec[k]) - 1:
            raise AssertionError("parent walk lengths disagree with tables")
        pts = tuple(MatchPoint(int(mi[t]), int(mj[t]), pair.a[int(mi[t])])
                    for t in rise + fall)
        witness = Witness(pts, len(rise) - 1)
    elapsed = (time.perf_counter() - t0) * 1e3
    # headline space: one entry per match per table
    stats = RunStats(M, "dense", elapsed, M)
    return LcbsOutcome(length, witness, peak, stats)
