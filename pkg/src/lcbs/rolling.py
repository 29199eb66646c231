"""Linear-space engine: two-phase row DP plus recompute backtracking.

One forward pass keeps, per column j of the shorter sequence, the best
still-rising chain ending there (up) and the best chain already past its
peak ending there (down2), along with the row that wrote each value. That
yields the length in O(n*m) time and O(min(n, m)) space. Witnesses come
from backtracking: rerun the forward pass over the prefix of rows before
the current chain element, then pick any admissible predecessor column
whose recomputed value is exactly one less. The same four buffers are
reused for every rerun, so peak space stays at four arrays.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import _kernels
from .core import (EMPTY_WITNESS, LcbsOutcome, MatchPoint, RunStats,
                   SequencePair, Witness, count_matches)

UP = 0
DOWN = 1


@dataclass
class TwoPhaseRowState:
    """Python mirror of the kernel's column state, for tests and study."""

    up: list[int]
    down2: list[int]
    up_row: list[int]
    down2_row: list[int]

    @classmethod
    def fresh(cls, m: int) -> "TwoPhaseRowState":
        return cls([0] * m, [0] * m, [-1] * m, [-1] * m)


def twophase_row_update(row_symbol: int, b: Sequence[int],
                        state: TwoPhaseRowState, row: int) -> None:
    """Apply one row of the two-phase recurrence to state, in place.

    Left-to-right over columns: best_up accumulates up over strictly smaller
    symbols, best_gt accumulates max(up, down2) over strictly larger ones. A
    match column takes best_up + 1 into up and, only when a taller chain
    exists to extend (best_gt > 0), best_gt + 1 into down2; both writes are
    improve-only, so chains cannot start in the falling phase and earlier
    rows keep ownership of equal values.
    """
    if len(b) != len(state.up):
        raise ValueError("state width does not match b")
    best_up = 0
    best_gt = 0
    for j, bj in enumerate(b):
        if bj == row_symbol:
            nu = best_up + 1
            if nu > state.up[j]:
                state.up[j] = nu
                state.up_row[j] = row
            if best_gt > 0:
                nd = best_gt + 1
                if nd > state.down2[j]:
                    state.down2[j] = nd
                    state.down2_row[j] = row
        elif bj < row_symbol:
            if state.up[j] > best_up:
                best_up = state.up[j]
        else:
            t = max(state.down2[j], state.up[j])
            if t > best_gt:
                best_gt = t


def _backtrack(a: np.ndarray, b: np.ndarray, up, down2, up_row, down2_row,
               end_row: int, end_j: int, end_phase: int,
               length: int) -> tuple[list[tuple[int, int]], list[int]]:
    """Recover one optimal chain end-to-start by prefix reruns.

    The forward write of value L at (row, j) consumed an accumulator equal to
    L - 1 over the admissible columns left of j, taken from the state before
    that row, so rerunning rows [0, row) always exposes a predecessor with
    the exact value L - 1. Columns are scanned ascending, rising branch
    first. Returns the (row, j) chain and phases, both end-to-start.
    """
    chain = []
    phases = []
    row_cur, j_cur, phase, need = end_row, end_j, end_phase, length
    while True:
        chain.append((row_cur, j_cur))
        phases.append(phase)
        if need == 1:
            break
        _kernels.twophase_kernel(a, b, up, down2, up_row, down2_row, row_cur)
        s = b[j_cur]
        found = False
        for j2 in range(j_cur):
            if phase == UP:
                if b[j2] < s and up[j2] == need - 1:
                    row_cur, j_cur, phase = int(up_row[j2]), j2, UP
                    found = True
                    break
            elif b[j2] > s:
                if up[j2] == need - 1:
                    row_cur, j_cur, phase = int(up_row[j2]), j2, UP
                    found = True
                    break
                if down2[j2] == need - 1:
                    row_cur, j_cur, phase = int(down2_row[j2]), j2, DOWN
                    found = True
                    break
        if not found:
            raise AssertionError("no admissible predecessor during backtrack")
        need -= 1
    return chain, phases


def rolling_lcbs(pair: SequencePair, want_witness: bool = False) -> LcbsOutcome:
    """Solve in O(min(n, m)) auxiliary space.

    The DP always runs with the shorter sequence on the column side;
    witness coordinates are swapped back afterwards. Length-only runs
    report no peak, since the row state does not retain one.
    """
    t0 = time.perf_counter()
    swapped = pair.m > pair.n
    base = SequencePair(pair.b, pair.a) if swapped else pair
    a = np.asarray(base.a, np.int64)
    b = np.asarray(base.b, np.int64)
    n, m = a.shape[0], b.shape[0]
    match_count = count_matches(pair)
    aux = 4 * m

    def finish(length, witness, peak):
        elapsed = (time.perf_counter() - t0) * 1e3
        stats = RunStats(match_count, "rolling", elapsed, aux)
        return LcbsOutcome(length, witness, peak, stats)

    if n == 0 or m == 0:
        return finish(0, EMPTY_WITNESS if want_witness else None, None)
    up = np.zeros(m, np.int64)
    down2 = np.zeros(m, np.int64)
    up_row = np.full(m, -1, np.int64)
    down2_row = np.full(m, -1, np.int64)
    _kernels.twophase_kernel(a, b, up, down2, up_row, down2_row, n)
    val = np.maximum(up, down2)
    length = int(val.max())
    if length == 0:
        return finish(0, EMPTY_WITNESS if want_witness else None, None)
    if not want_witness:
        return finish(length, None, None)
    end_j = int(np.argmax(val))
    end_phase = UP if up[end_j] >= down2[end_j] else DOWN
    end_row = int(up_row[end_j] if end_phase == UP else down2_row[end_j])
    chain, phases = _backtrack(a, b, up, down2, up_row, down2_row,
                               end_row, end_j, end_phase, length)
    chain.reverse()
    phases.reverse()
    peak_pos = 0
    for t, ph in enumerate(phases):
        if ph == UP:
            peak_pos = t
    if swapped:
        pts = tuple(MatchPoint(jj, r, int(a[r])) for r, jj in chain)
    else:
        pts = tuple(MatchPoint(r, jj, int(a[r])) for r, jj in chain)
    witness = Witness(pts, peak_pos)
    return finish(length, witness, pts[peak_pos])
