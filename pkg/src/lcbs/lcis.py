"""Row-sweep DP for longest common strictly increasing chains.

One sweep processes the rows of `a` in order against a dp array indexed by
columns of `b`: dp[j] is the best strictly increasing common chain ending at
column j using the rows seen so far. Every match (i, j) gets a recorded table
entry, including plateau re-terminations where the column already holds an
equal-value chain of the same length, so downstream peak scans can consider
every match. Running the same sweep on both reversed inputs and mapping
coordinates back yields the strictly decreasing chain table.

This module is the readable reference; the dense engine reruns the identical
recurrence in a compiled kernel and is tested for equality against it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .core import Symbol

Entry = tuple[int, int]  # (i, j) table key


@dataclass
class LcisRowState:
    """Per-column dp values plus the row that last improved each column."""

    dp: list[int]
    dp_row: list[int]

    @classmethod
    def fresh(cls, m: int) -> "LcisRowState":
        return cls(dp=[0] * m, dp_row=[-1] * m)


@dataclass
class MatchEvent:
    """One recorded match in a row sweep: column, chain length, parent entry."""

    j: int
    length: int
    parent: Optional[Entry]


@dataclass
class LcisTables:
    """Chain length and parent entry per match, keyed by (i, j)."""

    inc: dict[Entry, int] = field(default_factory=dict)
    parent: dict[Entry, Optional[Entry]] = field(default_factory=dict)


def lcis_row_update(
    row_symbol: Symbol,
    b: Sequence[Symbol],
    state: LcisRowState,
    row: int,
    tables: Optional[LcisTables] = None,
) -> list[MatchEvent]:
    """Process one row of `a`; returns an event for every match in the row.

    `best` accumulates the strongest dp value over columns left of j whose
    symbol is strictly below row_symbol; those columns are disjoint from the
    match columns, so in-row writes never feed back into the same sweep.
    A match's recorded length is max(best + 1, dp[j]); the fresh extension
    wins ties, and dp itself moves only on strict improvement.
    """
    if len(b) != len(state.dp):
        raise ValueError(
            f"state sized for {len(state.dp)} columns, b has {len(b)}"
        )
    best = 0
    best_j = -1
    events: list[MatchEvent] = []
    for j, bj in enumerate(b):
        if bj == row_symbol:
            fresh = best + 1
            prev = state.dp[j]
            if fresh >= prev:
                parent = (state.dp_row[best_j], best_j) if best_j >= 0 else None
                length = fresh
                if fresh > prev:
                    state.dp[j] = fresh
                    state.dp_row[j] = row
            else:
                # The column already ends an equal-value chain longer than any
                # fresh extension; re-terminate that chain at this row. (The
                # sweep invariant makes this branch unreachable, see tests;
                # kept so the recorded length is max(best+1, dp[j]) by
                # construction.)
                if tables is None:
                    raise ValueError(
                        "plateau re-termination needs the accumulated tables"
                    )
                length = prev
                parent = tables.parent[(state.dp_row[j], j)]
            events.append(MatchEvent(j=j, length=length, parent=parent))
        elif bj < row_symbol and state.dp[j] > best:
            best = state.dp[j]
            best_j = j
    return events


def lcis_tables(a: Sequence[Symbol], b: Sequence[Symbol]) -> LcisTables:
    """Full sweep: one table entry per match, increasing-chain semantics."""
    tables = LcisTables()
    state = LcisRowState.fresh(len(b))
    for i, s in enumerate(a):
        for ev in lcis_row_update(s, b, state, i, tables):
            tables.inc[(i, ev.j)] = ev.length
            tables.parent[(i, ev.j)] = ev.parent
    return tables


def reversed_tables(a: Sequence[Symbol], b: Sequence[Symbol]) -> LcisTables:
    """Decreasing-chain table: sweep both inputs reversed, map entries back.

    The result's inc dict holds, for every match (i, j) in original
    coordinates, the longest strictly decreasing common chain *starting*
    there; parent points at the next chain element (larger i and j, smaller
    value), so walking parents emits the falling half in forward order.
    """
    n, m = len(a), len(b)
    rev = lcis_tables(a[::-1], b[::-1])

    def back(e: Optional[Entry]) -> Optional[Entry]:
        if e is None:
            return None
        return (n - 1 - e[0], m - 1 - e[1])

    out = LcisTables()
    for (ri, rj), length in rev.inc.items():
        key = (n - 1 - ri, m - 1 - rj)
        out.inc[key] = length
        out.parent[key] = back(rev.parent[(ri, rj)])
    return out
