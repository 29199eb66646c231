"""Output-sensitive engine: label matches through a dominance index.

Work scales with the number of matches M rather than with n*m. Each match
becomes a vertex carrying two chain labels: inc, the longest strictly rising
chain ending at it, and dec, the longest strictly falling chain starting at
it. A forward scan over vertices in (i, j) order fills inc by querying a
dominance index on (column rank, value rank); a backward scan with mirrored
column ranks fills dec the same way. The answer is max(inc + dec - 1), peak
ties resolved to the smallest (i, j).

Two routes to the labels live here on purpose. label_vertices drives the
public DominanceIndex methods one vertex at a time and is the readable
reference; sparse_lcbs runs the same scans through bulk kernels. The tests
hold them equal.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np

from . import _kernels
from .core import (EMPTY_WITNESS, LcbsOutcome, MatchPoint, RunStats,
                   SequencePair, Witness)
from .dominance import DominanceIndex


def enumerate_matches(pair: SequencePair) -> list[MatchPoint]:
    """All (i, j) with a[i] == b[j], in ascending (i, j) order."""
    by_value: dict[int, list[int]] = {}
    for j, v in enumerate(pair.b):
        by_value.setdefault(v, []).append(j)
    out = []
    for i, v in enumerate(pair.a):
        for j in by_value.get(v, ()):
            out.append(MatchPoint(i, j, v))
    return out


@dataclass(frozen=True)
class Compression:
    """Per-match rank coordinates; ranks are 1-based and order-preserving."""

    r_j: tuple[int, ...]
    r_v: tuple[int, ...]
    max_j: int
    max_v: int


def compress(matches: Sequence[MatchPoint],
             values: Optional[Iterable[int]] = None) -> Compression:
    """Rank match columns and values densely.

    r_j ranks j among columns that carry at least one match; r_v ranks the
    value. values widens the value universe beyond what the matches carry
    (ranks only need to preserve order, so a wider universe changes numbers
    but not any comparison).
    """
    cols = sorted({p.j for p in matches})
    col_rank = {j: r + 1 for r, j in enumerate(cols)}
    if values is None:
        vals = sorted({p.value for p in matches})
    else:
        vals = sorted(set(values))
    val_rank = {v: r + 1 for r, v in enumerate(vals)}
    try:
        rv = tuple(val_rank[p.value] for p in matches)
    except KeyError as e:
        raise ValueError(f"values does not cover match value {e.args[0]}")
    rj = tuple(col_rank[p.j] for p in matches)
    return Compression(rj, rv, len(cols), len(vals))


@dataclass
class VertexRecord:
    """A match plus its chain labels and chain links (vertex ids)."""

    id: int
    match: MatchPoint
    r_j: int
    r_v: int
    inc: int = 0
    dec: int = 0
    pred: Optional[int] = None
    succ: Optional[int] = None


def build_vertices(pair: SequencePair) -> list[VertexRecord]:
    matches = enumerate_matches(pair)
    comp = compress(matches)
    return [VertexRecord(k, p, comp.r_j[k], comp.r_v[k])
            for k, p in enumerate(matches)]


def forward_inc(vertices: Sequence[VertexRecord],
                index: DominanceIndex) -> Sequence[VertexRecord]:
    """Ascending scan: inc[v] = 1 + best inc over strictly dominated points.

    The index must be empty and sized to (max r_j, max r_v). pred receives
    the id of the chain predecessor the index elected, None for chain heads.
    """
    for v in vertices:
        score, payload = index.max_in_prefix(v.r_j - 1, v.r_v - 1)
        v.inc = score + 1
        v.pred = payload
        index.raise_value((v.r_j, v.r_v), v.inc, v.id)
    return vertices


def backward_dec(vertices: Sequence[VertexRecord], index: DominanceIndex,
                 max_rj: Optional[int] = None) -> Sequence[VertexRecord]:
    """Descending scan with mirrored columns: fills dec and succ.

    Mirroring x to max_rj - r_j + 1 turns "later column, smaller value" into
    plain dominance, so this is forward_inc on the reversed vertex order.
    """
    if max_rj is None:
        max_rj = max((v.r_j for v in vertices), default=0)
    for v in reversed(vertices):
        x = max_rj - v.r_j + 1
        score, payload = index.max_in_prefix(x - 1, v.r_v - 1)
        v.dec = score + 1
        v.succ = payload
        index.raise_value((x, v.r_v), v.dec, v.id)
    return vertices


def peak_scan(vertices: Sequence[VertexRecord]) -> tuple[int, Optional[VertexRecord]]:
    """Best inc + dec - 1 and the first vertex attaining it (id order)."""
    best = 0
    best_v: Optional[VertexRecord] = None
    for v in vertices:
        c = v.inc + v.dec - 1
        if c > best:
            best = c
            best_v = v
    return best, best_v


def label_vertices(pair: SequencePair,
                   backend: Optional[str] = None) -> list[VertexRecord]:
    """Reference pipeline: build, label both directions, return vertices."""
    vertices = build_vertices(pair)
    if not vertices:
        return vertices
    X = max(v.r_j for v in vertices)
    Y = max(v.r_v for v in vertices)
    fwd = DominanceIndex.create(X, Y, len(vertices),
                                points=[(v.r_j, v.r_v) for v in vertices],
                                backend=backend)
    forward_inc(vertices, fwd)
    bwd = DominanceIndex.create(X, Y, len(vertices),
                                points=[(X - v.r_j + 1, v.r_v) for v in vertices],
                                backend=backend)
    backward_dec(vertices, bwd, X)
    return vertices


class _Meter:
    """Tracks live auxiliary elements and their peak."""

    __slots__ = ("live", "peak")

    def __init__(self) -> None:
        self.live = 0
        self.peak = 0

    def add(self, k: int) -> None:
        self.live += k
        if self.live > self.peak:
            self.peak = self.live

    def drop(self, k: int) -> None:
        self.live -= k


def _check_scan(mi, mj, val64, lab, link, forward: bool) -> None:
    # chain links must step strictly in (i, j), strictly down in value along
    # the stated direction, and drop the label by exactly one
    mask = link >= 0
    src = np.nonzero(mask)[0]
    dst = link[src].astype(np.int64)
    if forward:
        ok = (np.all(mi[dst] < mi[src]) and np.all(mj[dst] < mj[src])
              and np.all(val64[dst] < val64[src]))
    else:
        ok = (np.all(mi[dst] > mi[src]) and np.all(mj[dst] > mj[src])
              and np.all(val64[dst] < val64[src]))
    ok = ok and np.all(lab[dst] == lab[src] - 1) and np.all(lab[~mask] == 1)
    if not ok:
        raise AssertionError("scan produced an inconsistent chain forest")


def sparse_lcbs(pair: SequencePair, want_witness: bool = False,
                index_backend: Optional[str] = None) -> LcbsOutcome:
    """Solve through the match-labeling pipeline.

    index_backend forces the dominance index layout ("dense", "csr",
    "mapped"); default picks per shape. Length-only runs skip match
    coordinates and chain links, which is most of the memory at large M.
    """
    t0 = time.perf_counter()
    a = np.asarray(pair.a, np.int64)
    b = np.asarray(pair.b, np.int64)
    n, m = a.shape[0], b.shape[0]
    meter = _Meter()
    order = np.argsort(a, kind="stable")
    a_sorted = a[order]
    meter.add(2 * n)
    lo = np.searchsorted(a_sorted, b, side="left")
    hi = np.searchsorted(a_sorted, b, side="right")
    counts = hi - lo
    meter.add(3 * m)
    total = int(counts.sum())
    if total == 0:
        elapsed = (time.perf_counter() - t0) * 1e3
        stats = RunStats(0, "sparse", elapsed, meter.peak, probes=0)
        return LcbsOutcome(0, EMPTY_WITNESS if want_witness else None,
                           None, stats)
    matched = counts > 0
    rj_of_b = np.cumsum(matched, dtype=np.int64).astype(np.int32)
    X = int(rj_of_b[-1])
    vals = np.unique(b[matched])
    Y = int(vals.shape[0])
    rv_of_b = np.zeros(m, np.int32)
    rv_of_b[matched] = (np.searchsorted(vals, b[matched]) + 1).astype(np.int32)
    meter.add(2 * m + Y)
    rj, rv, mi, mj = _kernels.fill_matches(order, lo, hi, rj_of_b, rv_of_b,
                                           n, total, want_witness)
    meter.add(2 * total + (2 * total if want_witness else 0))
    del a_sorted, lo, hi, counts, matched

    inc = np.empty(total, np.int32)
    meter.add(total)
    pred = None
    if want_witness:
        pred = np.empty(total, np.int32)
        meter.add(total)
    fwd = DominanceIndex.create(X, Y, total, points=(rj, rv),
                                backend=index_backend)
    meter.add(fwd.element_count)
    fwd.bulk_scan(rj, rv, inc, pred, backward=False, max_x=X)
    probes = fwd.probes.touched
    fwd_elems = fwd.element_count
    del fwd
    meter.drop(fwd_elems)

    dec = np.empty(total, np.int32)
    meter.add(total)
    succ = None
    if want_witness:
        succ = np.empty(total, np.int32)
        meter.add(total)
    bwd = DominanceIndex.create(X, Y, total, points=(rj, rv),
                                backend=index_backend, mirror_x=True)
    meter.add(bwd.element_count)
    bwd.bulk_scan(rj, rv, dec, succ, backward=True, max_x=X)
    probes += bwd.probes.touched
    bwd_elems = bwd.element_count
    del bwd
    meter.drop(bwd_elems)

    best, arg = _kernels.peak_argmax(inc, dec)
    length = int(best)

    witness: Optional[Witness] = None
    peak: Optional[MatchPoint] = None
    if want_witness:
        val64 = vals[rv.astype(np.int64) - 1]
        _check_scan(mi, mj, val64, inc, pred, forward=True)
        _check_scan(mi, mj, val64, dec, succ, forward=False)
        k = int(arg)
        rise = []
        cur = k
        while cur >= 0:
            rise.append(cur)
            cur = int(pred[cur])
            if len(rise) > total:
                raise AssertionError("pred walk cycles")
        rise.reverse()
        fall = []
        cur = int(succ[k])
        while cur >= 0:
            fall.append(cur)
            cur = int(succ[cur])
            if len(fall) > total:
                raise AssertionError("succ walk cycles")
        if len(rise) != int(inc[k]) or len(fall) != int(dec[k]) - 1:
            raise AssertionError("chain walk lengths disagree with labels")
        ids = rise + fall
        pts = tuple(MatchPoint(int(mi[t]), int(mj[t]), pair.a[int(mi[t])])
                    for t in ids)
        witness = Witness(pts, len(rise) - 1)
        peak = pts[len(rise) - 1]
    elapsed = (time.perf_counter() - t0) * 1e3
    stats = RunStats(total, "sparse", elapsed, meter.peak, probes=probes)
    return LcbsOutcome(length, witness, peak, stats)


def export_vertices_jsonl(pair: SequencePair,
                          backend: Optional[str] = None) -> str:
    """One JSON object per vertex: id, i, j, value, inc, dec, pred, succ."""
    vertices = label_vertices(pair, backend)
    lines = [json.dumps({"id": v.id, "i": v.match.i, "j": v.match.j,
                         "value": v.match.value, "inc": v.inc, "dec": v.dec,
                         "pred": v.pred, "succ": v.succ})
             for v in vertices]
    return "\n".join(lines) + ("\n" if lines else "")


def export_vertices_dot(pair: SequencePair) -> str:
    """Graphviz digraph of the chain forests; peak vertex double-circled.

    Solid edges run pred -> vertex (rising), dashed run vertex -> succ
    (falling).
    """
    vertices = label_vertices(pair)
    _, peak = peak_scan(vertices)
    out = ["digraph matches {", "  rankdir=LR;"]
    for v in vertices:
        shape = " shape=doublecircle" if v is peak else ""
        out.append(
            f'  v{v.id} [label="({v.match.i},{v.match.j}) {v.match.value}'
            f'\\ninc={v.inc} dec={v.dec}"{shape}];')
    for v in vertices:
        if v.pred is not None:
            out.append(f"  v{v.pred} -> v{v.id};")
        if v.succ is not None:
            out.append(f"  v{v.id} -> v{v.succ} [style=dashed];")
    out.append("}")
    return "\n".join(out) + "\n"
