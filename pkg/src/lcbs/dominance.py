"""2-D dominance maxima index with max-update-only cells.

The index stores (score, payload) at integer rank points (x, y), 1-based, and
answers strict-dominance prefix queries: the best score among points with
x <= x_bound and y <= y_bound, together with its payload. Raising is the only
mutation; a raise that does not beat the standing score leaves it in place,
so on equal scores the earliest raise wins. That rule is what makes witness
reconstruction deterministic for the scan engines.

Three storage backends share the contract:

``dense``
    full (x_capacity+1) * (y_capacity+1) grid of Fenwick cells; best when the
    rank universe is small, e.g. few distinct values.
``csr``
    per-node sorted slot arrays sized from a point set given up front; space
    proportional to points * log(capacity), independent of the grid area.
``mapped``
    dict-of-dicts Fenwick, pure Python; grows with touched nodes only and
    needs no numba. Fallback and cross-check backend.

Probe counting: every (node, slot) cell touched by an update or query counts
as one probe, accumulated in an EdgeProbeCounter.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Union

import numpy as np

from . import _kernels

# cells above this many grid entries force the csr/mapped layouts
DENSE_CELL_CAP = 1 << 24
_AUTO_DENSE_CELLS = 1 << 21


@dataclass(frozen=True)
class RankedPoint:
    """1-based rank coordinates of an index cell."""

    x: int
    y: int


@dataclass
class EdgeProbeCounter:
    """Counts index cell touches; shared by updates and queries."""

    touched: int = 0

    def add(self, k: int) -> None:
        self.touched += k


PointsArg = Union[Iterable[RankedPoint], tuple, None]


def _normalize_points(points: PointsArg) -> Optional[tuple[np.ndarray, np.ndarray]]:
    if points is None:
        return None
    if isinstance(points, tuple) and len(points) == 2 \
            and isinstance(points[0], np.ndarray):
        return points[0], points[1]
    xs, ys = [], []
    for p in points:
        if isinstance(p, RankedPoint):
            xs.append(p.x)
            ys.append(p.y)
        else:
            xs.append(int(p[0]))
            ys.append(int(p[1]))
    return np.asarray(xs, np.int32), np.asarray(ys, np.int32)


class _MappedBackend:
    """Dict-of-dicts Fenwick-of-Fenwicks; allocates nodes on first touch."""

    def __init__(self, x_capacity: int, y_capacity: int) -> None:
        self.x_cap = x_capacity
        self.y_cap = y_capacity
        self.nodes: dict[int, dict[int, tuple[int, int, int]]] = {}
        self.cells = 0

    def update(self, x: int, y: int, s: int, q: int, p: int) -> int:
        touched = 0
        tx = x
        while tx <= self.x_cap:
            tree = self.nodes.get(tx)
            if tree is None:
                tree = {}
                self.nodes[tx] = tree
            ty = y
            while ty <= self.y_cap:
                touched += 1
                cur = tree.get(ty)
                if cur is not None and cur[0] >= s:
                    break
                if cur is None:
                    self.cells += 1
                tree[ty] = (s, q, p)
                ty += ty & (-ty)
            tx += tx & (-tx)
        return touched

    def query(self, xb: int, yb: int) -> tuple[int, int, int, int]:
        bs, bq, bp = 0, 1 << 62, -1
        touched = 0
        tx = xb
        while tx > 0:
            tree = self.nodes.get(tx)
            if tree is not None:
                ty = yb
                while ty > 0:
                    cell = tree.get(ty)
                    touched += 1
                    if cell is not None:
                        cs, cq, cp = cell
                        if cs > bs or (cs == bs and cs > 0 and cq < bq):
                            bs, bq, bp = cs, cq, cp
                    ty -= ty & (-ty)
            tx -= tx & (-tx)
        return bs, bq, bp, touched


class DominanceIndex:
    """Facade over the three backends; construct via :meth:`create`."""

    def __init__(self, x_capacity: int, y_capacity: int, backend: str,
                 points: Optional[tuple[np.ndarray, np.ndarray]] = None,
                 mirror_x: bool = False) -> None:
        if x_capacity < 0 or y_capacity < 0:
            raise ValueError("capacities must be non-negative")
        self.x_capacity = int(x_capacity)
        self.y_capacity = int(y_capacity)
        self.backend = backend
        self.probes = EdgeProbeCounter()
        self._seq = 0
        self._probe_buf = np.zeros(1, np.int64)
        self._registered: Optional[set] = None
        self._points = points
        self._mirror_x = mirror_x
        if backend == "dense":
            cells = (self.x_capacity + 1) * (self.y_capacity + 1)
            if cells > DENSE_CELL_CAP:
                raise ValueError("dense grid exceeds the cell cap; use csr or mapped")
            self._score = np.zeros(cells, np.int64)
            self._seq_arr = np.zeros(cells, np.int64)
            self._payload = np.full(cells, -1, np.int64)
            self.element_count = 3 * cells
        elif backend == "csr":
            if points is None:
                raise ValueError("csr backend needs the point set up front")
            xs, ys = points
            X = self.x_capacity
            slots = int(_kernels.csr_count_slots(xs, X, mirror_x, X))
            nodes_out = np.empty(slots, np.int64)
            ys_out = np.empty(slots, np.int64)
            _kernels.csr_emit_slots(xs, ys, X, mirror_x, X, nodes_out, ys_out)
            order = np.lexsort((ys_out, nodes_out))
            self._node_ys = ys_out[order]
            counts = np.bincount(nodes_out, minlength=X + 1)
            self._ptr = np.zeros(X + 2, np.int64)
            np.cumsum(counts, out=self._ptr[1:])
            del nodes_out, ys_out, order, counts
            self._score = np.zeros(slots, np.int64)
            self._seq_arr = np.zeros(slots, np.int64)
            self._payload = np.full(slots, -1, np.int64)
            self.element_count = 4 * slots + (X + 2)
        elif backend == "mapped":
            self._mapped = _MappedBackend(self.x_capacity, self.y_capacity)
            self.element_count = 0
        else:
            raise ValueError(f"unknown backend: {backend!r}")

    # ------------------------------------------------------------ factories

    @classmethod
    def create(cls, x_capacity: int, y_capacity: int, expected_points: int,
               points: PointsArg = None, backend: Optional[str] = None,
               mirror_x: bool = False) -> "DominanceIndex":
        """Pick a backend for the given shape unless one is forced.

        With a known point set the choice is dense grid for small rank
        universes, csr otherwise. Without one, csr is off the table and the
        split is dense grid versus mapped.
        """
        pts = _normalize_points(points)
        if backend is None:
            cells = (x_capacity + 1) * (y_capacity + 1)
            if pts is not None:
                budget = max(_AUTO_DENSE_CELLS,
                             4 * expected_points * _ceil_log2(x_capacity + 2))
                backend = "dense" if cells <= min(budget, DENSE_CELL_CAP) else "csr"
            else:
                backend = "dense" if cells <= _AUTO_DENSE_CELLS else "mapped"
        if backend == "csr" and pts is None:
            raise ValueError("csr backend needs the point set up front")
        return cls(x_capacity, y_capacity, backend, pts, mirror_x)

    # ------------------------------------------------------------- contract

    def _check_point(self, x: int, y: int) -> None:
        if not (1 <= x <= self.x_capacity and 1 <= y <= self.y_capacity):
            raise ValueError(
                f"point ({x}, {y}) outside capacity "
                f"({self.x_capacity}, {self.y_capacity})")

    def raise_value(self, point, score: int, payload: int) -> None:
        """Max-merge (score, payload) into the cell at point.

        A raise that ties or loses against the standing score is a no-op, so
        the earliest raise owns the cell for its score level.
        """
        if isinstance(point, RankedPoint):
            x, y = point.x, point.y
        else:
            x, y = int(point[0]), int(point[1])
        self._check_point(x, y)
        if score < 1:
            raise ValueError("scores start at 1; empty cells are score 0")
        if self.backend == "csr":
            if self._registered is None:
                xs, ys = self._points
                if self._mirror_x:
                    xs = self.x_capacity + 1 - xs.astype(np.int64)
                self._registered = set(zip(xs.tolist(), ys.tolist()))
            if (x, y) not in self._registered:
                raise ValueError(f"point ({x}, {y}) was not preregistered")
        q = self._seq
        self._seq += 1
        if self.backend == "dense":
            self._probe_buf[0] = 0
            _kernels.grid_update(self._score, self._seq_arr, self._payload,
                                 self.x_capacity, self.y_capacity,
                                 x, y, score, q, payload, self._probe_buf)
            self.probes.add(int(self._probe_buf[0]))
        elif self.backend == "csr":
            self._probe_buf[0] = 0
            _kernels.csr_update(self._ptr, self._node_ys, self._score,
                                self._seq_arr, self._payload,
                                self.x_capacity, x, y, score, q, payload,
                                self._probe_buf)
            self.probes.add(int(self._probe_buf[0]))
        else:
            self.probes.add(self._mapped.update(x, y, score, q, payload))
            self.element_count = 3 * self._mapped.cells

    def max_in_prefix(self, x_bound: int, y_bound: int) -> tuple[int, Optional[int]]:
        """Best (score, payload) over x <= x_bound, y <= y_bound.

        Bounds may be 0 (empty prefix). Returns (0, None) when no raised cell
        dominates the bounds.
        """
        if not (0 <= x_bound <= self.x_capacity and 0 <= y_bound <= self.y_capacity):
            raise ValueError(
                f"bounds ({x_bound}, {y_bound}) outside capacity "
                f"({self.x_capacity}, {self.y_capacity})")
        if x_bound == 0 or y_bound == 0:
            return 0, None
        if self.backend == "dense":
            self._probe_buf[0] = 0
            bs, _, bp = _kernels.grid_query(
                self._score, self._seq_arr, self._payload,
                self.y_capacity, x_bound, y_bound, self._probe_buf)
            self.probes.add(int(self._probe_buf[0]))
        elif self.backend == "csr":
            self._probe_buf[0] = 0
            bs, _, bp = _kernels.csr_query(
                self._ptr, self._node_ys, self._score, self._seq_arr,
                self._payload, x_bound, y_bound, self._probe_buf)
            self.probes.add(int(self._probe_buf[0]))
        else:
            bs, _, bp, touched = self._mapped.query(x_bound, y_bound)
            self.probes.add(touched)
        bs = int(bs)
        return (bs, int(bp)) if bs > 0 else (0, None)

    # ------------------------------------------------- engine bulk interface

    def bulk_scan(self, rj: np.ndarray, rv: np.ndarray, out_len: np.ndarray,
                  out_pred: Optional[np.ndarray], backward: bool,
                  max_x: int) -> None:
        """Chain-label a whole vertex array in one pass.

        Forward scans ascending k with x = rj[k]; backward scans descending k
        with x mirrored against max_x. out_len[k] and out_pred[k] receive the
        chain length and predecessor vertex id (-1 for none); out_pred None
        skips predecessor storage. Equivalent to a query/raise loop through
        the public methods, which is exactly what the mapped backend does.
        """
        store_pred = out_pred is not None
        pred_arr = out_pred if store_pred else np.empty(1, np.int32)
        self._probe_buf[0] = 0
        if self.backend == "dense":
            _kernels.grid_scan(rj, rv, self.x_capacity, self.y_capacity,
                               self._score, self._seq_arr, self._payload,
                               out_len, pred_arr, self._probe_buf,
                               backward, max_x, self._seq, store_pred)
        elif self.backend == "csr":
            _kernels.csr_scan(rj, rv, self.x_capacity, self._ptr,
                              self._node_ys, self._score, self._seq_arr,
                              self._payload, out_len, pred_arr,
                              self._probe_buf, backward, max_x, self._seq,
                              store_pred)
        else:
            M = rj.shape[0]
            order = range(M - 1, -1, -1) if backward else range(M)
            for k in order:
                x = max_x - int(rj[k]) + 1 if backward else int(rj[k])
                y = int(rv[k])
                score, payload = self.max_in_prefix(x - 1, y - 1)
                out_len[k] = score + 1
                if store_pred:
                    pred_arr[k] = payload if payload is not None else -1
                self.raise_value((x, y), score + 1, k)
            return
        self._seq += rj.shape[0]
        self.probes.add(int(self._probe_buf[0]))


def _ceil_log2(v: int) -> int:
    return max(1, int(v - 1).bit_length())
