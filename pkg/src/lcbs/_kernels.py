"""Compiled inner loops (numba) behind the engine front-ends.

Every kernel has a pure-Python reference in its owning module and the test
suite checks them against each other; nothing here defines semantics on its
own. Kernels avoid numpy calls inside loops so they stay trivially
nopython-compilable; wrappers do the sorting, searching, and allocation.

Index node layout: a Fenwick walk over x whose nodes each hold a Fenwick walk
over y (either a full capacity grid or per-node sorted slot lists built from a
known point set). Cells keep (score, seq, payload) with max-merge semantics,
ties by lowest seq, which realizes earliest-raise-wins.
"""

from __future__ import annotations

import numpy as np
from numba import njit

_FAR_SEQ = np.int64(1) << 62


# ---------------------------------------------------------------- match join


@njit(cache=True)
def fill_matches(order, lo, hi, rj_of_b, rv_of_b, n, total, store_ij):
    """Emit all matches in (i, j) order given per-column runs into sorted a.

    order is argsort(a); lo[j]:hi[j] is the run of positions in sorted a whose
    value equals b[j]. Counting pass buckets matches by i, fill pass walks
    columns in ascending j, so each bucket receives ascending j.
    """
    m = lo.shape[0]
    off = np.zeros(n + 1, np.int64)
    for j in range(m):
        for p in range(lo[j], hi[j]):
            off[order[p] + 1] += 1
    for i in range(n):
        off[i + 1] += off[i]
    rj = np.empty(total, np.int32)
    rv = np.empty(total, np.int32)
    sz = total if store_ij else 0
    mi = np.empty(sz, np.int32)
    mj = np.empty(sz, np.int32)
    for j in range(m):
        for p in range(lo[j], hi[j]):
            i = order[p]
            slot = off[i]
            off[i] = slot + 1
            rj[slot] = rj_of_b[j]
            rv[slot] = rv_of_b[j]
            if store_ij:
                mi[slot] = i
                mj[slot] = np.int32(j)
    return rj, rv, mi, mj


# ------------------------------------------------------- dense chain tables


@njit(cache=True)
def lcis_table_kernel(a, b, mi, mj):
    """Row-sweep chain table over all matches; mirrors lcis.lcis_row_update.

    Returns per-match chain lengths and parent match ordinals (-1 for chain
    heads). Matches must arrive sorted by (i, j); the sweep consumes them with
    a moving pointer so the inner loop stays branch-cheap.
    """
    n = a.shape[0]
    m = b.shape[0]
    M = mi.shape[0]
    dp = np.zeros(m, np.int64)
    writer = np.full(m, -1, np.int64)  # ordinal of the match that wrote dp[j]
    inc = np.empty(M, np.int64)
    parent = np.empty(M, np.int64)
    ptr = 0
    for i in range(n):
        best = np.int64(0)
        best_j = -1
        s = a[i]
        for j in range(m):
            if ptr < M and mi[ptr] == i and mj[ptr] == j:
                fresh = best + 1
                prev = dp[j]
                if fresh >= prev:
                    inc[ptr] = fresh
                    parent[ptr] = writer[best_j] if best_j >= 0 else -1
                    if fresh > prev:
                        dp[j] = fresh
                        writer[j] = ptr
                else:
                    # plateau re-termination: inherit the standing chain
                    inc[ptr] = prev
                    parent[ptr] = parent[writer[j]]
                ptr += 1
            elif b[j] < s and dp[j] > best:
                best = dp[j]
                best_j = j
    return inc, parent


# ------------------------------------------------------ rolling two-phase DP


@njit(cache=True)
def twophase_kernel(a, b, up, down2, up_row, down2_row, n_rows):
    """Single forward pass of the two-phase recurrence over rows [0, n_rows).

    up[j]: best still-rising chain ending at column j. down2[j]: best chain
    already past its peak ending at column j; a write there requires a taller
    predecessor, so chains cannot start in the falling phase. Row arrays
    record the row that set the current value. Buffers are zeroed here so
    callers can reuse them across repeated prefix runs.
    """
    m = b.shape[0]
    for j in range(m):
        up[j] = 0
        down2[j] = 0
        up_row[j] = -1
        down2_row[j] = -1
    for i in range(n_rows):
        s = a[i]
        best_up = np.int64(0)
        best_gt = np.int64(0)
        for j in range(m):
            bj = b[j]
            if bj == s:
                nu = best_up + 1
                if nu > up[j]:
                    up[j] = nu
                    up_row[j] = i
                if best_gt > 0:
                    nd = best_gt + 1
                    if nd > down2[j]:
                        down2[j] = nd
                        down2_row[j] = i
            elif bj < s:
                if up[j] > best_up:
                    best_up = up[j]
            else:
                t = up[j]
                if down2[j] > t:
                    t = down2[j]
                if t > best_gt:
                    best_gt = t


# ------------------------------------------------- capacity-grid index cells


@njit(cache=True)
def grid_update(score, seq, payload, X, Y, x, y, s, q, p, probes):
    touched = 0
    tx = np.int64(x)
    while tx <= X:
        base = tx * (Y + 1)
        ty = np.int64(y)
        while ty <= Y:
            idx = base + ty
            touched += 1
            if score[idx] >= s:
                break  # covering nodes are maintained >= any covered value
            score[idx] = s
            seq[idx] = q
            payload[idx] = p
            ty += ty & (-ty)
        tx += tx & (-tx)
    probes[0] += touched


@njit(cache=True)
def grid_query(score, seq, payload, Y, xb, yb, probes):
    bs = np.int64(0)
    bq = _FAR_SEQ
    bp = np.int64(-1)
    touched = 0
    tx = np.int64(xb)
    while tx > 0:
        base = tx * (Y + 1)
        ty = np.int64(yb)
        while ty > 0:
            idx = base + ty
            touched += 1
            cs = score[idx]
            if cs > bs or (cs == bs and cs > 0 and seq[idx] < bq):
                bs = cs
                bq = seq[idx]
                bp = payload[idx]
            ty -= ty & (-ty)
        tx -= tx & (-tx)
    probes[0] += touched
    return bs, bq, bp


@njit(cache=True)
def grid_scan(rj, rv, X, Y, score, seq, payload, out_len, out_pred, probes,
              backward, max_x, seq_base, store_pred):
    """One full chain-label scan against a capacity-grid index.

    Forward: ascending vertex order, x = rj[k]. Backward: descending order
    with mirrored x so later-j vertices dominate, exactly the forward scan on
    the mirrored point set. seq grows monotonically so earliest raise wins.
    With store_pred false, out_pred may be a dummy and is left untouched.
    """
    M = rj.shape[0]
    for t in range(M):
        k = M - 1 - t if backward else t
        x = max_x - np.int64(rj[k]) + 1 if backward else np.int64(rj[k])
        y = np.int64(rv[k])
        bs, bq, bp = grid_query(score, seq, payload, Y, x - 1, y - 1, probes)
        length = bs + 1
        out_len[k] = length
        if store_pred:
            out_pred[k] = bp
        grid_update(score, seq, payload, X, Y, x, y, length,
                    seq_base + t, k, probes)


# ----------------------------------------------- static CSR index (by points)


@njit(cache=True)
def csr_count_slots(xs, X, backward, max_x):
    total = np.int64(0)
    for k in range(xs.shape[0]):
        tx = max_x - np.int64(xs[k]) + 1 if backward else np.int64(xs[k])
        while tx <= X:
            total += 1
            tx += tx & (-tx)
    return total


@njit(cache=True)
def csr_emit_slots(xs, ys, X, backward, max_x, nodes_out, ys_out):
    p = 0
    for k in range(xs.shape[0]):
        tx = max_x - np.int64(xs[k]) + 1 if backward else np.int64(xs[k])
        y = ys[k]
        while tx <= X:
            nodes_out[p] = tx
            ys_out[p] = y
            p += 1
            tx += tx & (-tx)


@njit(cache=True)
def csr_update(ptr, node_ys, score, seq, payload, X, x, y, s, q, p, probes):
    touched = 0
    tx = np.int64(x)
    while tx <= X:
        lo = ptr[tx]
        hi = ptr[tx + 1]
        # leftmost slot equal to y (duplicates share it; the rest stay zero)
        aa = lo
        bb = hi
        while aa < bb:
            mid = (aa + bb) >> 1
            if node_ys[mid] < y:
                aa = mid + 1
            else:
                bb = mid
        fp = aa - lo + 1
        sz = hi - lo
        while fp <= sz:
            idx = lo + fp - 1
            touched += 1
            if score[idx] >= s:
                break
            score[idx] = s
            seq[idx] = q
            payload[idx] = p
            fp += fp & (-fp)
        tx += tx & (-tx)
    probes[0] += touched


@njit(cache=True)
def csr_query(ptr, node_ys, score, seq, payload, xb, yb, probes):
    bs = np.int64(0)
    bq = _FAR_SEQ
    bp = np.int64(-1)
    touched = 0
    tx = np.int64(xb)
    while tx > 0:
        lo = ptr[tx]
        hi = ptr[tx + 1]
        aa = lo
        bb = hi
        while aa < bb:  # number of slots with y <= yb
            mid = (aa + bb) >> 1
            if node_ys[mid] <= yb:
                aa = mid + 1
            else:
                bb = mid
        fp = aa - lo
        while fp > 0:
            idx = lo + fp - 1
            touched += 1
            cs = score[idx]
            if cs > bs or (cs == bs and cs > 0 and seq[idx] < bq):
                bs = cs
                bq = seq[idx]
                bp = payload[idx]
            fp -= fp & (-fp)
        tx -= tx & (-tx)
    probes[0] += touched
    return bs, bq, bp


@njit(cache=True)
def csr_scan(rj, rv, X, ptr, node_ys, score, seq, payload, out_len, out_pred,
             probes, backward, max_x, seq_base, store_pred):
    M = rj.shape[0]
    for t in range(M):
        k = M - 1 - t if backward else t
        x = max_x - np.int64(rj[k]) + 1 if backward else np.int64(rj[k])
        y = np.int64(rv[k])
        bs, bq, bp = csr_query(ptr, node_ys, score, seq, payload,
                               x - 1, y - 1, probes)
        length = bs + 1
        out_len[k] = length
        if store_pred:
            out_pred[k] = bp
        csr_update(ptr, node_ys, score, seq, payload, X, x, y, length,
                   seq_base + t, k, probes)


@njit(cache=True)
def peak_argmax(inc, dec):
    """First index maximizing inc[k] + dec[k] - 1; (0, -1) when empty."""
    best = np.int64(0)
    arg = np.int64(-1)
    for k in range(inc.shape[0]):
        c = np.int64(inc[k]) + np.int64(dec[k]) - 1
        if c > best:
            best = c
            arg = k
    return best, arg


def warm_up() -> None:
    """Compile every kernel on a toy instance (cached across processes)."""
    a = np.array([2, 1, 2], np.int64)
    b = np.array([1, 2], np.int64)
    order = np.argsort(a, kind="stable")
    a_sorted = a[order]
    lo = np.searchsorted(a_sorted, b, side="left")
    hi = np.searchsorted(a_sorted, b, side="right")
    rj_of_b = np.array([1, 2], np.int32)
    rv_of_b = np.array([1, 2], np.int32)
    total = int((hi - lo).sum())
    rj, rv, mi, mj = fill_matches(order, lo, hi, rj_of_b, rv_of_b, 3, total, True)
    lcis_table_kernel(a, b, mi, mj)
    up = np.zeros(2, np.int64)
    dn = np.zeros(2, np.int64)
    upr = np.zeros(2, np.int64)
    dnr = np.zeros(2, np.int64)
    twophase_kernel(a, b, up, dn, upr, dnr, 3)
    X, Y = 2, 2
    score = np.zeros((X + 1) * (Y + 1), np.int64)
    seq = np.zeros((X + 1) * (Y + 1), np.int64)
    pay = np.zeros((X + 1) * (Y + 1), np.int64)
    out_len = np.zeros(total, np.int32)
    out_pred = np.zeros(total, np.int32)
    probes = np.zeros(1, np.int64)
    grid_scan(rj, rv, X, Y, score, seq, pay, out_len, out_pred, probes,
              False, X, 0, True)
    grid_scan(rj, rv, X, Y, score, seq, pay, out_len, out_pred, probes,
              True, X, 0, False)
    slots = int(csr_count_slots(rj, X, False, X))
    nodes_out = np.zeros(slots, np.int64)
    ys_out = np.zeros(slots, np.int64)
    csr_emit_slots(rj, rv, X, False, X, nodes_out, ys_out)
    order2 = np.lexsort((ys_out, nodes_out))
    node_ys = ys_out[order2]
    counts = np.bincount(nodes_out, minlength=X + 1)
    ptr = np.zeros(X + 2, np.int64)
    np.cumsum(counts, out=ptr[1:])
    cscore = np.zeros(slots, np.int64)
    cseq = np.zeros(slots, np.int64)
    cpay = np.zeros(slots, np.int64)
    csr_scan(rj, rv, X, ptr, node_ys, cscore, cseq, cpay, out_len, out_pred,
             probes, False, X, 0, True)
    peak_argmax(out_len, out_len)
    one64 = np.zeros(1, np.int64)
    peak_argmax(one64, one64)
    grid_update(score, seq, pay, X, Y, 1, 1, 1, 0, 0, probes)
    grid_query(score, seq, pay, Y, X, Y, probes)
    csr_update(ptr, node_ys, cscore, cseq, cpay, X, int(rj[0]), int(rv[0]),
               1, 0, 0, probes)
    csr_query(ptr, node_ys, cscore, cseq, cpay, X, 2, probes)
