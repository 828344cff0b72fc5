"""Hot numeric kernels with selectable backends.

Two inner loops dominate the test and verification workload: the O(m^2)
exact segment-pair scan behind the straight-line planarity oracle, and the
exhaustive composition scan used to certify the greedy row-matching rule.
Both ship in three flavors:

* ``numba``  -- @njit kernels (default when numba imports cleanly),
* ``numpy``  -- vectorized fallback, no compilation step,
* ``python`` -- plain big-int loops; always used when coordinates exceed
  the int64-safe window, regardless of the selected backend.

Select with the ``ARRANGELINE_KERNEL`` environment variable
(``numba`` | ``numpy`` | ``python``).  All decision arithmetic is exact:
int64 inside numba/numpy (coordinates are pre-checked against
``COORD_LIMIT`` so no product can overflow), arbitrary-precision ints in
the python path.
"""

from __future__ import annotations

import os

import numpy as np

# |coordinate| bound for the int64 paths: differences fit in 2^30, cross
# products in 2^60, their difference in 2^61.
COORD_LIMIT = 1 << 29

_VALID_MODES = ("numba", "numpy", "python")


def kernel_mode() -> str:
    """Backend chosen by ARRANGELINE_KERNEL (default: numba if available)."""
    mode = os.environ.get("ARRANGELINE_KERNEL", "").strip().lower()
    if mode in _VALID_MODES:
        if mode == "numba" and not _NUMBA_OK:
            raise RuntimeError("ARRANGELINE_KERNEL=numba but numba is unavailable")
        return mode
    return "numba" if _NUMBA_OK else "numpy"


try:  # pragma: no cover - environment probe
    if os.environ.get("ARRANGELINE_KERNEL", "").strip().lower() in ("numpy", "python"):
        _NUMBA_OK = False
        njit = None
    else:
        from numba import njit

        _NUMBA_OK = True
except ImportError:  # pragma: no cover
    _NUMBA_OK = False
    njit = None


# ---------------------------------------------------------------------------
# Segment-pair scan
# ---------------------------------------------------------------------------
#
# Inputs: pts (n, 2) and edges (m, 2), int64.  A drawing is clean iff
#   * non-adjacent closed segments are disjoint,
#   * segments sharing an endpoint meet only at that endpoint
#     (collinear forward overlap is the only possible excess), and
#   * no vertex lies on a non-incident closed segment.
# The kernels return exact violation counts and up to ``cap`` witnesses of
# each kind: (edge, edge) pairs and (vertex, edge) hits.


def _segment_scan_python(pts, edges, cap):
    n = len(pts)
    m = len(edges)
    ax = [int(pts[edges[e][0]][0]) for e in range(m)]
    ay = [int(pts[edges[e][0]][1]) for e in range(m)]
    bx = [int(pts[edges[e][1]][0]) for e in range(m)]
    by = [int(pts[edges[e][1]][1]) for e in range(m)]

    def orient(ox, oy, px, py, qx, qy):
        return (px - ox) * (qy - oy) - (py - oy) * (qx - ox)

    pair_count = 0
    pairs: list[tuple[int, int]] = []
    for i in range(m):
        ui, vi = int(edges[i][0]), int(edges[i][1])
        for j in range(i + 1, m):
            uj, vj = int(edges[j][0]), int(edges[j][1])
            shared = (ui == uj) + (ui == vj) + (vi == uj) + (vi == vj)
            bad = False
            if shared >= 2:
                bad = True
            elif shared == 1:
                if ui == uj:
                    sx, sy, px, py, qx, qy = ax[i], ay[i], bx[i], by[i], bx[j], by[j]
                elif ui == vj:
                    sx, sy, px, py, qx, qy = ax[i], ay[i], bx[i], by[i], ax[j], ay[j]
                elif vi == uj:
                    sx, sy, px, py, qx, qy = bx[i], by[i], ax[i], ay[i], bx[j], by[j]
                else:
                    sx, sy, px, py, qx, qy = bx[i], by[i], ax[i], ay[i], ax[j], ay[j]
                if orient(sx, sy, px, py, qx, qy) == 0 and \
                        (px - sx) * (qx - sx) + (py - sy) * (qy - sy) > 0:
                    bad = True
            else:
                d1 = orient(ax[j], ay[j], bx[j], by[j], ax[i], ay[i])
                d2 = orient(ax[j], ay[j], bx[j], by[j], bx[i], by[i])
                d3 = orient(ax[i], ay[i], bx[i], by[i], ax[j], ay[j])
                d4 = orient(ax[i], ay[i], bx[i], by[i], bx[j], by[j])
                if ((d1 > 0) != (d2 > 0) and (d3 > 0) != (d4 > 0)
                        and d1 != 0 and d2 != 0 and d3 != 0 and d4 != 0):
                    bad = True
                else:
                    for dd, (px, py, sx, sy, tx, ty) in (
                        (d1, (ax[i], ay[i], ax[j], ay[j], bx[j], by[j])),
                        (d2, (bx[i], by[i], ax[j], ay[j], bx[j], by[j])),
                        (d3, (ax[j], ay[j], ax[i], ay[i], bx[i], by[i])),
                        (d4, (bx[j], by[j], ax[i], ay[i], bx[i], by[i])),
                    ):
                        if dd == 0 and min(sx, tx) <= px <= max(sx, tx) \
                                and min(sy, ty) <= py <= max(sy, ty):
                            bad = True
                            break
            if bad:
                pair_count += 1
                if len(pairs) < cap:
                    pairs.append((i, j))

    hit_count = 0
    hits: list[tuple[int, int]] = []
    for v in range(n):
        px, py = int(pts[v][0]), int(pts[v][1])
        for e in range(m):
            if v == int(edges[e][0]) or v == int(edges[e][1]):
                continue
            if orient(ax[e], ay[e], bx[e], by[e], px, py) == 0 and \
                    min(ax[e], bx[e]) <= px <= max(ax[e], bx[e]) and \
                    min(ay[e], by[e]) <= py <= max(ay[e], by[e]):
                hit_count += 1
                if len(hits) < cap:
                    hits.append((v, e))
    return pair_count, pairs, hit_count, hits


if _NUMBA_OK:

    @njit(cache=True)
    def _segment_scan_numba(ax, ay, bx, by, eu, ev, px, py, cap):  # pragma: no cover
        m = ax.shape[0]
        n = px.shape[0]
        pairs = np.empty((cap, 2), dtype=np.int64)
        hits = np.empty((cap, 2), dtype=np.int64)
        pair_count = 0
        hit_count = 0
        for i in range(m):
            for j in range(i + 1, m):
                shared = 0
                if eu[i] == eu[j] or eu[i] == ev[j]:
                    shared += 1
                if ev[i] == eu[j] or ev[i] == ev[j]:
                    shared += 1
                bad = False
                if shared >= 2:
                    bad = True
                elif shared == 1:
                    if eu[i] == eu[j]:
                        sx = ax[i]; sy = ay[i]; p1x = bx[i]; p1y = by[i]; q1x = bx[j]; q1y = by[j]
                    elif eu[i] == ev[j]:
                        sx = ax[i]; sy = ay[i]; p1x = bx[i]; p1y = by[i]; q1x = ax[j]; q1y = ay[j]
                    elif ev[i] == eu[j]:
                        sx = bx[i]; sy = by[i]; p1x = ax[i]; p1y = ay[i]; q1x = bx[j]; q1y = by[j]
                    else:
                        sx = bx[i]; sy = by[i]; p1x = ax[i]; p1y = ay[i]; q1x = ax[j]; q1y = ay[j]
                    cr = (p1x - sx) * (q1y - sy) - (p1y - sy) * (q1x - sx)
                    dt = (p1x - sx) * (q1x - sx) + (p1y - sy) * (q1y - sy)
                    if cr == 0 and dt > 0:
                        bad = True
                else:
                    d1 = (bx[j] - ax[j]) * (ay[i] - ay[j]) - (by[j] - ay[j]) * (ax[i] - ax[j])
                    d2 = (bx[j] - ax[j]) * (by[i] - ay[j]) - (by[j] - ay[j]) * (bx[i] - ax[j])
                    d3 = (bx[i] - ax[i]) * (ay[j] - ay[i]) - (by[i] - ay[i]) * (ax[j] - ax[i])
                    d4 = (bx[i] - ax[i]) * (by[j] - ay[i]) - (by[i] - ay[i]) * (bx[j] - ax[i])
                    if d1 != 0 and d2 != 0 and d3 != 0 and d4 != 0:
                        if ((d1 > 0) != (d2 > 0)) and ((d3 > 0) != (d4 > 0)):
                            bad = True
                    else:
                        if d1 == 0 and min(ax[j], bx[j]) <= ax[i] <= max(ax[j], bx[j]) \
                                and min(ay[j], by[j]) <= ay[i] <= max(ay[j], by[j]):
                            bad = True
                        elif d2 == 0 and min(ax[j], bx[j]) <= bx[i] <= max(ax[j], bx[j]) \
                                and min(ay[j], by[j]) <= by[i] <= max(ay[j], by[j]):
                            bad = True
                        elif d3 == 0 and min(ax[i], bx[i]) <= ax[j] <= max(ax[i], bx[i]) \
                                and min(ay[i], by[i]) <= ay[j] <= max(ay[i], by[i]):
                            bad = True
                        elif d4 == 0 and min(ax[i], bx[i]) <= bx[j] <= max(ax[i], bx[i]) \
                                and min(ay[i], by[i]) <= by[j] <= max(ay[i], by[i]):
                            bad = True
                if bad:
                    if pair_count < cap:
                        pairs[pair_count, 0] = i
                        pairs[pair_count, 1] = j
                    pair_count += 1
        for v in range(n):
            for e in range(m):
                if v == eu[e] or v == ev[e]:
                    continue
                d = (bx[e] - ax[e]) * (py[v] - ay[e]) - (by[e] - ay[e]) * (px[v] - ax[e])
                if d == 0 and min(ax[e], bx[e]) <= px[v] <= max(ax[e], bx[e]) \
                        and min(ay[e], by[e]) <= py[v] <= max(ay[e], by[e]):
                    if hit_count < cap:
                        hits[hit_count, 0] = v
                        hits[hit_count, 1] = e
                    hit_count += 1
        return pair_count, pairs, hit_count, hits


def _segment_scan_numpy(pts, edges, cap, block=256):
    m = len(edges)
    n = len(pts)
    ax = pts[edges[:, 0], 0].astype(np.int64)
    ay = pts[edges[:, 0], 1].astype(np.int64)
    bx = pts[edges[:, 1], 0].astype(np.int64)
    by = pts[edges[:, 1], 1].astype(np.int64)
    eu = edges[:, 0].astype(np.int64)
    ev = edges[:, 1].astype(np.int64)

    pair_count = 0
    pairs: list[tuple[int, int]] = []
    for i0 in range(0, m, block):
        i1 = min(i0 + block, m)
        bi = np.arange(i0, i1)
        # pair every edge in the block with every later edge
        ii, jj = np.meshgrid(bi, np.arange(m), indexing="ij")
        keep = jj > ii
        ii, jj = ii[keep], jj[keep]
        if ii.size == 0:
            continue
        shared = ((eu[ii] == eu[jj]).astype(np.int8) + (eu[ii] == ev[jj])
                  + (ev[ii] == eu[jj]) + (ev[ii] == ev[jj]))

        d1 = (bx[jj] - ax[jj]) * (ay[ii] - ay[jj]) - (by[jj] - ay[jj]) * (ax[ii] - ax[jj])
        d2 = (bx[jj] - ax[jj]) * (by[ii] - ay[jj]) - (by[jj] - ay[jj]) * (bx[ii] - ax[jj])
        d3 = (bx[ii] - ax[ii]) * (ay[jj] - ay[ii]) - (by[ii] - ay[ii]) * (ax[jj] - ax[ii])
        d4 = (bx[ii] - ax[ii]) * (by[jj] - ay[ii]) - (by[ii] - ay[ii]) * (bx[jj] - ax[ii])

        proper = (((d1 > 0) != (d2 > 0)) & ((d3 > 0) != (d4 > 0))
                  & (d1 != 0) & (d2 != 0) & (d3 != 0) & (d4 != 0))

        def on_seg(d, qx, qy, sx, sy, tx, ty):
            return ((d == 0)
                    & (np.minimum(sx, tx) <= qx) & (qx <= np.maximum(sx, tx))
                    & (np.minimum(sy, ty) <= qy) & (qy <= np.maximum(sy, ty)))

        touch = (on_seg(d1, ax[ii], ay[ii], ax[jj], ay[jj], bx[jj], by[jj])
                 | on_seg(d2, bx[ii], by[ii], ax[jj], ay[jj], bx[jj], by[jj])
                 | on_seg(d3, ax[jj], ay[jj], ax[ii], ay[ii], bx[ii], by[ii])
                 | on_seg(d4, bx[jj], by[jj], ax[ii], ay[ii], bx[ii], by[ii]))
        disjoint_bad = (shared == 0) & (proper | touch)

        # shared endpoint: collinear forward overlap
        sx = np.where(eu[ii] == eu[jj], ax[ii], np.where(eu[ii] == ev[jj], ax[ii], bx[ii]))
        sy = np.where(eu[ii] == eu[jj], ay[ii], np.where(eu[ii] == ev[jj], ay[ii], by[ii]))
        p1x = np.where((eu[ii] == eu[jj]) | (eu[ii] == ev[jj]), bx[ii], ax[ii])
        p1y = np.where((eu[ii] == eu[jj]) | (eu[ii] == ev[jj]), by[ii], ay[ii])
        q1x = np.where((eu[ii] == eu[jj]) | (ev[ii] == eu[jj]), bx[jj], ax[jj])
        q1y = np.where((eu[ii] == eu[jj]) | (ev[ii] == eu[jj]), by[jj], ay[jj])
        cr = (p1x - sx) * (q1y - sy) - (p1y - sy) * (q1x - sx)
        dt = (p1x - sx) * (q1x - sx) + (p1y - sy) * (q1y - sy)
        shared_bad = (shared == 1) & (cr == 0) & (dt > 0)

        bad = disjoint_bad | shared_bad | (shared >= 2)
        idx = np.nonzero(bad)[0]
        pair_count += int(idx.size)
        for k in idx[: max(0, cap - len(pairs))]:
            pairs.append((int(ii[k]), int(jj[k])))

    hit_count = 0
    hits: list[tuple[int, int]] = []
    px = pts[:, 0].astype(np.int64)
    py = pts[:, 1].astype(np.int64)
    for e in range(m):
        d = (bx[e] - ax[e]) * (py - ay[e]) - (by[e] - ay[e]) * (px - ax[e])
        on = ((d == 0)
              & (min(ax[e], bx[e]) <= px) & (px <= max(ax[e], bx[e]))
              & (min(ay[e], by[e]) <= py) & (py <= max(ay[e], by[e])))
        on[eu[e]] = False
        on[ev[e]] = False
        idx = np.nonzero(on)[0]
        hit_count += int(idx.size)
        for v in idx[: max(0, cap - len(hits))]:
            hits.append((int(v), e))
    return pair_count, pairs, hit_count, hits


def segment_scan(pts, edges, cap: int = 4096):
    """Exact pairwise violation scan of a straight-line drawing.

    Returns ``(pair_count, pair_witnesses, hit_count, hit_witnesses)``.
    Counts are exact; witness lists are truncated at ``cap``.
    """
    pts_list = [(int(p[0]), int(p[1])) for p in pts]
    edges_list = [(int(e[0]), int(e[1])) for e in edges]
    if not edges_list:
        return 0, [], 0, []
    mode = kernel_mode()
    if pts_list and max(max(abs(x), abs(y)) for x, y in pts_list) > COORD_LIMIT:
        mode = "python"  # widen to big ints rather than risk int64 overflow
    if mode == "python":
        return _segment_scan_python(pts_list, edges_list, cap)
    pts = np.array(pts_list, dtype=np.int64).reshape(-1, 2)
    edges = np.array(edges_list, dtype=np.int64).reshape(-1, 2)
    if mode == "numba":
        ax = pts[edges[:, 0], 0].copy()
        ay = pts[edges[:, 0], 1].copy()
        bx = pts[edges[:, 1], 0].copy()
        by = pts[edges[:, 1], 1].copy()
        pc, pa, hc, ha = _segment_scan_numba(
            ax, ay, bx, by, edges[:, 0].copy(), edges[:, 1].copy(),
            pts[:, 0].copy(), pts[:, 1].copy(), cap)
        return (pc, [(int(a), int(b)) for a, b in pa[: min(pc, cap)]],
                hc, [(int(a), int(b)) for a, b in ha[: min(hc, cap)]])
    return _segment_scan_numpy(pts, edges, cap)


# ---------------------------------------------------------------------------
# Exhaustive composition scan for the greedy row matching
# ---------------------------------------------------------------------------
#
# For a target sum s, enumerate every composition (ordered sequence of
# positive integers summing to s) and run the greedy leftmost matcher
# against capacity rows 1,3,1,7,... restricted to rows 1..s.  Returns
# (number of compositions, number of greedy failures).


def _sawtooth_row(i: int) -> int:
    return i ^ (i - 1)


def _next_geq_table(s: int) -> np.ndarray:
    """next_row[p][a] = smallest row r with p <= r <= s and row value >= a,
    or s+1 when none exists."""
    xs = [0] + [_sawtooth_row(i) for i in range(1, s + 1)]
    table = np.full((s + 2, s + 1), s + 1, dtype=np.int64)
    for a in range(1, s + 1):
        nxt = s + 1
        for p in range(s, 0, -1):
            if xs[p] >= a:
                nxt = p
            table[p][a] = nxt
    return table


def _composition_scan_python(s: int) -> tuple[int, int]:
    table = _next_geq_table(s)
    total = 0
    failures = 0
    # stack of (remaining, row_ptr, next_part_to_try)
    stack = [(s, 1, 1)]
    while stack:
        remaining, ptr, part = stack.pop()
        if part > remaining:
            continue
        stack.append((remaining, ptr, part + 1))
        row = int(table[min(ptr, s + 1)][part]) if ptr <= s else s + 1
        if row > s:
            # greedy cannot place this part; everything extending it fails
            failures += 2 ** max(0, remaining - part - 1) if remaining > part else 1
            total += 2 ** max(0, remaining - part - 1) if remaining > part else 1
            continue
        if remaining == part:
            total += 1
        else:
            stack.append((remaining - part, row + 1, 1))
    return total, failures


if _NUMBA_OK:

    @njit(cache=True)
    def _composition_scan_numba(s, table):  # pragma: no cover
        total = 0
        failures = 0
        rem = np.empty(s + 2, dtype=np.int64)
        ptr = np.empty(s + 2, dtype=np.int64)
        part = np.empty(s + 2, dtype=np.int64)
        top = 0
        rem[0] = s
        ptr[0] = 1
        part[0] = 1
        while top >= 0:
            r = rem[top]
            p = ptr[top]
            a = part[top]
            if a > r:
                top -= 1
                continue
            part[top] = a + 1
            if p > s:
                row = s + 1
            else:
                row = table[p, a]
            if row > s:
                if r > a:
                    extra = 1 << max(0, r - a - 1)
                else:
                    extra = 1
                failures += extra
                total += extra
                continue
            if r == a:
                total += 1
            else:
                top += 1
                rem[top] = r - a
                ptr[top] = row + 1
                part[top] = 1
        return total, failures


def composition_match_scan(s: int) -> tuple[int, int]:
    """Check greedy leftmost matching over every composition of ``s``.

    A failing composition is one whose greedy scan runs off row ``s``;
    failure of a prefix is counted once per completion so the totals always
    add up to 2^(s-1) compositions.
    """
    if s < 1:
        return 0, 0
    mode = kernel_mode()
    if mode == "numba":
        return tuple(int(x) for x in _composition_scan_numba(s, _next_geq_table(s)))
    return _composition_scan_python(s)
