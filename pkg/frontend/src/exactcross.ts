// Exact crossing detection mirroring the server's /api/check semantics.
//
// Coordinates live in the unit square and are snapped to a 2^20 integer
// grid before any predicate runs, exactly like the server does.  On the
// snapped grid every product fits well inside Number's 53-bit integer
// range (|diff| <= 2^20, products <= 2^40), so plain arithmetic is exact.

export const SNAP_GRID = 1 << 20;

export type Point = readonly [number, number];
export type Edge = readonly [number, number];

export function snapUnit(t: number): number {
  // floor(t*G + 0.5): identical IEEE ops to the server's snap, so the
  // two sides can never disagree on a coordinate
  const clamped = Math.min(1, Math.max(0, t));
  return Math.floor(clamped * SNAP_GRID + 0.5);
}

export function snapPoint(p: Point): Point {
  return [snapUnit(p[0]), snapUnit(p[1])];
}

function orient(ox: number, oy: number, ax: number, ay: number, bx: number, by: number): number {
  return (ax - ox) * (by - oy) - (ay - oy) * (bx - ox);
}

function onSegment(qx: number, qy: number, sx: number, sy: number, tx: number, ty: number): boolean {
  return Math.min(sx, tx) <= qx && qx <= Math.max(sx, tx)
    && Math.min(sy, ty) <= qy && qy <= Math.max(sy, ty);
}

/** Do two snapped segments violate planarity?  Segments sharing `shared`
 * endpoints (by vertex id) may touch only at those endpoints. */
export function edgePairBad(
  a1: Point, a2: Point, b1: Point, b2: Point, shared: number,
): boolean {
  if (shared >= 2) return true;
  if (shared === 1) {
    // caller passes the shared endpoint as a1 === b1
    const cross = orient(a1[0], a1[1], a2[0], a2[1], b2[0], b2[1]);
    const dot = (a2[0] - a1[0]) * (b2[0] - b1[0]) + (a2[1] - a1[1]) * (b2[1] - b1[1]);
    return cross === 0 && dot > 0;
  }
  const d1 = orient(b1[0], b1[1], b2[0], b2[1], a1[0], a1[1]);
  const d2 = orient(b1[0], b1[1], b2[0], b2[1], a2[0], a2[1]);
  const d3 = orient(a1[0], a1[1], a2[0], a2[1], b1[0], b1[1]);
  const d4 = orient(a1[0], a1[1], a2[0], a2[1], b2[0], b2[1]);
  if (d1 !== 0 && d2 !== 0 && d3 !== 0 && d4 !== 0) {
    return (d1 > 0) !== (d2 > 0) && (d3 > 0) !== (d4 > 0);
  }
  if (d1 === 0 && onSegment(a1[0], a1[1], b1[0], b1[1], b2[0], b2[1])) return true;
  if (d2 === 0 && onSegment(a2[0], a2[1], b1[0], b1[1], b2[0], b2[1])) return true;
  if (d3 === 0 && onSegment(b1[0], b1[1], a1[0], a1[1], a2[0], a2[1])) return true;
  if (d4 === 0 && onSegment(b2[0], b2[1], a1[0], a1[1], a2[0], a2[1])) return true;
  return false;
}

export interface CrossState {
  /** keys i*m+j (i<j) of edge pairs currently in violation */
  badPairs: Set<number>;
  /** keys v*m+e of vertices sitting on non-incident closed segments */
  vertexHits: Set<number>;
}

function sharedCount(e: Edge, f: Edge): number {
  let s = 0;
  if (e[0] === f[0] || e[0] === f[1]) s += 1;
  if (e[1] === f[0] || e[1] === f[1]) s += 1;
  return s;
}

function pairBad(pts: Map<number, Point>, e: Edge, f: Edge): boolean {
  const shared = sharedCount(e, f);
  let eu = e[0], ev = e[1], fu = f[0], fv = f[1];
  if (shared === 1) {
    // rotate so the shared vertex leads both edges
    if (eu !== fu && eu !== fv) [eu, ev] = [ev, eu];
    if (fu !== eu) [fu, fv] = [fv, fu];
  }
  return edgePairBad(pts.get(eu)!, pts.get(ev)!, pts.get(fu)!, pts.get(fv)!, shared);
}

function vertexOnEdge(pts: Map<number, Point>, v: number, e: Edge): boolean {
  if (v === e[0] || v === e[1]) return false;
  const p = pts.get(v)!;
  const s = pts.get(e[0])!;
  const t = pts.get(e[1])!;
  return orient(s[0], s[1], t[0], t[1], p[0], p[1]) === 0
    && onSegment(p[0], p[1], s[0], s[1], t[0], t[1]);
}

export function snapAll(positions: Map<number, Point>): Map<number, Point> {
  const out = new Map<number, Point>();
  for (const [v, p] of positions) out.set(v, snapPoint(p));
  return out;
}

/** Full recount over every pair; O(m^2). */
export function fullCount(positions: Map<number, Point>, edges: readonly Edge[]): CrossState {
  const pts = snapAll(positions);
  const m = edges.length;
  const badPairs = new Set<number>();
  const vertexHits = new Set<number>();
  for (let i = 0; i < m; i++) {
    for (let j = i + 1; j < m; j++) {
      if (pairBad(pts, edges[i], edges[j])) badPairs.add(i * m + j);
    }
  }
  for (const v of pts.keys()) {
    for (let e = 0; e < m; e++) {
      if (vertexOnEdge(pts, v, edges[e])) vertexHits.add(v * m + e);
    }
  }
  return { badPairs, vertexHits };
}

/** Recount only the pairs affected by moving vertex `moved`. */
export function recountAfterMove(
  state: CrossState,
  positions: Map<number, Point>,
  edges: readonly Edge[],
  moved: number,
): void {
  const pts = snapAll(positions);
  const m = edges.length;
  const touched: number[] = [];
  for (let e = 0; e < m; e++) {
    if (edges[e][0] === moved || edges[e][1] === moved) touched.push(e);
  }
  const touchedSet = new Set(touched);
  for (const e of touched) {
    for (let f = 0; f < m; f++) {
      if (f === e || (touchedSet.has(f) && f < e)) continue;
      const key = e < f ? e * m + f : f * m + e;
      if (pairBad(pts, edges[Math.min(e, f)], edges[Math.max(e, f)])) {
        state.badPairs.add(key);
      } else {
        state.badPairs.delete(key);
      }
    }
  }
  // the moved vertex against all edges, every vertex against touched edges
  for (let e = 0; e < m; e++) {
    const key = moved * m + e;
    if (vertexOnEdge(pts, moved, edges[e])) state.vertexHits.add(key);
    else state.vertexHits.delete(key);
  }
  for (const v of pts.keys()) {
    for (const e of touched) {
      const key = v * m + e;
      if (vertexOnEdge(pts, v, edges[e])) state.vertexHits.add(key);
      else state.vertexHits.delete(key);
    }
  }
}

export function crossingCount(state: CrossState): number {
  return state.badPairs.size;
}

export function violationCount(state: CrossState): number {
  return state.badPairs.size + state.vertexHits.size;
}
