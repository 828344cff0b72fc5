// Puzzle view state and the operations the UI performs on it.
// Everything here is DOM-free so the node test-suite can drive it.

import { Api, GeneratedLevel, SolvePlan, DrawingJson } from "./api.js";
import {
  CrossState,
  Edge,
  Point,
  crossingCount,
  fullCount,
  recountAfterMove,
  violationCount,
} from "./exactcross.js";

export interface ViewState {
  level: number;
  seed: number;
  l: number;
  graph: { n: number; edges: Edge[] };
  positions: Map<number, Point>;
  cross: CrossState;
  solvePlan: SolvePlan | null;
  realizedFaces: number;          // prefix of the plan the user has locked
  solved: boolean;
}

export function buildState(level: number, seed: number, gen: GeneratedLevel): ViewState {
  const edges = gen.graph.edges.map(([u, v]) => [u, v] as Edge);
  const positions = new Map<number, Point>();
  for (const [v, p] of Object.entries(gen.layout)) positions.set(Number(v), [p[0], p[1]]);
  const graph = { n: gen.graph.n, edges };
  return {
    level, seed, l: gen.l, graph, positions,
    cross: fullCount(positions, edges),
    solvePlan: null, realizedFaces: 0, solved: false,
  };
}

export async function newLevel(api: Api, level: number, seed: number): Promise<ViewState> {
  return buildState(level, seed, await api.generate(level, seed));
}

export async function loadPlan(api: Api, state: ViewState): Promise<void> {
  state.solvePlan = await api.solvePlan(state.graph);
  state.realizedFaces = 0;
}

export function drag(state: ViewState, vertex: number, point: Point): void {
  if (!state.positions.has(vertex)) throw new Error(`no vertex ${vertex}`);
  state.positions.set(vertex, point);
  recountAfterMove(state.cross, state.positions, state.graph.edges, vertex);
  state.solved = false;
}

export function clientCrossingCount(state: ViewState): number {
  return crossingCount(state.cross);
}

export function clientViolationCount(state: ViewState): number {
  return violationCount(state.cross);
}

/** Face cycle of a plan entry: the initial cycle first, then each ear's
 * boundary path P continued by its ear path S walked backwards. */
export function planFace(plan: SolvePlan, index: number): number[] {
  if (index === 0) return plan.initialCycle.slice();
  const ear = plan.ears[index - 1];
  return [...ear.P, ...ear.S.slice(1, -1).reverse()];
}

export function planLength(plan: SolvePlan): number {
  return plan.ears.length + 1;
}

/** Highlight cycle for the next unrealized face, or null when exhausted. */
export function hint(state: ViewState): number[] | null {
  if (!state.solvePlan) return null;
  if (state.realizedFaces >= planLength(state.solvePlan)) return null;
  return planFace(state.solvePlan, state.realizedFaces);
}

export function lockHint(state: ViewState): void {
  if (state.solvePlan && state.realizedFaces < planLength(state.solvePlan)) {
    state.realizedFaces += 1;
  }
}

/** Map grid coordinates into the unit square with a margin; rows keep
 * their order, so the drawing stays planar after snapping. */
export function gridToUnit(drawing: DrawingJson): Map<number, Point> {
  const spanX = Math.max(drawing.width - 1, 1);
  const spanY = Math.max(drawing.height - 1, 1);
  const out = new Map<number, Point>();
  for (const [v, [x, y]] of Object.entries(drawing.positions)) {
    out.set(Number(v), [0.05 + 0.9 * (x / spanX), 0.95 - 0.9 * (y / spanY)]);
  }
  return out;
}

export async function autoArrange(api: Api, state: ViewState): Promise<Map<number, Point>> {
  const drawing = await api.draw(state.graph);
  const targets = gridToUnit(drawing);
  return targets;
}

export function applyPositions(state: ViewState, targets: Map<number, Point>): void {
  for (const [v, p] of targets) state.positions.set(v, p);
  state.cross = fullCount(state.positions, state.graph.edges);
}

/** Linear interpolation between two layouts, t in [0, 1]. */
export function lerpPositions(
  from: Map<number, Point>, to: Map<number, Point>, t: number,
): Map<number, Point> {
  const out = new Map<number, Point>();
  for (const [v, a] of from) {
    const b = to.get(v) ?? a;
    out.set(v, [a[0] + (b[0] - a[0]) * t, a[1] + (b[1] - a[1]) * t]);
  }
  return out;
}

export async function confirmSolved(api: Api, state: ViewState): Promise<boolean> {
  if (clientViolationCount(state) !== 0) return false;
  const report = await api.check(state.positions, state.graph.edges);
  state.solved = report.crossingCount === 0 && report.vertexHitCount === 0;
  return state.solved;
}
