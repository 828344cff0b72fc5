// Canvas rendering: unit-square layout scaled to the viewport.

import { Point } from "./exactcross.js";
import { ViewState } from "./state.js";

export interface Viewport {
  width: number;
  height: number;
}

export function toScreen(p: Point, vp: Viewport): [number, number] {
  return [p[0] * vp.width, p[1] * vp.height];
}

export function toUnit(x: number, y: number, vp: Viewport): Point {
  return [x / vp.width, y / vp.height];
}

export function nearestVertex(state: ViewState, unit: Point, radiusUnits: number): number | null {
  let best: number | null = null;
  let bestD = radiusUnits * radiusUnits;
  for (const [v, p] of state.positions) {
    const dx = p[0] - unit[0];
    const dy = p[1] - unit[1];
    const d = dx * dx + dy * dy;
    if (d <= bestD) {
      best = v;
      bestD = d;
    }
  }
  return best;
}

export function render(
  ctx: CanvasRenderingContext2D,
  state: ViewState,
  vp: Viewport,
  highlight: number[] | null,
  dragged: number | null,
): void {
  ctx.clearRect(0, 0, vp.width, vp.height);
  const m = state.graph.edges.length;
  const badEdges = new Set<number>();
  for (const key of state.cross.badPairs) {
    badEdges.add(Math.floor(key / m));
    badEdges.add(key % m);
  }
  const highlightEdges = new Set<string>();
  if (highlight) {
    for (let i = 0; i < highlight.length; i++) {
      const a = highlight[i];
      const b = highlight[(i + 1) % highlight.length];
      highlightEdges.add(`${Math.min(a, b)},${Math.max(a, b)}`);
    }
  }

  state.graph.edges.forEach(([u, v], e) => {
    const [x1, y1] = toScreen(state.positions.get(u)!, vp);
    const [x2, y2] = toScreen(state.positions.get(v)!, vp);
    const onHint = highlightEdges.has(`${Math.min(u, v)},${Math.max(u, v)}`);
    ctx.strokeStyle = onHint ? "#f5a623" : badEdges.has(e) ? "#d0451b" : "#4a6fa5";
    ctx.lineWidth = onHint ? 4 : 2;
    ctx.beginPath();
    ctx.moveTo(x1, y1);
    ctx.lineTo(x2, y2);
    ctx.stroke();
  });

  const hintVerts = new Set(highlight ?? []);
  for (const [v, p] of state.positions) {
    const [x, y] = toScreen(p, vp);
    ctx.beginPath();
    ctx.arc(x, y, v === dragged ? 10 : 7, 0, 2 * Math.PI);
    ctx.fillStyle = hintVerts.has(v) ? "#f5a623" : "#1d3557";
    ctx.fill();
    ctx.strokeStyle = "#ffffff";
    ctx.lineWidth = 1.5;
    ctx.stroke();
  }
}
