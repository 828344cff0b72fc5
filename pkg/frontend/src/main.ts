// Browser bootstrap: wires the puzzle state to the canvas and controls.

import { Api } from "./api.js";
import { Point } from "./exactcross.js";
import { nearestVertex, render, toUnit } from "./render.js";
import {
  ViewState,
  applyPositions,
  autoArrange,
  clientCrossingCount,
  clientViolationCount,
  confirmSolved,
  drag,
  hint,
  lerpPositions,
  loadPlan,
  lockHint,
  newLevel,
  planLength,
} from "./state.js";

const ANIMATION_MS = 600;

const canvas = document.getElementById("board") as HTMLCanvasElement;
const ctx = canvas.getContext("2d")!;
const levelInput = document.getElementById("level") as HTMLInputElement;
const seedInput = document.getElementById("seed") as HTMLInputElement;
const newButton = document.getElementById("new") as HTMLButtonElement;
const hintButton = document.getElementById("hint") as HTMLButtonElement;
const lockButton = document.getElementById("lock") as HTMLButtonElement;
const arrangeButton = document.getElementById("arrange") as HTMLButtonElement;
const counter = document.getElementById("count") as HTMLSpanElement;
const banner = document.getElementById("banner") as HTMLDivElement;

const api = new Api("");
let state: ViewState | null = null;
let highlighted: number[] | null = null;
let dragged: number | null = null;

function viewport() {
  return { width: canvas.width, height: canvas.height };
}

function redraw() {
  if (!state) return;
  render(ctx, state, viewport(), highlighted, dragged);
  const crossings = clientCrossingCount(state);
  const violations = clientViolationCount(state);
  counter.textContent = violations === crossings
    ? `${crossings} crossings`
    : `${crossings} crossings, ${violations - crossings} touching`;
  if (state.solved) {
    banner.textContent = "Solved! Every edge is crossing-free.";
    banner.className = "banner ok";
  }
}

function showError(message: string) {
  banner.textContent = message;
  banner.className = "banner err";
}

function clearBanner() {
  banner.textContent = "";
  banner.className = "banner";
}

async function startLevel() {
  clearBanner();
  highlighted = null;
  try {
    state = await newLevel(api, Number(levelInput.value), Number(seedInput.value));
    await loadPlan(api, state);
  } catch (err) {
    showError(String(err));
    return;
  }
  redraw();
}

function fitCanvas() {
  const size = Math.min(window.innerWidth - 40, window.innerHeight - 140);
  canvas.width = size;
  canvas.height = size;
  redraw();
}

canvas.addEventListener("pointerdown", (ev) => {
  if (!state) return;
  const unit = toUnit(ev.offsetX, ev.offsetY, viewport());
  dragged = nearestVertex(state, unit, 24 / canvas.width);
  if (dragged !== null) canvas.setPointerCapture(ev.pointerId);
  redraw();
});

canvas.addEventListener("pointermove", (ev) => {
  if (!state || dragged === null) return;
  const unit = toUnit(ev.offsetX, ev.offsetY, viewport());
  const clamped: Point = [Math.min(1, Math.max(0, unit[0])), Math.min(1, Math.max(0, unit[1]))];
  drag(state, dragged, clamped);
  redraw();
});

canvas.addEventListener("pointerup", async () => {
  if (!state || dragged === null) return;
  dragged = null;
  if (clientViolationCount(state) === 0) {
    try {
      if (await confirmSolved(api, state)) redraw();
    } catch {
      // server unreachable: keep playing on the client count
    }
  }
  redraw();
});

newButton.addEventListener("click", startLevel);

hintButton.addEventListener("click", () => {
  if (!state || !state.solvePlan) return;
  highlighted = hint(state);
  if (highlighted === null) {
    banner.textContent =
      `Fully decomposed: all ${planLength(state.solvePlan)} faces are locked.`;
    banner.className = "banner ok";
  }
  redraw();
});

lockButton.addEventListener("click", () => {
  if (!state) return;
  lockHint(state);
  highlighted = hint(state);
  redraw();
});

arrangeButton.addEventListener("click", async () => {
  if (!state) return;
  clearBanner();
  highlighted = null;
  let targets: Map<number, Point>;
  try {
    targets = await autoArrange(api, state);
  } catch (err) {
    showError(String(err));
    return;
  }
  const origin = new Map(state.positions);
  const t0 = performance.now();
  const tick = (now: number) => {
    if (!state) return;
    const t = Math.min(1, (now - t0) / ANIMATION_MS);
    applyPositions(state, lerpPositions(origin, targets, t));
    redraw();
    if (t < 1) {
      requestAnimationFrame(tick);
    } else {
      void confirmSolved(api, state).then(redraw);
    }
  };
  requestAnimationFrame(tick);
});

window.addEventListener("resize", fitCanvas);
fitCanvas();
void startLevel();
