import assert from "node:assert/strict";
import { test } from "node:test";

import { GeneratedLevel, SolvePlan } from "../src/api.js";
import {
  buildState,
  clientCrossingCount,
  drag,
  gridToUnit,
  hint,
  lockHint,
  planFace,
  planLength,
} from "../src/state.js";

// a triangle level, tangled so the edges cross nothing (3 vertices cannot cross)
const level: GeneratedLevel = {
  level: 0, l: 3, seed: 0, n: 3, m: 3,
  graph: { n: 3, edges: [[0, 1], [1, 2], [0, 2]] },
  layout: { "0": [0.2, 0.2], "1": [0.8, 0.2], "2": [0.5, 0.8] },
};

test("buildState computes an initial crossing count", () => {
  const st = buildState(0, 0, level);
  assert.equal(clientCrossingCount(st), 0);
  assert.equal(st.positions.size, 3);
});

test("drag moves a vertex and updates the count", () => {
  const st = buildState(0, 0, level);
  drag(st, 2, [0.5, 0.21]);
  assert.deepEqual(st.positions.get(2), [0.5, 0.21]);
  assert.throws(() => drag(st, 99, [0, 0]));
});

test("no-op drag keeps the state equivalent", () => {
  const st = buildState(0, 0, level);
  const before = clientCrossingCount(st);
  drag(st, 0, st.positions.get(0)!);
  assert.equal(clientCrossingCount(st), before);
});

test("hint walks the solve plan in order and then reports exhaustion", () => {
  const st = buildState(0, 0, level);
  const plan: SolvePlan = {
    initialCycle: [0, 1, 2],
    ears: [{ u: 0, v: 2, P: [0, 1, 2], S: [0, 3, 2] }],
  };
  st.solvePlan = plan;
  const seen: number[][] = [];
  for (let h = hint(st); h !== null; h = hint(st)) {
    seen.push(h);
    lockHint(st);
  }
  assert.equal(seen.length, planLength(plan));
  assert.deepEqual(seen[0], [0, 1, 2]);
  assert.deepEqual(seen[1], [0, 1, 2, 3]);   // P then S walked backwards
  assert.deepEqual(seen, [0, 1].map((i) => planFace(plan, i)));
  assert.equal(hint(st), null);
});

test("gridToUnit keeps rows ordered inside the unit square", () => {
  const targets = gridToUnit({
    width: 3, height: 2,
    positions: { "0": [0, 0], "1": [2, 0], "2": [1, 1] },
    edges: [],
  });
  const p0 = targets.get(0)!;
  const p1 = targets.get(1)!;
  const p2 = targets.get(2)!;
  assert.ok(p0[0] < p1[0]);
  assert.ok(p2[1] < p0[1]);       // higher row sits higher on screen (smaller y)
  for (const [x, y] of targets.values()) {
    assert.ok(x >= 0 && x <= 1 && y >= 0 && y <= 1);
  }
});
