// End-to-end checks against a live backend, covering the UI release
// criteria: level sizes, auto-arrange reaching zero crossings on both
// sides, hint sequence equal to the server plan, and client/server
// crossing-count agreement on randomized layouts.

import assert from "node:assert/strict";
import { spawn, ChildProcess } from "node:child_process";
import { after, before, test } from "node:test";

import { Api } from "../src/api.js";
import { Point, fullCount } from "../src/exactcross.js";
import {
  applyPositions,
  autoArrange,
  buildState,
  clientCrossingCount,
  clientViolationCount,
  hint,
  loadPlan,
  lockHint,
  newLevel,
  planFace,
  planLength,
} from "../src/state.js";

let server: ChildProcess;
let api: Api;

before(async () => {
  server = spawn("python3", ["-m", "arrangeline.cli", "serve", "--port", "0"],
    { cwd: "..", stdio: ["ignore", "pipe", "inherit"] });
  const url = await new Promise<string>((resolve, reject) => {
    let buf = "";
    server.stdout!.on("data", (chunk: Buffer) => {
      buf += chunk.toString();
      const m = buf.match(/listening on (http:\/\/[^/\s]+)\//);
      if (m) resolve(m[1]);
    });
    server.on("exit", (code) => reject(new Error(`server exited early: ${code}`)));
    setTimeout(() => reject(new Error("server did not start within 30s")), 30000);
  });
  api = new Api(url);
});

after(() => {
  server.kill();
});

test("level i has (i+3)(i+2)/2 vertices", async () => {
  for (const i of [1, 2, 3, 4]) {
    const st = await newLevel(api, i, 7);
    assert.equal(st.graph.n, ((i + 3) * (i + 2)) / 2);
    assert.equal(st.positions.size, st.graph.n);
  }
});

test("same level and seed produce the identical initial layout", async () => {
  const a = await newLevel(api, 2, 11);
  const b = await newLevel(api, 2, 11);
  assert.deepEqual([...a.positions.entries()], [...b.positions.entries()]);
  assert.deepEqual(a.graph.edges, b.graph.edges);
});

test("auto-arrange ends with zero crossings on client and server", async () => {
  for (const [i, seed] of [[1, 3], [3, 5], [4, 1]] as const) {
    const st = await newLevel(api, i, seed);
    const targets = await autoArrange(api, st);
    applyPositions(st, targets);
    assert.equal(clientCrossingCount(st), 0, `client count, level ${i}`);
    assert.equal(clientViolationCount(st), 0, `client violations, level ${i}`);
    const report = await api.check(st.positions, st.graph.edges);
    assert.equal(report.crossingCount, 0, `server count, level ${i}`);
    assert.equal(report.vertexHitCount, 0, `server hits, level ${i}`);
  }
});

test("auto-arrange of a level-4 puzzle lands on six distinct rows", async () => {
  const st = await newLevel(api, 4, 2);   // 7 lines
  const targets = await autoArrange(api, st);
  const ys = new Set([...targets.values()].map(([, y]) => y));
  assert.equal(ys.size, 6);
});

test("hint sequence equals the server solve plan", async () => {
  const st = await newLevel(api, 3, 9);
  await loadPlan(api, st);
  const plan = st.solvePlan!;
  const l = st.l;
  assert.equal(plan.ears.length, ((l - 1) * (l - 2)) / 2 - 1);
  const seen: number[][] = [];
  for (let h = hint(st); h !== null; h = hint(st)) {
    seen.push(h);
    lockHint(st);
  }
  assert.equal(seen.length, planLength(plan));
  seen.forEach((cycle, i) => assert.deepEqual(cycle, planFace(plan, i)));
  assert.deepEqual(seen[0], plan.initialCycle);
});

test("client and server crossing counts agree on 50 random layouts", async () => {
  const st = await newLevel(api, 2, 4);
  let s = 987654321;
  const rand = () => {
    s = (s * 1103515245 + 12345) % 2147483648;
    return s / 2147483648;
  };
  for (let trial = 0; trial < 50; trial++) {
    const layout = new Map<number, Point>();
    for (let v = 0; v < st.graph.n; v++) layout.set(v, [rand(), rand()]);
    const client = fullCount(layout, st.graph.edges);
    const report = await api.check(layout, st.graph.edges);
    assert.equal(client.badPairs.size, report.crossingCount, `trial ${trial}`);
    assert.equal(client.vertexHits.size, report.vertexHitCount, `trial ${trial}`);
  }
});
