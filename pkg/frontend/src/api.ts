// Typed client for the arrangeline HTTP API.  One in-flight request per
// action slot: starting a new call in a slot aborts the previous one.

export interface GraphJson {
  n: number;
  edges: readonly (readonly [number, number])[];
}

export interface GeneratedLevel {
  level: number;
  l: number;
  seed: number;
  n: number;
  m: number;
  graph: GraphJson;
  layout: Record<string, [number, number]>;
}

export interface DrawingJson {
  width: number;
  height: number;
  positions: Record<string, [number, number]>;
  edges: [number, number][];
}

export interface EarJson {
  u: number;
  v: number;
  P: number[];
  S: number[];
}

export interface SolvePlan {
  initialCycle: number[];
  ears: EarJson[];
}

export interface CheckReport {
  snapGrid: number;
  crossingCount: number;
  crossings: [number, number][];
  vertexHitCount: number;
  vertexHits: [number, number][];
}

export interface ApiErrorBody {
  code: string;
  message: string;
  witness?: unknown;
}

export class ApiError extends Error {
  constructor(public status: number, public body: ApiErrorBody) {
    super(`${body.code}: ${body.message}`);
  }
}

export class Api {
  private controllers = new Map<string, AbortController>();

  constructor(public baseUrl: string = "") {}

  private async request<T>(slot: string, path: string, init?: RequestInit): Promise<T> {
    this.controllers.get(slot)?.abort();
    const controller = new AbortController();
    this.controllers.set(slot, controller);
    const resp = await fetch(this.baseUrl + path, { ...init, signal: controller.signal });
    const body = await resp.json();
    if (!resp.ok) throw new ApiError(resp.status, body as ApiErrorBody);
    return body as T;
  }

  private post<T>(slot: string, path: string, payload: unknown): Promise<T> {
    return this.request<T>(slot, path, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(payload),
    });
  }

  generate(level: number, seed: number): Promise<GeneratedLevel> {
    return this.request("generate", `/api/generate?level=${level}&seed=${seed}`);
  }

  draw(graph: GraphJson, optimizeCuts = true): Promise<DrawingJson> {
    return this.post("draw", "/api/draw", { graph, optimizeCuts });
  }

  solvePlan(graph: GraphJson, start?: number): Promise<SolvePlan> {
    return this.post("solve", "/api/solve-plan",
      start === undefined ? { graph } : { graph, start });
  }

  check(positions: Map<number, readonly [number, number]>,
        edges: readonly (readonly [number, number])[]): Promise<CheckReport> {
    const pos: Record<string, [number, number]> = {};
    for (const [v, p] of positions) pos[String(v)] = [p[0], p[1]];
    return this.post("check", "/api/check", { positions: pos, edges });
  }
}
