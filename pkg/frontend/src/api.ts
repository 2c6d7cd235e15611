/**
 * Typed client for the qpcat session API. The server is the single source
 * of truth: every call returns the full session state it now holds.
 */

export interface ArrowJson {
  id: string;
  src: string;
  tgt: string;
}

export interface QuiverJson {
  vertices: string[];
  arrows: ArrowJson[];
}

export interface CycleJson {
  coef: string;
  word: string[];
}

export interface QpJson {
  quiver: QuiverJson;
  potential: { cycles: CycleJson[] };
}

export interface DimsReport {
  dims: number[];
  stabilized_at: number | null;
  total: number | null;
}

export interface LogEntry {
  op: "mutate" | "undo";
  vertex?: string;
  mode?: string;
}

export interface SessionState {
  id: string;
  qp: QpJson;
  two_acyclic: boolean;
  acyclic: boolean;
  truncation: number;
  layout: Record<string, [number, number]>;
  history: string[];
  log: LogEntry[];
  undo_depth: number;
  dims?: DimsReport;
  potential_text?: string;
}

export interface BuilderInfo {
  kind: string;
  params: string[];
}

export type MutateMode = "quiver" | "qp";

export class ApiError extends Error {
  constructor(public status: number, message: string) {
    super(message);
  }
}

async function decode<T>(res: Response): Promise<T> {
  const body = await res.json().catch(() => ({}));
  if (!res.ok) {
    throw new ApiError(res.status, (body as { error?: string }).error ?? res.statusText);
  }
  return body as T;
}

export class Client {
  constructor(private base: string) {}

  async builders(): Promise<BuilderInfo[]> {
    const res = await fetch(`${this.base}/builders`);
    const data = await decode<{ builders: BuilderInfo[] }>(res);
    return data.builders;
  }

  async createSession(
    builder: string,
    params?: Record<string, unknown>,
    truncation?: number,
  ): Promise<SessionState> {
    const res = await fetch(`${this.base}/session`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ builder, params: params ?? {}, truncation: truncation ?? 16 }),
    });
    return decode<SessionState>(res);
  }

  async getSession(id: string, verbose = false): Promise<SessionState> {
    const suffix = verbose ? "?verbose" : "";
    const res = await fetch(`${this.base}/session/${id}${suffix}`);
    return decode<SessionState>(res);
  }

  async mutate(id: string, vertex: string, mode: MutateMode): Promise<SessionState> {
    const res = await fetch(`${this.base}/session/${id}/mutate`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ vertex, mode }),
    });
    return decode<SessionState>(res);
  }

  async undo(id: string): Promise<SessionState> {
    const res = await fetch(`${this.base}/session/${id}/undo`, { method: "POST" });
    return decode<SessionState>(res);
  }

  async replay(id: string): Promise<QpJson> {
    const res = await fetch(`${this.base}/session/${id}/replay`, { method: "POST" });
    const data = await decode<{ current: QpJson }>(res);
    return data.current;
  }
}
