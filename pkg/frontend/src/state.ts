/**
 * Explorer view state and the controller driving it.
 *
 * The UI never mutates a quiver locally: every action round-trips through
 * the server and the returned session state replaces the view wholesale.
 * The breadcrumb mirrors the server's effective mutation path; a failed
 * action surfaces as a toast and leaves the state untouched.
 */

import { ApiError, Client, MutateMode, SessionState } from "./api.js";

export interface ViewState {
  session: SessionState | null;
  mode: MutateMode;
  breadcrumb: string[];
  toast: string | null;
  busy: boolean;
  error: string | null;
}

export function initialViewState(): ViewState {
  return { session: null, mode: "quiver", breadcrumb: [], toast: null, busy: false, error: null };
}

/** Text for the acyclicity badge, in order of strength. */
export function badgeText(session: SessionState | null): string {
  if (!session) return "no session";
  if (session.acyclic) return "acyclic";
  if (session.two_acyclic) return "2-acyclic";
  return "not 2-acyclic";
}

export function validateBuilderParams(
  kind: string,
  raw: { weights?: string; lambda?: string },
): { ok: true; params: Record<string, unknown> } | { ok: false; message: string } {
  if (kind === "five-vertex") return { ok: true, params: {} };
  if (kind === "q2222") {
    const lambda = (raw.lambda ?? "L").trim();
    if (!lambda) return { ok: false, message: "q2222 needs a parameter (L or a rational)" };
    return { ok: true, params: { lambda } };
  }
  const weights = (raw.weights ?? "").trim();
  if (!weights) return { ok: false, message: `${kind} needs a comma-separated weight list` };
  const parts = weights.split(",").map((w) => Number(w.trim()));
  if (parts.some((w) => !Number.isInteger(w) || w < 1)) {
    return { ok: false, message: `bad weight list: ${weights}` };
  }
  if (kind === "ct" && parts.length !== 3) {
    return { ok: false, message: "ct needs exactly three weights" };
  }
  return { ok: true, params: { weights: parts } };
}

export class Explorer {
  state: ViewState = initialViewState();

  constructor(
    private client: Client,
    private onChange: (state: ViewState) => void = () => {},
  ) {}

  private emit(): void {
    this.onChange(this.state);
  }

  private accept(session: SessionState): void {
    this.state = {
      ...this.state,
      session,
      breadcrumb: [...session.history],
      toast: null,
      busy: false,
      error: null,
    };
    this.emit();
  }

  private fail(err: unknown): void {
    const message = err instanceof Error ? err.message : String(err);
    if (err instanceof ApiError && err.status === 409) {
      // illegal action: keep the state, surface a toast
      this.state = { ...this.state, toast: message, busy: false };
    } else {
      this.state = { ...this.state, error: message, busy: false };
    }
    this.emit();
  }

  setMode(mode: MutateMode): void {
    this.state = { ...this.state, mode };
    this.emit();
  }

  async loadBuilder(kind: string, params?: Record<string, unknown>): Promise<void> {
    this.state = { ...this.state, busy: true };
    this.emit();
    try {
      this.accept(await this.client.createSession(kind, params));
    } catch (err) {
      this.fail(err);
    }
  }

  async clickVertex(vertex: string): Promise<void> {
    const session = this.state.session;
    if (!session || this.state.busy) return;
    this.state = { ...this.state, busy: true };
    this.emit();
    try {
      this.accept(await this.client.mutate(session.id, vertex, this.state.mode));
    } catch (err) {
      this.fail(err);
    }
  }

  async undo(): Promise<void> {
    const session = this.state.session;
    if (!session || this.state.busy) return;
    this.state = { ...this.state, busy: true };
    this.emit();
    try {
      this.accept(await this.client.undo(session.id));
    } catch (err) {
      this.fail(err);
    }
  }
}
