/** Session controller: owns the service conversation and the undo/redo
 * bookkeeping.  At most one request is in flight; actions arriving while
 * pending are dropped (the UI disables inputs, this is the backstop).
 * Redo is client-side: the service only knows undo, so redo replays the
 * recorded direction and takes the service's answer as truth. */

import { ServiceError, type ExplorerApi } from "./api.js";
import type { SessionPayload } from "./model.js";
import { buildSeedView, type SeedView } from "./viewmodel.js";

interface StepRecord {
  k: number;
  /** payload observed after this step; its C matrix feeds the tooltip */
  payload: SessionPayload;
}

export interface HistoryItemView {
  k: number;
  label: string;
  tooltipC: string[][];
}

export interface AppView {
  seed: SeedView | null;
  history: HistoryItemView[];
  canUndo: boolean;
  canRedo: boolean;
  pending: boolean;
  error: string | null;
}

function describe(e: unknown): string {
  if (e instanceof ServiceError) {
    return e.status > 0 ? `service error ${e.status}: ${e.message}` : e.message;
  }
  return String(e);
}

export class ExplorerApp {
  private session: SessionPayload | null = null;
  private steps: StepRecord[] = [];
  private redoStack: StepRecord[] = [];
  private pending = false;
  private error: string | null = null;

  constructor(private readonly api: ExplorerApi) {}

  get view(): AppView {
    return {
      seed: this.session === null ? null : buildSeedView(this.session),
      history: this.steps.map((s) => ({
        k: s.k,
        label: `μ${s.k}`,
        tooltipC: s.payload.C.map((row) => row.map(String)),
      })),
      canUndo: !this.pending && this.steps.length > 0,
      canRedo: !this.pending && this.redoStack.length > 0,
      pending: this.pending,
      error: this.error,
    };
  }

  async start(matrixText: string): Promise<void> {
    if (this.pending) return;
    let literal: unknown;
    try {
      literal = JSON.parse(matrixText);
    } catch (e) {
      this.error = `matrix is not valid JSON: ${(e as Error).message}`;
      return;
    }
    await this.run(async () => {
      const payload = await this.api.createSession(literal);
      this.session = payload;
      this.steps = [];
      this.redoStack = [];
    });
  }

  async mutate(k: number): Promise<void> {
    if (this.pending || this.session === null) return;
    await this.run(async () => {
      const payload = await this.api.mutate(this.session!.id, k);
      this.steps.push({ k, payload });
      this.redoStack = [];
      this.session = payload;
    });
  }

  async undo(): Promise<void> {
    if (this.pending || this.session === null || this.steps.length === 0) return;
    await this.run(async () => {
      const payload = await this.api.undo(this.session!.id);
      this.redoStack.push(this.steps.pop()!);
      this.session = payload;
    });
  }

  async redo(): Promise<void> {
    if (this.pending || this.session === null || this.redoStack.length === 0) return;
    const k = this.redoStack[this.redoStack.length - 1]!.k;
    await this.run(async () => {
      const payload = await this.api.mutate(this.session!.id, k);
      this.redoStack.pop();
      this.steps.push({ k, payload });
      this.session = payload;
    });
  }

  /** Wraps one service call: flags pending, clears the error on success,
   * shows it and leaves all other state untouched on failure. */
  private async run(action: () => Promise<void>): Promise<void> {
    this.pending = true;
    try {
      await action();
      this.error = null;
    } catch (e) {
      this.error = describe(e);
    } finally {
      this.pending = false;
    }
  }
}
