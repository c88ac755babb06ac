import type { HistoryResponse, SessionPayload } from "./model.js";

/** Raised for any non-2xx service response; carries the HTTP status and
 * the service's detail message so the UI can show it inline. */
export class ServiceError extends Error {
  constructor(readonly status: number, detail: string) {
    super(detail);
    this.name = "ServiceError";
  }
}

export interface ExplorerApi {
  createSession(literal: unknown): Promise<SessionPayload>;
  getSession(id: string): Promise<SessionPayload>;
  mutate(id: string, k: number): Promise<SessionPayload>;
  undo(id: string): Promise<SessionPayload>;
  history(id: string): Promise<HistoryResponse>;
}

type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class HttpApi implements ExplorerApi {
  constructor(
    private readonly base: string,
    private readonly fetchFn: FetchLike = (input, init) => fetch(input, init),
  ) {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    let res: Response;
    try {
      res = await this.fetchFn(this.base + path, init);
    } catch (e) {
      throw new ServiceError(0, `service unreachable: ${String(e)}`);
    }
    const text = await res.text();
    if (!res.ok) {
      let detail = text;
      try {
        const body = JSON.parse(text);
        if (typeof body?.detail === "string") detail = body.detail;
      } catch {
        /* plain-text error body */
      }
      throw new ServiceError(res.status, detail);
    }
    return JSON.parse(text) as T;
  }

  private post<T>(path: string, body?: unknown): Promise<T> {
    return this.request<T>(path, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: body === undefined ? undefined : JSON.stringify(body),
    });
  }

  createSession(literal: unknown): Promise<SessionPayload> {
    return this.post("/sessions", literal);
  }

  getSession(id: string): Promise<SessionPayload> {
    return this.request(`/sessions/${id}`);
  }

  mutate(id: string, k: number): Promise<SessionPayload> {
    return this.post(`/sessions/${id}/mutate`, { k });
  }

  undo(id: string): Promise<SessionPayload> {
    return this.post(`/sessions/${id}/undo`);
  }

  history(id: string): Promise<HistoryResponse> {
    return this.request(`/sessions/${id}/history`);
  }
}
