import type { StateResponse, StepResponse } from "./types.js";

export class ApiError extends Error {
  constructor(
    public status: number,
    message: string,
  ) {
    super(message);
  }
}

async function request<T>(path: string, init?: RequestInit): Promise<T> {
  const response = await fetch(path, {
    headers: { "Content-Type": "application/json" },
    ...init,
  });
  const body = await response.json();
  if (!response.ok) {
    throw new ApiError(response.status, body.error ?? response.statusText);
  }
  return body as T;
}

export interface EventBody {
  causer: number | string;
  target: number | string;
  utility?: number;
  type?: string;
}

/** Thin typed wrapper over the session API; one instance per session. */
export class SessionClient {
  constructor(
    public readonly sessionId: string,
    private readonly base = "/api",
  ) {}

  static async create(
    agents: number | string[],
    typeTable?: Record<string, number>,
    base = "/api",
  ): Promise<{ client: SessionClient; state: StateResponse }> {
    const state = await request<StateResponse>(`${base}/sessions`, {
      method: "POST",
      body: JSON.stringify({ agents, type_table: typeTable }),
    });
    return { client: new SessionClient(state.session_id, base), state };
  }

  getState(): Promise<StateResponse> {
    return request(`${this.base}/sessions/${this.sessionId}`);
  }

  postEvent(body: EventBody): Promise<StepResponse> {
    return request(`${this.base}/sessions/${this.sessionId}/events`, {
      method: "POST",
      body: JSON.stringify(body),
    });
  }

  previewEvent(body: EventBody): Promise<StepResponse> {
    return request(`${this.base}/sessions/${this.sessionId}/preview`, {
      method: "POST",
      body: JSON.stringify(body),
    });
  }

  undo(): Promise<StateResponse> {
    return request(`${this.base}/sessions/${this.sessionId}/undo`, {
      method: "POST",
    });
  }

  getTrace(): Promise<import("./board.js").TraceDoc> {
    return request(`${this.base}/sessions/${this.sessionId}/trace`);
  }
}
