// Thin client for the session API. All layout mutations flow through
// here; the UI never edits geometry locally.

import {
  ActionDiff,
  ActionRequest,
  EntityJson,
  MetricsReport,
  SessionInfo,
} from "./types.js";

export class ApiError extends Error {
  constructor(public status: number, message: string) {
    super(message);
  }
}

export interface Api {
  generateScene(seed: number): Promise<string>;
  createSession(sceneId: string): Promise<{ sessionId: string; layout: EntityJson[] }>;
  getSession(sessionId: string): Promise<SessionInfo>;
  postAction(sessionId: string, action: ActionRequest): Promise<ActionDiff>;
  undo(sessionId: string): Promise<EntityJson[]>;
  getMetrics(sessionId: string): Promise<MetricsReport>;
}

async function request<T>(
  fetchFn: typeof fetch, url: string, init?: RequestInit,
): Promise<T> {
  const res = await fetchFn(url, init);
  if (!res.ok) {
    let detail = res.statusText;
    try {
      detail = (await res.json()).detail ?? detail;
    } catch {
      /* non-JSON error body */
    }
    throw new ApiError(res.status, detail);
  }
  return (await res.json()) as T;
}

export class HttpApi implements Api {
  constructor(
    private base: string = "",
    private fetchFn: typeof fetch = fetch.bind(globalThis),
  ) {}

  private post<T>(path: string, body: unknown): Promise<T> {
    return request<T>(this.fetchFn, this.base + path, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(body),
    });
  }

  async generateScene(seed: number): Promise<string> {
    const out = await this.post<{ scene_id: string }>("/api/scenes/generate", { seed });
    return out.scene_id;
  }

  async createSession(sceneId: string) {
    const out = await this.post<{ session_id: string; layout: EntityJson[] }>(
      "/api/sessions", { scene_id: sceneId },
    );
    return { sessionId: out.session_id, layout: out.layout };
  }

  getSession(sessionId: string): Promise<SessionInfo> {
    return request<SessionInfo>(this.fetchFn, `${this.base}/api/sessions/${sessionId}`);
  }

  postAction(sessionId: string, action: ActionRequest): Promise<ActionDiff> {
    return this.post<ActionDiff>(`/api/sessions/${sessionId}/actions`, action);
  }

  async undo(sessionId: string): Promise<EntityJson[]> {
    const out = await this.post<{ layout: EntityJson[] }>(
      `/api/sessions/${sessionId}/undo`, {},
    );
    return out.layout;
  }

  getMetrics(sessionId: string): Promise<MetricsReport> {
    return request<MetricsReport>(
      this.fetchFn, `${this.base}/api/sessions/${sessionId}/metrics`,
    );
  }
}
