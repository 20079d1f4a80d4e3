// Typed client for the tracekg service. Responses race: every request
// carries a sequence number per channel, and a response that was
// overtaken by a newer request on the same channel resolves to null so
// callers drop it instead of rendering stale state.

import type {
  CoAttendeeRow,
  IntersectionRow,
  NeighborhoodResponse,
  RiskAssignment,
} from "./types.js";

export class ApiFailure extends Error {
  readonly code: string;
  constructor(code: string, message: string) {
    super(message);
    this.code = code;
  }
}

type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class ApiClient {
  private readonly base: string;
  private readonly fetchImpl: FetchLike;
  private readonly sequences = new Map<string, number>();

  constructor(base = "", fetchImpl: FetchLike = (...args) => fetch(...args)) {
    this.base = base.replace(/\/$/, "");
    this.fetchImpl = fetchImpl;
  }

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await this.fetchImpl(this.base + path, init);
    const text = await response.text();
    let body: unknown = null;
    try {
      body = text ? JSON.parse(text) : null;
    } catch {
      body = null;
    }
    if (!response.ok) {
      const error = (body as { error?: { code?: string; message?: string } } | null)?.error;
      throw new ApiFailure(error?.code ?? "http-error", error?.message ?? `HTTP ${response.status}`);
    }
    return body as T;
  }

  /** Run a request on a named channel; stale responses resolve to null. */
  private async latest<T>(channel: string, run: () => Promise<T>): Promise<T | null> {
    const seq = (this.sequences.get(channel) ?? 0) + 1;
    this.sequences.set(channel, seq);
    const result = await run();
    return this.sequences.get(channel) === seq ? result : null;
  }

  neighborhood(center: string, depth = 1, limit = 50): Promise<NeighborhoodResponse> {
    const params = new URLSearchParams({
      center,
      depth: String(depth),
      limit: String(limit),
    });
    return this.request(`/graph/neighborhood?${params}`);
  }

  coAttendees(person: string, risk: string): Promise<CoAttendeeRow[] | null> {
    const params = new URLSearchParams({ person, risk });
    return this.latest("co-attendees", async () => {
      const body = await this.request<{ results: CoAttendeeRow[] }>(
        `/queries/co-attendees?${params}`,
      );
      return body.results;
    });
  }

  intersections(filters: {
    place?: string;
    city?: string;
    begin?: string;
    end?: string;
  } = {}): Promise<IntersectionRow[] | null> {
    const params = new URLSearchParams();
    for (const [key, value] of Object.entries(filters)) {
      if (value) params.set(key, value);
    }
    const query = params.toString();
    return this.latest("intersections", async () => {
      const body = await this.request<{ results: IntersectionRow[] }>(
        `/queries/intersections${query ? `?${query}` : ""}`,
      );
      return body.results;
    });
  }

  risk(entity: string): Promise<RiskAssignment> {
    return this.request(`/events/${encodeURIComponent(entity)}/risk`);
  }

  health(): Promise<{ status: string; triples: number; reasoned: boolean }> {
    return this.request("/health");
  }

  reason(): Promise<Record<string, unknown>> {
    return this.request("/reason", { method: "POST" });
  }
}
