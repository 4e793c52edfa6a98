/** Typed client for the session-service API; every view consumes it exclusively. */

import type {
  AddStatementResponse,
  DiagnoseResponse,
  ErrorBody,
  ExtremeRanksResponse,
  HasseResponse,
  MatrixResponse,
  ProblemSpec,
  SessionSummary,
  SortingResponse,
  SortingSpec,
  StatementIn,
  SweepResponse,
} from "./types.js";

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export class ApiError extends Error {
  readonly code: string;
  readonly status: number;
  readonly details: unknown;

  constructor(status: number, body: ErrorBody) {
    super(body.message);
    this.code = body.code;
    this.status = status;
    this.details = body.details;
  }
}

export interface RelationQuery {
  family: "necessary" | "possible";
  index: string; // classic | strong | weak | "i,k"
}

export interface GroupQuery extends RelationQuery {
  outer: "N" | "P";
  inner: "N" | "P";
  dms: string[];
}

function query(params: Record<string, string | number | boolean | undefined>): string {
  const pairs = Object.entries(params).filter(([, v]) => v !== undefined);
  if (pairs.length === 0) return "";
  const search = new URLSearchParams();
  for (const [key, value] of pairs) search.set(key, String(value));
  return `?${search.toString()}`;
}

export class ApiClient {
  constructor(
    private readonly baseUrl: string = "",
    private readonly fetchFn: FetchLike = (url, init) => fetch(url, init),
  ) {}

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    const init: RequestInit = { method, headers: { "content-type": "application/json" } };
    if (body !== undefined) init.body = JSON.stringify(body);
    const response = await this.fetchFn(this.baseUrl + path, init);
    if (!response.ok) {
      let parsed: ErrorBody;
      try {
        parsed = (await response.json()) as ErrorBody;
      } catch {
        parsed = { code: "error", message: `HTTP ${response.status}` };
      }
      throw new ApiError(response.status, parsed);
    }
    return (await response.json()) as T;
  }

  createProblem(problem: ProblemSpec): Promise<SessionSummary> {
    return this.request("POST", "/problems", problem);
  }

  getSession(id: string): Promise<SessionSummary> {
    return this.request("GET", `/sessions/${id}`);
  }

  addStatement(id: string, statement: StatementIn): Promise<AddStatementResponse> {
    return this.request("POST", `/sessions/${id}/statements`, statement);
  }

  revert(id: string, version: number): Promise<{ version: number }> {
    return this.request("POST", `/sessions/${id}/revert`, { version });
  }

  getRelations(id: string, q: RelationQuery): Promise<MatrixResponse> {
    return this.request("GET", `/sessions/${id}/relations${query(q as never)}`);
  }

  getHasse(id: string, q: RelationQuery): Promise<HasseResponse> {
    return this.request("GET", `/sessions/${id}/hasse${query(q as never)}`);
  }

  getGroup(id: string, q: GroupQuery): Promise<MatrixResponse> {
    const { dms, ...rest } = q;
    return this.request(
      "GET",
      `/sessions/${id}/group${query({ ...rest, dms: dms.join(",") })}`,
    );
  }

  getSweep(id: string, index: string): Promise<SweepResponse> {
    return this.request("GET", `/sessions/${id}/sweep${query({ index })}`);
  }

  setSorting(id: string, spec: SortingSpec): Promise<SessionSummary> {
    return this.request("POST", `/sessions/${id}/sorting`, spec);
  }

  getSorting(id: string, i?: number, k?: number): Promise<SortingResponse> {
    return this.request("GET", `/sessions/${id}/sorting${query({ i, k })}`);
  }

  getExtremeRanks(id: string, index: string): Promise<ExtremeRanksResponse> {
    return this.request("GET", `/sessions/${id}/extreme-ranks${query({ index })}`);
  }

  diagnose(id: string, maxSets = 10): Promise<DiagnoseResponse> {
    return this.request("GET", `/sessions/${id}/diagnose${query({ max_sets: maxSets })}`);
  }

  exportDotUrl(id: string, relation: string, index: string): string {
    return `${this.baseUrl}/sessions/${id}/export/dot${query({ relation, index })}`;
  }
}
