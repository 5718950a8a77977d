// Typed client for the rule-set analysis service. Shapes mirror the
// service JSON exactly; nothing here interprets the data.

export interface Cell {
  lo: number;
  hi: number;
  elide: boolean;
}

export interface TableData {
  columns: string[];
  maxima: number[];
  rows: Cell[][];
}

export interface SessionInfo {
  session: string;
  variables: number;
  widths: [number, number, number];
}

export interface LoadInfo {
  session: string;
  slot: string;
  rules: number;
  variables: number;
  node_count: number;
  compile_seconds: number;
}

export interface QueryRequest {
  slot: "old" | "new";
  where?: string;
  order?: string[];
  summary?: string[];
  not_allowed?: boolean;
  budget?: number;
}

export interface QueryResult {
  slot: string;
  table: TableData;
  rows: number;
  elapsed_seconds: number;
}

export interface DiffResult {
  equivalent: boolean;
  now_allowed: TableData;
  now_denied: TableData;
}

export interface RedundantResult {
  slot: string;
  indexes: number[];
  rules: string[];
  lines: number[];
}

export interface StatsResult {
  slot: string;
  rules: number;
  variables: number;
  node_count: number;
  max_depth: number;
  packets: string; // decimal string, exceeds JS safe integers
}

export interface LineError {
  line: number;
  message: string;
}

export class ApiError extends Error {
  constructor(
    readonly code: string,
    message: string,
    readonly line?: number,
    readonly errors?: LineError[],
  ) {
    super(message);
    this.name = "ApiError";
  }
}

export class Client {
  constructor(readonly base: string = "") {}

  private async send<T>(method: string, path: string, body?: unknown): Promise<T> {
    const init: RequestInit = { method };
    if (body !== undefined) {
      init.headers = { "Content-Type": "application/json" };
      init.body = JSON.stringify(body);
    }
    const resp = await fetch(this.base + path, init);
    const data = await resp.json();
    if (!resp.ok) {
      throw new ApiError(
        data.code ?? "error",
        data.message ?? `HTTP ${resp.status}`,
        data.line,
        data.errors,
      );
    }
    return data as T;
  }

  createSession(opts: { widths?: [number, number, number]; order?: string[] } = {}): Promise<SessionInfo> {
    return this.send("POST", "/sessions", opts);
  }

  loadRuleset(session: string, slot: "old" | "new", text: string): Promise<LoadInfo> {
    return this.send("PUT", `/sessions/${session}/rulesets/${slot}`, { text });
  }

  query(session: string, req: QueryRequest): Promise<QueryResult> {
    return this.send("POST", `/sessions/${session}/query`, req);
  }

  diff(session: string, order?: string[]): Promise<DiffResult> {
    return this.send("POST", `/sessions/${session}/diff`, order ? { order } : {});
  }

  redundant(session: string, slot: "old" | "new"): Promise<RedundantResult> {
    return this.send("GET", `/sessions/${session}/redundant?slot=${slot}`);
  }

  stats(session: string, slot: "old" | "new"): Promise<StatsResult> {
    return this.send("GET", `/sessions/${session}/stats?slot=${slot}`);
  }
}
