import { vi } from "vitest";

export interface RecordedCall {
  method: string;
  path: string;
  body: unknown;
}

export interface ScriptedResponse {
  status?: number;
  json: unknown;
}

// Replace fetch with a scripted double: responses are served in order
// and every request is recorded for assertions.
export function mockFetch(script: ScriptedResponse[]): RecordedCall[] {
  const calls: RecordedCall[] = [];
  vi.stubGlobal(
    "fetch",
    vi.fn(async (input: RequestInfo | URL, init?: RequestInit) => {
      calls.push({
        method: init?.method ?? "GET",
        path: String(input),
        body: init?.body ? JSON.parse(init.body as string) : undefined,
      });
      const next = script.shift();
      if (!next) throw new Error(`unscripted fetch: ${String(input)}`);
      return new Response(JSON.stringify(next.json), {
        status: next.status ?? 200,
        headers: { "Content-Type": "application/json" },
      });
    }),
  );
  return calls;
}

// Like mockFetch but responses resolve only when the test says so,
// for exercising out-of-order completion.
export function deferredFetch(): {
  calls: RecordedCall[];
  settle: (index: number, response: ScriptedResponse) => void;
} {
  const calls: RecordedCall[] = [];
  const waiters: Array<(r: Response) => void> = [];
  vi.stubGlobal(
    "fetch",
    vi.fn((input: RequestInfo | URL, init?: RequestInit) => {
      calls.push({
        method: init?.method ?? "GET",
        path: String(input),
        body: init?.body ? JSON.parse(init.body as string) : undefined,
      });
      return new Promise<Response>((resolve) => waiters.push(resolve));
    }),
  );
  return {
    calls,
    settle: (index, response) => {
      const resolve = waiters[index];
      if (!resolve) throw new Error(`no pending fetch #${index}`);
      resolve(
        new Response(JSON.stringify(response.json), {
          status: response.status ?? 200,
          headers: { "Content-Type": "application/json" },
        }),
      );
    },
  };
}

// Let queued promise reactions and timers run.
export function flush(): Promise<void> {
  return new Promise((resolve) => setTimeout(resolve, 0));
}
