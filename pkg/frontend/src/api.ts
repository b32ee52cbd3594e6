import type { BoardView, FinalResult, MoveOrder, OpenSessionResponse } from "./types";

export class ApiError extends Error {
  constructor(
    public readonly status: number,
    public readonly detail: string,
  ) {
    super(`${status}: ${detail}`);
  }
}

async function post<T>(url: string, body: unknown): Promise<T> {
  const res = await fetch(url, {
    method: "POST",
    headers: { "content-type": "application/json" },
    body: JSON.stringify(body),
  });
  const data = await res.json().catch(() => ({}));
  if (!res.ok) {
    throw new ApiError(res.status, (data as { detail?: string }).detail ?? "request failed");
  }
  return data as T;
}

export class AuthClient {
  constructor(private readonly baseUrl: string) {}

  createUser(body: {
    user_id: string;
    mode: string;
    board: string;
    credentials?: { id_password: string[]; ui_password: string[] };
    profile?: { bank: unknown; answers: number[] };
  }): Promise<unknown> {
    return post(`${this.baseUrl}/users`, body);
  }

  openSession(userId: string): Promise<OpenSessionResponse> {
    return post(`${this.baseUrl}/sessions`, { user_id: userId });
  }

  move(token: string, order: MoveOrder): Promise<{ board_view: BoardView }> {
    return post(`${this.baseUrl}/sessions/${token}/move`, order);
  }

  commit(token: string): Promise<{ entered: number; board_view: BoardView }> {
    return post(`${this.baseUrl}/sessions/${token}/commit`, {});
  }

  reset(token: string): Promise<{ entered: number; board_view: BoardView }> {
    return post(`${this.baseUrl}/sessions/${token}/reset`, {});
  }

  finalize(token: string): Promise<{ result: FinalResult }> {
    return post(`${this.baseUrl}/sessions/${token}/finalize`, {});
  }
}
