import { AuthClient } from "./api";
import { PointerAccumulator } from "./pointer";
import { Scene, buildScene } from "./scene";
import type { BoardView, FinalResult } from "./types";

export type Phase = "idle" | "entering" | "done";

export interface AppSnapshot {
  phase: Phase;
  scene: Scene | null;
  asterisks: number;
  k: number;
  result: FinalResult | null;
  /** generic, non-revealing message for the user */
  message: string | null;
}

/**
 * Login controller: owns the session token and current view, serializes
 * service requests (at most one in flight; pointer orders are queued), and
 * exposes a render snapshot. DOM and canvas concerns live in main.ts.
 */
export class LoginApp {
  private token: string | null = null;
  private view: BoardView | null = null;
  private k = 0;
  private result: FinalResult | null = null;
  private message: string | null = null;
  private pointer: PointerAccumulator | null = null;
  private queue: [number, number][] = [];
  private inFlight = false;

  constructor(
    private readonly client: AuthClient,
    private readonly onChange: (snap: AppSnapshot) => void = () => {},
  ) {}

  snapshot(): AppSnapshot {
    return {
      phase: this.token ? "entering" : this.result ? "done" : "idle",
      scene: this.view ? buildScene(this.view) : null,
      asterisks: this.view?.entered ?? 0,
      k: this.k,
      result: this.result,
      message: this.message,
    };
  }

  private emit(): void {
    this.onChange(this.snapshot());
  }

  async open(userId: string, cellWidth: number, cellHeight: number): Promise<void> {
    this.result = null;
    this.message = null;
    const res = await this.client.openSession(userId);
    this.token = res.token;
    this.view = res.board_view;
    this.k = res.k;
    this.pointer = new PointerAccumulator(cellWidth, cellHeight);
    this.emit();
  }

  /** Drag anywhere on the surface controls the moveable board. */
  drag(dxPixels: number, dyPixels: number): void {
    if (!this.token || !this.pointer) return; // guard: no session, no request
    this.queue.push(...this.pointer.add(dxPixels, dyPixels));
    void this.pump();
  }

  private async pump(): Promise<void> {
    if (this.inFlight || !this.token) return;
    const delta = this.queue.shift();
    if (!delta) return;
    this.inFlight = true;
    try {
      const res = await this.client.move(this.token, { kind: "relative", delta });
      this.view = res.board_view;
      this.emit();
    } catch {
      this.message = "connection problem, try again";
      this.emit();
    } finally {
      this.inFlight = false;
      void this.pump();
    }
  }

  async commitGesture(): Promise<void> {
    if (!this.token || this.inFlight) return;
    this.inFlight = true;
    try {
      const res = await this.client.commit(this.token);
      this.view = res.board_view;
      this.pointer?.reset();
    } catch {
      this.message = "could not confirm the entry";
    } finally {
      this.inFlight = false;
    }
    this.emit();
  }

  async resetGesture(): Promise<void> {
    if (!this.token || this.inFlight) return;
    this.inFlight = true;
    try {
      const res = await this.client.reset(this.token);
      this.view = res.board_view;
    } catch {
      this.message = "nothing to reset";
    } finally {
      this.inFlight = false;
    }
    this.emit();
  }

  async validateGesture(): Promise<void> {
    if (!this.token || this.inFlight) return;
    this.inFlight = true;
    try {
      const res = await this.client.finalize(this.token);
      this.result = res.result;
      this.token = null;
      this.view = null;
    } catch {
      this.message = "login could not be completed";
    } finally {
      this.inFlight = false;
    }
    this.emit();
  }
}
