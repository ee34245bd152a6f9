// Session protocol client: newline-delimited JSON requests/responses with
// echoed ids. At most one request is in flight per session; later calls
// queue so responses always apply in order.

export interface PlacementDoc {
  piece: string;
  rot: 0 | 90 | 180 | 270;
  flip: boolean;
  anchor: [number, number];
}

export interface ConfigDoc {
  schemaVersion: number;
  board: { width: number; height: number };
  pieceSet: string;
  placements: PlacementDoc[];
}

export interface Violation {
  kind: string;
  detail: string;
  piece?: string;
}

export interface ValidateResult {
  valid: boolean;
  violations: Violation[];
  area: number;
  holeCount: number;
  fenceConnected: boolean;
  grid: string[];
}

export interface GameStateResult {
  config: ConfigDoc;
  grid: string[];
  area: number;
  currentPlayer: number;
  movesRemaining: number[];
  players: number;
  mode: string;
  terminal: boolean;
  bestSoFar: number;
  moves: number;
  finalScore?: number;
  budgets?: number[];
}

export interface SessionErrorBody {
  code: string;
  message: string;
}

export class SessionError extends Error {
  constructor(readonly code: string, message: string) {
    super(message);
  }
}

export interface Transport {
  send(line: string): void;
  onLine(handler: (line: string) => void): void;
  onClose?(handler: () => void): void;
  close(): void;
}

interface Pending {
  id: string;
  resolve: (value: unknown) => void;
  reject: (err: Error) => void;
}

export class SessionClient {
  down = false;

  private nextId = 0;
  private inFlight: Pending | null = null;
  private queue: Array<{ line: string; pending: Pending }> = [];

  constructor(private readonly transport: Transport) {
    transport.onLine((line) => this.handleLine(line));
    transport.onClose?.(() => this.handleDown());
  }

  request<T = unknown>(op: string, args: Record<string, unknown> = {}): Promise<T> {
    if (this.down) {
      return Promise.reject(new SessionError("transport-down", "connection lost"));
    }
    const id = `ui-${++this.nextId}`;
    const line = JSON.stringify({ id, op, args });
    return new Promise<T>((resolve, reject) => {
      const pending = { id, resolve: resolve as (v: unknown) => void, reject };
      this.queue.push({ line, pending });
      this.pump();
    });
  }

  private handleDown(): void {
    this.down = true;
    const stranded = [this.inFlight, ...this.queue.map((q) => q.pending)];
    this.inFlight = null;
    this.queue = [];
    for (const pending of stranded) {
      pending?.reject(new SessionError("transport-down", "connection lost"));
    }
  }

  private pump(): void {
    if (this.inFlight || this.queue.length === 0) return;
    const next = this.queue.shift()!;
    this.inFlight = next.pending;
    this.transport.send(next.line);
  }

  private handleLine(line: string): void {
    if (!line.trim()) return;
    const response = JSON.parse(line);
    const pending = this.inFlight;
    if (!pending || response.id !== pending.id) {
      // a response we did not ask for; the server never reorders, so drop it
      return;
    }
    this.inFlight = null;
    if (response.ok) {
      pending.resolve(response.result);
    } else {
      const err: SessionErrorBody = response.error ?? {
        code: "bad-request",
        message: "malformed response",
      };
      pending.reject(new SessionError(err.code, err.message));
    }
    this.pump();
  }

  close(): void {
    this.transport.close();
  }
}
