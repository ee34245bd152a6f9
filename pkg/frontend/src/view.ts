// Board view state. Everything about fence semantics (validity, areas,
// even the rendered grid) comes from the server; this module only tracks
// selection, the pending transform, and the panels.
import {
  ConfigDoc,
  GameStateResult,
  PlacementDoc,
  SessionClient,
  SessionError,
  ValidateResult,
} from "./protocol.js";

export type Rotation = 0 | 90 | 180 | 270;

export interface PendingPlacement {
  piece: string;
  rot: Rotation;
  flip: boolean;
  anchor: [number, number];
}

export interface PreviewVerdict {
  ok: boolean;
  area: number;
  violations: string[];
  grid: string[];
}

export interface ScorePanel {
  area: number;
  bestSoFar: number;
  band: "none" | "good" | "excellent" | "exceptional" | "maximum";
}

export interface TurnPanel {
  currentPlayer: number;
  budgets: number[];
  terminal: boolean;
}

const BANDS: Array<[number, ScorePanel["band"]]> = [
  [128, "maximum"],
  [125, "exceptional"],
  [120, "excellent"],
  [100, "good"],
];

export function scoreBand(area: number): ScorePanel["band"] {
  for (const [threshold, band] of BANDS) {
    if (area >= threshold) return band;
  }
  return "none";
}

export class BoardView {
  grid: string[] = [];
  selectedPiece: string | null = null;
  pending: PendingPlacement | null = null;
  preview: PreviewVerdict | null = null;
  score: ScorePanel = { area: 0, bestSoFar: 0, band: "none" };
  turn: TurnPanel = { currentPlayer: 0, budgets: [], terminal: false };
  lastError: string | null = null;

  private confirmed: GameStateResult | null = null;

  constructor(
    private readonly client: SessionClient,
    readonly seat: number | null = null,
  ) {}

  get state(): GameStateResult {
    if (!this.confirmed) throw new Error("no game yet");
    return this.confirmed;
  }

  async newGame(start: ConfigDoc, players: number, mode = "standard"): Promise<void> {
    const state = await this.client.request<GameStateResult>("newGame", {
      players,
      start,
      mode,
    });
    this.applyState(state);
  }

  private applyState(state: GameStateResult): void {
    this.confirmed = state;
    this.grid = state.grid;
    this.score = {
      area: state.area,
      bestSoFar: state.bestSoFar,
      band: scoreBand(state.area),
    };
    this.turn = {
      currentPlayer: state.currentPlayer,
      budgets: state.movesRemaining,
      terminal: state.terminal,
    };
  }

  select(piece: string): void {
    const placement = this.state.config.placements.find((p) => p.piece === piece);
    if (!placement) throw new Error(`piece ${piece} is not on the board`);
    this.selectedPiece = piece;
    this.pending = {
      piece,
      rot: placement.rot,
      flip: placement.flip,
      anchor: [...placement.anchor],
    };
    this.preview = null;
  }

  deselect(): void {
    this.selectedPiece = null;
    this.pending = null;
    this.preview = null;
  }

  /** The confirmed config with the pending placement substituted in. */
  hypotheticalConfig(): ConfigDoc {
    if (!this.pending) throw new Error("nothing selected");
    const pending = this.pending;
    const placements: PlacementDoc[] = this.state.config.placements.map((p) =>
      p.piece === pending.piece
        ? { piece: pending.piece, rot: pending.rot, flip: pending.flip,
            anchor: [pending.anchor[0], pending.anchor[1]] }
        : p,
    );
    return { ...this.state.config, placements };
  }

  /** Ask the engine how the pending placement would score. */
  async refreshPreview(): Promise<PreviewVerdict> {
    const result = await this.client.request<ValidateResult>("validate", {
      config: this.hypotheticalConfig(),
    });
    this.preview = {
      ok: result.valid,
      area: result.area,
      violations: result.violations.map((v) => v.kind),
      grid: result.grid,
    };
    return this.preview;
  }

  async previewPlacement(
    piece: string,
    rot: Rotation,
    flip: boolean,
    anchor: [number, number],
  ): Promise<PreviewVerdict> {
    this.select(piece);
    this.pending = { piece, rot, flip, anchor: [...anchor] };
    return this.refreshPreview();
  }

  /** Commit the pending placement. On rejection the piece snaps back. */
  async commitMove(): Promise<boolean> {
    if (!this.pending) throw new Error("nothing to commit");
    if (this.seat !== null && this.seat !== this.turn.currentPlayer) {
      this.lastError = "not-your-turn";
      return false; // never send a move for a non-current player
    }
    const move = this.pending;
    try {
      const state = await this.client.request<GameStateResult>("applyMove", {
        piece: move.piece,
        rot: move.rot,
        flip: move.flip,
        anchor: move.anchor,
      });
      this.applyState(state);
      this.deselect();
      this.lastError = null;
      return true;
    } catch (err) {
      if (err instanceof SessionError) {
        this.lastError = err.code;
        if (err.code === "illegal-move") {
          this.select(move.piece); // back to its confirmed placement
        }
        return false;
      }
      throw err;
    }
  }

  async passTurn(): Promise<boolean> {
    if (this.seat !== null && this.seat !== this.turn.currentPlayer) {
      this.lastError = "not-your-turn";
      return false;
    }
    try {
      const state = await this.client.request<GameStateResult>("passMove", {});
      this.applyState(state);
      this.lastError = null;
      return true;
    } catch (err) {
      if (err instanceof SessionError) {
        this.lastError = err.code;
        return false;
      }
      throw err;
    }
  }

  /** R rotates 90 ccw, F flips, arrows move the anchor, Esc deselects. */
  handleKey(key: string): boolean {
    if (!this.pending) return false;
    switch (key) {
      case "r":
      case "R":
        this.pending.rot = (((this.pending.rot + 90) % 360) as Rotation);
        return true;
      case "f":
      case "F":
        // mirror the piece as displayed: left-composing the reflection
        // negates the rotation and toggles the flip bit
        this.pending.rot = (((360 - this.pending.rot) % 360) as Rotation);
        this.pending.flip = !this.pending.flip;
        return true;
      case "ArrowLeft":
        this.pending.anchor[0] -= 1;
        return true;
      case "ArrowRight":
        this.pending.anchor[0] += 1;
        return true;
      case "ArrowUp":
        this.pending.anchor[1] += 1;
        return true;
      case "ArrowDown":
        this.pending.anchor[1] -= 1;
        return true;
      case "Escape":
        this.deselect();
        return true;
      default:
        return false;
    }
  }
}
