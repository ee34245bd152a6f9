// Minimal DOM rendering of a BoardView: a <pre> grid plus panels.
// All content comes from server-rendered state; no fence math here.
import type { BoardView } from "./view.js";

export function render(view: BoardView, root: HTMLElement): void {
  root.innerHTML = "";

  const grid = document.createElement("pre");
  grid.className = "fence-grid";
  grid.textContent = (view.preview?.grid ?? view.grid).join("\n");
  root.appendChild(grid);

  const score = document.createElement("div");
  score.className = "fence-score";
  const area = view.preview ? view.preview.area : view.score.area;
  score.textContent =
    `area ${area} (best ${view.score.bestSoFar}, ${view.score.band})`;
  root.appendChild(score);

  const turn = document.createElement("div");
  turn.className = "fence-turn";
  turn.textContent = view.turn.terminal
    ? `game over, final score ${view.score.area}`
    : `player ${view.turn.currentPlayer} to move, budgets ${view.turn.budgets.join("/")}`;
  root.appendChild(turn);

  if (view.preview) {
    const verdict = document.createElement("div");
    verdict.className = view.preview.ok ? "fence-preview-ok" : "fence-preview-bad";
    verdict.textContent = view.preview.ok
      ? `valid, would enclose ${view.preview.area}`
      : `invalid: ${view.preview.violations.join(", ")}`;
    root.appendChild(verdict);
  }
  if (view.lastError) {
    const toast = document.createElement("div");
    toast.className = "fence-toast";
    toast.textContent = view.lastError;
    root.appendChild(toast);
  }
}
