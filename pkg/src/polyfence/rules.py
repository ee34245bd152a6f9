"""Fence validity and scoring.

A fence must use every piece of its piece set, stay on the board without
overlap, give every piece at least two distinct edge-neighbours, and keep
the occupied cells in one rook-connected component.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

from .board import BoardConfig
from .topology import Topology, board_topology, neighbor_counts

# Display guidance from the game notes; informational only, never enforced.
SCORE_THRESHOLDS = {"good": 100, "excellent": 120, "exceptional": 125, "maximum": 128}

TOTAL_MOVES = 24


class InvalidFenceError(ValueError):
    def __init__(self, report: "FenceReport"):
        self.report = report
        kinds = ", ".join(v.kind for v in report.violations)
        super().__init__(f"not a valid fence: {kinds}")


class ScoreMode(enum.Enum):
    STANDARD = "standard"  # higher enclosed area is better
    MISERE = "misere"      # lower is better; 0 means a closed polyshape


@dataclass(frozen=True)
class Violation:
    kind: str
    detail: str
    piece: str | None = None

    def to_dict(self) -> dict:
        out = {"kind": self.kind, "detail": self.detail}
        if self.piece is not None:
            out["piece"] = self.piece
        return out


@dataclass(frozen=True)
class FenceReport:
    valid: bool
    violations: tuple[Violation, ...]
    topology: Topology
    area: int

    def to_dict(self) -> dict:
        return {
            "valid": self.valid,
            "violations": [v.to_dict() for v in self.violations],
            "fenceConnected": self.topology.fence_connected,
            "holeCount": self.topology.hole_count,
            "area": self.area,
        }


def validate_fence(config: BoardConfig) -> FenceReport:
    """Check a configuration against the fence rules.

    Malformed boards come back as violations, never exceptions, and the
    report always carries the topology and enclosed area.
    """
    violations: list[Violation] = []
    resolved = config.resolved()

    placed = set(resolved)
    for shape in config.piece_set:
        if shape.name not in placed:
            violations.append(Violation("missing-piece", f"piece {shape.name} is not placed",
                                        piece=shape.name))

    for label, cells in resolved.items():
        out = [c for c in cells
               if not (0 <= c[0] < config.width and 0 <= c[1] < config.height)]
        if out:
            violations.append(Violation(
                "out-of-bounds", f"piece {label} has cells outside the board: {sorted(out)}",
                piece=label))

    seen: dict = {}
    overlapped = set()
    for label, cells in resolved.items():
        for c in cells:
            if c in seen and (seen[c], label) not in overlapped:
                overlapped.add((seen[c], label))
                violations.append(Violation(
                    "overlap", f"pieces {seen[c]} and {label} both cover {c}", piece=label))
            seen[c] = label

    if not violations:
        for label, count in sorted(neighbor_counts(config).items()):
            if count < 2:
                violations.append(Violation(
                    "under-connected-piece",
                    f"piece {label} has {count} edge-neighbour(s), needs 2",
                    piece=label))

    topo = board_topology(config)
    if resolved and not topo.fence_connected:
        violations.append(Violation("fence-disconnected",
                                    "occupied cells form more than one component"))

    return FenceReport(not violations, tuple(violations), topo, topo.area)


def score(config: BoardConfig, mode: ScoreMode = ScoreMode.STANDARD) -> int:
    """Enclosed area of a valid fence. The number is the same in both
    modes; standard wants it high, misere wants it at zero."""
    report = validate_fence(config)
    if not report.valid:
        raise InvalidFenceError(report)
    return report.area


def moves_per_player(player_count: int) -> int:
    """Per-player move budget: 24 total moves split to the nearest whole
    move (24, 12, 8, 6, 5, 4, 3, 3, 3, 2, 2, 2 for 1..12 players)."""
    if player_count < 1:
        raise ValueError("player count must be at least 1")
    return max(1, (2 * TOTAL_MOVES + player_count) // (2 * player_count))
