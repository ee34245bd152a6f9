"""Board configurations: a set of placements on a W x H grid.

A BoardConfig is a value object. Structural problems (duplicate labels,
unknown pieces) are construction errors; geometric problems (overlap,
out-of-bounds) are reported by rules.validate_fence, never raised here.
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace

import numpy as np

from .geometry import Cell, Placement, placement_from_cells, resolve_shape
from .pieces import PieceSet, pentominoes

DEFAULT_SIZE = 20
MAX_WIDTH = 62  # occupancy rows are single uint64 words with a sentinel bit


@dataclass(frozen=True)
class BoardConfig:
    width: int = DEFAULT_SIZE
    height: int = DEFAULT_SIZE
    piece_set: PieceSet = field(default_factory=pentominoes)
    placements: tuple[Placement, ...] = ()

    def __post_init__(self):
        if self.width < 1 or self.height < 1:
            raise ValueError("board dimensions must be positive")
        if self.width > MAX_WIDTH:
            raise ValueError(f"board width above {MAX_WIDTH} is not supported")
        labels = [p.piece for p in self.placements]
        if len(set(labels)) != len(labels):
            raise ValueError(f"duplicate piece placements: {labels}")
        for p in self.placements:
            if p.piece not in self.piece_set:
                raise KeyError(f"piece {p.piece!r} not in piece set {self.piece_set.name!r}")

    def resolved(self) -> dict[str, frozenset[Cell]]:
        """Label -> absolute cells for every placement."""
        return {
            p.piece: resolve_shape(self.piece_set[p.piece], p.transform, p.anchor)
            for p in self.placements
        }

    def occupied(self) -> frozenset[Cell]:
        out: set[Cell] = set()
        for cells in self.resolved().values():
            out |= cells
        return frozenset(out)

    def placement_of(self, label: str) -> Placement | None:
        for p in self.placements:
            if p.piece == label:
                return p
        return None

    def without(self, label: str) -> "BoardConfig":
        return replace(self, placements=tuple(p for p in self.placements if p.piece != label))

    def with_placement(self, placement: Placement) -> "BoardConfig":
        """Replace or add one placement, keeping the original order."""
        rest = [p for p in self.placements if p.piece != placement.piece]
        idx = next((i for i, p in enumerate(self.placements) if p.piece == placement.piece),
                   len(rest))
        rest.insert(idx, placement)
        return replace(self, placements=tuple(rest))


def config_from_cells(
    piece_set: PieceSet,
    labeled_cells: dict[str, frozenset[Cell] | set[Cell] | list[Cell]],
    width: int = DEFAULT_SIZE,
    height: int = DEFAULT_SIZE,
) -> BoardConfig:
    """Build a config from absolute cell sets, recovering placements."""
    placements = tuple(
        placement_from_cells(label, piece_set[label], cells)
        for label, cells in labeled_cells.items()
    )
    return BoardConfig(width, height, piece_set, placements)


def occupancy_rows(cells, height: int) -> np.ndarray:
    """Pack cells into per-row int64 bitmasks (bit x set on row y).

    Widths stay below 63 so plain signed arithmetic never touches the
    sign bit; that keeps the kernels portable between numpy and numba.
    """
    rows = np.zeros(height, dtype=np.int64)
    for x, y in cells:
        if 0 <= y < height and 0 <= x < MAX_WIDTH:
            rows[y] |= 1 << x
    return rows


def rows_to_cells(rows: np.ndarray) -> frozenset[Cell]:
    out = []
    for y in range(len(rows)):
        m = int(rows[y])
        while m:
            low = m & -m
            out.append((low.bit_length() - 1, y))
            m ^= low
    return frozenset(out)
