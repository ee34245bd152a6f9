"""Topology of a board configuration: connectivity, holes, enclosed area.

The enclosed area is the set of empty cells a flood fill started on a
virtual ring outside the board cannot reach; every bounded empty component
counts, so multi-hole fences score the sum of their holes.
"""
from __future__ import annotations

from dataclasses import dataclass

from . import kernels
from .board import BoardConfig, occupancy_rows, rows_to_cells
from .geometry import Cell, placement_from_cells

_D4 = ((1, 0), (-1, 0), (0, 1), (0, -1))


@dataclass(frozen=True)
class Topology:
    fence_connected: bool
    hole_count: int
    enclosed_cells: frozenset[Cell]

    @property
    def area(self) -> int:
        return len(self.enclosed_cells)


def board_topology(config: BoardConfig, backend=None) -> Topology:
    """Flood-fill analysis of the occupied set.

    fence_connected means the occupied cells form exactly one 4-connected
    component (an empty board is vacuously connected with zero holes).
    """
    backend = backend or kernels.active
    occ = occupancy_rows(config.occupied(), config.height)
    comps, holes, _ = backend.board_stats(occ, config.width)
    enclosed = rows_to_cells(backend.enclosed_rows(occ, config.width))
    return Topology(comps <= 1, holes, enclosed)


def neighbor_counts(config: BoardConfig) -> dict[str, int]:
    """For each placed piece, the number of distinct other pieces sharing
    at least one unit edge with it. Corner contact counts for nothing."""
    resolved = config.resolved()
    labels = list(resolved)
    halos = {
        lab: {(x + dx, y + dy) for x, y in cells for dx, dy in _D4} - set(cells)
        for lab, cells in resolved.items()
    }
    counts = {}
    for lab in labels:
        counts[lab] = sum(
            1 for other in labels
            if other != lab and halos[lab] & resolved[other]
        )
    return counts


def _config_signature(config: BoardConfig) -> tuple:
    """Translation-normalized labeled cell sets (a raw-solution key)."""
    resolved = config.resolved()
    if not resolved:
        return ()
    allcells = [c for cells in resolved.values() for c in cells]
    mx = min(x for x, _ in allcells)
    my = min(y for _, y in allcells)
    return tuple(
        (lab, tuple(sorted((x - mx, y - my) for x, y in resolved[lab])))
        for lab in sorted(resolved)
    )


def signature_text(labeled_cells: dict) -> str:
    """Stable serialization of labeled cells, translation-normalized."""
    if not labeled_cells:
        return "empty"
    allcells = [c for cells in labeled_cells.values() for c in cells]
    mx = min(x for x, _ in allcells)
    my = min(y for _, y in allcells)
    return ";".join(
        f"{lab}:" + ",".join(
            f"{x - mx}.{y - my}" for x, y in sorted(labeled_cells[lab]))
        for lab in sorted(labeled_cells)
    )


def canonical_key(config: BoardConfig) -> str:
    """Smallest signature over the 8 dihedral images, translation-
    normalized. Equal keys mean the configurations match up to
    translation + rotation + reflection."""
    from .geometry import TRANSFORMS

    resolved = config.resolved()
    if not resolved:
        return "empty"
    return min(
        signature_text({lab: t.apply(cells) for lab, cells in resolved.items()})
        for t in TRANSFORMS
    )


def transform_config(config: BoardConfig, transform) -> BoardConfig:
    """The whole-board dihedral image of a configuration.

    The board is re-normalized so occupied cells keep non-negative
    coordinates; width/height swap under odd rotations.
    """
    resolved = config.resolved()
    w, h = config.width, config.height
    if transform.rot in (90, 270):
        w, h = h, w
    if not resolved:
        return BoardConfig(w, h, config.piece_set, ())
    imaged = {lab: transform.apply(cells) for lab, cells in resolved.items()}
    allcells = [c for cells in imaged.values() for c in cells]
    mx = min(x for x, _ in allcells)
    my = min(y for _, y in allcells)
    placements = tuple(
        placement_from_cells(
            lab, config.piece_set[lab],
            [(x - mx, y - my) for x, y in imaged[lab]],
        )
        for lab in (p.piece for p in config.placements)
    )
    return BoardConfig(w, h, config.piece_set, placements)
