"""Perimeter bounds and exact / anytime search for maximum-area fences.

The bound machinery: each piece can lengthen a fence's center-line walk by
at most its `length` (a monotone staircase walk inside the piece); the sum
over a piece set caps the center-line perimeter of any rectangle
circumscribing a fence, which caps the enclosed area. The search enumerates
complete placements inside the candidate rectangles' cell boxes with a
bit-row depth-first kernel and reports solution counts both raw
(translation-normalized) and deduplicated by canonical key.
"""
from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np

from . import kernels
from .board import BoardConfig, config_from_cells, occupancy_rows
from .geometry import Shape, orientations
from .pieces import PieceSet
from .rules import InvalidFenceError, ScoreMode, validate_fence
from .topology import _config_signature, canonical_key, signature_text, transform_config


@dataclass(frozen=True)
class LengthProfile:
    piece: str
    progression: int
    protrusion: int

    @property
    def length(self) -> int:
        return self.progression + self.protrusion + 1


@dataclass(frozen=True)
class RectangleCandidate:
    """Center-line rectangle dimensions a x b (a >= b)."""

    a: int
    b: int

    @property
    def perimeter(self) -> int:
        return 2 * (self.a + self.b)

    @property
    def interior(self) -> int:
        return (self.a - 1) * (self.b - 1)

    @property
    def cell_box(self) -> tuple[int, int]:
        """Outer cell dimensions of a fence ring on this center line."""
        return (self.a + 1, self.b + 1)


@dataclass
class SolutionSet:
    max_area: int | None
    solutions: list[BoardConfig]
    raw_count: int
    dedup_count: int
    exhaustive: bool
    elapsed: float

    def summary(self) -> dict:
        return {
            "maxArea": self.max_area,
            "rawCount": self.raw_count,
            "dedupCount": self.dedup_count,
            "exhaustive": self.exhaustive,
            "elapsed": round(self.elapsed, 3),
        }


def piece_length(shape: Shape) -> LengthProfile:
    """How much one piece can extend a fence walk.

    Maximizes displacement over monotone (+x/+y) cell walks inside the
    piece across all orientations; length = progression + protrusion + 1.
    Ties prefer the straighter realization (larger progression).
    """
    best = (0, 0)  # (progression, protrusion)
    for image in orientations(shape):
        cells = set(image.cells)
        for sx, sy in cells:
            stack = [(sx, sy)]
            seen = {(sx, sy)}
            while stack:
                x, y = stack.pop()
                d = (max(x - sx, y - sy), min(x - sx, y - sy))
                if d[0] + d[1] > sum(best) or (d[0] + d[1] == sum(best) and d > best):
                    best = d
                for nxt in ((x + 1, y), (x, y + 1)):
                    if nxt in cells and nxt not in seen:
                        seen.add(nxt)
                        stack.append(nxt)
    return LengthProfile(shape.name, best[0], best[1])


def perimeter_budget(piece_set: PieceSet) -> int:
    return sum(piece_length(s).length for s in piece_set)


def rectangle_candidates(budget: int) -> list[RectangleCandidate]:
    """All center-line rectangles affordable within the walk budget,
    largest interior first."""
    if budget < 8:
        raise ValueError(f"budget {budget} cannot close any rectangle (needs 8)")
    out = [
        RectangleCandidate(a, b)
        for b in range(2, budget // 4 + 1)
        for a in range(b, budget // 2 - b + 1)
    ]
    out.sort(key=lambda r: (-r.interior, r.a, r.b))
    return out


BOX_MARGIN = 1  # cells a fence may overhang its ring rectangle, per side


def _search_boxes(piece_set: PieceSet) -> list[tuple[tuple[int, int], int]]:
    """((W, H), area bound) pairs derived from rectangle candidates.

    A fence built on the center-line rectangle (a, b) occupies the ring's
    (a+1) x (b+1) cell box plus overhang from off-walk cells, which sit
    next to walk cells, hence the one-cell margin per side. The bound of a
    box is the largest ring interior among the candidates it covers.
    Contained boxes are dropped; order is by bound descending.
    """
    if len(piece_set) < 3:
        return []  # a fence needs every piece to have two distinct neighbours
    budget = perimeter_budget(piece_set)
    if budget < 8:
        return []
    padded: dict[tuple[int, int], int] = {}
    for c in rectangle_candidates(budget):
        box = (c.a + 1 + 2 * BOX_MARGIN, c.b + 1 + 2 * BOX_MARGIN)
        padded[box] = max(padded.get(box, 0), c.interior)
    maximal = []
    for box in padded:
        if any(o != box and o[0] >= box[0] and o[1] >= box[1] for o in padded):
            continue
        bound = max(v for b, v in padded.items()
                    if b[0] <= box[0] and b[1] <= box[1])
        maximal.append((box, bound))
    maximal.sort(key=lambda bv: (-bv[1], bv[0]))
    return maximal


def _box_placements(piece_set: PieceSet, width: int, height: int, order: list[str]):
    """Per-piece placement tables for one box.

    Returns (masks, dils, ptr, cells_table) with pieces in `order`,
    orientations in their deterministic order, anchors row-major.
    """
    backend = kernels.active
    masks, dils, cells_table = [], [], []
    ptr = [0]
    for label in order:
        shape = piece_set[label]
        for image in orientations(shape):
            for ay in range(height - image.height + 1):
                for ax in range(width - image.width + 1):
                    cells = frozenset((x + ax, y + ay) for x, y in image.cells)
                    rows = occupancy_rows(cells, height)
                    masks.append(rows)
                    dils.append(backend.dilate_rows(rows, width))
                    cells_table.append(cells)
        ptr.append(len(masks))
    return (
        np.array(masks, dtype=np.int64),
        np.array(dils, dtype=np.int64),
        np.array(ptr, dtype=np.int64),
        cells_table,
    )


def _search_order(piece_set: PieceSet) -> list[str]:
    # long pieces first: they frame the rectangle earliest, pruning sooner
    return sorted(piece_set.labels, key=lambda lab: (-piece_length(piece_set[lab]).length, lab))


def _enumerate_box(piece_set, width, height, node_budget=-1, min_keep=0,
                   cap=200_000):
    """Valid fences of the full piece set inside one box, argmax set only
    (fences scoring at least min_keep and at least the best found).

    Returns (list of (labeled cells dict, area), finished flag).
    """
    backend = kernels.active
    order = _search_order(piece_set)
    masks, dils, ptr, cells_table = _box_placements(piece_set, width, height, order)
    while True:
        out_idx = np.empty((cap, len(order)), dtype=np.int64)
        out_area = np.empty(cap, dtype=np.int64)
        nsol, nodes, finished = backend.enumerate_fences(
            masks, dils, ptr, height, width, node_budget, min_keep,
            out_idx, out_area)
        if finished or nsol < cap or node_budget >= 0:
            break
        cap *= 4  # solution buffer was the limit, not the node budget
    found = []
    for s in range(nsol):
        labeled = {
            order[k]: cells_table[ptr[k] + out_idx[s, k]] for k in range(len(order))
        }
        found.append((labeled, int(out_area[s])))
    return found, finished


def _collect(piece_set, hits, exhaustive, elapsed) -> SolutionSet:
    """Reduce (labeled cells, area) hits to a deduplicated SolutionSet."""
    if not hits:
        return SolutionSet(None, [], 0, 0, exhaustive, elapsed)
    max_area = max(area for _, area in hits)
    raw = {}
    for labeled, area in hits:
        if area != max_area:
            continue
        w = max(x for c in labeled.values() for x, _ in c) + 1
        h = max(y for c in labeled.values() for _, y in c) + 1
        config = config_from_cells(piece_set, labeled, width=w, height=h)
        raw[_config_signature(config)] = config
    classes: dict[str, BoardConfig] = {}
    for config in raw.values():
        key = canonical_key(config)
        if key not in classes:
            classes[key] = _canonical_representative(config, key)
    solutions = [classes[k] for k in sorted(classes)]
    return SolutionSet(max_area, solutions, len(raw), len(classes), exhaustive, elapsed)


def _canonical_representative(config: BoardConfig, key: str) -> BoardConfig:
    """The dihedral image whose own signature equals the canonical key."""
    from .geometry import TRANSFORMS

    for t in TRANSFORMS:
        image = transform_config(config, t)
        if signature_text(image.resolved()) == key:
            return image
    return config


def solve_exhaustive(
    piece_set: PieceSet,
    bounding_box: tuple[int, int] | None = None,
    node_budget: int = -1,
) -> SolutionSet:
    """Enumerate every fence of the piece set and keep the maximum-area ones.

    With an explicit box, the search space is exactly the placements inside
    that box. With none, it is the cell boxes of all affordable center-line
    rectangles (the walk-budget argument; known enumerations of this problem searched
    the same rectangles); boxes whose geometric bound (W-2)(H-2) cannot reach
    the best area found so far are skipped, since they cannot hold a tying
    fence either.
    """
    t0 = time.monotonic()
    if bounding_box:
        boxes = [(bounding_box, None)]
    else:
        boxes = _search_boxes(piece_set)
    hits = []
    best = 0
    exhaustive = True
    for (w, h), bound in boxes:
        if bound is not None and bound < best:
            continue  # this box cannot hold a fence tying the best area
        found, finished = _enumerate_box(
            piece_set, w, h, node_budget=node_budget, min_keep=best)
        exhaustive = exhaustive and finished
        hits.extend(found)
        for _, area in found:
            best = max(best, area)
    return _collect(piece_set, hits, exhaustive, time.monotonic() - t0)


def search_branch_and_bound(
    piece_set: PieceSet,
    time_budget: float = 60.0,
) -> SolutionSet:
    """Anytime best-fence search under a wall-clock budget.

    Works box by box, largest interior bound first; a box is pruned when
    its bound cannot beat the best area already found. exhaustive=True
    only when every un-pruned box was fully enumerated in time.
    """
    t0 = time.monotonic()
    deadline = t0 + time_budget
    hits = []
    best = 0
    exhaustive = True
    nodes_per_sec = 2e6 if kernels.active.name == "numba" else 2e4
    for (w, h), bound in _search_boxes(piece_set):
        if bound < best:
            continue
        remaining = deadline - time.monotonic()
        if remaining <= 0:
            exhaustive = False
            break
        budget = max(10_000, int(remaining * nodes_per_sec))
        chunk_t0 = time.monotonic()
        found, finished = _enumerate_box(
            piece_set, w, h, node_budget=budget, min_keep=best)
        chunk_dt = max(time.monotonic() - chunk_t0, 1e-3)
        nodes_per_sec = max(budget / chunk_dt, 1e4) if not finished else nodes_per_sec
        exhaustive = exhaustive and finished
        hits.extend(found)
        for _, area in found:
            best = max(best, area)
    return _collect(piece_set, hits, exhaustive, time.monotonic() - t0)


def best_relocation(
    config: BoardConfig,
    mode: ScoreMode = ScoreMode.STANDARD,
) -> tuple[BoardConfig, int] | None:
    """Best strict single-piece improvement, or None at a local optimum.

    Steepest ascent on enclosed area (descent in misere mode); ties are
    broken by canonical key so the result is schedule-independent.
    """
    backend = kernels.active
    report = validate_fence(config)
    if not report.valid:
        raise InvalidFenceError(report)
    current = report.area
    resolved = config.resolved()
    labels = [p.piece for p in config.placements]
    w, h = config.width, config.height

    rows = {lab: occupancy_rows(cells, h) for lab, cells in resolved.items()}
    dils = {lab: backend.dilate_rows(rows[lab], w) for lab in labels}

    goal = max if mode is ScoreMode.STANDARD else min
    best_area = None
    best_candidates: list[tuple[str, frozenset]] = []
    for moved in labels:
        static = [lab for lab in labels if lab != moved]
        static_masks = np.array([rows[lab] for lab in static], dtype=np.int64)
        static_dils = np.array([dils[lab] for lab in static], dtype=np.int64)
        static_adj = np.zeros(len(static), dtype=np.int64)
        for i in range(len(static)):
            for j in range(i + 1, len(static)):
                if backend.rows_overlap(static_dils[i], static_masks[j]):
                    static_adj[i] |= 1 << j
                    static_adj[j] |= 1 << i
        cand_cells = []
        cand_masks = []
        cand_dil = []
        shape = config.piece_set[moved]
        for image in orientations(shape):
            for ay in range(h - image.height + 1):
                for ax in range(w - image.width + 1):
                    cells = frozenset((x + ax, y + ay) for x, y in image.cells)
                    r = occupancy_rows(cells, h)
                    cand_cells.append(cells)
                    cand_masks.append(r)
                    cand_dil.append(backend.dilate_rows(r, w))
        areas = backend.relocation_scan(
            static_masks, static_dils, static_adj,
            np.array(cand_masks, dtype=np.int64),
            np.array(cand_dil, dtype=np.int64), h, w)
        for c, area in enumerate(areas):
            if area < 0:
                continue
            area = int(area)
            if best_area is None or (goal(area, best_area) == area and area != best_area):
                best_area = area
                best_candidates = [(moved, cand_cells[c])]
            elif area == best_area:
                best_candidates.append((moved, cand_cells[c]))

    improves = best_area is not None and (
        best_area > current if mode is ScoreMode.STANDARD else best_area < current)
    if not improves:
        return None
    options = []
    for moved, cells in best_candidates:
        labeled = {lab: (cells if lab == moved else resolved[lab]) for lab in labels}
        cand = config_from_cells(config.piece_set, labeled, width=w, height=h)
        options.append((canonical_key(cand), cand))
    options.sort(key=lambda kv: kv[0])
    return options[0][1], best_area


def improve_local(config: BoardConfig, budget: int | None = None) -> BoardConfig:
    """Steepest-ascent hill climbing over single-piece relocations.

    Runs until no single move raises the area, or `budget` moves were made.
    The result never scores below the input.
    """
    steps = 0
    while budget is None or steps < budget:
        step = best_relocation(config, ScoreMode.STANDARD)
        if step is None:
            return config
        config, _ = step
        steps += 1
    return config
