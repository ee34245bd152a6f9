"""Cells, shapes, dihedral transforms, and placements on the square grid.

Coordinates are (x, y) with x growing rightward and y growing upward.
Everything here is an immutable value; all functions are pure.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

Cell = tuple[int, int]

ROTATIONS = (0, 90, 180, 270)


class DisconnectedShapeError(ValueError):
    """Raised when a cell set is empty or not 4-connected."""


def normalize_cells(cells: Iterable[Cell]) -> tuple[Cell, ...]:
    """Translate cells so min x = min y = 0 and return them sorted.

    Raises DisconnectedShapeError on an empty or non-4-connected set.
    """
    cells = set(cells)
    if not cells:
        raise DisconnectedShapeError("empty cell set")
    if len(connected_components(cells)) != 1:
        raise DisconnectedShapeError(f"cell set is not 4-connected: {sorted(cells)}")
    mx = min(x for x, _ in cells)
    my = min(y for _, y in cells)
    return tuple(sorted((x - mx, y - my) for x, y in cells))


@dataclass(frozen=True)
class Shape:
    """A translation-normalized polyomino piece."""

    name: str
    cells: tuple[Cell, ...]

    @classmethod
    def from_cells(cls, name: str, cells: Iterable[Cell]) -> "Shape":
        return cls(name, normalize_cells(cells))

    @property
    def size(self) -> int:
        return len(self.cells)

    @property
    def width(self) -> int:
        return max(x for x, _ in self.cells) + 1

    @property
    def height(self) -> int:
        return max(y for _, y in self.cells) + 1


@dataclass(frozen=True)
class Transform:
    """A dihedral-group element: optional mirror across the vertical axis,
    applied before a counterclockwise rotation."""

    rot: int = 0
    flip: bool = False

    def __post_init__(self):
        if self.rot not in ROTATIONS:
            raise ValueError(f"rotation must be one of {ROTATIONS}, got {self.rot}")

    def apply(self, cells: Iterable[Cell]) -> frozenset[Cell]:
        out = []
        for x, y in cells:
            if self.flip:
                x = -x
            if self.rot == 90:
                x, y = -y, x
            elif self.rot == 180:
                x, y = -x, -y
            elif self.rot == 270:
                x, y = y, -x
            out.append((x, y))
        return frozenset(out)

    def then(self, other: "Transform") -> "Transform":
        """The transform equivalent to applying `self` first, then `other`."""
        rot = self.rot if not other.flip else (360 - self.rot) % 360
        return Transform((rot + other.rot) % 360, self.flip ^ other.flip)


TRANSFORMS = tuple(
    Transform(rot, flip) for flip in (False, True) for rot in ROTATIONS
)

IDENTITY = Transform()


@dataclass(frozen=True)
class Placement:
    """A piece somewhere on a board: label, dihedral transform, anchor.

    The anchor is where the transformed-and-renormalized shape's min corner
    lands, so serialized placements are portable across shape conventions.
    """

    piece: str
    transform: Transform = IDENTITY
    anchor: Cell = (0, 0)


def orientations(shape: Shape) -> list[Shape]:
    """Distinct normalized images of `shape` under the 8 dihedral transforms,
    in lexicographic cell order."""
    seen = set()
    for t in TRANSFORMS:
        seen.add(normalize_cells(t.apply(shape.cells)))
    return [Shape(shape.name, cells) for cells in sorted(seen)]


def resolve_shape(shape: Shape, transform: Transform, anchor: Cell) -> frozenset[Cell]:
    """Cells occupied by `shape` under flip-then-rotate, renormalized, then
    translated so the min corner sits at `anchor`."""
    cells = normalize_cells(transform.apply(shape.cells))
    ax, ay = anchor
    return frozenset((x + ax, y + ay) for x, y in cells)


def placement_from_cells(piece: str, shape: Shape, cells: Iterable[Cell]) -> Placement:
    """Recover a Placement whose resolution equals `cells` (first match in
    TRANSFORMS order). Raises ValueError if `cells` is not an image of the shape."""
    target = frozenset(cells)
    mx = min(x for x, _ in target)
    my = min(y for _, y in target)
    normalized = frozenset((x - mx, y - my) for x, y in target)
    for t in TRANSFORMS:
        if frozenset(normalize_cells(t.apply(shape.cells))) == normalized:
            return Placement(piece, t, (mx, my))
    raise ValueError(f"cells are not an image of piece {piece!r}")


def connected_components(cells: Iterable[Cell]) -> list[list[Cell]]:
    """Maximal 4-connected components, each sorted, ordered by smallest cell."""
    remaining = set(cells)
    comps = []
    for seed in sorted(remaining):
        if seed not in remaining:
            continue
        comp = [seed]
        remaining.remove(seed)
        queue = deque([seed])
        while queue:
            x, y = queue.popleft()
            for nxt in ((x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1)):
                if nxt in remaining:
                    remaining.remove(nxt)
                    comp.append(nxt)
                    queue.append(nxt)
        comps.append(sorted(comp))
    return comps
