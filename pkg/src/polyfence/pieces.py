"""Piece definitions and named piece sets.

Canonical cells for the five tetrominoes (i, l, n, o, t) and the twelve
pentominoes (F..Z) ship in ``data/pieces.json``. The env var
``FENCE_PIECES_PATH`` points the loader at an alternative file.
"""
from __future__ import annotations

import json
import os
from dataclasses import dataclass
from importlib import resources

from .geometry import Shape

PIECES_PATH_ENV = "FENCE_PIECES_PATH"

TETROMINO_LABELS = ("i", "l", "n", "o", "t")
PENTOMINO_LABELS = ("F", "I", "L", "N", "P", "T", "U", "V", "W", "X", "Y", "Z")


@dataclass(frozen=True)
class PieceSet:
    """An ordered, named collection of shapes keyed by label."""

    name: str
    shapes: tuple[Shape, ...]

    def __post_init__(self):
        labels = [s.name for s in self.shapes]
        if len(set(labels)) != len(labels):
            raise ValueError(f"duplicate piece labels in set: {labels}")

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(s.name for s in self.shapes)

    def __contains__(self, label: str) -> bool:
        return any(s.name == label for s in self.shapes)

    def __getitem__(self, label: str) -> Shape:
        for s in self.shapes:
            if s.name == label:
                return s
        raise KeyError(label)

    def __len__(self) -> int:
        return len(self.shapes)

    def __iter__(self):
        return iter(self.shapes)


_cache: dict[str, dict[str, Shape]] = {}


def _definitions_path() -> str | None:
    return os.environ.get(PIECES_PATH_ENV) or None


def load_piece_definitions(path: str | None = None) -> dict[str, Shape]:
    """Load the label -> Shape mapping, validating each entry."""
    path = path or _definitions_path()
    key = path or "<builtin>"
    if key in _cache:
        return _cache[key]
    if path is None:
        raw = json.loads(resources.files(__package__).joinpath("data/pieces.json").read_text())
    else:
        with open(path, encoding="utf-8") as fh:
            raw = json.load(fh)
    shapes = {}
    for label, cells in raw.items():
        shape = Shape.from_cells(label, [tuple(c) for c in cells])
        if tuple(sorted(tuple(c) for c in cells)) != shape.cells:
            raise ValueError(f"piece {label!r} is not in canonical normalized form")
        shapes[label] = shape
    _cache[key] = shapes
    return shapes


def piece_set(name: str) -> PieceSet:
    """Resolve a piece-set name: ``tetromino``, ``pentomino``, or a
    comma-separated label list (normalized to sorted order)."""
    defs = load_piece_definitions()
    if name == "tetromino":
        labels = TETROMINO_LABELS
    elif name == "pentomino":
        labels = PENTOMINO_LABELS
    else:
        labels = tuple(sorted(part.strip() for part in name.split(",") if part.strip()))
        if not labels:
            raise ValueError(f"empty piece-set name: {name!r}")
        name = ",".join(labels)
    missing = [lab for lab in labels if lab not in defs]
    if missing:
        raise KeyError(f"unknown piece label(s): {missing}")
    return PieceSet(name, tuple(defs[lab] for lab in labels))


def tetrominoes() -> PieceSet:
    return piece_set("tetromino")


def pentominoes() -> PieceSet:
    return piece_set("pentomino")
