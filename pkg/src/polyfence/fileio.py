"""Config documents (JSON), ASCII rendering, and their round-trips.

Serialization is byte-stable: sorted keys, integer-only numbers, newline
terminated. Parsing is strict: unknown fields and unknown schema versions
are rejected so long-lived fixtures cannot rot silently.
"""
from __future__ import annotations

import json

from .board import BoardConfig
from .geometry import Placement, Transform
from .pieces import piece_set
from .topology import board_topology

SCHEMA_VERSION = 1

_DOC_FIELDS = {"schemaVersion", "board", "pieceSet", "placements"}
_BOARD_FIELDS = {"width", "height"}
_PLACEMENT_FIELDS = {"piece", "rot", "flip", "anchor"}


class ParseError(ValueError):
    """A config document problem, with a machine-readable code and the
    index of the offending placement where that applies."""

    def __init__(self, code: str, message: str, placement_index: int | None = None):
        self.code = code
        self.placement_index = placement_index
        where = f" (placement {placement_index})" if placement_index is not None else ""
        super().__init__(f"{code}{where}: {message}")


def serialize_config(config: BoardConfig) -> str:
    doc = {
        "schemaVersion": SCHEMA_VERSION,
        "board": {"width": config.width, "height": config.height},
        "pieceSet": config.piece_set.name,
        "placements": [
            {
                "piece": p.piece,
                "rot": p.transform.rot,
                "flip": p.transform.flip,
                "anchor": [p.anchor[0], p.anchor[1]],
            }
            for p in config.placements
        ],
    }
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def parse_config(text: str | bytes, strict: bool = True) -> BoardConfig:
    """Parse and validate a config document.

    strict=True additionally enforces in-bounds and no-overlap (the parse-
    time core invariants); strict=False lets those through so a validator
    can turn them into violations instead.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError("bad-json", str(exc)) from exc
    return config_from_document(doc, strict=strict)


def config_from_document(doc, strict: bool = True) -> BoardConfig:
    if not isinstance(doc, dict):
        raise ParseError("bad-json", "top level must be an object")
    unknown = set(doc) - _DOC_FIELDS
    if unknown:
        raise ParseError("unknown-field", f"unknown field(s): {sorted(unknown)}")
    version = doc.get("schemaVersion", SCHEMA_VERSION)
    if version != SCHEMA_VERSION:
        raise ParseError("bad-schema", f"unsupported schemaVersion {version!r}")

    board = doc.get("board", {})
    if not isinstance(board, dict) or set(board) - _BOARD_FIELDS:
        raise ParseError("bad-field", "board must be {width, height}")
    width = board.get("width", 20)
    height = board.get("height", 20)
    if not (isinstance(width, int) and isinstance(height, int) and width > 0 and height > 0):
        raise ParseError("bad-field", "board dimensions must be positive integers")

    try:
        pieces = piece_set(doc.get("pieceSet", "pentomino"))
    except KeyError as exc:
        raise ParseError("unknown-piece", str(exc)) from exc

    raw = doc.get("placements", [])
    if not isinstance(raw, list):
        raise ParseError("bad-field", "placements must be a list")
    placements = []
    seen_labels = set()
    for i, entry in enumerate(raw):
        if not isinstance(entry, dict):
            raise ParseError("bad-field", "placement must be an object", i)
        if set(entry) - _PLACEMENT_FIELDS:
            raise ParseError("unknown-field",
                             f"unknown placement field(s): {sorted(set(entry) - _PLACEMENT_FIELDS)}", i)
        piece = entry.get("piece")
        if piece not in pieces:
            raise ParseError("unknown-piece", f"piece {piece!r} not in set {pieces.name!r}", i)
        if piece in seen_labels:
            raise ParseError("duplicate-piece", f"piece {piece!r} placed twice", i)
        seen_labels.add(piece)
        rot = entry.get("rot", 0)
        flip = entry.get("flip", False)
        anchor = entry.get("anchor", [0, 0])
        if rot not in (0, 90, 180, 270) or not isinstance(flip, bool):
            raise ParseError("bad-field", f"bad transform rot={rot!r} flip={flip!r}", i)
        if (not isinstance(anchor, list) or len(anchor) != 2
                or not all(isinstance(v, int) for v in anchor)):
            raise ParseError("bad-field", f"bad anchor {anchor!r}", i)
        placements.append(Placement(piece, Transform(rot, flip), (anchor[0], anchor[1])))

    config = BoardConfig(width, height, pieces, tuple(placements))
    if strict:
        resolved = config.resolved()
        labels = [p.piece for p in placements]
        covered: dict = {}
        for i, lab in enumerate(labels):
            for cell in resolved[lab]:
                if not (0 <= cell[0] < width and 0 <= cell[1] < height):
                    raise ParseError("out-of-bounds",
                                     f"piece {lab} leaves the board at {cell}", i)
                if cell in covered:
                    raise ParseError("overlap",
                                     f"piece {lab} overlaps {covered[cell]} at {cell}", i)
                covered[cell] = lab
    return config


def load_config(path: str, strict: bool = True) -> BoardConfig:
    with open(path, encoding="utf-8") as fh:
        return parse_config(fh.read(), strict=strict)


def save_config(path: str, config: BoardConfig) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize_config(config))


def render_ascii(config: BoardConfig) -> str:
    """One character per cell, top row first: piece letters, '*' for
    enclosed cells, '.' for exterior empties, '#' where pieces overlap."""
    grid = [["." for _ in range(config.width)] for _ in range(config.height)]
    for label, cells in config.resolved().items():
        for x, y in cells:
            if 0 <= x < config.width and 0 <= y < config.height:
                grid[y][x] = "#" if grid[y][x] != "." else label
    for x, y in board_topology(config).enclosed_cells:
        grid[y][x] = "*"
    return "\n".join("".join(row) for row in reversed(grid))


def parse_ascii(text: str, piece_set_name: str = "pentomino",
                width: int | None = None, height: int | None = None) -> BoardConfig:
    """Rebuild a config from a letter grid (the render_ascii format).

    '*' and '.' are empties; anything else must be a piece label whose
    cells form one image of that piece.
    """
    from .board import config_from_cells

    lines = [ln for ln in text.splitlines() if ln.strip()]
    h = len(lines)
    w = max(len(ln) for ln in lines)
    labeled: dict[str, set] = {}
    for row, line in enumerate(lines):
        y = h - 1 - row
        for x, ch in enumerate(line):
            if ch in ".* ":
                continue
            labeled.setdefault(ch, set()).add((x, y))
    pieces = piece_set(piece_set_name)
    return config_from_cells(pieces, labeled, width=width or w, height=height or h)
