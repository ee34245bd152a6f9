"""Polyomino fence engine: geometry, rules, exact search, game, and IO."""

from .board import BoardConfig, config_from_cells
from .game import (GameState, IllegalMoveError, Pass, Relocate, apply_move,
                   new_game, terminal_result)
from .geometry import (Cell, Placement, Shape, Transform, connected_components,
                       normalize_cells, orientations, resolve_shape)
from .pieces import PieceSet, pentominoes, piece_set, tetrominoes
from .rules import (FenceReport, InvalidFenceError, ScoreMode, Violation,
                    moves_per_player, score, validate_fence)
from .solver import (LengthProfile, RectangleCandidate, SolutionSet,
                     improve_local, perimeter_budget, piece_length,
                     rectangle_candidates, search_branch_and_bound,
                     solve_exhaustive)
from .topology import Topology, board_topology, canonical_key, neighbor_counts

__version__ = "0.1.0"

__all__ = [
    "BoardConfig", "Cell", "FenceReport", "GameState", "IllegalMoveError",
    "InvalidFenceError", "LengthProfile", "Pass", "PieceSet", "Placement",
    "RectangleCandidate", "Relocate", "ScoreMode", "Shape", "SolutionSet",
    "Topology", "Transform", "Violation", "apply_move", "board_topology",
    "canonical_key", "config_from_cells", "connected_components",
    "improve_local", "moves_per_player", "new_game", "normalize_cells",
    "orientations", "pentominoes", "perimeter_budget", "piece_length",
    "piece_set", "rectangle_candidates", "resolve_shape", "score",
    "neighbor_counts", "search_branch_and_bound", "solve_exhaustive",
    "terminal_result", "tetrominoes", "validate_fence",
]
