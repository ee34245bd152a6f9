"""State machine for the cooperative fence-building game.

States are immutable; apply_move returns a fresh state and raises on
illegal input, leaving the caller's state untouched. A rejected relocation
therefore "puts the piece back" by construction.
"""
from __future__ import annotations

from dataclasses import dataclass, replace

from .board import BoardConfig
from .geometry import Cell, Placement, Transform
from .rules import InvalidFenceError, ScoreMode, moves_per_player, score, validate_fence


class GameError(Exception):
    code = "bad-request"


class GameOverError(GameError):
    code = "game-over"


class NotYourTurnError(GameError):
    code = "not-your-turn"


class OutOfBudgetError(GameError):
    code = "out-of-budget"


class IllegalMoveError(GameError):
    code = "illegal-move"

    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report


@dataclass(frozen=True)
class Pass:
    pass


@dataclass(frozen=True)
class Relocate:
    piece: str
    transform: Transform
    anchor: Cell


Move = Pass | Relocate


@dataclass(frozen=True)
class HistoryEntry:
    player: int
    move: Move
    area: int


@dataclass(frozen=True)
class GameState:
    config: BoardConfig
    player_count: int
    moves_remaining: tuple[int, ...]
    current_player: int
    score_mode: ScoreMode
    history: tuple[HistoryEntry, ...] = ()
    consecutive_passes: int = 0
    terminal: bool = False

    @property
    def area(self) -> int:
        return score(self.config, self.score_mode)


def new_game(
    start: BoardConfig,
    player_count: int,
    mode: ScoreMode = ScoreMode.STANDARD,
    starting_player: int = 0,
) -> GameState:
    """Start a game from an already-valid fence.

    Who actually goes first is a social rule, so the engine takes an
    explicit starting player and defaults to 0.
    """
    report = validate_fence(start)
    if not report.valid:
        raise InvalidFenceError(report)
    if player_count < 1:
        raise ValueError("player count must be at least 1")
    if not 0 <= starting_player < player_count:
        raise ValueError("starting player out of range")
    budget = moves_per_player(player_count)
    return GameState(
        config=start,
        player_count=player_count,
        moves_remaining=(budget,) * player_count,
        current_player=starting_player,
        score_mode=mode,
    )


def apply_move(state: GameState, move: Move) -> GameState:
    """Apply one move for the current player.

    A pass burns a move. A relocation is accepted only if the resulting
    board is still a valid fence; otherwise IllegalMoveError is raised and
    the caller's state is unchanged. The game ends when every budget is
    spent or when all players pass consecutively once around.
    """
    if state.terminal:
        raise GameOverError("the game is over")
    if state.moves_remaining[state.current_player] <= 0:
        raise OutOfBudgetError(f"player {state.current_player} has no moves left")

    if isinstance(move, Pass):
        config = state.config
        area = state.area
        passes = state.consecutive_passes + 1
    else:
        if state.config.placement_of(move.piece) is None:
            raise IllegalMoveError(f"piece {move.piece!r} is not on the board")
        config = state.config.with_placement(
            Placement(move.piece, move.transform, move.anchor))
        report = validate_fence(config)
        if not report.valid:
            raise IllegalMoveError(
                "; ".join(v.detail for v in report.violations), report=report)
        area = report.area
        passes = 0

    budgets = list(state.moves_remaining)
    budgets[state.current_player] -= 1
    entry = HistoryEntry(state.current_player, move, area)
    terminal = all(b <= 0 for b in budgets) or passes >= state.player_count
    return replace(
        state,
        config=config,
        moves_remaining=tuple(budgets),
        current_player=(state.current_player + 1) % state.player_count,
        history=state.history + (entry,),
        consecutive_passes=passes,
        terminal=terminal,
    )


def is_terminal(state: GameState) -> bool:
    return state.terminal


def final_score(state: GameState) -> int:
    return score(state.config, state.score_mode)


def terminal_result(state: GameState) -> tuple[bool, int | None]:
    """(terminal, final score) — the score is None while play continues."""
    return (state.terminal, final_score(state) if state.terminal else None)


def replay(start: GameState, moves) -> GameState:
    """Apply a move sequence; mainly for history verification."""
    state = start
    for move in moves:
        state = apply_move(state, move)
    return state
