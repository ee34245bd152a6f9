"""Newline-delimited JSON session service.

One TCP connection = one session = at most one game. Requests are handled
strictly in arrival order within a session; the engine itself is pure, so
concurrent sessions never share mutable state.

Message shapes:
  request:  {"id": str, "op": str, "args": {...}}
  response: {"id": str, "ok": true, "result": {...}}
            {"id": str, "ok": false, "error": {"code": str, "message": str}}
"""
from __future__ import annotations

import json
import socketserver

from .board import BoardConfig
from .fileio import ParseError, config_from_document, render_ascii, serialize_config
from .game import (GameError, GameState, IllegalMoveError, Pass, Relocate,
                   apply_move, new_game)
from .geometry import Transform
from .rules import InvalidFenceError, ScoreMode, validate_fence
from .solver import best_relocation
from .topology import board_topology


class SessionError(Exception):
    def __init__(self, code: str, message: str):
        self.code = code
        super().__init__(message)


def _config_doc(config: BoardConfig) -> dict:
    return json.loads(serialize_config(config))


def _state_result(session: "Session") -> dict:
    state = session.game
    report = validate_fence(state.config)
    out = {
        "config": _config_doc(state.config),
        "grid": render_ascii(state.config).splitlines(),
        "area": report.area,
        "currentPlayer": state.current_player,
        "movesRemaining": list(state.moves_remaining),
        "players": state.player_count,
        "mode": state.score_mode.value,
        "terminal": state.terminal,
        "bestSoFar": session.best_so_far,
        "moves": len(state.history),
    }
    if state.terminal:
        out["finalScore"] = report.area
    return out


class Session:
    """Per-connection request handling; owns at most one game."""

    def __init__(self):
        self.game: GameState | None = None
        self.best_so_far: int | None = None

    def handle(self, request: dict) -> dict:
        rid = request.get("id") if isinstance(request, dict) else None
        try:
            if not isinstance(request, dict) or "op" not in request:
                raise SessionError("bad-request", "expected {id, op, args}")
            op = request["op"]
            args = request.get("args") or {}
            if not isinstance(args, dict):
                raise SessionError("bad-request", "args must be an object")
            handler = getattr(self, f"op_{op}", None)
            if handler is None:
                raise SessionError("bad-request", f"unknown op {op!r}")
            result = handler(args)
            return {"id": rid, "ok": True, "result": result}
        except SessionError as exc:
            return {"id": rid, "ok": False,
                    "error": {"code": exc.code, "message": str(exc)}}

    # ---- stateless ops

    def _parse_config(self, args: dict) -> BoardConfig:
        doc = args.get("config")
        if doc is None:
            raise SessionError("bad-request", "missing config argument")
        try:
            return config_from_document(doc, strict=False)
        except ParseError as exc:
            raise SessionError("invalid-config", str(exc)) from exc
        except (ValueError, KeyError) as exc:
            raise SessionError("invalid-config", str(exc)) from exc

    def op_validate(self, args: dict) -> dict:
        config = self._parse_config(args)
        out = validate_fence(config).to_dict()
        out["grid"] = render_ascii(config).splitlines()
        return out

    def op_area(self, args: dict) -> dict:
        topo = board_topology(self._parse_config(args))
        return {"area": topo.area, "holeCount": topo.hole_count,
                "fenceConnected": topo.fence_connected}

    # ---- game ops

    def _require_game(self) -> GameState:
        if self.game is None:
            raise SessionError("bad-request", "no game in this session; send newGame")
        return self.game

    def _require_turn(self, args: dict) -> int:
        player = args.get("player")
        state = self._require_game()
        if player is None:
            return state.current_player
        if not isinstance(player, int) or not 0 <= player < state.player_count:
            raise SessionError("bad-request", f"bad player {player!r}")
        if player != state.current_player:
            raise SessionError("not-your-turn",
                               f"player {player} moved out of turn "
                               f"(current: {state.current_player})")
        return player

    def op_newGame(self, args: dict) -> dict:
        players = args.get("players")
        if not isinstance(players, int) or players < 1:
            raise SessionError("bad-request", "players must be a positive integer")
        start_doc = args.get("start")
        if start_doc is None:
            raise SessionError("bad-request", "missing start configuration")
        try:
            start = config_from_document(start_doc, strict=True)
        except ParseError as exc:
            raise SessionError("invalid-config", str(exc)) from exc
        mode_name = args.get("mode", ScoreMode.STANDARD.value)
        try:
            mode = ScoreMode(mode_name)
        except ValueError as exc:
            raise SessionError("bad-request", f"unknown mode {mode_name!r}") from exc
        starting = args.get("startingPlayer", 0)
        if not isinstance(starting, int):
            raise SessionError("bad-request", "startingPlayer must be an integer")
        try:
            self.game = new_game(start, players, mode, starting)
        except InvalidFenceError as exc:
            raise SessionError("invalid-config", str(exc)) from exc
        except ValueError as exc:
            raise SessionError("bad-request", str(exc)) from exc
        self.best_so_far = self.game.area
        result = _state_result(self)
        result["budgets"] = list(self.game.moves_remaining)
        return result

    def _apply(self, move) -> dict:
        state = self._require_game()
        try:
            self.game = apply_move(state, move)
        except IllegalMoveError as exc:
            raise SessionError("illegal-move", str(exc)) from exc
        except GameError as exc:
            raise SessionError(exc.code, str(exc)) from exc
        area = self.game.history[-1].area
        if self.best_so_far is None or area > self.best_so_far:
            self.best_so_far = area
        return _state_result(self)

    def op_applyMove(self, args: dict) -> dict:
        self._require_turn(args)
        piece = args.get("piece")
        rot = args.get("rot", 0)
        flip = args.get("flip", False)
        anchor = args.get("anchor")
        if (not isinstance(piece, str) or rot not in (0, 90, 180, 270)
                or not isinstance(flip, bool) or not isinstance(anchor, list)
                or len(anchor) != 2 or not all(isinstance(v, int) for v in anchor)):
            raise SessionError("bad-request",
                               "applyMove needs {piece, rot, flip, anchor:[x,y]}")
        state = self._require_game()
        if piece not in state.config.piece_set:
            raise SessionError("bad-request", f"unknown piece {piece!r}")
        return self._apply(Relocate(piece, Transform(rot, flip), (anchor[0], anchor[1])))

    def op_passMove(self, args: dict) -> dict:
        self._require_turn(args)
        return self._apply(Pass())

    def op_state(self, args: dict) -> dict:
        self._require_game()
        return _state_result(self)

    def op_solveHint(self, args: dict) -> dict:
        state = self._require_game()
        if state.terminal:
            raise SessionError("game-over", "the game is over")
        step = best_relocation(state.config, state.score_mode)
        if step is None:
            return {"move": None, "area": state.area}
        improved, area = step
        moved = next(
            p for p in improved.placements
            if state.config.placement_of(p.piece) != p
        )
        return {
            "move": {
                "piece": moved.piece,
                "rot": moved.transform.rot,
                "flip": moved.transform.flip,
                "anchor": [moved.anchor[0], moved.anchor[1]],
            },
            "area": area,
        }


class _Handler(socketserver.StreamRequestHandler):
    def handle(self):
        session = Session()
        for raw in self.rfile:
            line = raw.strip()
            if not line:
                continue
            try:
                request = json.loads(line)
            except json.JSONDecodeError as exc:
                response = {"id": None, "ok": False,
                            "error": {"code": "bad-request", "message": str(exc)}}
            else:
                response = session.handle(request)
            self.wfile.write(json.dumps(response, sort_keys=True).encode() + b"\n")
            self.wfile.flush()


class SessionServer(socketserver.ThreadingTCPServer):
    allow_reuse_address = True
    daemon_threads = True


def serve(host: str = "127.0.0.1", port: int = 0, announce=print) -> SessionServer:
    """Start the session service; returns the running server object.

    With port 0 the OS picks one; the bound address is announced on stdout
    as 'listening on HOST:PORT' so callers can connect.
    """
    server = SessionServer((host, port), _Handler)
    announce(f"listening on {server.server_address[0]}:{server.server_address[1]}",
             flush=True)
    return server


def serve_forever(host: str = "127.0.0.1", port: int = 0) -> None:
    server = serve(host, port)
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
