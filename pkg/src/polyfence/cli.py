"""The `fence` command line tool.

Exit codes: 0 success / valid; 1 invalid fence (validate); 2 usage errors
(argparse's default); 3 unreadable or unparseable files.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from .board import BoardConfig
from .fileio import ParseError, load_config, render_ascii, save_config, serialize_config
from .game import IllegalMoveError, Pass, Relocate, apply_move, new_game
from .geometry import Transform
from .pieces import piece_set
from .rules import SCORE_THRESHOLDS, InvalidFenceError, ScoreMode, validate_fence
from .solver import improve_local, search_branch_and_bound, solve_exhaustive
from .topology import board_topology

EXIT_INVALID = 1
EXIT_FILE = 3


class FileCliError(Exception):
    pass


def _load(path: str, strict: bool = False) -> BoardConfig:
    try:
        return load_config(path, strict=strict)
    except OSError as exc:
        raise FileCliError(f"cannot read {path}: {exc}") from exc
    except ParseError as exc:
        raise FileCliError(f"cannot parse {path}: {exc}") from exc


def cmd_validate(args) -> int:
    report = validate_fence(_load(args.file))
    print(json.dumps(report.to_dict(), sort_keys=True, indent=2))
    return 0 if report.valid else EXIT_INVALID


def cmd_area(args) -> int:
    print(board_topology(_load(args.file)).area)
    return 0


def cmd_render(args) -> int:
    print(render_ascii(_load(args.file)))
    return 0


def cmd_solve(args) -> int:
    pieces = piece_set(args.pieces)
    if args.exhaustive:
        result = solve_exhaustive(pieces)
    else:
        result = search_branch_and_bound(pieces, time_budget=args.time)
    print(json.dumps(result.summary(), sort_keys=True))
    if args.out:
        os.makedirs(args.out, exist_ok=True)
        for i, solution in enumerate(result.solutions):
            save_config(os.path.join(args.out, f"solution-{i:04d}.json"), solution)
        print(f"wrote {len(result.solutions)} solution file(s) to {args.out}",
              file=sys.stderr)
    return 0


def cmd_improve(args) -> int:
    config = _load(args.file)
    try:
        improved = improve_local(config, budget=args.budget)
    except InvalidFenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    sys.stdout.write(serialize_config(improved))
    return 0


def cmd_serve(args) -> int:
    from .server import serve_forever

    serve_forever(args.host, args.port)
    return 0


def cmd_play(args) -> int:
    start = _load(args.start, strict=True)
    mode = ScoreMode(args.mode)
    try:
        state = new_game(start, args.players, mode)
    except InvalidFenceError as exc:
        print(f"error: starting position is not a valid fence ({exc})", file=sys.stderr)
        return EXIT_INVALID
    print(f"{args.players} player(s), {state.moves_remaining[0]} move(s) each, "
          f"{mode.value} scoring. Thresholds: {SCORE_THRESHOLDS}")
    print("commands: move <piece> <rot> <flip|noflip> <x> <y> | pass | board | quit")
    while not state.terminal:
        print(render_ascii(state.config))
        print(f"area {state.area} | budgets {list(state.moves_remaining)} "
              f"| player {state.current_player} to move")
        try:
            line = input(f"p{state.current_player}> ").strip()
        except EOFError:
            print()
            break
        if not line:
            continue
        parts = line.split()
        try:
            if parts[0] == "quit":
                break
            elif parts[0] == "board":
                continue
            elif parts[0] == "pass":
                state = apply_move(state, Pass())
            elif parts[0] == "move" and len(parts) == 6:
                piece, rot, flip, x, y = (parts[1], int(parts[2]),
                                          parts[3] == "flip", int(parts[4]), int(parts[5]))
                state = apply_move(state, Relocate(piece, Transform(rot, flip), (x, y)))
            else:
                print("bad command")
                continue
        except (IllegalMoveError, ValueError) as exc:
            print(f"rejected: {exc} (the piece stays where it was)")
            continue
    print(render_ascii(state.config))
    print(f"final area: {state.area}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fence",
        description="Polyomino fence toolkit: validate, score, solve, play, serve.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a board file, print the report")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("area", help="print the enclosed area of a board file")
    p.add_argument("file")
    p.set_defaults(func=cmd_area)

    p = sub.add_parser("render", help="print a board file as ASCII")
    p.add_argument("file")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("solve", help="search for maximum-area fences")
    p.add_argument("--pieces", required=True,
                   help="tetromino, pentomino, or comma-separated labels")
    p.add_argument("--time", type=float, default=60.0,
                   help="time budget in seconds for the anytime search")
    p.add_argument("--exhaustive", action="store_true",
                   help="run the full enumeration instead of the anytime search")
    p.add_argument("--out", help="directory for solution files")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("improve", help="hill-climb single-piece relocations")
    p.add_argument("file")
    p.add_argument("--budget", type=int, default=None, help="max relocations")
    p.set_defaults(func=cmd_improve)

    p = sub.add_parser("play", help="interactive game loop on stdio")
    p.add_argument("--players", type=int, required=True)
    p.add_argument("--start", required=True, help="starting board file")
    p.add_argument("--mode", choices=[m.value for m in ScoreMode],
                   default=ScoreMode.STANDARD.value)
    p.set_defaults(func=cmd_play)

    p = sub.add_parser("serve", help="newline-delimited JSON session service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=0)
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except FileCliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FILE


if __name__ == "__main__":
    sys.exit(main())
