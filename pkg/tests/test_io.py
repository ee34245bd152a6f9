import json
import subprocess
import sys

import pytest

from polyfence.board import BoardConfig
from polyfence.fileio import (ParseError, parse_ascii, parse_config,
                              render_ascii, serialize_config)
from polyfence.geometry import Placement, Transform
from polyfence.pieces import piece_set, tetrominoes

from conftest import fixture_path


class TestRoundTrip:
    def test_parse_serialize_identity(self, tetromino_nine):
        text = serialize_config(tetromino_nine)
        again = parse_config(text)
        assert again == tetromino_nine
        assert serialize_config(again) == text

    def test_byte_stable(self, tetromino_nine):
        assert serialize_config(tetromino_nine) == serialize_config(tetromino_nine)

    def test_fixture_files_round_trip(self, fixtures_dir):
        import os
        for name in sorted(os.listdir(fixtures_dir)):
            path = os.path.join(fixtures_dir, name)
            with open(path) as fh:
                text = fh.read()
            cfg = parse_config(text, strict=False)
            assert parse_config(serialize_config(cfg), strict=False) == cfg


class TestParseErrors:
    def test_defaults(self):
        cfg = parse_config('{"placements": []}')
        assert (cfg.width, cfg.height) == (20, 20)
        assert cfg.piece_set.name == "pentomino"
        assert cfg.placements == ()

    def test_malformed_json(self):
        with pytest.raises(ParseError) as exc:
            parse_config("{nope")
        assert exc.value.code == "bad-json"

    def test_unknown_schema_version(self):
        with pytest.raises(ParseError) as exc:
            parse_config('{"schemaVersion": 99, "placements": []}')
        assert exc.value.code == "bad-schema"

    def test_unknown_field_rejected(self):
        with pytest.raises(ParseError) as exc:
            parse_config('{"placements": [], "color": "red"}')
        assert exc.value.code == "unknown-field"

    def test_duplicate_piece(self):
        doc = {"pieceSet": "pentomino", "placements": [
            {"piece": "F", "rot": 0, "flip": False, "anchor": [0, 0]},
            {"piece": "F", "rot": 90, "flip": False, "anchor": [5, 5]},
        ]}
        with pytest.raises(ParseError) as exc:
            parse_config(json.dumps(doc))
        assert exc.value.code == "duplicate-piece"
        assert exc.value.placement_index == 1

    def test_unknown_piece(self):
        doc = {"pieceSet": "tetromino", "placements": [
            {"piece": "F", "rot": 0, "flip": False, "anchor": [0, 0]}]}
        with pytest.raises(ParseError) as exc:
            parse_config(json.dumps(doc))
        assert exc.value.code == "unknown-piece"
        assert exc.value.placement_index == 0

    def test_overlap_strict_only(self):
        doc = {"pieceSet": "tetromino", "board": {"width": 6, "height": 6},
               "placements": [
                   {"piece": "i", "rot": 0, "flip": False, "anchor": [0, 0]},
                   {"piece": "l", "rot": 0, "flip": False, "anchor": [0, 0]}]}
        with pytest.raises(ParseError) as exc:
            parse_config(json.dumps(doc))
        assert exc.value.code == "overlap"
        cfg = parse_config(json.dumps(doc), strict=False)
        assert len(cfg.placements) == 2

    def test_out_of_bounds_strict_only(self):
        doc = {"pieceSet": "tetromino", "board": {"width": 4, "height": 4},
               "placements": [
                   {"piece": "i", "rot": 0, "flip": False, "anchor": [3, 3]}]}
        with pytest.raises(ParseError) as exc:
            parse_config(json.dumps(doc))
        assert exc.value.code == "out-of-bounds"
        assert parse_config(json.dumps(doc), strict=False).placements


class TestRenderAscii:
    def test_empty_board(self):
        cfg = BoardConfig(3, 3, tetrominoes(), ())
        assert render_ascii(cfg) == "...\n...\n..."

    def test_nine_tile_has_nine_stars(self, tetromino_nine):
        text = render_ascii(tetromino_nine)
        assert text.count("*") == 9
        assert text.splitlines()[0] == "." * 8  # top row first

    def test_overlap_renders_hash(self):
        ps = piece_set("i,o")
        cfg = BoardConfig(6, 6, ps, (
            Placement("i", Transform(), (0, 0)),
            Placement("o", Transform(), (0, 0))))
        assert "#" in render_ascii(cfg)

    def test_render_reparse_reproduces_occupancy(self, tetromino_nine):
        text = render_ascii(tetromino_nine)
        again = parse_ascii(text, "tetromino",
                            tetromino_nine.width, tetromino_nine.height)
        assert again.resolved() == tetromino_nine.resolved()


class TestCli:
    def run(self, *args, inp=None):
        return subprocess.run(
            [sys.executable, "-m", "polyfence.cli", *args],
            capture_output=True, text=True, input=inp, timeout=300)

    def test_area(self):
        out = self.run("area", fixture_path("tetromino_nine"))
        assert out.returncode == 0
        assert out.stdout.strip() == "9"

    def test_validate_valid(self):
        out = self.run("validate", fixture_path("tetromino_nine"))
        assert out.returncode == 0
        assert json.loads(out.stdout)["valid"] is True

    def test_validate_invalid_exit_1(self):
        out = self.run("validate", fixture_path("corner_pair"))
        assert out.returncode == 1
        report = json.loads(out.stdout)
        kinds = {v["kind"] for v in report["violations"]}
        assert "under-connected-piece" in kinds

    def test_missing_file_exit_3(self):
        out = self.run("area", "/does/not/exist.json")
        assert out.returncode == 3

    def test_bad_json_exit_3(self, tmp_path):
        p = tmp_path / "bad.json"
        p.write_text("{")
        assert self.run("validate", str(p)).returncode == 3

    def test_unknown_subcommand_exit_2(self):
        assert self.run("frobnicate").returncode == 2

    def test_unknown_flag_exit_2(self):
        assert self.run("area", "--wat", fixture_path("tetromino_nine")).returncode == 2

    def test_improve_outputs_config(self):
        out = self.run("improve", fixture_path("two_holes"), "--budget", "1")
        assert out.returncode == 0
        improved = parse_config(out.stdout)
        assert improved.piece_set.name == "i,l,n,t"

    def test_render(self):
        out = self.run("render", fixture_path("tetromino_nine"))
        assert out.returncode == 0
        assert out.stdout.count("*") == 9

    def test_solve_small_subset(self, tmp_path):
        out = self.run("solve", "--pieces", "i,l,o", "--exhaustive",
                       "--out", str(tmp_path / "sols"))
        assert out.returncode == 0
        summary = json.loads(out.stdout)
        assert summary["exhaustive"] is True

    def test_play_scripted(self):
        out = self.run("play", "--players", "2", "--start",
                       fixture_path("tetromino_nine"),
                       inp="move t 270 noflip 4 3\npass\npass\n")
        assert out.returncode == 0
        assert "final area: 8" in out.stdout
