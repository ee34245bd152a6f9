import pytest

from polyfence.board import BoardConfig
from polyfence.geometry import Placement, Transform
from polyfence.pieces import piece_set
from polyfence.rules import (SCORE_THRESHOLDS, InvalidFenceError, ScoreMode,
                             moves_per_player, score, validate_fence)

from conftest import load_fixture


class TestValidateFence:
    def test_nine_tile_is_valid(self, tetromino_nine):
        report = validate_fence(tetromino_nine)
        assert report.valid
        assert report.violations == ()
        assert report.area == 9

    def test_missing_piece(self, tetromino_nine):
        cfg = tetromino_nine.without("o")
        report = validate_fence(cfg)
        assert not report.valid
        assert [v.kind for v in report.violations] == ["missing-piece"]
        assert report.violations[0].piece == "o"

    def test_under_connected_and_disconnected(self):
        cfg = load_fixture("corner_pair")
        report = validate_fence(cfg)
        kinds = {v.kind for v in report.violations}
        assert "under-connected-piece" in kinds
        assert "fence-disconnected" in kinds

    def test_overlap_reported_not_raised(self):
        ps = piece_set("i,o")
        cfg = BoardConfig(6, 6, ps, (
            Placement("i", Transform(), (0, 0)),
            Placement("o", Transform(), (0, 0)),
        ))
        report = validate_fence(cfg)
        assert not report.valid
        assert any(v.kind == "overlap" for v in report.violations)

    def test_out_of_bounds_reported(self):
        ps = piece_set("i,o")
        cfg = BoardConfig(4, 4, ps, (Placement("i", Transform(), (3, 3)),))
        report = validate_fence(cfg)
        assert any(v.kind == "out-of-bounds" for v in report.violations)

    def test_report_always_carries_topology(self, two_holes):
        report = validate_fence(two_holes.without("t"))
        assert report.topology is not None
        assert report.area == report.topology.area

    def test_valid_iff_no_violations(self, tetromino_nine, two_holes):
        for cfg in (tetromino_nine, two_holes, load_fixture("corner_pair")):
            report = validate_fence(cfg)
            assert report.valid == (len(report.violations) == 0)


class TestScore:
    def test_nine(self, tetromino_nine):
        assert score(tetromino_nine) == 9
        assert score(tetromino_nine, ScoreMode.MISERE) == 9

    def test_misere_zero_for_closed_shape(self):
        cfg = load_fixture("misere_zero")
        assert score(cfg, ScoreMode.MISERE) == 0

    def test_invalid_fence_raises(self, tetromino_nine):
        with pytest.raises(InvalidFenceError):
            score(tetromino_nine.without("i"))

    def test_thresholds_metadata(self):
        assert SCORE_THRESHOLDS == {
            "good": 100, "excellent": 120, "exceptional": 125, "maximum": 128}


class TestMovesPerPlayer:
    def test_reference_table(self):
        table = [24, 12, 8, 6, 5, 4, 3, 3, 3, 2, 2, 2]
        assert [moves_per_player(n) for n in range(1, 13)] == table

    def test_zero_players_rejected(self):
        with pytest.raises(ValueError):
            moves_per_player(0)

    def test_large_groups_still_move(self):
        assert moves_per_player(100) == 1
