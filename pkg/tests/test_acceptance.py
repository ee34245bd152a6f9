"""Acceptance suite: one test per criterion, one printed verdict line each.

Run with `pytest tests/test_acceptance.py -v` (or just `pytest`). The
exhaustive tetromino search and the unpruned-oracle comparisons dominate
the runtime; everything else is seconds.
"""
import itertools
import random
import sys

from polyfence.board import BoardConfig
from polyfence.fileio import parse_config, serialize_config
from polyfence.game import Relocate, apply_move, new_game
from polyfence.geometry import TRANSFORMS, Placement, Transform, orientations
from polyfence.pieces import (load_piece_definitions, pentominoes, piece_set,
                              tetrominoes)
from polyfence.rules import moves_per_player, score, validate_fence
from polyfence.solver import (best_relocation, perimeter_budget, piece_length,
                              rectangle_candidates, solve_exhaustive)
from polyfence.topology import board_topology, transform_config

from conftest import load_fixture
from oracles import (enumerate_fences_bruteforce, grid_orientation_count,
                     unionfind_topology)

DEFS = load_piece_definitions()


def verdict(name, ok):
    print(f"[{'PASS' if ok else 'FAIL'}] {name}", file=sys.__stdout__, flush=True)
    assert ok, name


class TestAcceptance:
    def test_01_tetromino_optimum(self):
        result = solve_exhaustive(tetrominoes())
        ok = (result.max_area == 9
              and result.dedup_count == 21      # the known count, as symmetry classes
              and result.raw_count == 168       # 21 classes x 8 dihedral images
              and result.exhaustive
              and result.elapsed < 300)
        verdict(f"tetromino optimum: maxArea={result.max_area} "
                f"raw={result.raw_count} dedup={result.dedup_count} "
                f"exhaustive={result.exhaustive} elapsed={result.elapsed:.0f}s", ok)

    def test_02_perimeter_machinery(self):
        lengths = {lab: piece_length(DEFS[lab]).length for lab in "ilnot"}
        budget = perimeter_budget(tetrominoes())
        interiors = {c.interior for c in rectangle_candidates(18)}
        head = rectangle_candidates(18)[0]
        ok = (lengths == {"i": 4, "l": 4, "n": 4, "t": 3, "o": 3}
              and budget == 18
              and {12, 9, 8, 6} <= interiors
              and (head.a, head.b, head.interior) == (5, 4, 12))
        verdict(f"perimeter machinery: lengths={lengths} budget={budget}", ok)

    def test_03_pentomino_optimum_validation(self):
        cfg = load_fixture("pentomino_max")
        report = validate_fence(cfg)
        step = best_relocation(cfg)  # full single-relocation neighborhood scan
        ok = (report.valid and report.area == 128
              and score(cfg) == 128 and step is None)
        verdict(f"pentomino optimum: valid={report.valid} area={report.area} "
                f"improving-move={'none' if step is None else step[1]}", ok)

    def test_04_game_replay(self):
        start = load_fixture("replay_a")
        game = new_game(start, player_count=3)
        budgets = game.moves_remaining
        areas = [game.area]
        state = game
        for panel in ("replay_b", "replay_c", "replay_d"):
            target = load_fixture(panel)
            move = next(
                Relocate(p.piece, p.transform, p.anchor)
                for p in target.placements
                if state.config.placement_of(p.piece) != p)
            state = apply_move(state, move)
            areas.append(state.history[-1].area)
        ok = areas == [29, 34, 40, 47] and budgets == (8, 8, 8)
        verdict(f"game replay: areas={areas} budgets={list(budgets)}", ok)

    def test_05_move_budget_table(self):
        table = [moves_per_player(n) for n in range(1, 13)]
        want = [24, 12, 8, 6, 5, 4, 3, 3, 3, 2, 2, 2]
        verdict(f"move budgets 1..12: {table}", table == want)

    def test_06_orientation_counts(self):
        got = {lab: len(orientations(DEFS[lab])) for lab in DEFS}
        oracle = {lab: grid_orientation_count(DEFS[lab].cells) for lab in DEFS}
        want = {"X": 1, "I": 2, "T": 4, "U": 4, "V": 4, "W": 4, "Z": 4,
                "F": 8, "L": 8, "N": 8, "P": 8, "Y": 8,
                "o": 1, "i": 2, "t": 4, "l": 8, "n": 4}
        ok = got == oracle == want
        verdict(f"orientation counts match dedup oracle: {ok}", ok)

    def test_07a_flood_fill_vs_union_find(self):
        rng = random.Random(128)
        checked = 0
        for _ in range(1000):
            pieces = pentominoes() if rng.random() < 0.5 else tetrominoes()
            labels = rng.sample(list(pieces.labels), k=rng.randint(1, len(pieces)))
            placements = tuple(
                Placement(lab,
                          Transform(rng.choice((0, 90, 180, 270)), rng.random() < 0.5),
                          (rng.randint(0, 8), rng.randint(0, 8)))
                for lab in labels)
            cfg = BoardConfig(13, 13, pieces, placements)
            occupied = set()
            for cells in cfg.resolved().values():
                occupied |= cells
            topo = board_topology(cfg)
            comps, holes, area = unionfind_topology(occupied, 13, 13)
            assert (topo.fence_connected, topo.hole_count, topo.area) == \
                (comps <= 1, holes, area)
            checked += 1
        verdict(f"flood fill vs union-find oracle on {checked} random configs", True)

    def test_07b_dihedral_translation_invariance(self):
        for name in ("pentomino_max", "replay_a", "tetromino_nine", "two_holes"):
            cfg = load_fixture(name)
            base = validate_fence(cfg)
            for t in TRANSFORMS:
                image = transform_config(cfg, t)
                rep = validate_fence(image)
                assert (rep.valid, rep.area) == (base.valid, base.area)
            moved = BoardConfig(
                cfg.width + 4, cfg.height + 4, cfg.piece_set,
                tuple(Placement(p.piece, p.transform,
                                (p.anchor[0] + 2, p.anchor[1] + 2))
                      for p in cfg.placements))
            rep = validate_fence(moved)
            assert (rep.valid, rep.area) == (base.valid, base.area)
        verdict("area/validity invariant under the 8 dihedral maps + translation", True)

    def test_07c_serialization_round_trip(self):
        import os
        from conftest import FIXTURES
        for name in sorted(os.listdir(FIXTURES)):
            with open(os.path.join(FIXTURES, name)) as fh:
                text = fh.read()
            cfg = parse_config(text, strict=False)
            assert parse_config(serialize_config(cfg), strict=False) == cfg
        verdict("parse/serialize round-trip identity on all fixtures", True)

    def test_07d_pruned_vs_unpruned_all_triples(self):
        mismatches = []
        for triple in itertools.combinations("ilnot", 3):
            name = ",".join(sorted(triple))
            pruned = solve_exhaustive(piece_set(name), bounding_box=(8, 8))
            shapes = {lab: [s.cells for s in orientations(DEFS[lab])]
                      for lab in triple}
            oracle = enumerate_fences_bruteforce(shapes, 8, 8)
            if not oracle:
                if pruned.max_area is not None:
                    mismatches.append(name)
                continue
            best = max(a for _, a in oracle)
            raw = set()
            for labeled, a in oracle:
                if a != best:
                    continue
                cells = [c for cs in labeled.values() for c in cs]
                mx = min(x for x, _ in cells)
                my = min(y for _, y in cells)
                raw.add(tuple(
                    (lab, tuple(sorted((x - mx, y - my) for x, y in labeled[lab])))
                    for lab in sorted(labeled)))
            if pruned.max_area != best or pruned.raw_count != len(raw):
                mismatches.append(f"{name}: {pruned.max_area}/{pruned.raw_count} "
                                  f"vs oracle {best}/{len(raw)}")
        verdict(f"pruned search equals unpruned 8x8 oracle on all 10 triples "
                f"{mismatches or ''}", not mismatches)

    def test_08_validity_fixtures(self):
        report = validate_fence(load_fixture("corner_touch"))
        under = any(v.kind == "under-connected-piece" for v in report.violations)
        from polyfence.geometry import connected_components
        left = load_fixture("corner_pair")
        right = load_fixture("edge_pair")
        n_left = len(connected_components(left.occupied()))
        n_right = len(connected_components(right.occupied()))
        ok = (not report.valid) and under and n_left == 2 and n_right == 1
        verdict(f"validity fixtures: corner-touch under-connected={under}, "
                f"components left={n_left} right={n_right}", ok)
