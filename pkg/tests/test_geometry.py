import pytest
from hypothesis import given
from hypothesis import strategies as st

from polyfence.geometry import (DisconnectedShapeError, Transform,
                                TRANSFORMS, connected_components,
                                normalize_cells, orientations,
                                placement_from_cells, resolve_shape)
from polyfence.pieces import (PENTOMINO_LABELS, TETROMINO_LABELS,
                              load_piece_definitions, pentominoes, piece_set,
                              tetrominoes)

DEFS = load_piece_definitions()


class TestNormalize:
    def test_pure_translation(self):
        assert normalize_cells({(3, 3), (3, 4), (4, 3), (4, 4)}) == \
            ((0, 0), (0, 1), (1, 0), (1, 1))

    def test_identity(self):
        assert normalize_cells({(0, 0)}) == ((0, 0),)

    def test_disconnected_rejected(self):
        with pytest.raises(DisconnectedShapeError):
            normalize_cells({(0, 0), (2, 0)})

    def test_empty_rejected(self):
        with pytest.raises(DisconnectedShapeError):
            normalize_cells(set())


class TestTransforms:
    def test_eight_distinct(self):
        assert len(TRANSFORMS) == 8
        probe = DEFS["F"].cells  # fully asymmetric piece
        images = {tuple(sorted(t.apply(probe))) for t in TRANSFORMS}
        assert len(images) == 8

    def test_composition_matches_dihedral_group(self):
        probe = DEFS["F"].cells
        for a in TRANSFORMS:
            for b in TRANSFORMS:
                composed = a.then(b)
                assert sorted(b.apply(a.apply(probe))) == \
                    sorted(composed.apply(probe))

    def test_rotation_order_four(self):
        r = Transform(90)
        acc = Transform()
        for _ in range(4):
            acc = acc.then(r)
        assert acc == Transform()

    def test_bad_rotation(self):
        with pytest.raises(ValueError):
            Transform(45)


# the l tetromino is chiral (no mirror or point symmetry), hence 8
EXPECTED_ORIENTATIONS = {
    "X": 1, "I": 2, "T": 4, "U": 4, "V": 4, "W": 4, "Z": 4,
    "F": 8, "L": 8, "N": 8, "P": 8, "Y": 8,
    "o": 1, "i": 2, "t": 4, "l": 8, "n": 4,
}


class TestOrientations:
    @pytest.mark.parametrize("label,count", sorted(EXPECTED_ORIENTATIONS.items()))
    def test_counts(self, label, count):
        assert len(orientations(DEFS[label])) == count

    @pytest.mark.parametrize("label", sorted(DEFS))
    def test_count_divides_eight(self, label):
        n = len(orientations(DEFS[label]))
        assert n in (1, 2, 4, 8)

    def test_deterministic_order(self):
        a = [s.cells for s in orientations(DEFS["F"])]
        assert a == sorted(a)


class TestResolve:
    def test_square_is_transform_invariant(self):
        tet = tetrominoes()
        for t in TRANSFORMS:
            assert resolve_shape(tet["o"], t, (4, 1)) == \
                frozenset({(4, 1), (5, 1), (4, 2), (5, 2)})

    def test_pentomino_i_rot90_is_a_row(self):
        pent = pentominoes()
        cells = resolve_shape(pent["I"], Transform(90), (0, 0))
        assert cells == frozenset({(0, 0), (1, 0), (2, 0), (3, 0), (4, 0)})

    def test_f_rot180_flip_exact_cells(self):
        # hand-applied pipeline: mirror F across the vertical axis, rotate
        # 180, renormalize, then shift by (2, 2)
        pent = pentominoes()
        flipped = {(-x, y) for x, y in pent["F"].cells}
        rotated = {(-x, -y) for x, y in flipped}
        mx = min(x for x, _ in rotated)
        my = min(y for _, y in rotated)
        expected = frozenset((x - mx + 2, y - my + 2) for x, y in rotated)
        got = resolve_shape(pent["F"], Transform(180, flip=True), (2, 2))
        assert got == expected
        assert got == frozenset({(2, 3), (3, 2), (3, 3), (3, 4), (4, 2)})

    @given(st.sampled_from(sorted(DEFS)), st.integers(-5, 25), st.integers(-5, 25),
           st.integers(-3, 3), st.integers(-3, 3))
    def test_anchor_translation(self, label, ax, ay, dx, dy):
        shape = DEFS[label]
        base = resolve_shape(shape, Transform(), (ax, ay))
        moved = resolve_shape(shape, Transform(), (ax + dx, ay + dy))
        assert moved == frozenset((x + dx, y + dy) for x, y in base)

    def test_placement_from_cells_roundtrip(self):
        pent = pentominoes()
        for t in TRANSFORMS:
            cells = resolve_shape(pent["F"], t, (3, 7))
            p = placement_from_cells("F", pent["F"], cells)
            assert resolve_shape(pent["F"], p.transform, p.anchor) == cells


class TestConnectedComponents:
    def test_corner_contact_two_components(self):
        o = {(0, 0), (1, 0), (0, 1), (1, 1)}
        n = {(2, 2), (3, 2), (3, 3), (4, 3)}
        assert len(connected_components(o | n)) == 2

    def test_edge_contact_one_component(self):
        o = {(0, 0), (1, 0), (0, 1), (1, 1)}
        n = {(1, 2), (2, 2), (2, 3), (3, 3)}
        assert len(connected_components(o | n)) == 1

    def test_empty(self):
        assert connected_components(set()) == []


class TestPieceSets:
    def test_builtin_sets(self):
        assert tetrominoes().labels == TETROMINO_LABELS
        assert pentominoes().labels == PENTOMINO_LABELS
        assert all(s.size == 4 for s in tetrominoes())
        assert all(s.size == 5 for s in pentominoes())

    def test_custom_subset_sorted(self):
        ps = piece_set("o,i,l")
        assert ps.name == "i,l,o"
        assert ps.labels == ("i", "l", "o")

    def test_unknown_label(self):
        with pytest.raises(KeyError):
            piece_set("i,q")

    def test_pieces_path_env(self, tmp_path, monkeypatch):
        import json

        from polyfence import pieces as pieces_mod
        path = tmp_path / "alt.json"
        path.write_text(json.dumps({"d": [[0, 0], [1, 0]]}))
        monkeypatch.setenv(pieces_mod.PIECES_PATH_ENV, str(path))
        defs = load_piece_definitions()
        assert set(defs) == {"d"}
        assert defs["d"].cells == ((0, 0), (1, 0))
