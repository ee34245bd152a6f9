"""Compare the numba and numpy kernel backends on the hot paths.

Usage: python benchmarks/bench_kernels.py [--repeat N]
"""
import argparse
import random
import time

import numpy as np

from polyfence.board import occupancy_rows
from polyfence.fileio import load_config
from polyfence.kernels import get_backend
from polyfence.pieces import piece_set
from polyfence.solver import _box_placements, _search_order


def timed(fn, repeat):
    fn()  # warm-up (first numba call compiles)
    t0 = time.perf_counter()
    for _ in range(repeat):
        fn()
    return (time.perf_counter() - t0) / repeat


def bench_flood(backend, boards):
    def run():
        for occ in boards:
            backend.board_stats(occ, 20)
    return run


def bench_relocation(backend, args):
    def run():
        backend.relocation_scan(*args)
    return run


def bench_enumerate(backend, tables):
    masks, dils, ptr = tables

    def run():
        out_idx = np.empty((20000, ptr.shape[0] - 1), dtype=np.int64)
        out_area = np.empty(20000, dtype=np.int64)
        backend.enumerate_fences(masks, dils, ptr, 5, 6, -1, 0, out_idx, out_area)
    return run


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    rng = random.Random(7)
    boards = []
    for _ in range(500):
        cells = {(rng.randrange(20), rng.randrange(20)) for _ in range(140)}
        boards.append(occupancy_rows(cells, 20))

    import os
    fixture = os.path.join(os.path.dirname(__file__), "..",
                           "tests", "fixtures", "pentomino_max.json")
    cfg = load_config(fixture)
    resolved = cfg.resolved()
    labels = [p.piece for p in cfg.placements]
    moved = labels[0]
    backend0 = get_backend("numpy")
    rows = {lab: occupancy_rows(cells, 20) for lab, cells in resolved.items()}
    static = [lab for lab in labels if lab != moved]
    static_masks = np.array([rows[lab] for lab in static], dtype=np.int64)
    static_dils = np.array([backend0.dilate_rows(rows[lab], 20) for lab in static],
                           dtype=np.int64)
    static_adj = np.zeros(len(static), dtype=np.int64)
    for i in range(len(static)):
        for j in range(i + 1, len(static)):
            if backend0.rows_overlap(static_dils[i], static_masks[j]):
                static_adj[i] |= 1 << j
                static_adj[j] |= 1 << i
    from polyfence.geometry import orientations
    cand_masks, cand_dils = [], []
    shape = cfg.piece_set[moved]
    for image in orientations(shape):
        for ay in range(20 - image.height + 1):
            for ax in range(20 - image.width + 1):
                r = occupancy_rows(
                    {(x + ax, y + ay) for x, y in image.cells}, 20)
                cand_masks.append(r)
                cand_dils.append(backend0.dilate_rows(r, 20))
    reloc_args = (static_masks, static_dils, static_adj,
                  np.array(cand_masks, dtype=np.int64),
                  np.array(cand_dils, dtype=np.int64), 20, 20)

    ps = piece_set("i,o,t")
    order = _search_order(ps)
    masks, dils, ptr, _ = _box_placements(ps, 6, 5, order)
    enum_tables = (masks, dils, ptr)

    workloads = [
        ("flood fill stats, 500 random 20x20 boards", bench_flood),
        (f"relocation scan, piece {moved} over the 128-tile board", bench_relocation),
        ("fence enumeration, 3 tetrominoes in a 6x5 box", bench_enumerate),
    ]
    payloads = [boards, reloc_args, enum_tables]

    print(f"{'workload':<55} {'numba':>10} {'numpy':>10} {'speedup':>8}")
    for (name, factory), payload in zip(workloads, payloads):
        times = {}
        for backend_name in ("numba", "numpy"):
            backend = get_backend(backend_name)
            times[backend_name] = timed(factory(backend, payload), args.repeat)
        ratio = times["numpy"] / times["numba"]
        print(f"{name:<55} {times['numba']*1e3:>8.1f}ms {times['numpy']*1e3:>8.1f}ms "
              f"{ratio:>7.1f}x")


if __name__ == "__main__":
    main()
