"""Vectorized numpy variants of the grid kernels (no numba).

The search loops (enumerate_fences, relocation_scan) reuse the plain
implementations; the flood-fill primitives are rewritten with whole-array
bit operations so the fallback stays usable for interactive work.
"""
import numpy as np

from . import _impl

enumerate_fences = _impl.enumerate_fences
relocation_scan = _impl.relocation_scan
rows_overlap = _impl.rows_overlap


def _spread(cur, free, rowmask):
    grow = cur | ((cur << 1) & rowmask) | (cur >> 1)
    grow[1:] |= cur[:-1]
    grow[:-1] |= cur[1:]
    return grow & free


def flood_np(cur, free, width):
    rowmask = np.int64((1 << width) - 1)
    while True:
        grown = _spread(cur, free, rowmask)
        if np.array_equal(grown, cur):
            return cur
        cur = grown


def exterior_rows(occ, width):
    h = occ.shape[0]
    padmask = np.int64((1 << (width + 2)) - 1)
    freep = np.empty(h + 2, dtype=np.int64)
    freep[0] = padmask
    freep[-1] = padmask
    freep[1:-1] = ~(occ << 1) & padmask
    cur = np.zeros(h + 2, dtype=np.int64)
    cur[0] = padmask
    cur = flood_np(cur, freep, width + 2)
    rowmask = np.int64((1 << width) - 1)
    return (cur[1:-1] >> 1) & rowmask


def enclosed_rows(occ, width):
    rowmask = np.int64((1 << width) - 1)
    return ~(occ | exterior_rows(occ, width)) & rowmask


def popcount_rows(rows):
    return int(np.bitwise_count(rows.astype(np.uint64)).sum())


def count_regions(mask, width):
    work = mask.copy()
    count = 0
    while work.any():
        r = int(np.flatnonzero(work)[0])
        seed = np.zeros_like(work)
        seed[r] = work[r] & -work[r]
        comp = flood_np(seed, work, width)
        work &= ~comp
        count += 1
    return count


def board_stats(occ, width):
    comps = count_regions(occ, width)
    enc = enclosed_rows(occ, width)
    return comps, count_regions(enc, width), popcount_rows(enc)


def dilate_rows(m, width):
    rowmask = np.int64((1 << width) - 1)
    out = m | ((m << 1) & rowmask) | (m >> 1)
    out[1:] |= m[:-1]
    out[:-1] |= m[1:]
    return out & rowmask
