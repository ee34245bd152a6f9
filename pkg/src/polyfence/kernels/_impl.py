"""Bit-row grid kernels, written so the same code runs plain or under numba.

A board is an array of int64 row masks, bit x of row y = cell (x, y).
All boards here are at most 62 wide; the sign bit is never reached, so
signed shifts are safe.
"""
import numpy as np


def flood(cur, free, width):
    """Grow `cur` inside `free` until stable (4-neighbour). In place."""
    h = cur.shape[0]
    rowmask = (1 << width) - 1
    changed = True
    while changed:
        changed = False
        for r in range(h):
            m = cur[r]
            grow = m | ((m << 1) & rowmask) | (m >> 1)
            if r > 0:
                grow |= cur[r - 1]
            if r + 1 < h:
                grow |= cur[r + 1]
            grow &= free[r]
            if grow != m:
                cur[r] = grow
                changed = True


def exterior_rows(occ, width):
    """Empty cells reachable from a virtual ring outside the board."""
    h = occ.shape[0]
    padmask = (1 << (width + 2)) - 1
    freep = np.empty(h + 2, dtype=np.int64)
    freep[0] = padmask
    freep[h + 1] = padmask
    for r in range(h):
        freep[r + 1] = ~(occ[r] << 1) & padmask
    cur = np.zeros(h + 2, dtype=np.int64)
    cur[0] = padmask
    flood(cur, freep, width + 2)
    out = np.empty(h, dtype=np.int64)
    rowmask = (1 << width) - 1
    for r in range(h):
        out[r] = (cur[r + 1] >> 1) & rowmask
    return out


def enclosed_rows(occ, width):
    """Empty cells an exterior flood cannot reach (the holes)."""
    h = occ.shape[0]
    rowmask = (1 << width) - 1
    ext = exterior_rows(occ, width)
    out = np.empty(h, dtype=np.int64)
    for r in range(h):
        out[r] = ~(occ[r] | ext[r]) & rowmask
    return out


def popcount_rows(rows):
    total = 0
    for r in range(rows.shape[0]):
        m = rows[r]
        while m:
            m &= m - 1
            total += 1
    return total


def count_regions(mask, width):
    """Number of 4-connected components inside `mask`."""
    h = mask.shape[0]
    work = mask.copy()
    cur = np.zeros(h, dtype=np.int64)
    count = 0
    for r in range(h):
        while work[r]:
            seed = work[r] & -work[r]
            for k in range(h):
                cur[k] = 0
            cur[r] = seed
            flood(cur, work, width)
            for k in range(h):
                work[k] &= ~cur[k]
            count += 1
    return count


def board_stats(occ, width):
    """(occupied components, hole count, enclosed area) in one pass."""
    comps = count_regions(occ, width)
    enc = enclosed_rows(occ, width)
    holes = count_regions(enc, width)
    return comps, holes, popcount_rows(enc)


def dilate_rows(m, width):
    """Cells within one 4-step of `m` (m included)."""
    h = m.shape[0]
    rowmask = (1 << width) - 1
    out = np.empty(h, dtype=np.int64)
    for r in range(h):
        grow = m[r] | ((m[r] << 1) & rowmask) | (m[r] >> 1)
        if r > 0:
            grow |= m[r - 1]
        if r + 1 < h:
            grow |= m[r + 1]
        out[r] = grow & rowmask
    return out


def rows_overlap(a, b):
    for r in range(a.shape[0]):
        if a[r] & b[r]:
            return True
    return False


def _pieces_connected(adj, n):
    """Connectivity of the piece-adjacency graph given bitmask rows."""
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        k = frontier
        while k:
            low = k & -k
            i = 0
            v = low
            while v > 1:
                v >>= 1
                i += 1
            nxt |= adj[i]
            k ^= low
        frontier = nxt & ~seen
        seen |= nxt
    full = (1 << n) - 1
    return seen == full


def enumerate_fences(masks, dils, ptr, h, width, node_budget, min_keep,
                     out_idx, out_area):
    """Enumerate connected full placements by attachment order.

    masks/dils: (total, h) row masks per placement and their dilations.
    ptr: (npieces+1,) slice bounds per piece.

    Piece 0 roots the search; every later piece must share an edge with
    the union built so far, so partials stay connected and scattered
    placements never enter the tree. A configuration is emitted only when
    the attachment order matches its canonical order (breadth-first from
    piece 0, smallest label first), so each one comes out exactly once.

    Only valid fences (every piece >= 2 distinct edge-neighbours) whose
    area reaches the best seen so far (starting at min_keep) are kept;
    a strict improvement resets the buffer, so out_idx/out_area end up
    holding exactly the argmax set. Returns
    (solutions kept, nodes visited, finished flag).
    """
    npieces = ptr.shape[0] - 1
    cap = out_area.shape[0]
    lvl_piece = np.full(npieces, -1, dtype=np.int64)
    lvl_slot = np.empty(npieces, dtype=np.int64)
    occ = np.zeros((npieces + 1, h), dtype=np.int64)
    halo = np.zeros((npieces + 1, h), dtype=np.int64)
    chosen = np.full(npieces, -1, dtype=np.int64)  # piece -> global placement
    adj = np.empty(npieces, dtype=np.int64)
    leaf = np.empty(h, dtype=np.int64)
    nsol = 0
    nodes = 0
    best = min_keep
    level = 0
    lvl_piece[0] = 0
    lvl_slot[0] = -1
    while True:
        p = lvl_piece[level]
        lvl_slot[level] += 1
        i = ptr[p] + lvl_slot[level]
        if i >= ptr[p + 1]:
            nxt = p + 1  # try the next unused piece at this level
            while nxt < npieces and chosen[nxt] >= 0:
                nxt += 1
            if nxt < npieces and level > 0:
                lvl_piece[level] = nxt
                lvl_slot[level] = -1
                continue
            level -= 1
            if level < 0:
                return nsol, nodes, True
            chosen[lvl_piece[level]] = -1
            continue
        nodes += 1
        if node_budget >= 0 and nodes > node_budget:
            return nsol, nodes, False
        ok = True
        touch = level == 0
        for r in range(h):
            if masks[i, r] & occ[level, r]:
                ok = False
                break
            if not touch and (masks[i, r] & halo[level, r]):
                touch = True
        if not ok or not touch:
            continue
        if level + 1 < npieces:
            for r in range(h):
                occ[level + 1, r] = occ[level, r] | masks[i, r]
                halo[level + 1, r] = halo[level, r] | dils[i, r]
            chosen[p] = i
            level += 1
            nxt = 0
            while chosen[nxt] >= 0:
                nxt += 1
            lvl_piece[level] = nxt
            lvl_slot[level] = -1
            continue
        # leaf: all pieces placed, union connected by construction.
        # Only corner-anchored representatives are scored: every other
        # configuration is a translate of one that touches row 0 and
        # column 0, and solution counting normalizes translation anyway.
        anchored = (occ[level, 0] | masks[i, 0]) != 0
        if anchored:
            col0 = 0
            for r in range(h):
                col0 |= (occ[level, r] | masks[i, r]) & 1
            anchored = col0 != 0
        if not anchored:
            continue
        chosen[p] = i
        for k in range(npieces):
            adj[k] = 0
        for a in range(npieces):
            ia = chosen[a]
            for b in range(a + 1, npieces):
                ib = chosen[b]
                for r in range(h):
                    if dils[ia, r] & masks[ib, r]:
                        adj[a] |= 1 << b
                        adj[b] |= 1 << a
                        break
        valid = True
        for k in range(npieces):
            m = adj[k]
            cnt = 0
            while m:
                m &= m - 1
                cnt += 1
            if cnt < 2:
                valid = False
                break
        if valid:
            # canonical attachment order: grow from piece 0, smallest
            # adjacent label first; accept only the matching traversal
            used = 1
            for k in range(1, npieces):
                pick = -1
                for q in range(1, npieces):
                    if not (used >> q) & 1 and (adj[q] & used):
                        pick = q
                        break
                if pick != lvl_piece[k]:
                    valid = False
                    break
                used |= 1 << pick
        if valid:
            for r in range(h):
                leaf[r] = occ[level, r] | masks[i, r]
            enc = enclosed_rows(leaf, width)
            area = popcount_rows(enc)
            if area >= best:
                if area > best:
                    best = area
                    nsol = 0
                if nsol < cap:
                    for k in range(npieces):
                        out_idx[nsol, k] = chosen[k] - ptr[k]
                    out_area[nsol] = area
                    nsol += 1
                else:
                    chosen[p] = -1
                    return nsol, nodes, False
        chosen[p] = -1


def relocation_scan(static_masks, static_dils, static_adj, cand_masks,
                    cand_dils, h, width):
    """Areas for every candidate placement of one moved piece, -1 if the
    resulting board is not a valid fence.

    static_adj: (m,) adjacency bitmasks among the m static pieces.
    The moved piece gets graph index m.
    """
    m = static_masks.shape[0]
    k = cand_masks.shape[0]
    areas = np.full(k, -1, dtype=np.int64)
    occ_static = np.zeros(h, dtype=np.int64)
    for s in range(m):
        for r in range(h):
            occ_static[r] |= static_masks[s, r]
    adj = np.empty(m + 1, dtype=np.int64)
    leaf = np.empty(h, dtype=np.int64)
    for c in range(k):
        clash = False
        for r in range(h):
            if cand_masks[c, r] & occ_static[r]:
                clash = True
                break
        if clash:
            continue
        for s in range(m):
            adj[s] = static_adj[s]
        adj[m] = 0
        for s in range(m):
            for r in range(h):
                if cand_dils[c, r] & static_masks[s, r]:
                    adj[s] |= 1 << m
                    adj[m] |= 1 << s
                    break
        ok = True
        for s in range(m + 1):
            v = adj[s]
            cnt = 0
            while v:
                v &= v - 1
                cnt += 1
            if cnt < 2:
                ok = False
                break
        if ok and _pieces_connected(adj, m + 1):
            for r in range(h):
                leaf[r] = occ_static[r] | cand_masks[c, r]
            areas[c] = popcount_rows(enclosed_rows(leaf, width))
    return areas
