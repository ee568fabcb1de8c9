"""Pure-Python bitset kernels.

These are the reference implementations of the three hot loops (induced
embedding search, zero-coloring enumeration, exhaustive subset scans).
indivlab._fastcore mirrors them in C for graphs with at most 64
vertices; both backends must visit candidates in exactly the same order
so that results are bit-for-bit identical.

All functions here speak 0-based vertex indices and integer bitmasks.
The 1-based public API lives in the higher modules.
"""

from __future__ import annotations

FOUND = 0
EXHAUSTED = 1
BUDGET = 2


def find_embedding(a_rows, order, b_rows, allowed):
    """Search for an induced embedding of A into B.

    a_rows/b_rows are adjacency bitmask rows. order is a permutation of
    range(len(a_rows)) giving the assignment order of A's vertices; at
    each depth candidate B-vertices are tried in ascending index, so the
    first solution found is lexicographically least along `order`.
    allowed restricts the image to a vertex mask of B.

    Returns the mapping as a tuple indexed by A-vertex (not by depth),
    or None.
    """
    na = len(a_rows)
    if na == 0:
        return ()
    if na > len(b_rows):
        return None
    # pairs[d] lists (earlier depth, adjacent-in-A?) for the vertex
    # placed at depth d.
    pairs = []
    for i in range(na):
        row = a_rows[order[i]]
        pairs.append([(j, (row >> order[j]) & 1) for j in range(i)])

    chosen = [0] * na
    cand = [0] * na
    cand[0] = allowed
    used = 0
    depth = 0
    while True:
        c = cand[depth]
        if c == 0:
            depth -= 1
            if depth < 0:
                return None
            used &= ~(1 << chosen[depth])
            continue
        low = c & (-c)
        cand[depth] = c ^ low
        b = low.bit_length() - 1
        chosen[depth] = b
        if depth + 1 == na:
            out = [0] * na
            for i in range(na):
                out[order[i]] = chosen[i]
            return tuple(out)
        used |= low
        nxt = allowed & ~used
        for j, adj in pairs[depth + 1]:
            row = b_rows[chosen[j]]
            nxt &= row if adj else ~row
        depth += 1
        cand[depth] = nxt


def zero_coloring_search(n, k, copies, budget, fix_first):
    """Backtracking search for a k-coloring with no monochromatic copy.

    copies is a sequence of nonempty vertex masks; a coloring is a zero
    coloring when no mask is monochromatic. Vertices are colored in
    index order, colors tried ascending, and a branch is pruned as soon
    as the copy whose highest vertex was just colored goes
    monochromatic, so the first coloring found is the lexicographically
    least zero coloring (with color 1 forced on vertex 0 when fix_first
    is set, which is harmless up to color permutation).

    Returns (status, colors, nodes) where status is FOUND / EXHAUSTED /
    BUDGET, colors is a 1-based color list on FOUND, and nodes counts
    attempted assignments.
    """
    if n == 0:
        return (FOUND, [], 0)
    by_high = [[] for _ in range(n)]
    for m in copies:
        if m == 0:
            raise ValueError("copy masks must be nonempty")
        by_high[m.bit_length() - 1].append(m)

    colors = [0] * n
    cmask = [0] * (k + 1)
    tries = [0] * n
    nodes = 0
    v = 0
    while True:
        lim = 1 if (fix_first and v == 0) else k
        if tries[v] == lim:
            tries[v] = 0
            v -= 1
            if v < 0:
                return (EXHAUSTED, None, nodes)
            cmask[colors[v]] ^= 1 << v
            continue
        c = tries[v] + 1
        tries[v] = c
        nodes += 1
        if nodes > budget:
            return (BUDGET, None, nodes)
        newmask = cmask[c] | (1 << v)
        ok = True
        for m in by_high[v]:
            if m & newmask == m:
                ok = False
                break
        if not ok:
            continue
        colors[v] = c
        cmask[c] = newmask
        if v + 1 == n:
            return (FOUND, colors[:], nodes)
        v += 1


def _subset_edges(rows, mask):
    e = 0
    t = mask
    while t:
        low = t & (-t)
        e += (rows[low.bit_length() - 1] & mask).bit_count()
        t ^= low
    return e >> 1


def max_density_subset(rows):
    """First nonempty subset maximizing e(S)/|S|, ascending mask order.

    Requires n >= 1. Returns (mask, e, s). Intended for small n; cost
    is 2^n * n/2 popcounts.
    """
    n = len(rows)
    if n == 0:
        raise ValueError("empty graph has no nonempty subsets")
    best_mask, best_e, best_s = 1, 0, 1
    for mask in range(2, 1 << n):
        s = mask.bit_count()
        e = _subset_edges(rows, mask)
        if e * best_s > best_e * s:
            best_mask, best_e, best_s = mask, e, s
    return (best_mask, best_e, best_s)


def min_delta_subset(rows, p, q):
    """First nonempty subset minimizing q*|S| - p*e(S), ascending masks.

    With alpha = p/q this minimizes delta_alpha scaled by q. Requires
    n >= 1. Returns (mask, e, s).
    """
    n = len(rows)
    if n == 0:
        raise ValueError("empty graph has no nonempty subsets")
    best_mask, best_e, best_s = 1, 0, 1
    best_val = q  # value of the singleton {0}: q*1 - p*0
    for mask in range(2, 1 << n):
        s = mask.bit_count()
        e = _subset_edges(rows, mask)
        val = q * s - p * e
        if val < best_val:
            best_mask, best_e, best_s, best_val = mask, e, s, val
    return (best_mask, best_e, best_s)
