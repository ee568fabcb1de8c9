# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled bitset kernels.

Each function mirrors its twin in indivlab._purecore loop for loop and
visits candidates in exactly the same order, so both backends return
bit-for-bit identical results. Limits: 64-bit vertex masks everywhere,
26 vertices for the exhaustive subset scans, int64 coefficients and
budgets. The selector in indivlab._backend enforces the limits before
calling in.
"""

from cpython.mem cimport PyMem_Free, PyMem_Malloc
from libc.stdint cimport int64_t, uint64_t

FOUND = 0
EXHAUSTED = 1
BUDGET = 2


cdef inline int _low_index(uint64_t x):
    # index of the least set bit; x must be nonzero
    cdef int b = 0
    if not (x & <uint64_t>0xFFFFFFFF):
        b += 32
        x >>= 32
    if not (x & <uint64_t>0xFFFF):
        b += 16
        x >>= 16
    if not (x & <uint64_t>0xFF):
        b += 8
        x >>= 8
    if not (x & <uint64_t>0xF):
        b += 4
        x >>= 4
    if not (x & <uint64_t>0x3):
        b += 2
        x >>= 2
    if not (x & <uint64_t>0x1):
        b += 1
    return b


cdef inline int _high_index(uint64_t x):
    # index of the highest set bit; x must be nonzero
    cdef int b = 0
    if x >> 32:
        b += 32
        x >>= 32
    if x >> 16:
        b += 16
        x >>= 16
    if x >> 8:
        b += 8
        x >>= 8
    if x >> 4:
        b += 4
        x >>= 4
    if x >> 2:
        b += 2
        x >>= 2
    if x >> 1:
        b += 1
    return b


cdef inline int _popcount(uint64_t x):
    x = x - ((x >> 1) & <uint64_t>0x5555555555555555)
    x = (x & <uint64_t>0x3333333333333333) + ((x >> 2) & <uint64_t>0x3333333333333333)
    x = (x + (x >> 4)) & <uint64_t>0x0F0F0F0F0F0F0F0F
    return <int>((x * <uint64_t>0x0101010101010101) >> 56)


def find_embedding(a_rows, order, b_rows, allowed):
    """Induced embedding of A into B; see _purecore.find_embedding."""
    cdef int na = len(a_rows)
    cdef int nb = len(b_rows)
    if na == 0:
        return ()
    if na > nb:
        return None
    if na > 64 or nb > 64:
        raise ValueError("compiled kernel is limited to 64 vertices")

    cdef uint64_t arow[64]
    cdef uint64_t brow[64]
    cdef int ord_[64]
    cdef uint64_t adj[64]      # adj[i] bit j: order[i] ~ order[j] in A
    cdef uint64_t cand[64]
    cdef int chosen[64]
    cdef int i, j, b, depth
    cdef uint64_t row, c, low, nxt, used, allowed_mask

    for i in range(na):
        arow[i] = a_rows[i]
        ord_[i] = order[i]
    for i in range(nb):
        brow[i] = b_rows[i]
    allowed_mask = allowed

    for i in range(na):
        row = arow[ord_[i]]
        adj[i] = 0
        for j in range(i):
            if (row >> ord_[j]) & 1:
                adj[i] |= <uint64_t>1 << j

    used = 0
    depth = 0
    cand[0] = allowed_mask
    while True:
        c = cand[depth]
        if c == 0:
            depth -= 1
            if depth < 0:
                return None
            used &= ~(<uint64_t>1 << chosen[depth])
            continue
        low = c & (0 - c)
        cand[depth] = c ^ low
        b = _low_index(low)
        chosen[depth] = b
        if depth + 1 == na:
            out = [0] * na
            for i in range(na):
                out[ord_[i]] = chosen[i]
            return tuple(out)
        used |= low
        nxt = allowed_mask & ~used
        for j in range(depth + 1):
            row = brow[chosen[j]]
            if (adj[depth + 1] >> j) & 1:
                nxt &= row
            else:
                nxt &= ~row
        depth += 1
        cand[depth] = nxt


def zero_coloring_search(n, k, copies, budget, fix_first):
    """k-coloring search with no monochromatic copy mask; see
    _purecore.zero_coloring_search."""
    cdef int nn = n
    cdef int kk = k
    if nn == 0:
        return (FOUND, [], 0)
    if nn > 64 or kk > 64:
        raise ValueError("compiled kernel is limited to 64 vertices/colors")

    cdef int ncopies = len(copies)
    cdef uint64_t *masks = NULL
    cdef uint64_t *sorted_ = NULL
    cdef int *start = NULL
    cdef int *fill = NULL
    cdef int colors[64]
    cdef uint64_t cmask[65]
    cdef int tries[64]
    cdef int64_t budget_ = budget
    cdef int64_t nodes = 0
    cdef int fix = 1 if fix_first else 0
    cdef int v, i, h, c, lim, ok
    cdef uint64_t m, newmask

    masks = <uint64_t *>PyMem_Malloc(max(ncopies, 1) * sizeof(uint64_t))
    start = <int *>PyMem_Malloc((nn + 1) * sizeof(int))
    fill = <int *>PyMem_Malloc((nn + 1) * sizeof(int))
    if masks == NULL or start == NULL or fill == NULL:
        PyMem_Free(masks)
        PyMem_Free(start)
        PyMem_Free(fill)
        raise MemoryError()
    try:
        # bucket the copies by their highest vertex, keeping input order
        for i in range(nn + 1):
            start[i] = 0
        for i in range(ncopies):
            m = copies[i]
            if m == 0:
                raise ValueError("copy masks must be nonempty")
            masks[i] = m
            start[_high_index(m) + 1] += 1
        for i in range(nn):
            start[i + 1] += start[i]
        for i in range(nn + 1):
            fill[i] = 0
        # stable counting sort into a second array
        sorted_ = <uint64_t *> PyMem_Malloc(max(ncopies, 1) * sizeof(uint64_t))
        if sorted_ == NULL:
            raise MemoryError()
        try:
            for i in range(ncopies):
                h = _high_index(masks[i])
                sorted_[start[h] + fill[h]] = masks[i]
                fill[h] += 1

            for i in range(nn):
                colors[i] = 0
                tries[i] = 0
            for i in range(kk + 1):
                cmask[i] = 0

            v = 0
            while True:
                lim = 1 if (fix and v == 0) else kk
                if tries[v] == lim:
                    tries[v] = 0
                    v -= 1
                    if v < 0:
                        return (EXHAUSTED, None, nodes)
                    cmask[colors[v]] ^= <uint64_t>1 << v
                    continue
                c = tries[v] + 1
                tries[v] = c
                nodes += 1
                if nodes > budget_:
                    return (BUDGET, None, nodes)
                newmask = cmask[c] | (<uint64_t>1 << v)
                ok = 1
                for i in range(start[v], start[v] + fill[v]):
                    m = sorted_[i]
                    if m & newmask == m:
                        ok = 0
                        break
                if not ok:
                    continue
                colors[v] = c
                cmask[c] = newmask
                if v + 1 == nn:
                    return (FOUND, [colors[i] for i in range(nn)], nodes)
                v += 1
        finally:
            PyMem_Free(sorted_)
    finally:
        PyMem_Free(masks)
        PyMem_Free(start)
        PyMem_Free(fill)


cdef inline int64_t _subset_edges(uint64_t *rows, uint64_t mask):
    cdef int64_t e = 0
    cdef uint64_t t = mask
    cdef uint64_t low
    while t:
        low = t & (0 - t)
        e += _popcount(rows[_low_index(low)] & mask)
        t ^= low
    return e >> 1


def max_density_subset(rows):
    """First nonempty subset maximizing e(S)/|S|; see
    _purecore.max_density_subset."""
    cdef int n = len(rows)
    if n == 0:
        raise ValueError("empty graph has no nonempty subsets")
    if n > 26:
        raise ValueError("compiled subset scan is limited to 26 vertices")
    cdef uint64_t r[26]
    cdef int i
    for i in range(n):
        r[i] = rows[i]
    cdef uint64_t mask, best_mask = 1
    cdef int64_t e, s, best_e = 0, best_s = 1
    for mask in range(2, <uint64_t>1 << n):
        s = _popcount(mask)
        e = _subset_edges(r, mask)
        if e * best_s > best_e * s:
            best_mask = mask
            best_e = e
            best_s = s
    return (int(best_mask), int(best_e), int(best_s))


def min_delta_subset(rows, p, q):
    """First nonempty subset minimizing q*|S| - p*e(S); see
    _purecore.min_delta_subset."""
    cdef int n = len(rows)
    if n == 0:
        raise ValueError("empty graph has no nonempty subsets")
    if n > 26:
        raise ValueError("compiled subset scan is limited to 26 vertices")
    cdef uint64_t r[26]
    cdef int i
    for i in range(n):
        r[i] = rows[i]
    cdef int64_t pp = p
    cdef int64_t qq = q
    cdef uint64_t mask, best_mask = 1
    cdef int64_t e, s, val, best_e = 0, best_s = 1
    cdef int64_t best_val = qq
    for mask in range(2, <uint64_t>1 << n):
        s = _popcount(mask)
        e = _subset_edges(r, mask)
        val = qq * s - pp * e
        if val < best_val:
            best_mask = mask
            best_e = e
            best_s = s
            best_val = val
    return (int(best_mask), int(best_e), int(best_s))
