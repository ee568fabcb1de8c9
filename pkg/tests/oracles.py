"""Brute-force reference implementations the tests check the library
against.

Everything here is written for obviousness, not speed, and on purpose
avoids the library's own machinery: subsets are tuples from itertools,
pattern matching tries straight permutations, distances come from BFS.
Keep inputs small (the permutation matcher dies past 7 or 8 pattern
vertices).
"""

from collections import deque
from fractions import Fraction
from itertools import combinations, permutations, product

from indivlab import complement, make_graph


def iter_graphs(n):
    """Every labeled graph on vertices 1..n, by edge bitmask."""
    pairs = list(combinations(range(1, n + 1), 2))
    for bits in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if (bits >> i) & 1]
        yield make_graph(n, edges)


def edges_within(g, vs):
    return sum(1 for u, v in combinations(vs, 2) if g.adjacent(u, v))


def brute_mad(g):
    best = Fraction(0)
    for r in range(1, g.n + 1):
        for sub in combinations(g.vertices, r):
            best = max(best, Fraction(2 * edges_within(g, sub), r))
    return best


def brute_member(g, alpha, strict=False):
    """Direct check of delta_alpha >= 0 (or > 0) on every nonempty
    subset."""
    alpha = Fraction(alpha)
    for r in range(1, g.n + 1):
        for sub in combinations(g.vertices, r):
            d = Fraction(r) - alpha * edges_within(g, sub)
            if d < 0 or (strict and d <= 0):
                return False
    return True


def induced_equals(g, vs, pattern):
    """Is g restricted to vs isomorphic to pattern? Tries every
    bijection."""
    for perm in permutations(vs):
        if all(
            pattern.adjacent(i + 1, j + 1) == g.adjacent(perm[i], perm[j])
            for i in range(len(perm))
            for j in range(i + 1, len(perm))
        ):
            return True
    return False


def has_induced(g, pattern):
    if pattern.n == 0:
        return True
    if pattern.n > g.n:
        return False
    return any(
        induced_equals(g, vs, pattern)
        for vs in combinations(g.vertices, pattern.n)
    )


def copy_vertex_sets(g, pattern):
    """All vertex sets of g that induce a copy of pattern."""
    if pattern.n > g.n:
        return []
    return [
        vs
        for vs in combinations(g.vertices, pattern.n)
        if induced_equals(g, vs, pattern)
    ]


def mono_free(g, pattern, coloring):
    """No color class of the coloring induces a copy of pattern."""
    for c in range(1, coloring.k + 1):
        cls = coloring.class_vertices(c)
        if has_induced(g.induced(cls), pattern):
            return False
    return True


def first_failing_coloring(a, b, k, fix_first=True):
    """Lexicographically least k-coloring of b with no monochromatic
    copy of a, or None. fix_first pins vertex 1 to color 1, matching
    the library's symmetry reduction."""
    from indivlab import Coloring

    for assign in product(range(1, k + 1), repeat=b.n):
        if fix_first and b.n and assign[0] != 1:
            continue
        col = Coloring(k, assign)
        if mono_free(b, a, col):
            return col
    return None


def distances_within(g, inside):
    """BFS distances of the subgraph induced on the vertex set inside;
    dist[s][t] is present only when t is reachable from s."""
    dist = {}
    for s in inside:
        d = {s: 0}
        q = deque([s])
        while q:
            u = q.popleft()
            for v in g.neighbors(u):
                if v in inside and v not in d:
                    d[v] = d[u] + 1
                    q.append(v)
        dist[s] = d
    return dist


# -- class membership, straight from the definitions ----------------------


def is_cograph_oracle(g):
    if g.n <= 1:
        return True
    comps = g.components()
    if len(comps) > 1:
        return all(is_cograph_oracle(g.induced_mask(c)) for c in comps)
    co_comps = complement(g).components()
    if len(co_comps) == 1:
        return False
    return all(is_cograph_oracle(g.induced_mask(c)) for c in co_comps)


def is_chordal_oracle(g):
    from indivlab import cycle

    return not any(
        has_induced(g, cycle(length)) for length in range(4, g.n + 1)
    )


def is_threshold_oracle(g):
    """Peel isolated and dominating vertices until stuck."""
    verts = set(g.vertices)
    while verts:
        iso = next(
            (
                v
                for v in verts
                if all(not g.adjacent(v, u) for u in verts if u != v)
            ),
            None,
        )
        if iso is not None:
            verts.remove(iso)
            continue
        dom = next(
            (
                v
                for v in verts
                if all(g.adjacent(v, u) for u in verts if u != v)
            ),
            None,
        )
        if dom is None:
            return False
        verts.remove(dom)
    return True


def is_split_oracle(g):
    """Try every subset as the clique side."""
    for r in range(g.n + 1):
        for cl in combinations(g.vertices, r):
            rest = [v for v in g.vertices if v not in cl]
            if all(g.adjacent(u, v) for u, v in combinations(cl, 2)) and not any(
                g.adjacent(u, v) for u, v in combinations(rest, 2)
            ):
                return True
    return False


def is_dh_oracle(g):
    """Distance-hereditary by definition: within every induced
    subgraph, distances between vertices that stay connected agree with
    the whole graph."""
    whole = distances_within(g, set(g.vertices))
    for r in range(2, g.n + 1):
        for sub in combinations(g.vertices, r):
            d = distances_within(g, set(sub))
            for u in sub:
                for v in sub:
                    if v in d[u] and d[u][v] != whole[u].get(v):
                        return False
    return True


def chromatic_number(g):
    if g.n == 0:
        return 0
    colors = [0] * (g.n + 1)

    def feasible(k):
        def go(v):
            if v > g.n:
                return True
            for c in range(1, k + 1):
                if all(colors[u] != c for u in g.neighbors(v) if u < v):
                    colors[v] = c
                    if go(v + 1):
                        return True
            colors[v] = 0
            return False

        return go(1)

    for k in range(1, g.n + 1):
        if feasible(k):
            return k
    raise AssertionError("unreachable")


def clique_number(g):
    for r in range(g.n, 0, -1):
        for sub in combinations(g.vertices, r):
            if all(g.adjacent(u, v) for u, v in combinations(sub, 2)):
                return r
    return 0


def is_perfect_oracle(g):
    """Chromatic number equals clique number on every induced
    subgraph. Only sane for n <= 6 or so."""
    for r in range(1, g.n + 1):
        for sub in combinations(g.vertices, r):
            h = g.induced(sub)
            if chromatic_number(h) != clique_number(h):
                return False
    return True
