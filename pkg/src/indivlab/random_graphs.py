"""Seeded random generators for graphs, class members, and amalgamation
problems.

Every generator takes an explicit random.Random so callers own the seed
and runs replay exactly. Labels are shuffled at the end of each
constructive generator, so recognizers cannot lean on construction
order.
"""

from __future__ import annotations

import random

from .amalgamation import AmalgamationProblem, problem
from .graphs import Graph, complement, find_induced_embedding, make_graph


def _shuffled(n: int, edges, rng: random.Random) -> Graph:
    """Apply a random relabeling to an edge list on vertices 1..n."""
    pi = list(range(1, n + 1))
    rng.shuffle(pi)
    return make_graph(n, [(pi[u - 1], pi[v - 1]) for u, v in edges])


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    """Binomial random graph: each pair is an edge with probability p."""
    edges = []
    for u in range(1, n + 1):
        for v in range(u + 1, n + 1):
            if rng.random() < p:
                edges.append((u, v))
    return make_graph(n, edges)


def random_tree(n: int, rng: random.Random) -> Graph:
    """Random tree grown by attaching each vertex to an earlier one."""
    edges = [(rng.randrange(1, v), v) for v in range(2, n + 1)]
    return _shuffled(n, edges, rng)


def random_forest(n: int, rng: random.Random) -> Graph:
    """Random forest: a random tree with a random subset of edges kept."""
    edges = [
        (rng.randrange(1, v), v) for v in range(2, n + 1) if rng.random() < 0.7
    ]
    return _shuffled(n, edges, rng)


def random_sparse_member(n: int, rng: random.Random) -> Graph:
    """Random graph whose components are trees or carry exactly one
    cycle, so the max average degree never exceeds 2."""
    g = random_forest(n, rng)
    extra = []
    for comp in g.components():
        vs = [j + 1 for j in range(n) if (comp >> j) & 1]
        if len(vs) >= 3 and rng.random() < 0.5:
            u, v = rng.sample(vs, 2)
            if not g.adjacent(u, v):
                extra.append((u, v))
    return make_graph(n, list(g.edges()) + extra)


def random_threshold(n: int, rng: random.Random) -> Graph:
    """Random threshold graph from a random creation sequence."""
    edges = []
    for v in range(2, n + 1):
        if rng.random() < 0.5:
            edges.extend((u, v) for u in range(1, v))
    return _shuffled(n, edges, rng)


def random_split(n: int, rng: random.Random) -> Graph:
    """Random split graph: a clique, an independent set, random cross
    edges."""
    k = rng.randint(0, n)
    edges = [(u, v) for u in range(1, k + 1) for v in range(u + 1, k + 1)]
    for u in range(1, k + 1):
        for v in range(k + 1, n + 1):
            if rng.random() < 0.5:
                edges.append((u, v))
    return _shuffled(n, edges, rng)


def random_distance_hereditary(n: int, rng: random.Random) -> Graph:
    """Random graph built from pendant vertices and twins."""
    if n == 0:
        return make_graph(0, [])
    nbrs = {1: set()}
    for v in range(2, n + 1):
        anchor = rng.randrange(1, v)
        kind = rng.choice(("pendant", "false_twin", "true_twin"))
        if kind == "pendant":
            new = {anchor}
        else:
            new = set(nbrs[anchor])
            if kind == "true_twin":
                new.add(anchor)
        nbrs[v] = new
        for u in new:
            nbrs[u].add(v)
    edges = [(u, v) for v in nbrs for u in nbrs[v] if u < v]
    return _shuffled(n, edges, rng)


def _cograph_edges(n: int, rng: random.Random):
    if n <= 1:
        return []
    k = rng.randint(1, n - 1)
    edges = list(_cograph_edges(k, rng))
    edges.extend((u + k, v + k) for u, v in _cograph_edges(n - k, rng))
    if rng.random() < 0.5:
        edges.extend((u, v) for u in range(1, k + 1) for v in range(k + 1, n + 1))
    return edges


def random_cograph(n: int, rng: random.Random) -> Graph:
    """Random cograph from a random union/join decomposition tree."""
    return _shuffled(n, _cograph_edges(n, rng), rng)


def random_chordal(n: int, rng: random.Random) -> Graph:
    """Random chordal graph: each vertex lands on a clique of the part
    built so far."""
    if n == 0:
        return make_graph(0, [])
    nbrs = {1: set()}
    for v in range(2, n + 1):
        u = rng.randrange(1, v)
        clique = [u]
        pool = list(nbrs[u])
        rng.shuffle(pool)
        for w in pool:
            if all(x in nbrs[w] for x in clique):
                clique.append(w)
        target = rng.sample(clique, rng.randint(0, len(clique)))
        nbrs[v] = set(target)
        for w in target:
            nbrs[w].add(v)
    edges = [(u, v) for v in nbrs for u in nbrs[v] if u < v]
    return _shuffled(n, edges, rng)


def random_cluster(
    n: int,
    rng: random.Random,
    max_size: int | None = None,
    max_parts: int | None = None,
) -> Graph:
    """Random disjoint union of cliques, optionally capping the clique
    size or the number of cliques."""
    if max_parts is not None and max_size is not None:
        raise ValueError("cap either the size or the count, not both")
    edges = []
    placed = 0
    parts = 0
    while placed < n:
        left = n - placed
        if max_parts is not None and parts == max_parts - 1:
            size = left
        else:
            size = rng.randint(1, left)
        if max_size is not None:
            size = min(size, max_size)
        block = range(placed + 1, placed + size + 1)
        edges.extend((u, v) for u in block for v in block if u < v)
        placed += size
        parts += 1
    return _shuffled(n, edges, rng)


def random_clique_free(n: int, rng: random.Random, k: int) -> Graph:
    """Random graph with no clique on k vertices. Falls back to a
    capped cluster graph when rejection sampling runs dry."""
    if k < 2:
        raise ValueError("clique bound must be at least 2")
    from .graphs import complete

    target = complete(k)
    for _ in range(60):
        g = random_graph(n, rng.uniform(0.05, 0.5), rng)
        if k > n or find_induced_embedding(target, g) is None:
            return g
    return random_cluster(n, rng, max_size=k - 1)


_NEEDS_N = {
    "forb-kn",
    "forb-nn",
    "forb-p3-kn",
    "forb-cop3-kn",
    "forb-p3-nn",
    "forb-cop3-nn",
}


def random_family_member(
    key: str, size: int, rng: random.Random, n: int | None = None
) -> Graph:
    """Random member of one of the catalog families on `size` vertices."""
    if key in _NEEDS_N:
        if n is None:
            raise ValueError(f"family {key!r} needs the parameter n")
        if n < 2 or (key not in ("forb-kn", "forb-nn") and n < 3):
            raise ValueError(f"parameter n={n} is too small for {key!r}")
    if key == "all":
        return random_graph(size, rng.uniform(0.2, 0.8), rng)
    if key == "forb-kn":
        return random_clique_free(size, rng, n)
    if key == "forb-nn":
        return complement(random_clique_free(size, rng, n))
    if key == "forb-p3":
        return random_cluster(size, rng)
    if key == "forb-cop3":
        return complement(random_cluster(size, rng))
    if key == "forb-p3-kn":
        return random_cluster(size, rng, max_size=n - 1)
    if key == "forb-cop3-kn":
        return complement(random_cluster(size, rng, max_parts=n - 1))
    if key == "forb-p3-nn":
        return random_cluster(size, rng, max_parts=n - 1)
    if key == "forb-cop3-nn":
        return complement(random_cluster(size, rng, max_size=n - 1))
    raise ValueError(f"unknown family key {key!r}")


def random_problem(
    key: str,
    rng: random.Random,
    n: int | None = None,
    max_vertices: int = 6,
) -> AmalgamationProblem:
    """Random in-family amalgamation problem with both sides at most
    max_vertices. Guaranteed well formed: B1 falls back to a copy of A
    when no random member happens to contain A."""
    b0 = random_family_member(key, rng.randint(1, max_vertices), rng, n)
    span = rng.sample(range(1, b0.n + 1), rng.randint(0, b0.n))
    f0 = tuple(sorted(span))
    a = b0.induced(f0)
    for _ in range(40):
        b1 = random_family_member(key, rng.randint(a.n, max_vertices), rng, n)
        emb = find_induced_embedding(a, b1)
        if emb is not None:
            return problem(a, b0, b1, f0, emb.mapping)
    return problem(a, b0, a, f0, tuple(range(1, a.n + 1)))


__all__ = [
    "random_chordal",
    "random_clique_free",
    "random_cluster",
    "random_cograph",
    "random_distance_hereditary",
    "random_family_member",
    "random_forest",
    "random_graph",
    "random_problem",
    "random_sparse_member",
    "random_split",
    "random_threshold",
    "random_tree",
]
