"""Finite simple graphs with bitset adjacency, plus embeddings and colorings.

Vertices are 1..n in the public API. Internally each graph keeps one
integer bitmask per vertex (bit j set in row i means vertex i+1 is
adjacent to vertex j+1), which is what the search kernels consume.
Graphs are immutable and hashable; every operation returns a new graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from . import _backend


class Graph:
    """Immutable simple graph on vertices 1..n."""

    __slots__ = ("n", "rows")

    def __init__(self, n: int, rows):
        self.n = n
        self.rows = tuple(rows)

    # -- basic queries -------------------------------------------------

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @property
    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def adjacent(self, u: int, v: int) -> bool:
        return bool((self.rows[u - 1] >> (v - 1)) & 1)

    def degree(self, u: int) -> int:
        return self.rows[u - 1].bit_count()

    def neighbors(self, u: int) -> tuple[int, ...]:
        return tuple(j + 1 for j in _bits(self.rows[u - 1]))

    def neighbor_mask(self, u: int) -> int:
        return self.rows[u - 1]

    def edges(self):
        """Yield edges (u, v) with u < v in ascending order."""
        for u in range(1, self.n + 1):
            above = self.rows[u - 1] >> u
            for j in _bits(above):
                yield (u, u + j + 1)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def mask_of(self, vertices) -> int:
        m = 0
        for v in vertices:
            m |= 1 << (v - 1)
        return m

    def edge_count_in(self, mask: int) -> int:
        e = 0
        for j in _bits(mask):
            e += (self.rows[j] & mask).bit_count()
        return e // 2

    def is_clique(self, vertices) -> bool:
        """True when the given vertices are pairwise adjacent."""
        mask = self.mask_of(vertices)
        for j in _bits(mask):
            if self.rows[j] & mask != mask ^ (1 << j):
                return False
        return True

    # -- derived graphs ------------------------------------------------

    def induced(self, vertices) -> "Graph":
        """Induced subgraph on the given vertices, relabeled 1..k by
        ascending original label."""
        vs = sorted(set(vertices))
        if vs and (vs[0] < 1 or vs[-1] > self.n):
            raise ValueError("vertex out of range")
        pos = {v: i for i, v in enumerate(vs)}
        rows = [0] * len(vs)
        for i, v in enumerate(vs):
            for w in vs[i + 1 :]:
                if self.adjacent(v, w):
                    rows[i] |= 1 << pos[w]
                    rows[pos[w]] |= 1 << i
        return Graph(len(vs), rows)

    def induced_mask(self, mask: int) -> "Graph":
        return self.induced(j + 1 for j in _bits(mask))

    def components(self) -> list[int]:
        """Connected components as vertex masks, by lowest vertex."""
        seen = 0
        out = []
        for i in range(self.n):
            if (seen >> i) & 1:
                continue
            comp = 1 << i
            frontier = comp
            while frontier:
                nxt = 0
                for j in _bits(frontier):
                    nxt |= self.rows[j]
                frontier = nxt & ~comp
                comp |= nxt
            out.append(comp)
            seen |= comp
        return out

    # -- dunder --------------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.n, self.rows))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.edge_count})"


def _bits(mask: int):
    while mask:
        low = mask & (-mask)
        yield low.bit_length() - 1
        mask ^= low


def make_graph(n: int, edges) -> Graph:
    """Build a graph from an edge list; rejects loops and bad labels."""
    if n < 0:
        raise ValueError("vertex count must be nonnegative")
    rows = [0] * n
    for u, v in edges:
        if not (1 <= u <= n and 1 <= v <= n):
            raise ValueError(f"edge ({u},{v}) out of range 1..{n}")
        if u == v:
            raise ValueError(f"loop at vertex {u}")
        rows[u - 1] |= 1 << (v - 1)
        rows[v - 1] |= 1 << (u - 1)
    return Graph(n, rows)


# -- generators ---------------------------------------------------------


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete(n) needs n >= 1")
    full = (1 << n) - 1
    return Graph(n, [full ^ (1 << i) for i in range(n)])


def null_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("null_graph(n) needs n >= 1")
    return Graph(n, [0] * n)


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path(n) needs n >= 1")
    return make_graph(n, [(i, i + 1) for i in range(1, n)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle(n) needs n >= 3")
    edges = [(i, i + 1) for i in range(1, n)]
    edges.append((1, n))
    return make_graph(n, edges)


def complete_minus_edge(n: int) -> Graph:
    """K_n with the single edge {1,2} removed."""
    if n < 2:
        raise ValueError("complete_minus_edge(n) needs n >= 2")
    g = complete(n)
    rows = list(g.rows)
    rows[0] ^= 1 << 1
    rows[1] ^= 1 << 0
    return Graph(n, rows)


# -- operations ----------------------------------------------------------


def complement(g: Graph) -> Graph:
    full = g.full_mask
    return Graph(g.n, [(full ^ r) & ~(1 << i) for i, r in enumerate(g.rows)])


def disjoint_union(g: Graph, h: Graph) -> Graph:
    rows = list(g.rows)
    rows.extend(r << g.n for r in h.rows)
    return Graph(g.n + h.n, rows)


def lex_product(a: Graph, b: Graph) -> Graph:
    """Lexicographic product A[B].

    Vertex (x, y) becomes (x-1)*|B| + y; (x, y) ~ (x', y') iff x ~ x'
    in A, or x = x' and y ~ y' in B.
    """
    nb = b.n
    n = a.n * nb
    bfull = b.full_mask
    rows = [0] * n
    for x in range(a.n):
        arow = a.rows[x]
        block_mask = 0
        for xp in _bits(arow):
            block_mask |= bfull << (xp * nb)
        for y in range(nb):
            rows[x * nb + y] = block_mask | (b.rows[y] << (x * nb))
    return Graph(n, rows)


# -- embeddings and colorings --------------------------------------------


@dataclass(frozen=True)
class Embedding:
    """Vertex map of an induced embedding; mapping[i] is the image of
    source vertex i+1."""

    mapping: tuple[int, ...]

    def apply(self, v: int) -> int:
        return self.mapping[v - 1]

    def image(self) -> tuple[int, ...]:
        return tuple(sorted(self.mapping))

    def image_mask(self) -> int:
        m = 0
        for v in self.mapping:
            m |= 1 << (v - 1)
        return m


@dataclass(frozen=True)
class Coloring:
    """Assignment of colors 1..k to vertices 1..n; assign[i] colors
    vertex i+1."""

    k: int
    assign: tuple[int, ...]

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("need at least one color")
        for c in self.assign:
            if not (1 <= c <= self.k):
                raise ValueError(f"color {c} outside 1..{self.k}")

    @property
    def n(self) -> int:
        return len(self.assign)

    def color_of(self, v: int) -> int:
        return self.assign[v - 1]

    def class_mask(self, c: int) -> int:
        m = 0
        for i, ci in enumerate(self.assign):
            if ci == c:
                m |= 1 << i
        return m

    def class_vertices(self, c: int) -> tuple[int, ...]:
        return tuple(i + 1 for i, ci in enumerate(self.assign) if ci == c)


def is_induced_embedding(a: Graph, b: Graph, mapping) -> bool:
    """Check that mapping (source order) is injective and preserves both
    adjacency and non-adjacency."""
    mapping = tuple(mapping)
    if len(mapping) != a.n:
        return False
    if len(set(mapping)) != a.n:
        return False
    for v in mapping:
        if not (1 <= v <= b.n):
            return False
    for u in range(1, a.n + 1):
        for v in range(u + 1, a.n + 1):
            if a.adjacent(u, v) != b.adjacent(mapping[u - 1], mapping[v - 1]):
                return False
    return True


def _search_order(a: Graph) -> list[int]:
    # degree-descending, index ascending: keeps the backtracking
    # deterministic and prunes early.
    return sorted(range(a.n), key=lambda i: (-a.rows[i].bit_count(), i))


def find_induced_embedding(a: Graph, b: Graph, allowed=None):
    """First induced embedding of a into b, or None.

    allowed optionally restricts the image to an iterable of b-vertices.
    The result is deterministic: backtracking assigns a's vertices in
    degree-descending order (index ties ascending) and tries b-vertices
    in ascending label, so the returned embedding is the
    lexicographically least one along that order.
    """
    if allowed is None:
        mask = b.full_mask
    else:
        mask = b.mask_of(allowed)
    if a.n == 0:
        return Embedding(())
    if mask.bit_count() < a.n:
        return None
    res = _backend.find_embedding(a.rows, _search_order(a), b.rows, mask)
    if res is None:
        return None
    return Embedding(tuple(v + 1 for v in res))


def induced_copy_masks(a: Graph, b: Graph) -> list[int]:
    """Vertex masks of all induced copies of a in b, ascending by the
    sorted vertex tuple."""
    if a.n == 0:
        return [0]
    if a.n > b.n:
        return []
    adeg = sorted(r.bit_count() for r in a.rows)
    am = a.edge_count
    out = []
    for combo in combinations(range(b.n), a.n):
        mask = 0
        for j in combo:
            mask |= 1 << j
        degs = sorted((b.rows[j] & mask).bit_count() for j in combo)
        if degs != adeg:
            continue
        sub = b.induced_mask(mask)
        if sub.edge_count != am:
            continue
        if _backend.find_embedding(
            a.rows, _search_order(a), sub.rows, sub.full_mask
        ) is not None:
            out.append(mask)
    return out


def count_induced_copies(a: Graph, b: Graph) -> int:
    """Number of vertex subsets of b inducing a copy of a."""
    return len(induced_copy_masks(a, b))


def find_monochromatic_copy(a: Graph, b: Graph, coloring: Coloring):
    """First monochromatic induced copy of a in b under coloring.

    Scans colors 1..k in order and searches each color class; returns
    (embedding, color) or None.
    """
    if coloring.n != b.n:
        raise ValueError("coloring does not match graph order")
    for c in range(1, coloring.k + 1):
        emb = find_induced_embedding(a, b, coloring.class_vertices(c))
        if emb is not None:
            return (emb, c)
    return None


def is_isomorphic(a: Graph, b: Graph) -> bool:
    if a.n != b.n or a.edge_count != b.edge_count:
        return False
    if sorted(r.bit_count() for r in a.rows) != sorted(
        r.bit_count() for r in b.rows
    ):
        return False
    return find_induced_embedding(a, b) is not None
