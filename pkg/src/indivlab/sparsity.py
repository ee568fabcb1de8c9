"""Edge-sparsity measures, exact membership tests, and windmill builders.

Everything here is exact: densities and thresholds are
fractions.Fraction values, never floats. The density oracle has two
independent routes, an exhaustive subset scan for small graphs and a
max-flow binary search for larger ones, and the test suite holds them
to identical answers.

delta_alpha(G) = |V(G)| - alpha * |E(G)|. A graph lies in the sparse
class at level alpha when every subgraph has nonnegative delta, and in
the strict class when every nonempty subgraph has positive delta; both
are equivalent to bounds on the maximum average degree.
"""

from __future__ import annotations

import math
import os
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement

from . import _backend
from .graphs import Graph, _bits, make_graph

DEFAULT_SUBSET_BRUTEFORCE_MAX = 16


def _crossover() -> int:
    raw = os.environ.get("INDIV_SUBSET_BRUTEFORCE_MAX")
    if raw is None:
        return DEFAULT_SUBSET_BRUTEFORCE_MAX
    try:
        val = int(raw)
    except ValueError as exc:
        raise ValueError(
            "INDIV_SUBSET_BRUTEFORCE_MAX must be an integer"
        ) from exc
    if val < 1:
        raise ValueError("INDIV_SUBSET_BRUTEFORCE_MAX must be >= 1")
    return val


def parse_rational(text: str) -> Fraction:
    """Parse 'p/q' or 'p' into an exact rational."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational: {text!r}") from exc


def format_rational(x: Fraction) -> str:
    return str(Fraction(x))


def _as_positive_alpha(alpha) -> Fraction:
    a = Fraction(alpha)
    if a <= 0:
        raise ValueError("alpha must be positive")
    return a


def delta_alpha(g: Graph, alpha) -> Fraction:
    """|G| - alpha * e(G), exactly."""
    a = _as_positive_alpha(alpha)
    return Fraction(g.n) - a * g.edge_count


# -- densest subgraph, two independent routes ----------------------------


def _densest_brute(g: Graph):
    """(mask, e, s) of the first maximum-density subset, by subset scan."""
    return _backend.max_density_subset(g.rows)


class _Dinic:
    """Integer max-flow (Dinic), small and exact."""

    def __init__(self, n: int):
        self.n = n
        self.head: list[list[int]] = [[] for _ in range(n)]
        self.to: list[int] = []
        self.cap: list[int] = []

    def add_edge(self, u: int, v: int, cap: int, rcap: int = 0):
        self.head[u].append(len(self.to))
        self.to.append(v)
        self.cap.append(cap)
        self.head[v].append(len(self.to))
        self.to.append(u)
        self.cap.append(rcap)

    def _levels(self, s: int, t: int):
        level = [-1] * self.n
        level[s] = 0
        q = deque([s])
        while q:
            u = q.popleft()
            for i in self.head[u]:
                v = self.to[i]
                if self.cap[i] > 0 and level[v] < 0:
                    level[v] = level[u] + 1
                    q.append(v)
        return level if level[t] >= 0 else None

    def _push(self, u, t, f, level, it):
        if u == t:
            return f
        while it[u] < len(self.head[u]):
            i = self.head[u][it[u]]
            v = self.to[i]
            if self.cap[i] > 0 and level[v] == level[u] + 1:
                d = self._push(v, t, min(f, self.cap[i]), level, it)
                if d > 0:
                    self.cap[i] -= d
                    self.cap[i ^ 1] += d
                    return d
            it[u] += 1
        return 0

    def max_flow(self, s: int, t: int) -> int:
        flow = 0
        while True:
            level = self._levels(s, t)
            if level is None:
                return flow
            it = [0] * self.n
            while True:
                f = self._push(s, t, 1 << 62, level, it)
                if f == 0:
                    break
                flow += f

    def reachable(self, s: int) -> set[int]:
        seen = {s}
        q = deque([s])
        while q:
            u = q.popleft()
            for i in self.head[u]:
                v = self.to[i]
                if self.cap[i] > 0 and v not in seen:
                    seen.add(v)
                    q.append(v)
        return seen


def _denser_subset_than(g: Graph, guess: Fraction):
    """Vertex mask with e(S)/|S| > guess, or None.

    Goldberg's construction: source s feeds every vertex m, each vertex
    drains m + 2*guess - deg(v) to the sink, and each edge carries 1
    both ways (all scaled by guess's denominator to stay integral). A
    cut below n*m exposes a subset denser than the guess.
    """
    n, m = g.n, g.edge_count
    p, q = guess.numerator, guess.denominator
    s, t = 0, n + 1
    net = _Dinic(n + 2)
    for v in range(1, n + 1):
        net.add_edge(s, v, q * m)
        net.add_edge(v, t, q * m + 2 * p - q * g.degree(v))
    for u, v in g.edges():
        net.add_edge(u, v, q, q)
    flow = net.max_flow(s, t)
    if flow >= q * n * m:
        return None
    side = net.reachable(s)
    mask = 0
    for v in side:
        if 1 <= v <= n:
            mask |= 1 << (v - 1)
    if mask == 0:
        return None
    return mask


def _densest_flow(g: Graph):
    """(mask, e, s) of a maximum-density subset via exact flow search.

    Binary-searches the sorted set of all feasible densities e/s, so the
    answer is exact; the witness comes from the cut one candidate below
    the optimum.
    """
    n, m = g.n, g.edge_count
    if m == 0:
        return (1, 0, 1)
    cands = {Fraction(0)}
    for s in range(1, n + 1):
        top = min(m, s * (s - 1) // 2)
        for e in range(1, top + 1):
            cands.add(Fraction(e, s))
    ordered = sorted(cands)
    lo, hi = 0, len(ordered) - 1
    # invariant: some subset is denser than ordered[lo - 1]; no subset
    # is denser than ordered[hi]. Find the first candidate no subset
    # beats: that candidate is the maximum density.
    while lo < hi:
        mid = (lo + hi) // 2
        if _denser_subset_than(g, ordered[mid]) is not None:
            lo = mid + 1
        else:
            hi = mid
    best = ordered[lo]
    if lo == 0:
        return (1, 0, 1)
    mask = _denser_subset_than(g, ordered[lo - 1])
    e = g.edge_count_in(mask)
    s = mask.bit_count()
    if Fraction(e, s) != best:
        raise AssertionError("flow witness density mismatch")
    return (mask, e, s)


def _densest(g: Graph, method: str):
    if method == "brute":
        return _densest_brute(g)
    if method == "flow":
        return _densest_flow(g)
    if method == "auto":
        if g.n <= _crossover():
            return _densest_brute(g)
        return _densest_flow(g)
    raise ValueError(f"unknown density method {method!r}")


def max_average_degree(g: Graph, method: str = "auto") -> Fraction:
    """max over nonempty subgraphs H of 2 e(H) / |H|, exactly.

    method: 'brute' scans all subsets, 'flow' runs the max-flow binary
    search, 'auto' picks by size (crossover INDIV_SUBSET_BRUTEFORCE_MAX,
    default 16).
    """
    if g.n == 0:
        raise ValueError("mad is undefined on the empty graph")
    _mask, e, s = _densest(g, method)
    return Fraction(2 * e, s)


# -- membership in the sparse classes ------------------------------------


@dataclass(frozen=True)
class SparsityCertificate:
    """Outcome of a sparse-class membership test.

    Non-membership always carries a concrete violating subset and its
    exact delta (negative in the non-strict class, <= 0 in the strict
    one). Membership carries no subset.
    """

    member: bool
    witness: tuple[int, ...] | None = None
    witness_delta: Fraction | None = None

    def format(self) -> str:
        if self.member:
            return "member"
        vs = " ".join(str(v) for v in self.witness)
        return f"nonmember witness: {vs} delta: {format_rational(self.witness_delta)}"


def _mask_vertices(mask: int) -> tuple[int, ...]:
    return tuple(j + 1 for j in _bits(mask))


def _find_cycle_mask(g: Graph, comp: int) -> int:
    """Vertex mask of some cycle inside a component known to have one."""
    start = (comp & (-comp)).bit_length() - 1
    parent = {start: -1}
    stack = [start]
    order = []
    while stack:
        u = stack.pop()
        order.append(u)
        for v in _bits(g.rows[u] & comp):
            if v not in parent:
                parent[v] = u
                stack.append(v)
    # scan edges for one that closes a cycle in the DFS forest
    for u in order:
        for v in _bits(g.rows[u] & comp):
            if v == parent[u] or u == parent[v]:
                continue
            # walk both endpoints up to their meeting point
            a, b = u, v
            path_a = {a}
            while a != start and parent[a] >= 0:
                a = parent[a]
                path_a.add(a)
            mask = 0
            b_path = []
            while b not in path_a:
                b_path.append(b)
                b = parent[b]
            meet = b
            mask = 1 << meet
            for w in b_path:
                mask |= 1 << w
            a = u
            while a != meet:
                mask |= 1 << a
                a = parent[a]
            return mask
    raise AssertionError("component declared cyclic but no cycle found")


def _member_rule(g: Graph, alpha: Fraction, strict: bool):
    """Component rule for alpha > 1: members are forests with bounded
    component sizes."""
    if strict:
        bound = math.ceil(1 / (alpha - 1))
    else:
        bound = math.floor(alpha / (alpha - 1))
    for comp in g.components():
        s = comp.bit_count()
        e = g.edge_count_in(comp)
        if e >= s:
            cyc = _find_cycle_mask(g, comp)
            ce = g.edge_count_in(cyc)
            cs = cyc.bit_count()
            return SparsityCertificate(
                False, _mask_vertices(cyc), Fraction(cs) - alpha * ce
            )
        if s > bound:
            return SparsityCertificate(
                False, _mask_vertices(comp), Fraction(s) - alpha * e
            )
    return SparsityCertificate(True)


def member_K_alpha(
    g: Graph, alpha, strict: bool = False, method: str = "auto"
) -> SparsityCertificate:
    """Exact membership in the sparse class at level alpha.

    Non-strict membership means delta_alpha(H) >= 0 for every subgraph
    H; strict means > 0 for every nonempty H. method: 'auto' uses the
    component rule for alpha > 1 and the density oracle otherwise,
    'rule' forces the component rule (alpha > 1 only), 'brute'/'flow'
    force a density route.
    """
    a = _as_positive_alpha(alpha)
    if g.n == 0:
        return SparsityCertificate(True)
    if method == "rule" or (method == "auto" and a > 1):
        if a <= 1:
            raise ValueError("component rule requires alpha > 1")
        return _member_rule(g, a, strict)
    if method == "auto":
        density_method = "auto"
    elif method in ("brute", "flow"):
        density_method = method
    else:
        raise ValueError(f"unknown membership method {method!r}")

    p, q = a.numerator, a.denominator
    if density_method == "brute" or (
        density_method == "auto" and g.n <= _crossover()
    ):
        mask, e, s = _backend.min_delta_subset(g.rows, p, q)
        delta = Fraction(s) - a * e
        ok = delta > 0 if strict else delta >= 0
        if ok:
            return SparsityCertificate(True)
        return SparsityCertificate(False, _mask_vertices(mask), delta)

    mask, e, s = _densest_flow(g)
    # member iff max density e/s stays below (or at) 1/alpha
    if strict:
        ok = Fraction(e, s) < Fraction(1) / a
    else:
        ok = Fraction(e, s) <= Fraction(1) / a
    if ok:
        return SparsityCertificate(True)
    delta = Fraction(s) - a * e
    return SparsityCertificate(False, _mask_vertices(mask), delta)


# -- windmills ------------------------------------------------------------


def windmill(m: int, n: int) -> Graph:
    """n copies of K_m glued at one shared vertex (vertex 1)."""
    if m < 2:
        raise ValueError("windmill needs m >= 2")
    if n < 1:
        raise ValueError("windmill needs n >= 1")
    edges = []
    for i in range(n):
        block = [1] + [2 + i * (m - 1) + j for j in range(m - 1)]
        for x in range(len(block)):
            for y in range(x + 1, len(block)):
                edges.append((block[x], block[y]))
    return make_graph(1 + n * (m - 1), edges)


def windmill_membership_bound(alpha) -> tuple[int, int]:
    """(m, n) with m the largest clique size in the class at level alpha
    and n the largest count of K_m blades a member windmill can carry."""
    a = _as_positive_alpha(alpha)
    if a > 2:
        raise ValueError("windmill bound needs alpha <= 2")
    m = math.floor(Fraction(2) / a + 1)
    n = math.floor(Fraction(2) / ((a * m - 2) * (m - 1)))
    if n < 1:
        raise AssertionError("windmill count must be >= 1")
    return (m, n)


def pseudo_windmill(g: Graph, attach) -> Graph:
    """Glue one copy of g per attachment vertex at a common center.

    attach lists a vertex of g for each copy; that vertex is identified
    with the shared center (vertex 1 of the result), the rest of the
    copy keeps its edges.
    """
    attach = tuple(attach)
    if g.n < 2:
        raise ValueError("pseudo-windmill needs a graph with >= 2 vertices")
    if len(g.components()) != 1:
        raise ValueError("pseudo-windmill needs a connected graph")
    if not attach:
        raise ValueError("need at least one attachment vertex")
    for a in attach:
        if not (1 <= a <= g.n):
            raise ValueError(f"attachment vertex {a} out of range")
    edges = []
    for i, a in enumerate(attach):
        rest = [v for v in g.vertices if v != a]
        pos = {v: 2 + i * (g.n - 1) + j for j, v in enumerate(rest)}
        pos[a] = 1
        for u, v in g.edges():
            edges.append((min(pos[u], pos[v]), max(pos[u], pos[v])))
    return make_graph(1 + len(attach) * (g.n - 1), edges)


def enumerate_pseudo_windmills(g: Graph, n: int):
    """All pseudo-windmills with n copies of g, one per multiset of
    attachment vertices."""
    if n < 1:
        raise ValueError("need n >= 1 copies")
    for attach in combinations_with_replacement(g.vertices, n):
        yield pseudo_windmill(g, attach)


def pseudo_windmill_threshold(m: int) -> Fraction:
    """Copy-count threshold (m-1)/(m-3) for pseudo-windmills of
    K_m minus an edge inside the strict class at alpha = 2/(m-1)."""
    if m < 4:
        raise ValueError("threshold defined for m >= 4")
    return Fraction(m - 1, m - 3)


def complete_in_class_bound(alpha) -> int:
    """Largest n with K_n in the sparse class at level alpha: the
    greatest integer n <= 2/alpha + 1."""
    a = _as_positive_alpha(alpha)
    return math.floor(Fraction(2) / a + 1)


__all__ = [
    "DEFAULT_SUBSET_BRUTEFORCE_MAX",
    "SparsityCertificate",
    "complete_in_class_bound",
    "delta_alpha",
    "enumerate_pseudo_windmills",
    "format_rational",
    "max_average_degree",
    "member_K_alpha",
    "parse_rational",
    "pseudo_windmill",
    "pseudo_windmill_threshold",
    "windmill",
    "windmill_membership_bound",
]
