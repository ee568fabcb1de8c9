"""Amalgamation problems, free amalgams, bounded amalgam search, and
the nine-family catalog.

An amalgamation problem is a graph A embedded into two graphs B0 and
B1. An amalgam completes the square: a graph C with embeddings of B0
and B1 agreeing on A. The search here works on the glued vertex set
(B0 and B1 overlapping exactly in A), optionally identifying private
vertices of B0 with private vertices of B1, with every edge set between
the remaining private parts on the table. That family is bounded, so a
miss means "not found in the bounded family", never "no amalgam
exists".
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations

from .classes import ForbiddenSet, NamedAmalgamation
from .errors import CapacityError
from .graphs import (
    Embedding,
    Graph,
    complement,
    complete,
    is_induced_embedding,
    make_graph,
    null_graph,
    path,
)

SEARCH_BUDGET = 2 ** 20


@dataclass(frozen=True)
class AmalgamationProblem:
    a: Graph
    b0: Graph
    b1: Graph
    f0: Embedding
    f1: Embedding

    def __post_init__(self):
        if not is_induced_embedding(self.a, self.b0, self.f0.mapping):
            raise ValueError("f0 is not an induced embedding of A into B0")
        if not is_induced_embedding(self.a, self.b1, self.f1.mapping):
            raise ValueError("f1 is not an induced embedding of A into B1")


def problem(a: Graph, b0: Graph, b1: Graph, f0, f1) -> AmalgamationProblem:
    """Convenience constructor taking raw vertex tuples for the
    embeddings."""
    return AmalgamationProblem(a, b0, b1, Embedding(tuple(f0)), Embedding(tuple(f1)))


@dataclass(frozen=True)
class Amalgam:
    graph: Graph
    g0: Embedding
    g1: Embedding


def _glue_layout(p: AmalgamationProblem, matching):
    """C-labels for B1's vertices given identifications: A goes through
    f0, matched private vertices take their partner's B0 label, the
    rest are appended in ascending B1 order. Returns (map1, private0,
    appended1) where private0 lists B0 labels outside f0(A) and
    appended1 lists (B1 label, C label) pairs."""
    image0 = set(p.f0.mapping)
    image1 = set(p.f1.mapping)
    into0 = {p.f1.mapping[i]: p.f0.mapping[i] for i in range(p.a.n)}
    matched1 = {v1: u0 for u0, v1 in matching}
    map1 = {}
    appended = []
    nxt = p.b0.n + 1
    for v in range(1, p.b1.n + 1):
        if v in into0:
            map1[v] = into0[v]
        elif v in matched1:
            map1[v] = matched1[v]
        else:
            map1[v] = nxt
            appended.append((v, nxt))
            nxt += 1
    private0 = [u for u in range(1, p.b0.n + 1) if u not in image0]
    return map1, private0, appended, image1


def _build_candidate(p: AmalgamationProblem, matching, cross_edges):
    """Assemble the amalgam graph for a matching plus a set of cross
    edges (pairs of B0 label, B1 label, both private and unmatched);
    None when the embeddings fail to stay induced."""
    map1, _private0, appended, _ = _glue_layout(p, matching)
    n = p.b0.n + len(appended)
    edges = set(p.b0.edges())
    for x, y in p.b1.edges():
        u, v = map1[x], map1[y]
        edges.add((u, v) if u < v else (v, u))
    for u0, v1 in cross_edges:
        u, v = u0, map1[v1]
        edges.add((u, v) if u < v else (v, u))
    c = make_graph(n, edges)
    g0 = Embedding(tuple(range(1, p.b0.n + 1)))
    g1 = Embedding(tuple(map1[v] for v in range(1, p.b1.n + 1)))
    if not is_induced_embedding(p.b0, c, g0.mapping):
        return None
    if not is_induced_embedding(p.b1, c, g1.mapping):
        return None
    return Amalgam(c, g0, g1)


def free_amalgam(p: AmalgamationProblem) -> Amalgam:
    """B0 and B1 glued along A with no identifications and no cross
    edges."""
    am = _build_candidate(p, (), ())
    assert am is not None, "free amalgam cannot fail"
    return am


# -- structured candidates ---------------------------------------------------


def _component_pairs(p: AmalgamationProblem):
    """For each component of A: the private parts of the B0 and B1
    components its two images live in. Also the leftover components of
    B0 and B1 that miss A entirely."""
    image0 = set(p.f0.mapping)
    image1 = set(p.f1.mapping)
    comps0 = p.b0.components()
    comps1 = p.b1.components()
    blocks = []
    for comp in p.a.components():
        bits = [i + 1 for i in range(p.a.n) if (comp >> i) & 1]
        anchor0 = p.f0.mapping[bits[0] - 1]
        anchor1 = p.f1.mapping[bits[0] - 1]
        m0 = next(m for m in comps0 if (m >> (anchor0 - 1)) & 1)
        m1 = next(m for m in comps1 if (m >> (anchor1 - 1)) & 1)
        q0 = [v + 1 for v in range(p.b0.n) if (m0 >> v) & 1 and v + 1 not in image0]
        q1 = [v + 1 for v in range(p.b1.n) if (m1 >> v) & 1 and v + 1 not in image1]
        blocks.append((q0, q1))
    left0 = [
        [v + 1 for v in range(p.b0.n) if (m >> v) & 1]
        for m in comps0
        if not any((m >> (u - 1)) & 1 for u in image0)
    ]
    left1 = [
        [v + 1 for v in range(p.b1.n) if (m >> v) & 1]
        for m in comps1
        if not any((m >> (u - 1)) & 1 for u in image1)
    ]
    return blocks, left0, left1


def _valid_pair(p: AmalgamationProblem, u0: int, v1: int) -> bool:
    """Identifying u0 with v1 is consistent when they see the two
    copies of A identically."""
    for i in range(p.a.n):
        if p.b0.adjacent(u0, p.f0.mapping[i]) != p.b1.adjacent(v1, p.f1.mapping[i]):
            return False
    return True


def _valid_matching(p: AmalgamationProblem, matching) -> bool:
    for u0, v1 in matching:
        if not _valid_pair(p, u0, v1):
            return False
    for (u0, v1), (w0, x1) in combinations(matching, 2):
        if p.b0.adjacent(u0, w0) != p.b1.adjacent(v1, x1):
            return False
    return True


def _base_candidates(p: AmalgamationProblem):
    """Five proof-shaped candidates for one problem: free amalgam, full
    join, joins matching up components along A (with and without
    pairing leftover components), and a compacting variant identifying
    in-block privates pairwise."""
    image0 = set(p.f0.mapping)
    image1 = set(p.f1.mapping)
    p0 = [u for u in range(1, p.b0.n + 1) if u not in image0]
    p1 = [v for v in range(1, p.b1.n + 1) if v not in image1]
    all_pairs = frozenset((u, v) for u in p0 for v in p1)
    blocks, left0, left1 = _component_pairs(p)

    block_join = set()
    for q0, q1 in blocks:
        block_join.update((u, v) for u in q0 for v in q1)
    extended = set(block_join)
    for c0, c1 in zip(left0, left1):
        extended.update((u, v) for u in c0 for v in c1)

    compact_matching = []
    used0: set[int] = set()
    used1: set[int] = set()
    compact_join = set()
    for q0, q1 in blocks:
        q0 = [u for u in q0 if u not in used0]
        q1 = [v for v in q1 if v not in used1]
        paired = 0
        for u, v in zip(q0, q1):
            if _valid_pair(p, u, v):
                compact_matching.append((u, v))
                used0.add(u)
                used1.add(v)
                paired += 1
            else:
                break
        for u in q0[paired:]:
            compact_join.update((u, v) for v in q1[paired:])

    out = [
        ((), frozenset()),
        ((), all_pairs),
        ((), frozenset(block_join)),
        ((), frozenset(extended)),
    ]
    cm = tuple(compact_matching)
    if _valid_matching(p, cm):
        out.append((cm, frozenset(compact_join)))
    return out


def _unmatched_pairs(p: AmalgamationProblem, matching) -> frozenset:
    image0 = set(p.f0.mapping)
    image1 = set(p.f1.mapping)
    used0 = {u for u, _ in matching}
    used1 = {v for _, v in matching}
    return frozenset(
        (u, v)
        for u in range(1, p.b0.n + 1)
        if u not in image0 and u not in used0
        for v in range(1, p.b1.n + 1)
        if v not in image1 and v not in used1
    )


def _structured_candidates(p: AmalgamationProblem):
    """Proof-shaped candidates, tried before brute force: the base
    shapes for the problem itself plus the complement transports of the
    base shapes for the complemented problem (same matchings, cross
    edge sets flipped within the unmatched grid)."""
    out = list(_base_candidates(p))
    co = AmalgamationProblem(
        complement(p.a), complement(p.b0), complement(p.b1), p.f0, p.f1
    )
    for matching, cross in _base_candidates(co):
        out.append((matching, _unmatched_pairs(p, matching) - cross))
    seen = set()
    uniq = []
    for cand in out:
        if cand not in seen:
            seen.add(cand)
            uniq.append(cand)
    return uniq


def find_amalgam(p: AmalgamationProblem, spec) -> Amalgam | None:
    """First amalgam of p lying in spec (anything with a contains
    method), under a fixed deterministic order: structured candidates
    first, then every identification matching and cross edge set,
    smallest matchings and lexicographically least edge sets first.
    Exceeding the candidate budget raises CapacityError; exhausting the
    family returns None."""
    if not (spec.contains(p.a) and spec.contains(p.b0) and spec.contains(p.b1)):
        raise ValueError("problem is not inside the class")
    budget = SEARCH_BUDGET
    tried = 0
    seen = set()

    def attempt(matching, cross):
        nonlocal tried
        key = (tuple(matching), frozenset(cross))
        if key in seen:
            return None
        seen.add(key)
        tried += 1
        if tried > budget:
            raise CapacityError(
                f"amalgam search passed {budget} candidates without a verdict"
            )
        am = _build_candidate(p, matching, cross)
        if am is not None and spec.contains(am.graph):
            return am
        return None

    for matching, cross in _structured_candidates(p):
        am = attempt(matching, cross)
        if am is not None:
            return am

    image0 = set(p.f0.mapping)
    image1 = set(p.f1.mapping)
    p0 = [u for u in range(1, p.b0.n + 1) if u not in image0]
    p1 = [v for v in range(1, p.b1.n + 1) if v not in image1]
    for j in range(0, min(len(p0), len(p1)) + 1):
        for chosen0 in combinations(p0, j):
            for chosen1 in permutations(p1, j):
                matching = tuple(zip(chosen0, chosen1))
                if not _valid_matching(p, matching):
                    continue
                rest0 = [u for u in p0 if u not in chosen0]
                rest1 = [v for v in p1 if v not in set(chosen1)]
                grid = [(u, v) for u in rest0 for v in rest1]
                for mask in range(1 << len(grid)):
                    cross = tuple(
                        grid[i] for i in range(len(grid)) if (mask >> i) & 1
                    )
                    am = attempt(matching, cross)
                    if am is not None:
                        return am
    return None


# -- the nine families --------------------------------------------------------


@dataclass(frozen=True)
class AmalgamationFamily:
    """One catalog family; parameterized ones build their boundary from
    n, the fixed ones ignore it."""

    key: str
    needs_n: bool
    min_n: int

    def spec(self, n: int | None = None) -> ForbiddenSet:
        if self.needs_n:
            if n is None:
                raise ValueError(f"family {self.key} needs a parameter n")
            if n < self.min_n:
                raise ValueError(
                    f"family {self.key} needs n >= {self.min_n}"
                )
        if self.key == "all":
            return ForbiddenSet((), "all")
        if self.key == "forb-kn":
            return ForbiddenSet((complete(n),), f"forb-kn({n})")
        if self.key == "forb-nn":
            return ForbiddenSet((null_graph(n),), f"forb-nn({n})")
        if self.key == "forb-p3":
            return ForbiddenSet((path(3),), "forb-p3")
        if self.key == "forb-cop3":
            return ForbiddenSet((complement(path(3)),), "forb-cop3")
        return NamedAmalgamation(self.key, n).boundary()


def amalgamation_catalog() -> tuple[AmalgamationFamily, ...]:
    """The nine hereditary families with the amalgamation property:
    everything, bounded cliques, bounded independent sets, unions of
    cliques, their complements, and the four two-obstruction unions."""
    return (
        AmalgamationFamily("all", False, 0),
        AmalgamationFamily("forb-kn", True, 2),
        AmalgamationFamily("forb-nn", True, 2),
        AmalgamationFamily("forb-p3", False, 0),
        AmalgamationFamily("forb-cop3", False, 0),
        AmalgamationFamily("forb-p3-kn", True, 3),
        AmalgamationFamily("forb-cop3-kn", True, 3),
        AmalgamationFamily("forb-p3-nn", True, 3),
        AmalgamationFamily("forb-cop3-nn", True, 3),
    )


def parse_class_tag(tag: str):
    """Class specs for the command line: a catalog key, optionally with
    :n for the parameterized families."""
    name, _, arg = tag.partition(":")
    for fam in amalgamation_catalog():
        if fam.key == name:
            if fam.needs_n:
                if not arg:
                    raise ValueError(f"{name} needs a parameter, e.g. {name}:4")
                return fam.spec(int(arg))
            if arg:
                raise ValueError(f"{name} takes no parameter")
            return fam.spec()
    raise ValueError(f"unknown class tag {tag!r}")


__all__ = [
    "AmalgamationProblem",
    "Amalgam",
    "AmalgamationFamily",
    "problem",
    "free_amalgam",
    "find_amalgam",
    "amalgamation_catalog",
    "parse_class_tag",
    "SEARCH_BUDGET",
]
