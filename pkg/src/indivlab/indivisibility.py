"""Witness builders, adversarial colorers, and the exhaustive verifier.

A class is indivisible when every member A and color count k admit a
member B whose every k-coloring contains a monochromatic induced copy
of A. This module builds such B for the classes that have them
(lex-square and chordal constructions), builds copy-free colorings for
the classes that do not (threshold, split, distance-hereditary, sparse,
and the two-obstruction union families), and verifies any claimed
witness by exhaustive enumeration.
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import ceil

from ._backend import zero_coloring_search
from ._purecore import BUDGET, EXHAUSTED, FOUND
from .classes import NamedAmalgamation, is_chordal, is_distance_hereditary, \
    is_split, is_threshold
from .errors import CapacityError, IncompleteSearchError
from .graphs import (
    _bits,
    Coloring,
    Embedding,
    Graph,
    complete,
    complete_minus_edge,
    complement,
    find_monochromatic_copy,
    induced_copy_masks,
    lex_product,
    make_graph,
    null_graph,
)
from .sparsity import member_K_alpha, windmill_membership_bound

DEFAULT_COLORING_BUDGET = 2 ** 24
EXACT_MINIMIZE_LIMIT = 2 ** 20


def _coloring_budget() -> int:
    raw = os.environ.get("INDIV_COLORING_BUDGET")
    if raw is None:
        return DEFAULT_COLORING_BUDGET
    try:
        val = int(raw)
    except ValueError:
        raise ValueError(f"INDIV_COLORING_BUDGET must be an integer, got {raw!r}")
    if val < 1:
        raise ValueError("INDIV_COLORING_BUDGET must be positive")
    return val


# -- verification -----------------------------------------------------------


@dataclass(frozen=True)
class WitnessReport:
    A: Graph
    B: Graph
    k: int
    verified: bool
    failing_coloring: Coloring | None = None


def verify_witness(a: Graph, b: Graph, k: int) -> WitnessReport:
    """Check that every k-coloring of b has a monochromatic induced copy
    of a. Enumerates colorings with vertex 1's color fixed (color
    classes are interchangeable) and prunes a branch as soon as a copy
    goes monochromatic; the reported failing coloring, if any, is the
    lexicographically least one."""
    if k < 1:
        raise ValueError("color count must be at least 1")
    budget = _coloring_budget()
    if k ** b.n > budget:
        raise CapacityError(
            f"{k}^{b.n} colorings exceed the enumeration budget {budget}"
        )
    if a.n == 0:
        return WitnessReport(a, b, k, True)
    copies = induced_copy_masks(a, b)
    node_cap = 4 * k ** b.n + 64
    status, colors, _nodes = zero_coloring_search(
        b.n, k, copies, node_cap, True
    )
    if status == EXHAUSTED:
        return WitnessReport(a, b, k, True)
    if status != FOUND:
        raise CapacityError("coloring enumeration exceeded its node cap")
    failing = Coloring(k, tuple(colors))
    assert find_monochromatic_copy(a, b, failing) is None
    return WitnessReport(a, b, k, False, failing)


# -- lex-square witness ------------------------------------------------------


def lex_square_witness(a: Graph) -> Graph:
    """The composition square a[a]: two colors always trap a copy of a
    in it, either inside one fiber or across a fiber selection."""
    return lex_product(a, a)


def lex_square_extract(a: Graph, coloring: Coloring) -> tuple[Embedding, int]:
    """For a 2-coloring of a[a], produce a monochromatic copy of a: the
    first fiber {a*} x A entirely of color 1 if one exists, otherwise
    the selection picking a color-2 vertex from every fiber."""
    n = a.n
    if coloring.n != n * n:
        raise ValueError(
            f"coloring has {coloring.n} vertices, expected {n * n}"
        )
    if coloring.k > 2:
        raise ValueError("the extractor is a 2-coloring argument")
    if n == 0:
        return Embedding(()), 1
    for astar in range(1, n + 1):
        fiber = tuple((astar - 1) * n + bb for bb in range(1, n + 1))
        if all(coloring.color_of(v) == 1 for v in fiber):
            return Embedding(fiber), 1
    mapping = []
    for aa in range(1, n + 1):
        b_a = next(
            bb
            for bb in range(1, n + 1)
            if coloring.color_of((aa - 1) * n + bb) == 2
        )
        mapping.append((aa - 1) * n + b_a)
    return Embedding(tuple(mapping)), 2


# -- chordal witness ---------------------------------------------------------


def attach_to_clique(base: Graph, addition: Graph, clique) -> Graph:
    """base plus a disjoint copy of addition, every new vertex joined to
    every vertex of the given clique of base. Keeps chordality when
    both parts are chordal."""
    clique = tuple(clique)
    if not base.is_clique(clique):
        raise ValueError("attachment set is not a clique")
    edges = list(base.edges())
    off = base.n
    edges.extend((u + off, v + off) for u, v in addition.edges())
    for w in range(1, addition.n + 1):
        edges.extend((c, w + off) for c in clique)
    return make_graph(base.n + addition.n, edges)


def chordal_witness_stages(
    a: Graph, max_vertices: int = 10_000
) -> tuple[Graph, ...]:
    """All intermediate graphs of the chordal witness recursion, from
    the empty graph up to the final witness. Follows a's simplicial
    construction order; at each step the graph so far receives one copy
    of the current prefix of a per clique of the step's attachment
    size, each copy joined to its clique."""
    cert = is_chordal(a)
    if not cert.member:
        raise ValueError("witness construction needs a chordal graph")
    steps = cert.evidence.steps if a.n else ()
    b = Graph(0, ())
    stages = [b]
    prefix: list[int] = []
    for v, clique in steps:
        prefix.append(v)
        sub = a.induced(sorted(prefix))
        size = len(clique)
        spots = [
            c
            for c in combinations(range(1, b.n + 1), size)
            if b.is_clique(c)
        ]
        grown = b.n + len(spots) * sub.n
        if grown > max_vertices:
            raise CapacityError(
                f"witness would reach {grown} vertices, cap is {max_vertices}"
            )
        edges = list(b.edges())
        off = b.n
        for spot in spots:
            edges.extend((u + off, w + off) for u, w in sub.edges())
            for x in range(1, sub.n + 1):
                edges.extend((c, x + off) for c in spot)
            off += sub.n
        b = make_graph(grown, edges)
        stages.append(b)
    return tuple(stages)


def chordal_witness(a: Graph, max_vertices: int = 10_000) -> Graph:
    """A chordal graph whose every 2-coloring contains a monochromatic
    induced copy of the chordal graph a."""
    return chordal_witness_stages(a, max_vertices)[-1]


# -- adversaries for the three structural non-indivisible classes ------------


def threshold_adversary(b: Graph) -> Coloring:
    """2-coloring of a threshold graph with no monochromatic copy of
    complement(P_3): vertices created isolated get color 1 (they form
    an independent set), vertices created dominating get color 2 (a
    clique)."""
    cert = is_threshold(b)
    if not cert.member:
        raise ValueError("threshold graph required")
    assign = [0] * b.n
    for v, kind in cert.evidence.steps:
        assign[v - 1] = 1 if kind == "isolated" else 2
    return Coloring(2, tuple(assign))


def split_adversary(b: Graph) -> Coloring:
    """2-coloring of a split graph with no monochromatic P_3: clique
    side 1, independent side 2; P_3 fits in neither a complete nor a
    null graph."""
    cert = is_split(b)
    if not cert.member:
        raise ValueError("split graph required")
    assign = [0] * b.n
    for v in cert.evidence.clique:
        assign[v - 1] = 1
    for v in cert.evidence.independent:
        assign[v - 1] = 2
    return Coloring(2, tuple(assign))


def dh_adversary(b: Graph) -> Coloring:
    """2-coloring of a distance-hereditary graph with no monochromatic
    P_4, replaying its construction: a pendant vertex takes the color
    opposite its attachment, twins copy their parent."""
    cert = is_distance_hereditary(b)
    if not cert.member:
        raise ValueError("distance-hereditary graph required")
    if b.n == 0:
        return Coloring(2, ())
    assign = [0] * b.n
    assign[cert.evidence.start - 1] = 1
    for kind, v, anchor in cert.evidence.steps:
        if kind == "pendant":
            assign[v - 1] = 3 - assign[anchor - 1]
        else:
            assign[v - 1] = assign[anchor - 1]
    return Coloring(2, tuple(assign))


# -- sparse adversary ---------------------------------------------------------


def _proper_bipartition(b: Graph) -> Coloring:
    assign = [0] * b.n
    for comp in b.components():
        root = (comp & -comp).bit_length()
        assign[root - 1] = 1
        frontier = [root]
        while frontier:
            nxt = []
            for u in frontier:
                for w in b.neighbors(u):
                    if assign[w - 1] == 0:
                        assign[w - 1] = 3 - assign[u - 1]
                        nxt.append(w)
            frontier = nxt
    return Coloring(2, tuple(assign))


def _mono_count(copies, class_masks) -> int:
    hits = 0
    for m in copies:
        for cm in class_masks:
            if m & cm == m:
                hits += 1
                break
    return hits


def _minimize_coloring(b: Graph, a: Graph, k: int) -> Coloring:
    """A k-coloring of b with zero monochromatic copies of a: exact
    branch-and-bound when k^|b| fits the exact limit, greedy descent
    with seeded restarts above it. Never returns a wrong answer; gives
    up with IncompleteSearchError instead."""
    copies = induced_copy_masks(a, b)
    if not copies:
        return Coloring(k, tuple(1 for _ in range(b.n)))
    if k ** b.n <= EXACT_MINIMIZE_LIMIT:
        node_cap = 4 * k ** b.n + 64
        status, colors, _ = zero_coloring_search(b.n, k, copies, node_cap, True)
        if status == FOUND:
            return Coloring(k, tuple(colors))
        if status == EXHAUSTED:
            raise AssertionError(
                "exact scan found no copy-free coloring where one must exist"
            )
        raise CapacityError("exact minimization exceeded its node cap")
    rng = random.Random(0x51AB)
    restarts = 48
    for _ in range(restarts):
        assign = [rng.randint(1, k) for _ in range(b.n)]
        masks = [0] * (k + 1)
        for i, c in enumerate(assign):
            masks[c] |= 1 << i
        best = _mono_count(copies, masks[1:])
        while best > 0:
            move = None
            for i in range(b.n):
                old = assign[i]
                for c in range(1, k + 1):
                    if c == old:
                        continue
                    masks[old] ^= 1 << i
                    masks[c] |= 1 << i
                    cnt = _mono_count(copies, masks[1:])
                    masks[c] ^= 1 << i
                    masks[old] |= 1 << i
                    if cnt < best:
                        best = cnt
                        move = (i, c)
            if move is None:
                break
            i, c = move
            masks[assign[i]] ^= 1 << i
            assign[i] = c
            masks[c] |= 1 << i
        if best == 0:
            return Coloring(k, tuple(assign))
    raise IncompleteSearchError(
        f"no copy-free {k}-coloring found within {restarts} restarts"
    )


def sparse_adversary(
    b: Graph, alpha: Fraction, strict: bool = False
) -> tuple[int, Coloring]:
    """Target-and-coloring pair showing the sparse class at this level
    is not indivisible: picks the extremal clique (or near-clique)
    target and a color count one above the windmill capacity, then
    finds a coloring of b with no monochromatic copy of the target."""
    alpha = Fraction(alpha)
    if alpha <= 0 or alpha > 2 or (strict and alpha == 2):
        raise ValueError("adversary needs 0 < alpha <= 2 (strict: < 2)")
    if not member_K_alpha(b, alpha, strict=strict).member:
        raise ValueError("graph is outside the class at this level")
    m = int(2 / alpha + 1)
    if strict and alpha == Fraction(2, m - 1):
        if m == 3:
            coloring = _proper_bipartition(b)
            assert find_monochromatic_copy(complete(2), b, coloring) is None
            return 2, coloring
        a = complete_minus_edge(m)
        k = ceil(Fraction(m - 1, m - 3))
    elif strict:
        a = complete(m)
        cap = Fraction(2, (m - 1) * (alpha * m - 2))
        k = (ceil(cap) - 1) + 1
    else:
        m, n = windmill_membership_bound(alpha)
        a = complete(m)
        k = n + 1
    coloring = _minimize_coloring(b, a, k)
    assert find_monochromatic_copy(a, b, coloring) is None
    return k, coloring


def sparse_adversary_target(
    alpha: Fraction, strict: bool = False
) -> tuple[Graph, int]:
    """The (target, colors) pair sparse_adversary uses at this level."""
    alpha = Fraction(alpha)
    if alpha <= 0 or alpha > 2 or (strict and alpha == 2):
        raise ValueError("adversary needs 0 < alpha <= 2 (strict: < 2)")
    m = int(2 / alpha + 1)
    if strict and alpha == Fraction(2, m - 1):
        if m == 3:
            return complete(2), 2
        return complete_minus_edge(m), ceil(Fraction(m - 1, m - 3))
    if strict:
        cap = Fraction(2, (m - 1) * (alpha * m - 2))
        return complete(m), ceil(cap)
    m, n = windmill_membership_bound(alpha)
    return complete(m), n + 1


# -- union-family adversaries --------------------------------------------------


def amalg_adversary_target(tag: NamedAmalgamation) -> Graph:
    """The copy the coloring avoids: K_{n-1} for the clique-bounded
    families, N_{n-1} for the component-bounded ones."""
    if tag.tag.endswith("kn"):
        return complete(tag.n - 1)
    return null_graph(tag.n - 1)


def _one_per_component(h: Graph) -> list[int]:
    """Color 1 on the lowest vertex of every component of size two or
    more, 2 elsewhere."""
    assign = [2] * h.n
    for comp in h.components():
        if comp.bit_count() >= 2:
            assign[(comp & -comp).bit_length() - 1] = 1
    return assign


def _first_component(h: Graph) -> list[int]:
    """Color 1 on the component containing the lowest vertex, 2 on the
    rest."""
    assign = [2] * h.n
    comps = h.components()
    if comps:
        for i in _bits(comps[0]):
            assign[i] = 1
    return assign


def amalg_class_adversary(tag: NamedAmalgamation, b: Graph) -> Coloring:
    """The proof colorings for the four non-indivisible union families:
    one marked vertex per clique component (clique-bounded case), one
    whole component against the rest (component-bounded case); the
    complement-obstruction tags color the complement and carry the
    colors back over the shared vertex set."""
    if not tag.contains(b):
        raise ValueError(f"graph is outside {tag.describe()}")
    if tag.tag == "forb-p3-kn":
        assign = _one_per_component(b)
    elif tag.tag == "forb-p3-nn":
        assign = _first_component(b)
    elif tag.tag == "forb-cop3-kn":
        assign = _first_component(complement(b))
    else:
        assign = _one_per_component(complement(b))
    coloring = Coloring(2, tuple(assign))
    assert (
        find_monochromatic_copy(amalg_adversary_target(tag), b, coloring)
        is None
    )
    return coloring


__all__ = [
    "WitnessReport",
    "verify_witness",
    "lex_square_witness",
    "lex_square_extract",
    "attach_to_clique",
    "chordal_witness",
    "chordal_witness_stages",
    "threshold_adversary",
    "split_adversary",
    "dh_adversary",
    "sparse_adversary",
    "sparse_adversary_target",
    "amalg_class_adversary",
    "amalg_adversary_target",
    "DEFAULT_COLORING_BUDGET",
    "EXACT_MINIMIZE_LIMIT",
]
