"""Hereditary graph classes: recognizers with certificates and class algebra.

Six structural classes (cograph, perfect, chordal, threshold, split,
distance-hereditary) each get a recognizer whose positive answer is a
replayable construction or a directly checkable partition, and whose
negative answer is an induced embedding of a forbidden subgraph. The
generic ForbiddenSet machinery covers classes given by an antichain of
obstructions and supports intersection and complement.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import CapacityError
from .graphs import (
    Embedding,
    Graph,
    _bits,
    complement,
    complete,
    cycle,
    disjoint_union,
    find_induced_embedding,
    is_induced_embedding,
    make_graph,
    path,
)
from .sparsity import member_K_alpha

# -- named obstructions ---------------------------------------------------


def domino() -> Graph:
    """Two squares sharing an edge: the 6-cycle 1-2-3-6-5-4 plus the
    chord 2-5."""
    return make_graph(
        6, [(1, 2), (2, 3), (1, 4), (4, 5), (5, 6), (3, 6), (2, 5)]
    )


def gem() -> Graph:
    """P_4 (1-2-3-4) plus a vertex adjacent to all of it."""
    return make_graph(
        5, [(1, 2), (2, 3), (3, 4), (1, 5), (2, 5), (3, 5), (4, 5)]
    )


def two_k2() -> Graph:
    """2K_2, the complement of C_4."""
    return disjoint_union(complete(2), complete(2))


def cograph_obstructions() -> tuple[Graph, ...]:
    return (path(4),)


def threshold_obstructions() -> tuple[Graph, ...]:
    return (path(4), cycle(4), two_k2())


def split_obstructions() -> tuple[Graph, ...]:
    return (cycle(4), cycle(5), two_k2())


def chordal_obstructions(max_len: int) -> tuple[Graph, ...]:
    return tuple(cycle(n) for n in range(4, max_len + 1))


def dh_obstructions(max_len: int) -> tuple[Graph, ...]:
    base = [complement(path(5)), domino(), gem()]
    base.extend(cycle(n) for n in range(5, max_len + 1))
    return tuple(base)


def perfect_obstructions(max_len: int) -> tuple[Graph, ...]:
    out = []
    for n in range(5, max_len + 1, 2):
        out.append(cycle(n))
        if n >= 7:  # the 5-antihole is the 5-hole again
            out.append(complement(cycle(n)))
    return tuple(out)


# -- certificates ---------------------------------------------------------


@dataclass(frozen=True)
class ForbiddenWitness:
    """An obstruction graph together with its induced embedding."""

    obstruction: Graph
    embedding: Embedding

    def validate(self, g: Graph) -> bool:
        return is_induced_embedding(self.obstruction, g, self.embedding.mapping)


@dataclass(frozen=True)
class ChordalConstruction:
    """Simplicial construction order: steps (vertex, clique it attaches
    to), in construction order, over the original labels."""

    n: int
    steps: tuple[tuple[int, tuple[int, ...]], ...]

    def reconstruct(self) -> Graph:
        edges = []
        for v, clique in self.steps:
            edges.extend((v, w) for w in clique)
        return make_graph(self.n, edges)


@dataclass(frozen=True)
class ThresholdSequence:
    """Creation sequence: steps (vertex, 'isolated' | 'dominating')."""

    n: int
    steps: tuple[tuple[int, str], ...]

    def reconstruct(self) -> Graph:
        edges = []
        placed: list[int] = []
        for v, kind in self.steps:
            if kind == "dominating":
                edges.extend((v, w) for w in placed)
            placed.append(v)
        return make_graph(self.n, edges)


@dataclass(frozen=True)
class SplitPartition:
    """Clique side and independent side, both over original labels."""

    clique: tuple[int, ...]
    independent: tuple[int, ...]

    def validate(self, g: Graph) -> bool:
        if sorted(self.clique + self.independent) != list(g.vertices):
            return False
        for u, v in combinations(self.clique, 2):
            if not g.adjacent(u, v):
                return False
        for u, v in combinations(self.independent, 2):
            if g.adjacent(u, v):
                return False
        return True


@dataclass(frozen=True)
class DHConstruction:
    """Pendant/twin construction from a start vertex: steps are
    (kind, new vertex, anchor vertex) with kind in pendant /
    false_twin / true_twin."""

    n: int
    start: int
    steps: tuple[tuple[str, int, int], ...]

    def reconstruct(self) -> Graph:
        rows = {self.start: set()}
        for kind, v, anchor in self.steps:
            if kind == "pendant":
                nbrs = {anchor}
            elif kind == "false_twin":
                nbrs = set(rows[anchor])
            elif kind == "true_twin":
                nbrs = set(rows[anchor]) | {anchor}
            else:
                raise ValueError(f"unknown step kind {kind!r}")
            rows[v] = nbrs
            for w in nbrs:
                rows[w].add(v)
        edges = []
        for v, nbrs in rows.items():
            edges.extend((v, w) for w in nbrs if v < w)
        return make_graph(self.n, edges)


@dataclass(frozen=True)
class ClassCertificate:
    member: bool
    evidence: object = None

    def __bool__(self) -> bool:
        return self.member


# -- generic scans and class algebra --------------------------------------


def forbidden_scan(g: Graph, obstructions) -> ClassCertificate:
    """Membership in the class forbidding the given graphs, scanned in
    the order given; the first embedding found is the evidence."""
    for f in obstructions:
        emb = find_induced_embedding(f, g)
        if emb is not None:
            return ClassCertificate(False, ForbiddenWitness(f, emb))
    return ClassCertificate(True)


def _antichain_reduce(graphs) -> tuple[Graph, ...]:
    kept: list[Graph] = []
    for g in graphs:
        if any(find_induced_embedding(h, g) is not None for h in kept):
            continue
        kept = [h for h in kept if find_induced_embedding(g, h) is None]
        kept.append(g)
    return tuple(kept)


@dataclass(frozen=True)
class ForbiddenSet:
    """A hereditary class given by an antichain of forbidden induced
    subgraphs. Use ForbiddenSet.of to validate the antichain; the raw
    constructor trusts its input."""

    graphs: tuple[Graph, ...]
    name: str = ""

    @staticmethod
    def of(graphs, name: str = "") -> "ForbiddenSet":
        graphs = tuple(graphs)
        for i, a in enumerate(graphs):
            for j, b in enumerate(graphs):
                if i != j and find_induced_embedding(a, b) is not None:
                    raise ValueError(
                        "forbidden set is not an antichain: "
                        f"graph {i} embeds into graph {j}"
                    )
        return ForbiddenSet(graphs, name)

    def certificate(self, g: Graph) -> ClassCertificate:
        return forbidden_scan(g, self.graphs)

    def contains(self, g: Graph) -> bool:
        return self.certificate(g).member

    def describe(self) -> str:
        return self.name or f"forb({len(self.graphs)} graphs)"


def class_intersection(specs) -> ForbiddenSet:
    """Union the boundaries and reduce back to an antichain (a graph is
    dropped when another boundary graph embeds into it)."""
    pool: list[Graph] = []
    names = []
    for s in specs:
        pool.extend(s.graphs)
        if s.name:
            names.append(s.name)
    return ForbiddenSet(_antichain_reduce(pool), " & ".join(names))


def class_complement(spec: ForbiddenSet) -> ForbiddenSet:
    """The class of complements: complement every boundary graph."""
    return ForbiddenSet(
        tuple(complement(f) for f in spec.graphs),
        f"co({spec.name})" if spec.name else "",
    )


# -- recognizers -----------------------------------------------------------


def _is_clique_mask(g: Graph, mask: int) -> bool:
    for i in _bits(mask):
        if g.rows[i] & mask != mask ^ (1 << i):
            return False
    return True


def is_cograph(g: Graph) -> ClassCertificate:
    """P_4-free test by scan; non-member evidence is the P_4 embedding."""
    return forbidden_scan(g, cograph_obstructions())


def is_perfect(g: Graph, max_n: int = 18) -> ClassCertificate:
    """Odd hole / odd antihole scan. Exhaustive, so capped: graphs with
    more than max_n vertices raise CapacityError rather than silently
    approximating."""
    if g.n > max_n:
        raise CapacityError(
            f"perfect-graph scan capped at {max_n} vertices, got {g.n}"
        )
    return forbidden_scan(g, perfect_obstructions(g.n))


def _find_hole(g: Graph, mask: int) -> ForbiddenWitness:
    """Recover an induced cycle of length >= 4 inside the vertices of
    mask; the subgraph is known to be non-chordal."""
    for v in _bits(mask):
        nb = g.rows[v] & mask
        for x in _bits(nb):
            for y in _bits(nb):
                if y <= x or (g.rows[x] >> y) & 1:
                    continue
                # shortest x..y path avoiding the rest of N[v]: with v
                # it closes an induced cycle of length >= 4
                allowed = (mask & ~(g.rows[v] | (1 << v))) | (1 << x) | (1 << y)
                parent = {x: -1}
                q = deque([x])
                while q:
                    u = q.popleft()
                    if u == y:
                        break
                    for w in _bits(g.rows[u] & allowed):
                        if w not in parent:
                            parent[w] = u
                            q.append(w)
                if y not in parent:
                    continue
                chain = [y]
                while chain[-1] != x:
                    chain.append(parent[chain[-1]])
                chain.reverse()  # x .. y
                hole = [v + 1] + [w + 1 for w in chain]
                return ForbiddenWitness(
                    cycle(len(hole)), Embedding(tuple(hole))
                )
    raise AssertionError("no hole found in a graph declared non-chordal")


def is_chordal(g: Graph) -> ClassCertificate:
    """Greedy simplicial elimination, lowest vertex first. The member
    certificate is the elimination ordering reversed into a
    construction sequence; failure recovers an induced hole."""
    alive = g.full_mask
    removal: list[tuple[int, tuple[int, ...]]] = []
    while alive:
        pick = -1
        for i in _bits(alive):
            if _is_clique_mask(g, g.rows[i] & alive):
                pick = i
                break
        if pick < 0:
            return ClassCertificate(False, _find_hole(g, alive))
        clique = tuple(j + 1 for j in _bits(g.rows[pick] & alive))
        removal.append((pick + 1, clique))
        alive ^= 1 << pick
    return ClassCertificate(
        True, ChordalConstruction(g.n, tuple(reversed(removal)))
    )


def is_threshold(g: Graph) -> ClassCertificate:
    """Peel isolated vertices first, then dominating ones, lowest index
    first; the reversed removal order is a creation sequence."""
    alive = g.full_mask
    removal: list[tuple[int, str]] = []
    while alive:
        pick = -1
        kind = ""
        for i in _bits(alive):
            if g.rows[i] & alive == 0:
                pick, kind = i, "isolated"
                break
        if pick < 0:
            for i in _bits(alive):
                if g.rows[i] & alive == alive ^ (1 << i):
                    pick, kind = i, "dominating"
                    break
        if pick < 0:
            return forbidden_scan(g, threshold_obstructions())
        removal.append((pick + 1, kind))
        alive ^= 1 << pick
    return ClassCertificate(
        True, ThresholdSequence(g.n, tuple(reversed(removal)))
    )


def _split_partition(g: Graph) -> SplitPartition | None:
    """Clique/independent partition via the degree-sequence equality:
    with degrees sorted descending and k = max{i : d_i >= i-1}, the
    graph is split exactly when sum(d_1..d_k) = k(k-1) +
    sum(min(d_i,k) for i > k), and then any k vertices realizing the
    top-k degree multiset form the clique side. Returns a verified
    partition or None."""
    order = sorted(range(g.n), key=lambda i: (-g.rows[i].bit_count(), i))
    degs = [g.rows[i].bit_count() for i in order]
    k = 0
    for i in range(1, g.n + 1):
        if degs[i - 1] >= i - 1:
            k = i
    lhs = sum(degs[:k])
    rhs = k * (k - 1) + sum(min(d, k) for d in degs[k:])
    if lhs != rhs:
        return None
    cmask = 0
    for i in order[:k]:
        cmask |= 1 << i
    imask = g.full_mask & ~cmask
    part = SplitPartition(
        tuple(sorted(i + 1 for i in order[:k])),
        tuple(sorted(i + 1 for i in _bits(imask))),
    )
    assert part.validate(g), "degree equality held but partition failed"
    return part


def is_split(g: Graph) -> ClassCertificate:
    part = _split_partition(g)
    if part is not None:
        return ClassCertificate(True, part)
    cert = forbidden_scan(g, split_obstructions())
    if cert.member:
        raise AssertionError(
            "no split partition found but no obstruction either"
        )
    return cert


def is_distance_hereditary(g: Graph) -> ClassCertificate:
    """Reduce by pendants, then false twins, then true twins (lowest
    index first); success reversed is a construction sequence from a
    single vertex."""
    if g.n == 0:
        return ClassCertificate(True)
    alive = g.full_mask
    removal: list[tuple[str, int, int]] = []
    while alive.bit_count() > 1:
        step = None
        for i in _bits(alive):
            nb = g.rows[i] & alive
            if nb.bit_count() == 1:
                step = ("pendant", i + 1, nb.bit_length())
                break
        if step is None:
            live = list(_bits(alive))
            for ui, u in enumerate(live):
                for v in live[ui + 1 :]:
                    if (g.rows[u] >> v) & 1:
                        continue
                    if g.rows[u] & alive == g.rows[v] & alive:
                        step = ("false_twin", v + 1, u + 1)
                        break
                if step:
                    break
        if step is None:
            live = list(_bits(alive))
            for ui, u in enumerate(live):
                for v in live[ui + 1 :]:
                    if not (g.rows[u] >> v) & 1:
                        continue
                    nu = (g.rows[u] & alive) ^ (1 << v)
                    nv = (g.rows[v] & alive) ^ (1 << u)
                    if nu == nv:
                        step = ("true_twin", v + 1, u + 1)
                        break
                if step:
                    break
        if step is None:
            return forbidden_scan(g, dh_obstructions(g.n))
        removal.append(step)
        alive ^= 1 << (step[1] - 1)
    start = alive.bit_length()
    return ClassCertificate(
        True, DHConstruction(g.n, start, tuple(reversed(removal)))
    )


# -- class spec wrappers ---------------------------------------------------

_RECOGNIZERS = {
    "cograph": is_cograph,
    "perfect": is_perfect,
    "chordal": is_chordal,
    "threshold": is_threshold,
    "split": is_split,
    "distance-hereditary": is_distance_hereditary,
}


@dataclass(frozen=True)
class StructuralClass:
    """One of the six named classes, as a membership-testing spec."""

    kind: str

    def __post_init__(self):
        if self.kind not in _RECOGNIZERS:
            raise ValueError(f"unknown structural class {self.kind!r}")

    def certificate(self, g: Graph) -> ClassCertificate:
        return _RECOGNIZERS[self.kind](g)

    def contains(self, g: Graph) -> bool:
        return self.certificate(g).member

    def describe(self) -> str:
        return self.kind


@dataclass(frozen=True)
class SparseClass:
    """The sparse class at a given level, as a membership-testing spec."""

    alpha: Fraction
    strict: bool = False

    def contains(self, g: Graph) -> bool:
        return member_K_alpha(g, self.alpha, strict=self.strict).member

    def describe(self) -> str:
        plus = "+" if self.strict else ""
        return f"sparse({self.alpha}){plus}"


@dataclass(frozen=True)
class NamedAmalgamation:
    """Tag for the four two-obstruction amalgamation families.

    tag is one of forb-p3-kn, forb-p3-nn, forb-cop3-kn, forb-cop3-nn;
    n is the clique / independent-set parameter (n >= 3).
    """

    tag: str
    n: int

    _TAGS = ("forb-p3-kn", "forb-p3-nn", "forb-cop3-kn", "forb-cop3-nn")

    def __post_init__(self):
        if self.tag not in self._TAGS:
            raise ValueError(f"unknown amalgamation tag {self.tag!r}")
        if self.n < 3:
            raise ValueError("amalgamation families need n >= 3")

    def boundary(self) -> ForbiddenSet:
        from .graphs import null_graph  # local to avoid top clutter

        p3 = path(3)
        kn = complete(self.n)
        nn = null_graph(self.n)
        if self.tag == "forb-p3-kn":
            gs = (p3, kn)
        elif self.tag == "forb-p3-nn":
            gs = (p3, nn)
        elif self.tag == "forb-cop3-kn":
            gs = (complement(p3), kn)
        else:
            gs = (complement(p3), nn)
        return ForbiddenSet(gs, f"{self.tag}({self.n})")

    def contains(self, g: Graph) -> bool:
        return self.boundary().contains(g)

    def describe(self) -> str:
        return f"{self.tag}({self.n})"
