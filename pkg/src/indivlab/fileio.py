"""Text formats for graphs and colorings.

Graph files are DIMACS-flavoured: optional `c` comment lines, one
`p edge <n> <m>` header, then exactly m lines `e <u> <v>` with
1 <= u < v <= n and no duplicates. serialize_graph emits edges in
ascending order, so parse(serialize(g)) == g exactly.

Coloring files are lines `v <vertex> <color>`, one per vertex. The
format carries no color count, so parse_coloring takes k as max(color)
unless told otherwise.
"""

from __future__ import annotations

from .graphs import Coloring, Graph, make_graph


def parse_graph(text: str) -> Graph:
    n = None
    m = None
    edges = []
    seen = set()
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise ValueError(f"line {ln}: duplicate header")
            if len(parts) != 4 or parts[1] != "edge":
                raise ValueError(f"line {ln}: malformed header {line!r}")
            n, m = int(parts[2]), int(parts[3])
            if n < 0 or m < 0:
                raise ValueError(f"line {ln}: negative counts")
        elif parts[0] == "e":
            if n is None:
                raise ValueError(f"line {ln}: edge before header")
            if len(parts) != 3:
                raise ValueError(f"line {ln}: malformed edge {line!r}")
            u, v = int(parts[1]), int(parts[2])
            if not (1 <= u < v <= n):
                raise ValueError(
                    f"line {ln}: edge ({u},{v}) violates 1 <= u < v <= {n}"
                )
            if (u, v) in seen:
                raise ValueError(f"line {ln}: duplicate edge ({u},{v})")
            seen.add((u, v))
            edges.append((u, v))
        else:
            raise ValueError(f"line {ln}: unknown record {line!r}")
    if n is None:
        raise ValueError("missing 'p edge' header")
    if len(edges) != m:
        raise ValueError(f"header promises {m} edges, file has {len(edges)}")
    return make_graph(n, edges)


def serialize_graph(g: Graph, comment: str | None = None) -> str:
    out = []
    if comment:
        for line in comment.splitlines():
            out.append(f"c {line}")
    out.append(f"p edge {g.n} {g.edge_count}")
    for u, v in g.edges():
        out.append(f"e {u} {v}")
    return "\n".join(out) + "\n"


def parse_coloring(text: str, k: int | None = None) -> Coloring:
    assign: dict[int, int] = {}
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] != "v" or len(parts) != 3:
            raise ValueError(f"line {ln}: malformed record {line!r}")
        v, c = int(parts[1]), int(parts[2])
        if v < 1:
            raise ValueError(f"line {ln}: bad vertex {v}")
        if v in assign:
            raise ValueError(f"line {ln}: vertex {v} colored twice")
        if c < 1:
            raise ValueError(f"line {ln}: bad color {c}")
        assign[v] = c
    if not assign and k is None:
        return Coloring(1, ())
    n = max(assign) if assign else 0
    if sorted(assign) != list(range(1, n + 1)):
        raise ValueError("coloring must cover vertices 1..n exactly")
    colors = tuple(assign[v] for v in range(1, n + 1))
    if k is None:
        k = max(colors) if colors else 1
    return Coloring(k, colors)


def serialize_coloring(c: Coloring) -> str:
    return "".join(f"v {v} {c.color_of(v)}\n" for v in range(1, c.n + 1))


def read_graph(path) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_graph(fh.read())


def write_graph(path, g: Graph, comment: str | None = None) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize_graph(g, comment))


def read_coloring(path, k: int | None = None) -> Coloring:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_coloring(fh.read(), k)


def write_coloring(path, c: Coloring) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize_coloring(c))
