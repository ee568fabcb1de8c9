"""Command line front end and batch experiment runner.

One verb per library operation, text or JSON-lines output, and exit
statuses that scripts can branch on: 0 success / member / verified,
1 negative result, 2 input error, 3 capacity or budget error.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from contextlib import contextmanager
from fractions import Fraction

from .amalgamation import amalgamation_catalog, find_amalgam, parse_class_tag, problem
from .classes import (
    ChordalConstruction,
    DHConstruction,
    ForbiddenWitness,
    NamedAmalgamation,
    SplitPartition,
    StructuralClass,
    ThresholdSequence,
    chordal_obstructions,
    cograph_obstructions,
    dh_obstructions,
    forbidden_scan,
    is_chordal,
    is_cograph,
    is_distance_hereditary,
    is_perfect,
    is_split,
    is_threshold,
    split_obstructions,
    threshold_obstructions,
)
from .errors import CapacityError, IncompleteSearchError
from .fileio import (
    read_coloring,
    read_graph,
    serialize_coloring,
    serialize_graph,
)
from .graphs import (
    Coloring,
    Graph,
    complement,
    complete,
    complete_minus_edge,
    cycle,
    find_monochromatic_copy,
    lex_product,
    null_graph,
    path,
)
from .indivisibility import (
    amalg_adversary_target,
    amalg_class_adversary,
    chordal_witness_stages,
    dh_adversary,
    lex_square_witness,
    sparse_adversary,
    sparse_adversary_target,
    split_adversary,
    threshold_adversary,
    verify_witness,
)
from .random_graphs import (
    random_cluster,
    random_distance_hereditary,
    random_family_member,
    random_forest,
    random_graph,
    random_problem,
    random_sparse_member,
    random_split,
    random_threshold,
    random_tree,
)
from .sparsity import (
    format_rational,
    max_average_degree,
    member_K_alpha,
    parse_rational,
    windmill,
    windmill_membership_bound,
)
from .classes import domino, gem

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT = 2
EXIT_CAPACITY = 3


class Emitter:
    """Writes either plain text or one JSON record per line."""

    def __init__(self, fmt: str, out=None):
        self.fmt = fmt
        self.out = out or sys.stdout

    def record(self, rec: dict, text: str) -> None:
        if self.fmt == "json-lines":
            payload = {"schema": 1, **rec}
            self.out.write(json.dumps(payload, sort_keys=True) + "\n")
        else:
            self.out.write(text if text.endswith("\n") else text + "\n")


def _graph_json(g: Graph) -> dict:
    return {"n": g.n, "edges": [[u, v] for u, v in g.edges()]}


def _coloring_json(c: Coloring) -> dict:
    return {"k": c.k, "colors": list(c.assign)}


def _write_graph_output(g: Graph, args, emitter: Emitter, comment: str) -> None:
    text = serialize_graph(g, comment)
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
        emitter.record(
            {"verb": args.verb, "graph": _graph_json(g), "path": args.out},
            f"wrote {args.out} ({g.n} vertices, {g.edge_count} edges)",
        )
    else:
        emitter.record({"verb": args.verb, "graph": _graph_json(g)}, text.rstrip("\n"))


# -- gen -------------------------------------------------------------------

_FIXED_GENERATORS = {
    "complete": (1, lambda p, rng: complete(p[0])),
    "null": (1, lambda p, rng: null_graph(p[0])),
    "path": (1, lambda p, rng: path(p[0])),
    "cycle": (1, lambda p, rng: cycle(p[0])),
    "complete-minus-edge": (1, lambda p, rng: complete_minus_edge(p[0])),
    "windmill": (2, lambda p, rng: windmill(p[0], p[1])),
    "domino": (0, lambda p, rng: domino()),
    "gem": (0, lambda p, rng: gem()),
}

_RANDOM_GENERATORS = {
    "tree": random_tree,
    "forest": random_forest,
    "sparse": random_sparse_member,
    "threshold": random_threshold,
    "split": random_split,
    "distance-hereditary": random_distance_hereditary,
    "cluster": random_cluster,
}


def _cmd_gen(args, emitter: Emitter) -> int:
    kind = args.kind
    if kind in _FIXED_GENERATORS:
        arity, build = _FIXED_GENERATORS[kind]
        if len(args.params) != arity:
            raise ValueError(f"gen {kind} takes {arity} integer parameter(s)")
        g = build([int(x) for x in args.params], None)
        comment = " ".join(["gen", kind, *args.params])
    elif kind == "random":
        if len(args.params) not in (1, 2):
            raise ValueError("gen random takes n [p]")
        n = int(args.params[0])
        p = float(args.params[1]) if len(args.params) == 2 else 0.5
        if not 0.0 <= p <= 1.0:
            raise ValueError("edge probability must lie in [0, 1]")
        g = random_graph(n, p, random.Random(args.seed))
        comment = f"gen random {n} {p} seed={args.seed}"
    elif kind in _RANDOM_GENERATORS:
        if len(args.params) != 1:
            raise ValueError(f"gen {kind} takes one integer parameter")
        g = _RANDOM_GENERATORS[kind](int(args.params[0]), random.Random(args.seed))
        comment = f"gen {kind} {args.params[0]} seed={args.seed}"
    else:
        raise ValueError(f"unknown generator {kind!r}")
    _write_graph_output(g, args, emitter, comment)
    return EXIT_OK


# -- recognize ---------------------------------------------------------------

def _evidence_text(ev) -> str:
    if ev is None:
        return "no evidence recorded"
    if isinstance(ev, ForbiddenWitness):
        vs = " ".join(str(v) for v in ev.embedding.mapping)
        return (
            f"forbidden subgraph on {ev.obstruction.n} vertices "
            f"({ev.obstruction.edge_count} edges) at: {vs}"
        )
    if isinstance(ev, ChordalConstruction):
        parts = [
            f"{v}({','.join(str(w) for w in clique)})" for v, clique in ev.steps
        ]
        return "simplicial construction: " + " ".join(parts)
    if isinstance(ev, ThresholdSequence):
        return "creation sequence: " + " ".join(f"{v}:{kind}" for v, kind in ev.steps)
    if isinstance(ev, SplitPartition):
        cl = " ".join(str(v) for v in ev.clique)
        ind = " ".join(str(v) for v in ev.independent)
        return f"clique: {cl} | independent: {ind}"
    if isinstance(ev, DHConstruction):
        parts = [f"{kind}:{v}@{anchor}" for kind, v, anchor in ev.steps]
        return f"built from {ev.start}: " + " ".join(parts)
    return str(ev)


def _evidence_json(ev):
    if ev is None:
        return None
    if isinstance(ev, ForbiddenWitness):
        return {
            "kind": "forbidden-subgraph",
            "obstruction": _graph_json(ev.obstruction),
            "embedding": list(ev.embedding.mapping),
        }
    if isinstance(ev, ChordalConstruction):
        return {
            "kind": "simplicial-construction",
            "steps": [[v, list(c)] for v, c in ev.steps],
        }
    if isinstance(ev, ThresholdSequence):
        return {"kind": "creation-sequence", "steps": [list(s) for s in ev.steps]}
    if isinstance(ev, SplitPartition):
        return {
            "kind": "split-partition",
            "clique": list(ev.clique),
            "independent": list(ev.independent),
        }
    if isinstance(ev, DHConstruction):
        return {
            "kind": "pendant-twin-construction",
            "start": ev.start,
            "steps": [list(s) for s in ev.steps],
        }
    return {"kind": "other", "repr": repr(ev)}


_CLASS_ALIASES = {"dh": "distance-hereditary"}


def _cmd_recognize(args, emitter: Emitter) -> int:
    kind = _CLASS_ALIASES.get(args.cls, args.cls)
    g = read_graph(args.graph)
    cert = StructuralClass(kind).certificate(g)
    verdict = "member" if cert.member else "non-member"
    emitter.record(
        {
            "verb": "recognize",
            "class": kind,
            "verdict": verdict,
            "certificate": _evidence_json(cert.evidence),
        },
        f"{verdict}\n{_evidence_text(cert.evidence)}",
    )
    return EXIT_OK if cert.member else EXIT_NEGATIVE


# -- member / mad ------------------------------------------------------------

def _cmd_member(args, emitter: Emitter) -> int:
    alpha = parse_rational(args.alpha)
    g = read_graph(args.graph)
    cert = member_K_alpha(g, alpha, strict=args.strict, method=args.method)
    rec = {
        "verb": "member",
        "alpha": str(alpha),
        "strict": args.strict,
        "verdict": "member" if cert.member else "non-member",
    }
    if not cert.member:
        rec["witness"] = list(cert.witness)
        rec["delta"] = format_rational(cert.witness_delta)
    emitter.record(rec, cert.format())
    return EXIT_OK if cert.member else EXIT_NEGATIVE


def _cmd_mad(args, emitter: Emitter) -> int:
    g = read_graph(args.graph)
    value = max_average_degree(g, method=args.method)
    emitter.record(
        {"verb": "mad", "value": format_rational(value)}, format_rational(value)
    )
    return EXIT_OK


# -- lexprod / complement ------------------------------------------------------

def _cmd_lexprod(args, emitter: Emitter) -> int:
    a = read_graph(args.left)
    b = read_graph(args.right)
    _write_graph_output(lex_product(a, b), args, emitter, "lexprod")
    return EXIT_OK


def _cmd_complement(args, emitter: Emitter) -> int:
    g = read_graph(args.graph)
    _write_graph_output(complement(g), args, emitter, "complement")
    return EXIT_OK


# -- witness -----------------------------------------------------------------

_WITNESS_CHECKS = {
    "cograph": is_cograph,
    "perfect": is_perfect,
    "chordal": is_chordal,
    "lexclosed": None,
}


def _cmd_witness(args, emitter: Emitter) -> int:
    a = read_graph(args.graph)
    checker = _WITNESS_CHECKS[args.cls]
    if checker is not None and not checker(a).member:
        raise ValueError(f"input graph is not a member of class {args.cls}")
    if args.cls == "chordal":
        b = chordal_witness_stages(a, max_vertices=args.max_vertices)[-1]
    else:
        b = lex_square_witness(a)
    comment = f"witness class={args.cls} for {a.n}-vertex input"
    if args.check:
        report = verify_witness(a, b, 2)
        if not report.verified:
            emitter.record(
                {
                    "verb": "witness",
                    "verdict": "failed",
                    "graph": _graph_json(b),
                    "failing": _coloring_json(report.failing_coloring),
                },
                "witness FAILED verification\n"
                + serialize_coloring(report.failing_coloring).rstrip("\n"),
            )
            return EXIT_NEGATIVE
    _write_graph_output(b, args, emitter, comment)
    return EXIT_OK


# -- adversary -----------------------------------------------------------------

_ADVERSARIES = {
    "threshold": (is_threshold, threshold_adversary),
    "split": (is_split, split_adversary),
    "distance-hereditary": (is_distance_hereditary, dh_adversary),
}

_FAMILY_TAGS = ("forb-p3-kn", "forb-p3-nn", "forb-cop3-kn", "forb-cop3-nn")


def _cmd_adversary(args, emitter: Emitter) -> int:
    kind = _CLASS_ALIASES.get(args.cls, args.cls)
    b = read_graph(args.graph)
    if kind in _ADVERSARIES:
        _, build = _ADVERSARIES[kind]
        coloring = build(b)
        k = coloring.k
    elif kind in ("kalpha", "kalpha-strict"):
        if args.alpha is None:
            raise ValueError(f"adversary class {kind} needs --alpha")
        alpha = parse_rational(args.alpha)
        k, coloring = sparse_adversary(b, alpha, strict=kind.endswith("strict"))
    elif kind in _FAMILY_TAGS:
        if args.n is None:
            raise ValueError(f"adversary class {kind} needs --n")
        k = 2
        coloring = amalg_class_adversary(NamedAmalgamation(kind, args.n), b)
    else:
        raise ValueError(f"unknown adversary class {kind!r}")
    text = serialize_coloring(coloring).rstrip("\n")
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(serialize_coloring(coloring))
        text = f"wrote {args.out} (k={k})"
    emitter.record(
        {"verb": "adversary", "class": kind, "k": k, "coloring": _coloring_json(coloring)},
        text,
    )
    return EXIT_OK


# -- check -----------------------------------------------------------------

def _cmd_check(args, emitter: Emitter) -> int:
    a = read_graph(args.a)
    b = read_graph(args.b)
    if args.coloring:
        coloring = read_coloring(args.coloring, args.k)
        hit = find_monochromatic_copy(a, b, coloring)
        if hit is None:
            emitter.record(
                {"verb": "check", "verdict": "copy-free"}, "copy-free"
            )
            return EXIT_NEGATIVE
        emb, color = hit
        vs = " ".join(str(v) for v in emb.mapping)
        emitter.record(
            {
                "verb": "check",
                "verdict": "monochromatic-copy",
                "embedding": list(emb.mapping),
                "color": color,
            },
            f"monochromatic copy: {vs} color {color}",
        )
        return EXIT_OK
    if args.k is None:
        raise ValueError("check needs --k when no coloring is given")
    report = verify_witness(a, b, args.k)
    if report.verified:
        emitter.record({"verb": "check", "verdict": "verified", "k": args.k}, "verified")
        return EXIT_OK
    emitter.record(
        {
            "verb": "check",
            "verdict": "failing-coloring",
            "k": args.k,
            "failing": _coloring_json(report.failing_coloring),
        },
        "failing coloring:\n"
        + serialize_coloring(report.failing_coloring).rstrip("\n"),
    )
    return EXIT_NEGATIVE


# -- amalgam -----------------------------------------------------------------

def _parse_embedding(text: str, a_n: int):
    if not text:
        if a_n == 0:
            return ()
        raise ValueError("empty embedding for a nonempty graph")
    vals = tuple(int(x) for x in text.split(","))
    if len(vals) != a_n:
        raise ValueError(f"embedding lists {len(vals)} vertices, A has {a_n}")
    return vals


def _cmd_amalgam(args, emitter: Emitter) -> int:
    spec = parse_class_tag(args.cls)
    a = read_graph(args.a)
    b0 = read_graph(args.b0)
    b1 = read_graph(args.b1)
    f0 = _parse_embedding(args.f0, a.n) if args.f0 else tuple(range(1, a.n + 1))
    f1 = _parse_embedding(args.f1, a.n) if args.f1 else tuple(range(1, a.n + 1))
    p = problem(a, b0, b1, f0, f1)
    am = find_amalgam(p, spec)
    if am is None:
        emitter.record({"verb": "amalgam", "verdict": "not-found"}, "not-found")
        return EXIT_NEGATIVE
    g0 = " ".join(str(v) for v in am.g0.mapping)
    g1 = " ".join(str(v) for v in am.g1.mapping)
    comment = f"amalgam in {spec.name}\ng0: {g0}\ng1: {g1}"
    if args.format == "json-lines":
        emitter.record(
            {
                "verb": "amalgam",
                "verdict": "found",
                "graph": _graph_json(am.graph),
                "g0": list(am.g0.mapping),
                "g1": list(am.g1.mapping),
            },
            "",
        )
    else:
        _write_graph_output(am.graph, args, emitter, comment)
    return EXIT_OK


# -- sweep -----------------------------------------------------------------

@contextmanager
def _budget_override(budget):
    if budget is None:
        yield
        return
    old = os.environ.get("INDIV_COLORING_BUDGET")
    os.environ["INDIV_COLORING_BUDGET"] = str(budget)
    try:
        yield
    finally:
        if old is None:
            del os.environ["INDIV_COLORING_BUDGET"]
        else:
            os.environ["INDIV_COLORING_BUDGET"] = old


_GRID_ALPHAS = ("1/3", "1/2", "2/3", "5/6", "1", "3/2", "2", "3")


def _suite_complete_grid(row, rng):
    alphas = [parse_rational(a) for a in row.get("alphas", _GRID_ALPHAS)]
    n_max = int(row.get("n_max", 10))
    for alpha in alphas:
        for n in range(1, n_max + 1):
            want = Fraction(n) <= Fraction(2) / alpha + 1
            if member_K_alpha(complete(n), alpha).member != want:
                return False, f"K_{n} disagrees at alpha={alpha}"
    return True, f"{len(alphas)} levels x K_1..K_{n_max}"


def _suite_windmill_threshold(row, rng):
    alphas = [parse_rational(a) for a in row.get("alphas", ("5/6", "1", "1/2", "2/5"))]
    method = row.get("method", "auto")
    for alpha in alphas:
        m, n = windmill_membership_bound(alpha)
        if not member_K_alpha(windmill(m, n), alpha, method=method).member:
            return False, f"windmill({m},{n}) rejected at alpha={alpha}"
        if member_K_alpha(windmill(m, n + 1), alpha, method=method).member:
            return False, f"windmill({m},{n + 1}) accepted at alpha={alpha}"
    return True, f"{len(alphas)} thresholds tight"


def _suite_mad_agreement(row, rng):
    count = int(row.get("count", 50))
    lo, hi = int(row.get("n_min", 6)), int(row.get("n_max", 8))
    for _ in range(count):
        g = random_graph(rng.randint(lo, hi), rng.uniform(0.2, 0.8), rng)
        if max_average_degree(g, "flow") != max_average_degree(g, "brute"):
            return False, f"disagreement on {g.n}-vertex graph"
    return True, f"{count} graphs agree"


_ADVERSARY_SUITES = {
    "threshold-adversary": (random_threshold, threshold_adversary, lambda: complement(path(3)), 30),
    "split-adversary": (random_split, split_adversary, lambda: path(3), 30),
    "dh-adversary": (random_distance_hereditary, dh_adversary, lambda: path(4), 25),
}


def _make_adversary_suite(gen, build, target_fn, default_size):
    def suite(row, rng):
        count = int(row.get("count", 200))
        size = int(row.get("size", default_size))
        target = target_fn()
        for _ in range(count):
            b = gen(rng.randint(1, size), rng)
            coloring = build(b)
            if find_monochromatic_copy(target, b, coloring) is not None:
                return False, f"monochromatic copy on {b.n}-vertex member"
        return True, f"{count} members copy-free"

    return suite


def _suite_sparse_adversary(row, rng):
    alpha = parse_rational(str(row.get("alpha", "1")))
    strict = bool(row.get("strict", False))
    count = int(row.get("count", 50))
    size = int(row.get("size", 12))
    target, want_k = sparse_adversary_target(alpha, strict)
    for _ in range(count):
        n = rng.randint(1, size)
        if alpha > 1:
            b = random_cluster(n, rng, max_size=2)
        elif strict:
            b = random_forest(n, rng)
        else:
            b = random_sparse_member(n, rng)
        k, coloring = sparse_adversary(b, alpha, strict=strict)
        if k != want_k:
            return False, f"k={k}, expected {want_k}"
        if find_monochromatic_copy(target, b, coloring) is not None:
            return False, f"monochromatic copy on {b.n}-vertex member"
    return True, f"{count} members copy-free at k={want_k}"


_LEX_TARGETS = (
    ("N_2", lambda: null_graph(2)),
    ("K_2", lambda: complete(2)),
    ("P_3", lambda: path(3)),
    ("coP_3", lambda: complement(path(3))),
    ("K_3", lambda: complete(3)),
)


def _suite_lex_square(row, rng):
    with _budget_override(row.get("budget")):
        for name, build in _LEX_TARGETS:
            a = build()
            if not verify_witness(a, lex_square_witness(a), 2).verified:
                return False, f"square of {name} not verified"
    return True, f"{len(_LEX_TARGETS)} squares verified"


def _suite_chordal_witness(row, rng):
    a = path(int(row.get("path_length", 3)))
    with _budget_override(row.get("budget")):
        stages = chordal_witness_stages(a)
        for stage in stages:
            if not is_chordal(stage).member:
                return False, f"stage with {stage.n} vertices not chordal"
        b = stages[-1]
        if not verify_witness(a, b, 2).verified:
            return False, f"{b.n}-vertex witness not verified"
    return True, f"witness on {stages[-1].n} vertices verified"


def _suite_recognizer_agreement(row, rng):
    count = int(row.get("count", 200))
    size = int(row.get("size", 6))
    checks = (
        ("cograph", is_cograph, lambda n: cograph_obstructions()),
        ("threshold", is_threshold, lambda n: threshold_obstructions()),
        ("split", is_split, lambda n: split_obstructions()),
        ("chordal", is_chordal, chordal_obstructions),
        ("distance-hereditary", is_distance_hereditary, dh_obstructions),
    )
    for _ in range(count):
        g = random_graph(rng.randint(0, size), rng.uniform(0.1, 0.9), rng)
        for name, rec, obs in checks:
            if rec(g).member != forbidden_scan(g, obs(g.n)).member:
                return False, f"{name} disagrees on a {g.n}-vertex graph"
    return True, f"{count} graphs x 5 classes agree"


def _suite_amalgamation(row, rng):
    key = row["family"]
    fams = {f.key: f for f in amalgamation_catalog()}
    if key not in fams:
        raise ValueError(f"unknown family {key!r}")
    fam = fams[key]
    n = row.get("n")
    if n is not None:
        n = int(n)
    spec = fam.spec(n)
    count = int(row.get("count", 50))
    max_vertices = int(row.get("max_vertices", 6))
    for _ in range(count):
        p = random_problem(key, rng, n=n, max_vertices=max_vertices)
        am = find_amalgam(p, spec)
        if am is None:
            return False, f"no amalgam for a {p.b0.n}/{p.b1.n} problem"
        if not spec.contains(am.graph):
            return False, "amalgam leaves the class"
    return True, f"{count} problems amalgamated"


def _suite_family_adversary(row, rng):
    tag = row["tag"]
    n = int(row["n"])
    count = int(row.get("count", 100))
    size = int(row.get("size", 8))
    named = NamedAmalgamation(tag, n)
    target = amalg_adversary_target(named)
    for _ in range(count):
        b = random_family_member(tag, rng.randint(1, size), rng, n)
        coloring = amalg_class_adversary(named, b)
        if find_monochromatic_copy(target, b, coloring) is not None:
            return False, f"monochromatic copy on {b.n}-vertex member"
    return True, f"{count} members copy-free"


SWEEP_SUITES = {
    "complete-grid": _suite_complete_grid,
    "windmill-threshold": _suite_windmill_threshold,
    "mad-agreement": _suite_mad_agreement,
    "threshold-adversary": _make_adversary_suite(*_ADVERSARY_SUITES["threshold-adversary"]),
    "split-adversary": _make_adversary_suite(*_ADVERSARY_SUITES["split-adversary"]),
    "dh-adversary": _make_adversary_suite(*_ADVERSARY_SUITES["dh-adversary"]),
    "sparse-adversary": _suite_sparse_adversary,
    "lex-square": _suite_lex_square,
    "chordal-witness": _suite_chordal_witness,
    "recognizer-agreement": _suite_recognizer_agreement,
    "amalgamation": _suite_amalgamation,
    "family-adversary": _suite_family_adversary,
}


def _cmd_sweep(args, emitter: Emitter) -> int:
    with open(args.config, "r", encoding="utf-8") as fh:
        config = json.load(fh)
    rows = config["rows"] if isinstance(config, dict) else config
    if not isinstance(rows, list):
        raise ValueError("sweep config must be a list of rows or {'rows': [...]}")
    passes = fails = capacities = 0
    for i, row in enumerate(rows):
        if not isinstance(row, dict) or "suite" not in row:
            raise ValueError(f"row {i} has no suite")
        suite = row["suite"]
        if suite not in SWEEP_SUITES:
            raise ValueError(f"row {i}: unknown suite {suite!r}")
        seed = int(row.get("seed", 0))
        rng = random.Random(seed)
        try:
            ok, detail = SWEEP_SUITES[suite](row, rng)
            status = "pass" if ok else "fail"
        except (CapacityError, IncompleteSearchError) as exc:
            status, detail = "capacity", str(exc)
        if status == "pass":
            passes += 1
        elif status == "fail":
            fails += 1
        else:
            capacities += 1
        emitter.record(
            {
                "verb": "sweep",
                "row": i,
                "suite": suite,
                "seed": seed,
                "status": status,
                "detail": detail,
            },
            f"row {i}: suite={suite} seed={seed} status={status} ({detail})",
        )
    emitter.record(
        {
            "verb": "sweep",
            "summary": True,
            "pass": passes,
            "fail": fails,
            "capacity": capacities,
        },
        f"sweep: {passes} pass, {fails} fail, {capacities} capacity",
    )
    if fails:
        return EXIT_NEGATIVE
    if capacities:
        return EXIT_CAPACITY
    return EXIT_OK


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="indivlab",
        description="Sparse classes, recognizers, and indivisibility witnesses.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=("text", "json-lines"),
        default="text",
        help="output format (default text)",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("gen", parents=[common], help="generate a named graph")
    p.add_argument("kind")
    p.add_argument("params", nargs="*")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--out")

    p = sub.add_parser("recognize", parents=[common], help="class membership with certificate")
    p.add_argument("--class", dest="cls", required=True,
                   choices=("cograph", "perfect", "chordal", "threshold",
                            "split", "distance-hereditary", "dh"))
    p.add_argument("graph")

    p = sub.add_parser("member", parents=[common], help="sparse class membership")
    p.add_argument("--alpha", required=True)
    p.add_argument("--strict", action="store_true")
    p.add_argument("--method", choices=("auto", "rule", "brute", "flow"), default="auto")
    p.add_argument("graph")

    p = sub.add_parser("mad", parents=[common], help="exact maximum average degree")
    p.add_argument("--method", choices=("auto", "brute", "flow"), default="auto")
    p.add_argument("graph")

    p = sub.add_parser("lexprod", parents=[common], help="lexicographic product")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("-o", "--out")

    p = sub.add_parser("complement", parents=[common], help="graph complement")
    p.add_argument("graph")
    p.add_argument("-o", "--out")

    p = sub.add_parser("witness", parents=[common], help="indivisibility witness for a member")
    p.add_argument("--class", dest="cls", required=True,
                   choices=("cograph", "perfect", "chordal", "lexclosed"))
    p.add_argument("--check", action="store_true",
                   help="also run the exhaustive 2-coloring verifier")
    p.add_argument("--max-vertices", type=int, default=10_000)
    p.add_argument("graph")
    p.add_argument("-o", "--out")

    p = sub.add_parser("adversary", parents=[common], help="copy-free coloring for a member")
    p.add_argument("--class", dest="cls", required=True,
                   choices=("threshold", "split", "distance-hereditary", "dh",
                            "kalpha", "kalpha-strict") + _FAMILY_TAGS)
    p.add_argument("--alpha")
    p.add_argument("--n", type=int)
    p.add_argument("graph")
    p.add_argument("-o", "--out")

    p = sub.add_parser("check", parents=[common], help="verify a witness or test a coloring")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--coloring")

    p = sub.add_parser("amalgam", parents=[common], help="bounded amalgam search in a class")
    p.add_argument("--class", dest="cls", required=True,
                   help="catalog tag, e.g. all, forb-p3, forb-kn:4")
    p.add_argument("--a", required=True)
    p.add_argument("--b0", required=True)
    p.add_argument("--b1", required=True)
    p.add_argument("--f0", help="comma-separated images of A's vertices in B0")
    p.add_argument("--f1", help="comma-separated images of A's vertices in B1")
    p.add_argument("-o", "--out")

    p = sub.add_parser("sweep", parents=[common], help="run a batch of property suites")
    p.add_argument("config")

    return parser


_COMMANDS = {
    "gen": _cmd_gen,
    "recognize": _cmd_recognize,
    "member": _cmd_member,
    "mad": _cmd_mad,
    "lexprod": _cmd_lexprod,
    "complement": _cmd_complement,
    "witness": _cmd_witness,
    "adversary": _cmd_adversary,
    "check": _cmd_check,
    "amalgam": _cmd_amalgam,
    "sweep": _cmd_sweep,
}


def run(argv) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code not in (0, None) else EXIT_OK
    emitter = Emitter(args.format)
    try:
        return _COMMANDS[args.verb](args, emitter)
    except (CapacityError, IncompleteSearchError) as exc:
        print(f"capacity: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except (ValueError, OSError, KeyError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
