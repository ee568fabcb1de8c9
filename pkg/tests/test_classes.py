"""Recognizers against definition-level oracles, certificate replay,
class algebra, spec wrappers."""

import random
from fractions import Fraction

import pytest

from indivlab import (
    ClassCertificate,
    ForbiddenSet,
    NamedAmalgamation,
    SparseClass,
    StructuralClass,
    complement,
    complete,
    cycle,
    disjoint_union,
    is_chordal,
    is_cograph,
    is_distance_hereditary,
    is_isomorphic,
    is_perfect,
    is_split,
    is_threshold,
    lex_product,
    make_graph,
    null_graph,
    path,
)
from indivlab.classes import (
    ChordalConstruction,
    DHConstruction,
    ForbiddenWitness,
    SplitPartition,
    ThresholdSequence,
    chordal_obstructions,
    class_complement,
    class_intersection,
    cograph_obstructions,
    dh_obstructions,
    domino,
    forbidden_scan,
    gem,
    perfect_obstructions,
    split_obstructions,
    threshold_obstructions,
    two_k2,
)
from indivlab.errors import CapacityError
from indivlab.random_graphs import (
    random_cograph,
    random_distance_hereditary,
)

from oracles import (
    is_chordal_oracle,
    is_cograph_oracle,
    is_dh_oracle,
    is_perfect_oracle,
    is_split_oracle,
    is_threshold_oracle,
    iter_graphs,
)


def random_graph(n, p, rng):
    edges = [
        (u, v)
        for u in range(1, n + 1)
        for v in range(u + 1, n + 1)
        if rng.random() < p
    ]
    return make_graph(n, edges)


# -- named obstructions -------------------------------------------------------


def test_named_obstruction_shapes():
    d = domino()
    assert (d.n, d.edge_count) == (6, 7)
    assert sorted(d.degree(v) for v in d.vertices) == [2, 2, 2, 2, 3, 3]
    g = gem()
    assert (g.n, g.edge_count) == (5, 7)
    assert max(g.degree(v) for v in g.vertices) == 4
    t = two_k2()
    assert is_isomorphic(t, complement(cycle(4)))


def test_obstruction_lists():
    assert [g.n for g in cograph_obstructions()] == [4]
    th = threshold_obstructions()
    assert len(th) == 3
    assert any(is_isomorphic(g, cycle(4)) for g in th)
    assert any(is_isomorphic(g, two_k2()) for g in th)
    sp = split_obstructions()
    assert len(sp) == 3
    assert any(is_isomorphic(g, cycle(5)) for g in sp)
    assert chordal_obstructions(6) == (cycle(4), cycle(5), cycle(6))
    assert chordal_obstructions(3) == ()
    dh = dh_obstructions(6)
    assert any(is_isomorphic(g, complement(path(5))) for g in dh)
    assert any(is_isomorphic(g, domino()) for g in dh)
    assert any(is_isomorphic(g, gem()) for g in dh)


def test_perfect_obstructions_are_odd_holes_and_antiholes():
    obs = perfect_obstructions(9)
    # C_5, C_7, co-C_7, C_9, co-C_9; the 5-antihole is C_5 again
    assert len(obs) == 5
    for i, a in enumerate(obs):
        assert a.n % 2 == 1 and a.n >= 5
        for b in obs[i + 1 :]:
            assert not is_isomorphic(a, b)


# -- recognizers against oracles -----------------------------------------------


ORACLES = {
    "cograph": is_cograph_oracle,
    "chordal": is_chordal_oracle,
    "threshold": is_threshold_oracle,
    "split": is_split_oracle,
    "distance-hereditary": is_dh_oracle,
    "perfect": is_perfect_oracle,
}

RECOGNIZERS = {
    "cograph": is_cograph,
    "chordal": is_chordal,
    "threshold": is_threshold,
    "split": is_split,
    "distance-hereditary": is_distance_hereditary,
    "perfect": is_perfect,
}


def check_evidence(g, cert):
    ev = cert.evidence
    if not cert.member:
        assert isinstance(ev, ForbiddenWitness)
        assert ev.validate(g)
        return
    if isinstance(ev, (ChordalConstruction, ThresholdSequence, DHConstruction)):
        assert ev.reconstruct() == g
    elif isinstance(ev, SplitPartition):
        assert ev.validate(g)
    else:
        assert ev is None


@pytest.mark.parametrize("kind", sorted(ORACLES))
def test_recognizer_matches_oracle_exhaustive_n4(kind):
    for n in range(5):
        for g in iter_graphs(n):
            cert = RECOGNIZERS[kind](g)
            assert cert.member == ORACLES[kind](g), (kind, list(g.edges()))
            check_evidence(g, cert)


@pytest.mark.parametrize("kind", sorted(ORACLES))
def test_recognizer_matches_oracle_random(kind):
    rng = random.Random(0xC1A55)
    for _ in range(90):
        top = 6 if kind == "perfect" else 7
        g = random_graph(rng.randint(5, top), rng.random(), rng)
        cert = RECOGNIZERS[kind](g)
        assert cert.member == ORACLES[kind](g), (kind, list(g.edges()))
        check_evidence(g, cert)


def test_recognizers_on_named_graphs():
    assert is_cograph(complete(4)).member
    assert not is_cograph(path(4)).member
    assert is_chordal(complete(5)).member
    assert not is_chordal(cycle(6)).member
    assert is_threshold(make_graph(4, [(1, 2), (1, 3), (1, 4), (2, 3)])).member
    assert not is_threshold(path(4)).member
    assert is_split(complete(3)).member
    assert not is_split(cycle(4)).member
    assert is_distance_hereditary(cycle(4)).member
    assert not is_distance_hereditary(cycle(5)).member
    assert not is_distance_hereditary(domino()).member
    assert not is_distance_hereditary(gem()).member
    assert is_perfect(cycle(6)).member
    assert not is_perfect(cycle(5)).member
    assert not is_perfect(complement(cycle(7))).member


def test_perfect_recognizer_capacity():
    with pytest.raises(CapacityError):
        is_perfect(null_graph(19))
    assert is_perfect(null_graph(19), max_n=19).member


def test_certificate_bool():
    assert ClassCertificate(True)
    assert not ClassCertificate(False)


# -- closure properties ---------------------------------------------------------


def test_hereditary_under_vertex_deletion():
    rng = random.Random(0x4E8)
    for _ in range(40):
        g = random_graph(rng.randint(2, 7), rng.random(), rng)
        for kind, rec in RECOGNIZERS.items():
            if not rec(g).member:
                continue
            v = rng.choice(list(g.vertices))
            h = g.induced([u for u in g.vertices if u != v])
            assert rec(h).member, kind


def test_complement_closed_classes():
    rng = random.Random(0xC0C0)
    for _ in range(50):
        g = random_graph(rng.randint(1, 6), rng.random(), rng)
        co = complement(g)
        assert is_cograph(g).member == is_cograph(co).member
        assert is_threshold(g).member == is_threshold(co).member
        assert is_split(g).member == is_split(co).member
        assert is_perfect(g).member == is_perfect(co).member


def test_cograph_closed_under_composition():
    rng = random.Random(0x9E9)
    for _ in range(20):
        a = random_cograph(rng.randint(1, 4), rng)
        b = random_cograph(rng.randint(1, 4), rng)
        assert is_cograph(lex_product(a, b)).member


def test_perfect_closed_under_composition_small():
    rng = random.Random(0xFEA)
    for _ in range(15):
        a = random_graph(rng.randint(1, 4), rng.random(), rng)
        b = random_graph(rng.randint(1, 4), rng.random(), rng)
        if not (is_perfect(a).member and is_perfect(b).member):
            continue
        prod = lex_product(a, b)
        if prod.n <= 16:
            assert is_perfect(prod).member


def test_chordal_not_closed_under_composition():
    a, b = complete(2), null_graph(2)
    assert is_chordal(a).member and is_chordal(b).member
    prod = lex_product(a, b)
    assert is_isomorphic(prod, cycle(4))
    cert = is_chordal(prod)
    assert not cert.member
    assert is_isomorphic(cert.evidence.obstruction, cycle(4))


def test_dh_distance_preservation_on_members():
    rng = random.Random(0xD15)
    for _ in range(25):
        g = random_distance_hereditary(rng.randint(1, 7), rng)
        assert is_distance_hereditary(g).member
        assert is_dh_oracle(g)


# -- class algebra ----------------------------------------------------------


def test_forbidden_set_of_validates_antichain():
    with pytest.raises(ValueError):
        ForbiddenSet.of([path(3), path(4)])
    spec = ForbiddenSet.of([path(3), complete(3)], name="matchings")
    assert spec.describe() == "matchings"
    assert spec.contains(disjoint_union(complete(2), complete(2)))
    assert not spec.contains(path(3))
    cert = spec.certificate(complete(3))
    assert not cert.member and cert.evidence.validate(complete(3))


def test_forbidden_set_default_describe():
    assert ForbiddenSet.of([path(4)]).describe() == "forb(1 graphs)"


def test_class_intersection_reduces():
    inter = class_intersection(
        [ForbiddenSet.of([path(3)], "x"), ForbiddenSet.of([path(4)], "y")]
    )
    # P_3 embeds into P_4, so the intersection boundary is P_3 alone
    assert len(inter.graphs) == 1
    assert is_isomorphic(inter.graphs[0], path(3))
    assert inter.describe() == "x & y"


def test_class_complement_of_split_is_split():
    spec = ForbiddenSet.of(split_obstructions(), "split")
    co = class_complement(spec)
    rng = random.Random(0x5117)
    for _ in range(40):
        g = random_graph(rng.randint(1, 6), rng.random(), rng)
        assert co.contains(g) == spec.contains(g)
    assert co.describe() == "co(split)"


def test_forbidden_scan_first_hit_wins():
    g = path(4)
    cert = forbidden_scan(g, [cycle(4), path(4)])
    assert not cert.member
    assert is_isomorphic(cert.evidence.obstruction, path(4))


# -- spec wrappers -------------------------------------------------------------


def test_structural_class_dispatch():
    for kind in RECOGNIZERS:
        sc = StructuralClass(kind)
        assert sc.describe() == kind
        assert sc.contains(complete(2))
    assert not StructuralClass("cograph").contains(path(4))
    with pytest.raises(ValueError):
        StructuralClass("planar")


def test_sparse_class_wrapper():
    sc = SparseClass(Fraction(1))
    assert sc.contains(cycle(4))
    assert not SparseClass(Fraction(1), strict=True).contains(cycle(4))
    assert SparseClass(Fraction(1), strict=True).describe() == "sparse(1)+"


def test_named_amalgamation_wrapper():
    tag = NamedAmalgamation("forb-p3-kn", 3)
    b = tag.boundary()
    assert len(b.graphs) == 2
    assert tag.contains(disjoint_union(complete(2), complete(1)))
    assert not tag.contains(complete(3))
    assert not tag.contains(path(3))
    co = NamedAmalgamation("forb-cop3-nn", 3)
    assert co.contains(lex_product(complete(2), complete(1)))
    assert not co.contains(null_graph(3))
    with pytest.raises(ValueError):
        NamedAmalgamation("forb-p3-kn", 2)
    with pytest.raises(ValueError):
        NamedAmalgamation("forb-c4", 3)
