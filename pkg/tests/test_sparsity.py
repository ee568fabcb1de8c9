"""Exact density arithmetic, mad via flow and brute force, sparse-class
membership, windmill constructions."""

import random
from fractions import Fraction

import pytest

from indivlab import (
    complete,
    cycle,
    delta_alpha,
    disjoint_union,
    make_graph,
    max_average_degree,
    member_K_alpha,
    null_graph,
    parse_rational,
    path,
    windmill,
    windmill_membership_bound,
)
from indivlab.sparsity import (
    complete_in_class_bound,
    enumerate_pseudo_windmills,
    format_rational,
    pseudo_windmill,
    pseudo_windmill_threshold,
)

from oracles import brute_mad, brute_member, edges_within, iter_graphs


def random_graph(n, p, rng):
    edges = [
        (u, v)
        for u in range(1, n + 1)
        for v in range(u + 1, n + 1)
        if rng.random() < p
    ]
    return make_graph(n, edges)


# -- rationals ---------------------------------------------------------------


def test_parse_rational():
    assert parse_rational("2/3") == Fraction(2, 3)
    assert parse_rational("5") == Fraction(5)
    assert parse_rational(" 7/2 ") == Fraction(7, 2)
    for bad in ["", "1/0", "a/b", "1/2/3"]:
        with pytest.raises(ValueError):
            parse_rational(bad)


def test_format_rational_round_trip():
    for x in [Fraction(2, 3), Fraction(4), Fraction(0), Fraction(-5, 7)]:
        assert parse_rational(format_rational(x)) == x
    assert format_rational(Fraction(4, 2)) == "2"
    assert format_rational(Fraction(5, 6)) == "5/6"


# -- delta and mad -----------------------------------------------------------


def test_delta_alpha_values():
    assert delta_alpha(complete(4), 1) == Fraction(-2)
    assert delta_alpha(cycle(5), 1) == Fraction(0)
    assert delta_alpha(path(4), Fraction(2, 3)) == Fraction(2)
    assert delta_alpha(null_graph(3), 7) == Fraction(3)


@pytest.mark.parametrize("method", ["brute", "flow"])
def test_mad_known_values(method):
    assert max_average_degree(complete(6), method=method) == 5
    assert max_average_degree(cycle(7), method=method) == 2
    assert max_average_degree(path(3), method=method) == Fraction(4, 3)
    assert max_average_degree(null_graph(4), method=method) == 0
    assert max_average_degree(windmill(3, 2), method=method) == Fraction(12, 5)


def test_mad_rejects_empty():
    from indivlab import Graph

    with pytest.raises(ValueError):
        max_average_degree(Graph(0, ()))


def test_mad_flow_equals_brute_exhaustive_n4():
    for g in iter_graphs(4):
        if g.n == 0:
            continue
        assert max_average_degree(g, method="flow") == max_average_degree(
            g, method="brute"
        )


def test_mad_flow_equals_brute_random():
    rng = random.Random(0x3AD)
    for _ in range(120):
        g = random_graph(rng.randint(1, 9), rng.random(), rng)
        flow = max_average_degree(g, method="flow")
        brute = max_average_degree(g, method="brute")
        assert flow == brute == brute_mad(g)


def test_mad_auto_crossover(monkeypatch):
    monkeypatch.setenv("INDIV_SUBSET_BRUTEFORCE_MAX", "2")
    rng = random.Random(0xA7)
    for _ in range(25):
        g = random_graph(rng.randint(3, 8), rng.random(), rng)
        assert max_average_degree(g) == brute_mad(g)
    monkeypatch.setenv("INDIV_SUBSET_BRUTEFORCE_MAX", "noise")
    with pytest.raises(ValueError):
        max_average_degree(path(3))


# -- membership ---------------------------------------------------------------


ALPHAS = [
    Fraction(2, 5),
    Fraction(1, 2),
    Fraction(5, 6),
    Fraction(1),
    Fraction(3, 2),
    Fraction(2),
]


@pytest.mark.parametrize("method", ["brute", "flow"])
def test_member_matches_definition_exhaustive(method):
    for g in iter_graphs(4):
        for alpha in ALPHAS:
            for strict in (False, True):
                cert = member_K_alpha(g, alpha, strict=strict, method=method)
                assert cert.member == brute_member(g, alpha, strict)
                if not cert.member:
                    vs = cert.witness
                    d = Fraction(len(vs)) - alpha * edges_within(g, vs)
                    assert d == cert.witness_delta
                    assert d < 0 or (strict and d == 0)
                else:
                    assert cert.witness is None


def test_member_rule_route_agrees():
    rng = random.Random(0x5CA1E)
    for _ in range(80):
        g = random_graph(rng.randint(1, 9), rng.random() * 0.4, rng)
        for alpha in (Fraction(3, 2), Fraction(2), Fraction(3)):
            for strict in (False, True):
                rule = member_K_alpha(g, alpha, strict=strict, method="rule")
                brute = member_K_alpha(g, alpha, strict=strict, method="brute")
                assert rule.member == brute.member


def test_member_rule_needs_alpha_above_one():
    with pytest.raises(ValueError):
        member_K_alpha(path(3), 1, method="rule")


def test_membership_is_mad_bound():
    """Non-strict membership at level alpha is exactly mad <= 2/alpha."""
    rng = random.Random(0xBA11)
    for _ in range(60):
        g = random_graph(rng.randint(1, 8), rng.random(), rng)
        for alpha in ALPHAS:
            cert = member_K_alpha(g, alpha)
            assert cert.member == (max_average_degree(g) <= Fraction(2) / alpha)


def test_cycle_membership_boundary():
    # cycles sit exactly on the alpha = 1 boundary
    for n in (3, 4, 5, 8):
        assert member_K_alpha(cycle(n), 1).member
        assert not member_K_alpha(cycle(n), 1, strict=True).member
        cert = member_K_alpha(cycle(n), 1, strict=True)
        assert cert.witness_delta == 0
        assert len(cert.witness) == n


def test_certificate_format():
    assert member_K_alpha(path(2), 1).format() == "member"
    cert = member_K_alpha(complete(3), Fraction(3, 2))
    text = cert.format()
    assert text.startswith("nonmember witness:")
    assert "delta:" in text


# -- windmills ----------------------------------------------------------------


def test_windmill_shape():
    g = windmill(4, 3)
    assert g.n == 10
    assert g.edge_count == 18
    # the center is vertex 1 and meets every blade
    assert g.degree(1) == 9
    for blade in range(3):
        vs = [1] + [2 + blade * 3 + i for i in range(3)]
        assert g.is_clique(vs)
    with pytest.raises(ValueError):
        windmill(1, 2)
    with pytest.raises(ValueError):
        windmill(3, 0)


def test_windmill_membership_bound_frozen_values():
    assert windmill_membership_bound(Fraction(5, 6)) == (3, 2)
    assert windmill_membership_bound(1) == (3, 1)
    assert windmill_membership_bound(Fraction(1, 2)) == (5, 1)
    assert windmill_membership_bound(Fraction(2, 5)) == (6, 1)
    assert windmill_membership_bound(2) == (2, 1)
    with pytest.raises(ValueError):
        windmill_membership_bound(Fraction(5, 2))


def test_windmill_bound_is_sharp():
    """W(m, n) stays in the class, W(m, n+1) leaves it."""
    for alpha in (Fraction(5, 6), Fraction(1), Fraction(1, 2)):
        m, n = windmill_membership_bound(alpha)
        assert member_K_alpha(windmill(m, n), alpha).member
        assert not member_K_alpha(windmill(m, n + 1), alpha).member


def test_complete_in_class_bound():
    assert complete_in_class_bound(1) == 3
    assert complete_in_class_bound(Fraction(5, 6)) == 3
    assert complete_in_class_bound(2) == 2
    assert complete_in_class_bound(Fraction(1, 2)) == 5
    assert complete_in_class_bound(Fraction(2, 5)) == 6
    # the bound is sharp: K_m in, K_{m+1} out
    for alpha in ALPHAS:
        m = complete_in_class_bound(alpha)
        assert member_K_alpha(complete(m), alpha).member
        assert not member_K_alpha(complete(m + 1), alpha).member


def test_pseudo_windmill_shape():
    from indivlab import is_isomorphic

    base = complete(3)
    g = pseudo_windmill(base, [1, 2])
    # the attachment vertex of each copy is identified with the center
    assert g.n == 1 + 2 * (base.n - 1)
    assert g.edge_count == 2 * base.edge_count
    assert g.degree(1) == base.degree(1) + base.degree(2)
    assert is_isomorphic(pseudo_windmill(base, [1, 1]), windmill(3, 2))
    with pytest.raises(ValueError):
        pseudo_windmill(base, [4])
    with pytest.raises(ValueError):
        pseudo_windmill(disjoint_union(complete(2), complete(2)), [1])


def test_enumerate_pseudo_windmills_count():
    from math import comb

    base = complete(4)
    for n in (1, 2, 3):
        got = list(enumerate_pseudo_windmills(base, n))
        assert len(got) == comb(4 + n - 1, n)
        for g in got:
            assert g.n == 1 + n * (base.n - 1)


def test_pseudo_windmill_threshold_values():
    assert pseudo_windmill_threshold(4) == 3
    assert pseudo_windmill_threshold(5) == 2
    assert pseudo_windmill_threshold(6) == Fraction(5, 3)
    with pytest.raises(ValueError):
        pseudo_windmill_threshold(3)
