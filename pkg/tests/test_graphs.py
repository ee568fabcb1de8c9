"""Core graph type, constructors, products, embeddings."""

import random

import pytest

from indivlab import (
    Coloring,
    Embedding,
    Graph,
    complement,
    complete,
    complete_minus_edge,
    count_induced_copies,
    cycle,
    disjoint_union,
    find_induced_embedding,
    find_monochromatic_copy,
    is_induced_embedding,
    is_isomorphic,
    lex_product,
    make_graph,
    null_graph,
    path,
)
from indivlab.graphs import induced_copy_masks

from oracles import (
    copy_vertex_sets,
    edges_within,
    has_induced,
    iter_graphs,
    mono_free,
)


def random_graph(n, p, rng):
    edges = [
        (u, v)
        for u in range(1, n + 1)
        for v in range(u + 1, n + 1)
        if rng.random() < p
    ]
    return make_graph(n, edges)


# -- construction ----------------------------------------------------------


def test_make_graph_rejects_bad_edges():
    with pytest.raises(ValueError):
        make_graph(3, [(1, 1)])
    with pytest.raises(ValueError):
        make_graph(3, [(0, 2)])
    with pytest.raises(ValueError):
        make_graph(3, [(2, 4)])
    with pytest.raises(ValueError):
        make_graph(-1, [])


def test_make_graph_tolerates_duplicates_and_orientation():
    g = make_graph(3, [(1, 2), (2, 1), (1, 2)])
    assert g.edge_count == 1
    assert g.adjacent(1, 2) and g.adjacent(2, 1)
    assert not g.adjacent(1, 3)


def test_named_constructors_shape():
    assert complete(4).edge_count == 6
    assert null_graph(5).edge_count == 0
    assert path(4).edge_count == 3
    assert cycle(5).edge_count == 5
    assert complete_minus_edge(4).edge_count == 5
    assert not complete_minus_edge(4).adjacent(1, 2)
    assert complete(1).n == 1
    for bad in [lambda: path(0), lambda: cycle(2), lambda: complete(0),
                lambda: complete_minus_edge(1), lambda: null_graph(0)]:
        with pytest.raises(ValueError):
            bad()


def test_degree_neighbor_consistency():
    rng = random.Random(0xC0DE)
    for _ in range(40):
        g = random_graph(rng.randint(1, 9), rng.random(), rng)
        for v in g.vertices:
            nbs = g.neighbors(v)
            assert g.degree(v) == len(nbs)
            assert all(g.adjacent(v, u) for u in nbs)
            assert v not in nbs
        assert 2 * g.edge_count == sum(g.degree(v) for v in g.vertices)
        assert sorted(g.edges()) == sorted(
            (u, v) for u in g.vertices for v in g.vertices
            if u < v and g.adjacent(u, v)
        )


def test_equality_and_hash():
    a = make_graph(3, [(1, 2)])
    b = make_graph(3, [(2, 1)])
    c = make_graph(3, [(1, 3)])
    assert a == b and hash(a) == hash(b)
    assert a != c
    assert len({a, b, c}) == 2


# -- complement, union, induced --------------------------------------------


def test_complement_involution_small():
    for g in iter_graphs(4):
        co = complement(g)
        assert co.edge_count == 6 - g.edge_count
        assert complement(co) == g


def test_disjoint_union():
    g = disjoint_union(cycle(3), path(2))
    assert g.n == 5
    assert g.edge_count == 4
    assert g.adjacent(4, 5)
    assert not any(g.adjacent(u, v) for u in (1, 2, 3) for v in (4, 5))
    assert len(g.components()) == 2


def test_induced_matches_subset_edge_count():
    rng = random.Random(0xFACE)
    for _ in range(30):
        g = random_graph(rng.randint(2, 9), rng.random(), rng)
        r = rng.randint(1, g.n)
        sub = sorted(rng.sample(list(g.vertices), r))
        h = g.induced(sub)
        assert h.n == r
        assert h.edge_count == edges_within(g, sub)
        for i, u in enumerate(sub, start=1):
            for j, v in enumerate(sub, start=1):
                if i < j:
                    assert h.adjacent(i, j) == g.adjacent(u, v)
        assert g.induced_mask(g.mask_of(sub)) == h


def test_components_and_cliques():
    g = make_graph(6, [(1, 2), (2, 3), (1, 3), (5, 6)])
    comps = g.components()
    assert len(comps) == 3
    assert comps[0] == g.mask_of([1, 2, 3])
    assert comps[1] == g.mask_of([4])
    assert comps[2] == g.mask_of([5, 6])
    assert g.is_clique([1, 2, 3])
    assert g.is_clique([4])
    assert g.is_clique([])
    assert not g.is_clique([1, 2, 5])


# -- lexicographic product ---------------------------------------------------


def test_lex_product_adjacency_law():
    """(x,y) ~ (x',y') iff x ~ x', or x = x' and y ~ y'."""
    rng = random.Random(0xBEEF)
    for _ in range(20):
        a = random_graph(rng.randint(1, 4), rng.random(), rng)
        b = random_graph(rng.randint(1, 4), rng.random(), rng)
        g = lex_product(a, b)
        assert g.n == a.n * b.n
        for x in a.vertices:
            for y in b.vertices:
                for xp in a.vertices:
                    for yp in b.vertices:
                        u = (x - 1) * b.n + y
                        v = (xp - 1) * b.n + yp
                        if u == v:
                            continue
                        want = a.adjacent(x, xp) or (
                            x == xp and b.adjacent(y, yp)
                        )
                        assert g.adjacent(u, v) == want


def test_lex_product_edge_count():
    rng = random.Random(0x1E)
    for _ in range(25):
        a = random_graph(rng.randint(1, 5), rng.random(), rng)
        b = random_graph(rng.randint(1, 5), rng.random(), rng)
        g = lex_product(a, b)
        assert g.edge_count == a.edge_count * b.n * b.n + a.n * b.edge_count


def test_lex_product_known_cases():
    assert is_isomorphic(lex_product(complete(2), null_graph(2)), cycle(4))
    assert is_isomorphic(lex_product(complete(2), complete(2)), complete(4))
    assert is_isomorphic(
        lex_product(null_graph(2), complete(3)),
        disjoint_union(complete(3), complete(3)),
    )


# -- embeddings and colorings ------------------------------------------------


def test_embedding_basics():
    e = Embedding((3, 1, 4))
    assert e.apply(1) == 3 and e.apply(3) == 4
    assert e.image() == (1, 3, 4)
    assert e.image_mask() == 0b1101


def test_coloring_validation():
    c = Coloring(3, (1, 3, 1, 2))
    assert c.n == 4
    assert c.color_of(2) == 3
    assert c.class_vertices(1) == (1, 3)
    assert c.class_mask(2) == 0b1000
    with pytest.raises(ValueError):
        Coloring(0, ())
    with pytest.raises(ValueError):
        Coloring(2, (1, 3))
    with pytest.raises(ValueError):
        Coloring(2, (0, 1))


def test_is_induced_embedding():
    p = path(3)
    host = cycle(4)
    assert is_induced_embedding(p, host, (1, 2, 3))
    assert not is_induced_embedding(p, host, (1, 2, 2))
    assert not is_induced_embedding(p, host, (2, 1, 3))
    assert not is_induced_embedding(complete(3), host, (1, 2, 3))


def test_find_induced_embedding_against_oracle():
    rng = random.Random(0xAB1E)
    patterns = [g for n in (1, 2, 3) for g in iter_graphs(n)]
    for _ in range(120):
        host = random_graph(rng.randint(1, 6), rng.random(), rng)
        for pat in patterns:
            emb = find_induced_embedding(pat, host)
            if emb is None:
                assert not has_induced(host, pat)
            else:
                assert is_induced_embedding(pat, host, emb.mapping)


def test_find_induced_embedding_is_deterministic():
    host = cycle(6)
    first = find_induced_embedding(path(4), host)
    again = find_induced_embedding(path(4), host)
    assert first == again
    assert is_induced_embedding(path(4), host, first.mapping)


def test_find_induced_embedding_allowed_filter():
    host = disjoint_union(complete(3), complete(3))
    emb = find_induced_embedding(complete(3), host, allowed=[4, 5, 6])
    assert emb is not None
    assert set(emb.image()) == {4, 5, 6}
    assert find_induced_embedding(complete(3), host, allowed=[1, 2, 4]) is None


def test_empty_pattern_embeds_once():
    host = path(3)
    assert find_induced_embedding(Graph(0, ()), host) == Embedding(())
    assert induced_copy_masks(Graph(0, ()), host) == [0]


def test_induced_copy_masks_against_oracle():
    rng = random.Random(0x5E7)
    for _ in range(40):
        host = random_graph(rng.randint(1, 7), rng.random(), rng)
        pat = random_graph(rng.randint(1, 3), rng.random(), rng)
        masks = induced_copy_masks(pat, host)
        want = {host.mask_of(vs) for vs in copy_vertex_sets(host, pat)}
        assert set(masks) == want
        assert len(masks) == len(want)
        assert masks == sorted(masks, key=lambda m: tuple(
            v for v in host.vertices if (m >> (v - 1)) & 1
        ))
        assert count_induced_copies(pat, host) == len(want)


def test_known_copy_counts():
    assert count_induced_copies(path(3), cycle(4)) == 4
    assert count_induced_copies(complete(2), complete(5)) == 10
    assert count_induced_copies(path(4), cycle(5)) == 5
    assert count_induced_copies(complete(3), cycle(5)) == 0


def test_find_monochromatic_copy_scans_colors_in_order():
    b = disjoint_union(complete(3), complete(3))
    col = Coloring(2, (2, 2, 2, 1, 1, 1))
    hit = find_monochromatic_copy(complete(3), b, col)
    assert hit is not None
    emb, color = hit
    assert color == 1
    assert set(emb.image()) == {4, 5, 6}


def test_find_monochromatic_copy_against_oracle():
    rng = random.Random(0x90A)
    for _ in range(60):
        b = random_graph(rng.randint(1, 6), rng.random(), rng)
        a = random_graph(rng.randint(1, 3), rng.random(), rng)
        k = rng.randint(1, 3)
        col = Coloring(k, tuple(rng.randint(1, k) for _ in range(b.n)))
        hit = find_monochromatic_copy(a, b, col)
        if hit is None:
            assert mono_free(b, a, col)
        else:
            emb, color = hit
            assert is_induced_embedding(a, b, emb.mapping)
            assert all(col.color_of(v) == color for v in emb.image())


def test_is_isomorphic():
    assert is_isomorphic(cycle(5), complement(cycle(5)))
    assert not is_isomorphic(cycle(4), disjoint_union(complete(2), complete(2)))
    assert not is_isomorphic(
        cycle(6), disjoint_union(complete(3), complete(3))
    )
    rng = random.Random(0xD1CE)
    for _ in range(25):
        g = random_graph(rng.randint(1, 7), rng.random(), rng)
        perm = list(g.vertices)
        rng.shuffle(perm)
        relabeled = make_graph(
            g.n, [(min(perm[u - 1], perm[v - 1]), max(perm[u - 1], perm[v - 1]))
                  for u, v in g.edges()]
        )
        assert is_isomorphic(g, relabeled)
