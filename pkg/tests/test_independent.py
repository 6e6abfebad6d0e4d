from __future__ import annotations

from math import comb

import pytest
from hypothesis import given, settings

from ekrkit.graphs import (complete_graph, complete_multipartite, disjoint_union, empty_graph,
                           lex_product, named_graph, path_graph, spiky_g)
from ekrkit.independent import (SetFamily, independence_number, independent_r_sets,
                                maximal_independent_sets, max_star, minimax_independence, star,
                                star_sizes, summarize)
from ekrkit.multipartite import MultipartiteUnion, mu_formula

import oracles
from strategies import graphs

K33_TWICE = disjoint_union(complete_multipartite([3, 3]), complete_multipartite([3, 3]))


def test_empty_graph_counts():
    for n in range(1, 8):
        for r in range(n + 1):
            assert len(independent_r_sets(empty_graph(n), r)) == comb(n, r)


def test_dodecahedron_cubes():
    g = named_graph("dodecahedron")
    cubes = independent_r_sets(g, 8)
    assert len(cubes) == 5
    assert max_star(g, 8) == (2, list(range(20)))


def test_two_k33_four_sets():
    # brute force over all C(12,4) subsets gives 60
    assert len(independent_r_sets(K33_TWICE, 4)) == 60


@pytest.mark.parametrize("g,alpha,mu", [
    (named_graph("icosahedron"), 3, 2),
    (spiky_g(3, 4), 7, 3),
    (spiky_g(4, 5), 8, 3),
    (K33_TWICE, 6, 6),
    (complete_graph(5), 1, 1),
])
def test_alpha_mu(g, alpha, mu):
    assert independence_number(g) == alpha
    assert minimax_independence(g) == mu


def test_stars():
    ico = named_graph("icosahedron")
    assert all(len(star(ico, v, 3)) == 5 for v in range(12))
    assert star(empty_graph(4), 0, 2).as_lists() == [[0, 1], [0, 2], [0, 3]]
    assert max_star(spiky_g(3, 4), 3)[0] == 21
    assert max_star(spiky_g(4, 5), 3)[0] == 29


def test_set_family_validation():
    g = path_graph(3)
    with pytest.raises(ValueError):
        SetFamily.of(g, [[0, 1]])
    with pytest.raises(ValueError):
        SetFamily.of(g, [[0, 2], [0, 2]])
    with pytest.raises(ValueError):
        SetFamily.of(g, [[0, 2]], r=1)
    assert SetFamily.of(g, [[0, 2], [1]]).as_lists() == [[0, 2], [1]]


def test_r_zero_and_above_alpha():
    g = path_graph(4)
    assert independent_r_sets(g, 0).members == (0,)
    assert len(independent_r_sets(g, 3)) == 0


def test_mu_formula_matches_search():
    for b, d in [((3, 3), (3, 3)), ((1, 1), (1, 1)), ((3, 2), (4, 1)), ((2, 2, 1), (3,))]:
        M = MultipartiteUnion.of(b, d)
        assert mu_formula(M) == minimax_independence(M.graph)
    assert mu_formula(MultipartiteUnion.of((3, 2), (4, 1))) == 3


def test_summary():
    s = summarize(named_graph("icosahedron"))
    assert (s.alpha, s.mu) == (3, 2)
    assert s.star_sizes[3] == [5] * 12


@given(graphs(max_n=8))
@settings(max_examples=80, deadline=None)
def test_against_brute_force(g):
    assert independence_number(g) == oracles.alpha(g.n, g.adj)
    assert minimax_independence(g) == oracles.mu(g.n, g.adj)
    for r in range(0, g.n + 1):
        assert list(independent_r_sets(g, r).members) == oracles.independent_sets(g.n, g.adj, r)


@given(graphs(max_n=8))
@settings(max_examples=60, deadline=None)
def test_double_counting_and_star_containment(g):
    alpha = independence_number(g)
    for r in range(1, alpha + 1):
        fam = independent_r_sets(g, r)
        sizes = star_sizes(g, r, fam)
        assert sum(sizes) == r * len(fam)
        for v in range(g.n):
            st_v = star(g, v, r)
            assert len(st_v) == sizes[v]
            assert all(m >> v & 1 and m in fam for m in st_v)
        if r == 2:
            assert sizes == [g.n - 1 - g.degree(v) for v in range(g.n)]
    if alpha < g.n:
        assert len(independent_r_sets(g, alpha + 1)) == 0


@given(graphs(max_n=7))
@settings(max_examples=40, deadline=None)
def test_maximal_sets(g):
    sets = maximal_independent_sets(g)
    assert min(s.bit_count() for s in sets) == minimax_independence(g)
    assert max(s.bit_count() for s in sets) == independence_number(g)


@given(graphs(max_n=4))
@settings(max_examples=30, deadline=None)
def test_product_counts(g):
    for m in (2, 3):
        p = lex_product(g, complete_graph(m))
        for r in range(1, independence_number(g) + 1):
            assert len(independent_r_sets(p, r)) == len(independent_r_sets(g, r)) * m ** r
            base = star_sizes(g, r)
            prod = star_sizes(p, r)
            assert all(prod[v * m + x] == base[v] * m ** (r - 1) for v in range(g.n) for x in range(m))


def test_path_product_count():
    assert len(independent_r_sets(lex_product(path_graph(4), complete_graph(2)), 2)) == 12
