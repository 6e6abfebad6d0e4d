from __future__ import annotations

from itertools import combinations

from hypothesis import given, settings, strategies as st

from ekrkit.engine import compatibility
from ekrkit.graphs import empty_graph
from ekrkit.independent import independent_r_sets
from ekrkit.search import CliqueSearch, colour_order


def _brute_clique(adj):
    n = len(adj)
    for k in range(n, 0, -1):
        for c in combinations(range(n), k):
            if all(adj[a] >> b & 1 for a, b in combinations(c, 2)):
                return k
    return 0


@st.composite
def adjacency(draw, max_n=11):
    n = draw(st.integers(1, max_n))
    adj = [0] * n
    for a, b in combinations(range(n), 2):
        if draw(st.booleans()):
            adj[a] |= 1 << b
            adj[b] |= 1 << a
    return adj


@given(adjacency())
@settings(max_examples=150, deadline=None)
def test_max_clique_matches_brute_force(adj):
    found = CliqueSearch(adj).max_clique()
    s = CliqueSearch(adj)
    assert s.is_clique(found)
    assert len(found) == _brute_clique(adj)


@given(adjacency())
@settings(max_examples=60, deadline=None)
def test_colouring_bounds_cliques(adj):
    order, colours = colour_order((1 << len(adj)) - 1, adj)
    assert sorted(order) == list(range(len(adj)))
    assert colours[-1] >= _brute_clique(adj)


def test_seed_kept_on_ties():
    adj = [0b110, 0b101, 0b011]
    assert CliqueSearch(adj).max_clique(lower=[2, 1, 0]) == [2, 1, 0]


def test_spectral_bound_exact_on_kneser():
    # intersecting 3-sets of a 7-set: compatibility complement is the Kneser graph
    fam = independent_r_sets(empty_graph(7), 3).members
    s = CliqueSearch(compatibility(fam))
    assert s.spectral_bound((1 << len(fam)) - 1) == 15


def test_extremal_cliques_are_the_stars():
    fam = independent_r_sets(empty_graph(7), 3).members
    s = CliqueSearch(compatibility(fam))
    found = s.extremal_cliques(15)
    assert found is not None and len(found) == 7
    for clique in found:
        common = fam[clique[0]]
        for i in clique:
            common &= fam[i]
        assert common


def test_extremal_cliques_not_applicable():
    fam = independent_r_sets(empty_graph(7), 3).members
    s = CliqueSearch(compatibility(fam))
    assert s.extremal_cliques(14) is None
    assert CliqueSearch([0, 0]).extremal_cliques(1) is None
