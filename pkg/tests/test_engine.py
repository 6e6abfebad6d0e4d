from __future__ import annotations

import json
import random

import pytest
from hypothesis import given, settings

from ekrkit.engine import (EkrReport, check_2ekr_formula, common_intersection, disjointness_graph,
                           ekr_status, family_max_anomalous, family_max_intersecting,
                           is_intersecting, is_r_centre, is_strict_r_centre, max_anomalous,
                           max_intersecting)
from ekrkit.graphs import (GraphError, build_graph, complete_graph, complete_multipartite,
                           cycle_graph, disjoint_union, empty_graph, named_graph, nkt, spiky_g)
from ekrkit.independent import independence_number, independent_r_sets, max_star, star
from ekrkit.search import SearchLimitExceeded

import oracles
from strategies import graphs

K33_TWICE = disjoint_union(complete_multipartite([3, 3]), complete_multipartite([3, 3]))


def test_intersecting_predicates():
    assert is_intersecting([0b011, 0b101, 0b110])
    assert not is_intersecting([0b0011, 0b1100])
    assert is_intersecting([]) and is_intersecting([0b1])
    assert common_intersection([0b011, 0b101]) == 0b001
    assert common_intersection([0b011, 0b101, 0b110]) == 0
    with pytest.raises(ValueError):
        common_intersection([])


def test_disjointness_graphs():
    g = disjointness_graph(independent_r_sets(empty_graph(4), 2))
    assert g.n == 6 and g.degrees() == [1] * 6
    assert disjointness_graph(star(empty_graph(5), 0, 2)).edge_count() == 0
    assert disjointness_graph(independent_r_sets(named_graph("dodecahedron"), 8)).edge_count() == 0
    cubes = independent_r_sets(named_graph("dodecahedron"), 8).members
    assert common_intersection(cubes) == 0


@pytest.mark.parametrize("g,r,size", [
    (empty_graph(5), 2, 4), (spiky_g(3, 4), 3, 22), (named_graph("dodecahedron"), 8, 5),
])
def test_max_intersecting(g, r, size):
    got, witness = max_intersecting(g, r)
    assert got == size == len(witness)
    assert is_intersecting(witness.members)


def test_max_anomalous_values():
    assert max_anomalous(named_graph("icosahedron"), 3)[0] == 4
    assert max_anomalous(spiky_g(3, 4), 3)[0] == 22
    assert max_anomalous(complete_graph(4), 1) == (None, None)
    size, fam = max_anomalous(empty_graph(7), 3)
    assert size == 13 and common_intersection(fam.members) == 0 and is_intersecting(fam.members)


def test_report_examples():
    for g in (named_graph("cube"), cycle_graph(5), spiky_g(3, 4)):
        assert ekr_status(g, 1).is_ekr
    reps = {r: ekr_status(K33_TWICE, r) for r in (2, 3, 4)}
    assert reps[2].is_strictly_ekr
    assert reps[3].is_ekr and not reps[3].is_strictly_ekr
    assert not reps[4].is_ekr and reps[4].centres == []
    e4 = ekr_status(empty_graph(4), 2)
    assert e4.is_ekr and not e4.is_strictly_ekr


def test_report_invariants_and_json():
    rep = ekr_status(named_graph("icosahedron"), 3)
    assert rep.max_intersecting_size >= rep.max_star_size
    d = rep.as_dict()
    assert d["sizes"] == {"family": 20, "max_star": 5, "max_intersecting": 5, "max_anomalous": 4}
    assert d["verdict"] == {"ekr": True, "strict": True}
    assert d["centres"] == list(range(12))
    assert len(d["witnesses"]["anomalous"]) == 4
    assert all(w == sorted(w) for w in d["witnesses"]["intersecting"])
    json.dumps(d)
    big = ekr_status(empty_graph(10), 4, exact_anomalous=False).as_dict(witness_limit=10)
    assert big["witnesses"]["intersecting"] == {"elided": 84}
    assert big["sizes"]["max_anomalous"] == "<84"


def test_vacuous_above_alpha():
    rep = ekr_status(complete_graph(3), 2)
    assert rep.vacuous and rep.is_ekr and rep.is_strictly_ekr and rep.max_intersecting_size == 0
    assert ekr_status(empty_graph(2), 3).vacuous
    with pytest.raises(ValueError):
        ekr_status(empty_graph(2), 0)


def test_decide_mode_agrees_with_exact():
    for g, r in [(empty_graph(8), 4), (empty_graph(7), 3), (nkt(3, 2), 3), (K33_TWICE, 3)]:
        a = ekr_status(g, r)
        b = ekr_status(g, r, exact_anomalous=False)
        assert (a.is_ekr, a.is_strictly_ekr) == (b.is_ekr, b.is_strictly_ekr)


def test_search_cap(monkeypatch):
    monkeypatch.setenv("EKR_MAX_FAMILY", "30")
    with pytest.raises(SearchLimitExceeded):
        ekr_status(empty_graph(8), 3)
    monkeypatch.setenv("EKR_MAX_FAMILY", "nope")
    with pytest.raises(ValueError):
        ekr_status(empty_graph(8), 3)


def test_centres():
    d = named_graph("dodecahedron")
    assert not any(is_r_centre(d, v, 8) for v in range(20))
    ico = named_graph("icosahedron")
    assert all(is_strict_r_centre(ico, v, 3) for v in range(12))


def test_two_ekr_formula_cases():
    c5 = check_2ekr_formula(cycle_graph(5))
    assert c5.is_ekr and c5.is_strict
    e5 = check_2ekr_formula(empty_graph(5))
    assert e5.is_ekr and e5.is_strict
    star_graph = build_graph(5, [(0, i) for i in range(1, 5)])
    f = check_2ekr_formula(star_graph)
    rep = ekr_status(star_graph, 2)
    assert (f.is_ekr, f.is_strict) == (True, False) == (rep.is_ekr, rep.is_strictly_ekr)
    assert list(f.centres) == rep.centres == [1, 2, 3, 4]
    with pytest.raises(GraphError):
        check_2ekr_formula(complete_graph(4))


@given(graphs(max_n=6))
@settings(max_examples=80, deadline=None)
def test_engine_matches_subfamily_oracle(g):
    for r in range(1, independence_number(g) + 1):
        fam = independent_r_sets(g, r).members
        if len(fam) > 14:
            continue
        rep = ekr_status(g, r)
        assert (rep.max_intersecting_size, rep.max_anomalous_size) == oracles.family_extremes(list(fam))
        assert rep.max_intersecting_size >= max_star(g, r)[0]


@given(graphs(min_n=2, max_n=7))
@settings(max_examples=80, deadline=None)
def test_two_ekr_formula_agrees(g):
    if g.edge_count() == g.n * (g.n - 1) // 2:
        return
    f = check_2ekr_formula(g)
    rep = ekr_status(g, 2)
    assert (f.is_ekr, f.is_strict, list(f.centres)) == (rep.is_ekr, rep.is_strictly_ekr, rep.centres)


def test_star_containment_iff_common_vertex():
    rng = random.Random(7)
    fam = list(independent_r_sets(empty_graph(6), 3).members)
    for _ in range(300):
        sub = rng.sample(fam, rng.randint(1, 6))
        in_star = any(all(m >> v & 1 for m in sub) for v in range(6))
        assert in_star == bool(common_intersection(sub))


def test_family_level_searches():
    faces = independent_r_sets(nkt(3, 2), 3).members
    assert len(family_max_intersecting(faces)) == 4
    assert len(family_max_anomalous(faces)) == 4
