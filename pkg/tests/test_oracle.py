from __future__ import annotations

from hypothesis import given, settings

from ekrkit.engine import ekr_status
from ekrkit.independent import independence_number, independent_r_sets
from ekrkit.oracle import naive_extremes, naive_extremes_bruteforce

from strategies import graphs


@settings(max_examples=60, deadline=None)
@given(graphs(1, 6))
def test_dfs_oracle_matches_all_subsets(g):
    for r in range(1, independence_number(g) + 1):
        fam = independent_r_sets(g, r).members
        if len(fam) > 14:
            continue
        assert naive_extremes(fam) == naive_extremes_bruteforce(fam)
        rep = ekr_status(g, r)
        assert (rep.max_intersecting_size, rep.max_anomalous_size) == naive_extremes(fam)
