from __future__ import annotations

import csv
import io

import pytest

from ekrkit.graph6 import from_graph6
from ekrkit.sweep import CSV_COLUMNS, bundled_lines, run_sweep, sweep_graph, sweep_lines

ORDER_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044, 8: 12346}


def test_bundled_counts():
    lines = bundled_lines(8)
    counts: dict[int, int] = {}
    for line in lines:
        n = from_graph6(line).n
        counts[n] = counts.get(n, 0) + 1
    assert counts == ORDER_COUNTS
    assert len(set(lines)) == len(lines)
    with pytest.raises(ValueError):
        bundled_lines(9)


def test_bundled_pairwise_non_isomorphic():
    pynauty = pytest.importorskip("pynauty")
    seen = set()
    for line in bundled_lines(6):
        g = from_graph6(line)
        adj = {v: [u for u in range(g.n) if g.has_edge(u, v)] for v in range(g.n)}
        cert = pynauty.certificate(pynauty.Graph(g.n, adjacency_dict=adj))
        assert (g.n, cert) not in seen
        seen.add((g.n, cert))


def test_order_four_is_clean():
    out = io.StringIO()
    summary = run_sweep(io.StringIO("\n".join(bundled_lines(4))), out, max_n=4)
    rows = list(csv.reader(io.StringIO(out.getvalue())))
    assert rows[0] == CSV_COLUMNS
    assert summary.graphs == len(rows) - 1 == 18
    assert summary.clean and summary.malformed == 0


def test_sweep_record_of_c5():
    rec = sweep_graph("DUW")   # C_5: alpha=2, mu=2
    assert (rec.n, rec.alpha, rec.mu) == (5, 2, 2)
    assert [v.encode() for v in rec.verdicts] == ["1:1:1:1:1"]
    assert not rec.counterexample and not rec.strict_violation


def test_empty_input():
    out = io.StringIO()
    summary = run_sweep(io.StringIO(""), out)
    assert summary.graphs == 0 and summary.clean
    assert out.getvalue().strip() == ",".join(CSV_COLUMNS)


def test_malformed_line_reported():
    summary = run_sweep(io.StringIO("C~\n!!!bad\nA_\n"), None)
    assert summary.graphs == 2 and summary.malformed == 1
    assert summary.errors[0].startswith("line 2")


def test_parallel_preserves_order():
    lines = list(enumerate(bundled_lines(5), 1))
    serial = [rec.row() for _, rec in sweep_lines(lines)]
    parallel = [rec.row() for _, rec in sweep_lines(lines, jobs=2)]
    assert serial == parallel


def test_max_n_skips_larger():
    lines = list(enumerate(bundled_lines(5), 1))
    kept = [rec for _, rec in sweep_lines(lines, max_n=3)]
    assert len(kept) == 7 and all(rec.n <= 3 for rec in kept)
