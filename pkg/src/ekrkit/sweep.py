"""Check every graph of a graph6 stream against the conjecture that a graph is
r-EKR for all r <= mu/2, and strictly so for 2 < r < mu/2."""

from __future__ import annotations

import csv
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from importlib import resources
from typing import Iterable, Iterator, TextIO

from .engine import ekr_status
from .graph6 import from_graph6, read_graph6
from .graphs import GraphError
from .independent import independence_number, minimax_independence

BUNDLED_STREAM = "graphs_upto8.g6"
CSV_COLUMNS = ["graph6", "n", "alpha", "mu", "verdicts", "counterexample", "strict_violation"]


@dataclass
class Verdict:
    r: int
    is_ekr: bool
    is_strict: bool
    max_star: int
    max_intersecting: int

    def encode(self) -> str:
        return f"{self.r}:{int(self.is_ekr)}:{int(self.is_strict)}:{self.max_star}:{self.max_intersecting}"


@dataclass
class SweepRecord:
    graph6: str
    n: int
    alpha: int
    mu: int
    verdicts: list[Verdict] = field(default_factory=list)

    @property
    def counterexample(self) -> bool:
        return any(not v.is_ekr for v in self.verdicts)

    @property
    def strict_violation(self) -> bool:
        return any(2 < v.r and 2 * v.r < self.mu and not v.is_strict for v in self.verdicts)

    def row(self) -> list:
        return [self.graph6, self.n, self.alpha, self.mu, ";".join(v.encode() for v in self.verdicts),
                int(self.counterexample), int(self.strict_violation)]


def sweep_graph(line: str) -> SweepRecord:
    g = from_graph6(line)
    if g.n == 0:
        return SweepRecord(line, 0, 0, 0)
    alpha = independence_number(g)
    mu = minimax_independence(g)
    rec = SweepRecord(line, g.n, alpha, mu)
    for r in range(1, mu // 2 + 1):
        rep = ekr_status(g, r, exact_anomalous=False)
        rec.verdicts.append(Verdict(r, rep.is_ekr, rep.is_strictly_ekr, rep.max_star_size,
                                    rep.max_intersecting_size))
    return rec


def _safe_sweep(item: tuple[int, str]) -> tuple[int, SweepRecord | str]:
    lineno, line = item
    try:
        return lineno, sweep_graph(line)
    except GraphError as exc:
        return lineno, str(exc)


def sweep_lines(lines: Iterable[tuple[int, str]], max_n: int | None = None,
                jobs: int = 1) -> Iterator[tuple[int, SweepRecord | str]]:
    """Yield ``(line_number, record)`` in input order; a string in place of the
    record reports a malformed line. Graphs above ``max_n`` are skipped."""
    items = list(lines)
    if max_n is not None:
        kept = []
        for lineno, line in items:
            try:
                n = from_graph6(line).n
            except GraphError:
                kept.append((lineno, line))   # reported by the worker
                continue
            if n <= max_n:
                kept.append((lineno, line))
        items = kept
    if jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            yield from pool.map(_safe_sweep, items, chunksize=64)
    else:
        yield from map(_safe_sweep, items)


@dataclass
class SweepSummary:
    graphs: int = 0
    malformed: int = 0
    counterexamples: int = 0
    strict_violations: int = 0
    errors: list[str] = field(default_factory=list)

    @property
    def clean(self) -> bool:
        return self.counterexamples == 0 and self.strict_violations == 0


def run_sweep(stream: TextIO, out: TextIO | None = None, max_n: int | None = None,
              jobs: int = 1) -> SweepSummary:
    summary = SweepSummary()
    writer = csv.writer(out, lineterminator="\n") if out is not None else None
    if writer:
        writer.writerow(CSV_COLUMNS)
    for lineno, rec in sweep_lines(read_graph6(stream), max_n=max_n, jobs=jobs):
        if isinstance(rec, str):
            summary.malformed += 1
            summary.errors.append(f"line {lineno}: {rec}")
            continue
        summary.graphs += 1
        summary.counterexamples += rec.counterexample
        summary.strict_violations += rec.strict_violation
        if writer:
            writer.writerow(rec.row())
    return summary


def bundled_lines(max_n: int = 8) -> list[str]:
    """Canonical graph6 lines of every graph on 1..max_n vertices (max_n <= 8)."""
    if max_n > 8:
        raise ValueError("the bundled stream stops at order 8")
    text = resources.files("ekrkit").joinpath("data", BUNDLED_STREAM).read_text()
    out = []
    for line in text.split():
        n = ord(line[0]) - 63
        if n <= max_n:
            out.append(line)
    return out
