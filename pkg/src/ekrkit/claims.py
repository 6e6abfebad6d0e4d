"""The numeric claims checked by ``ekr verify-paper`` and the acceptance tests.

Each check returns a :class:`ClaimResult` with the observed values; mismatches
are listed in ``detail`` so a failure says exactly which instance disagreed.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from typing import Callable

from .covering import block_star_equality, centre_transfer_check, katona_covering, octahedron_remark_case
from .engine import check_2ekr_formula, ekr_status, is_anomalous, is_intersecting
from .graph6 import from_graph6
from .graphs import (complete_graph, cycle_graph, empty_graph, lex_product, named_graph, nkt,
                     path_graph, spiky_g)
from .independent import (independence_number, independent_r_sets, max_star, minimax_independence,
                          star_sizes)
from .multipartite import MultipartiteUnion, counterexample_family, lemma_checks, mu_formula, random_standardized_family
from .oracle import naive_extremes
from .sweep import bundled_lines, sweep_graph


@dataclass
class ClaimResult:
    number: int
    title: str
    passed: bool
    expected: str
    actual: str
    seconds: float
    budget: float
    detail: list[str]

    @property
    def within_budget(self) -> bool:
        return self.seconds < self.budget

    def line(self, timing: bool = False) -> str:
        status = "PASS" if self.passed and self.within_budget else "FAIL"
        out = f"[{status}] {self.number:2d} {self.title}: expected {self.expected}; got {self.actual}"
        if timing:
            out += f" ({self.seconds:.1f}s / {self.budget:.0f}s)"
        return out


class _Tally:
    def __init__(self):
        self.bad: list[str] = []

    def eq(self, what: str, got, want) -> None:
        if got != want:
            self.bad.append(f"{what}: got {got}, want {want}")


def classical_baseline() -> tuple[bool, str, str, list[str]]:
    t = _Tally()
    for n in range(2, 11):
        g = empty_graph(n)
        for r in range(1, 6):
            rep = ekr_status(g, r, exact_anomalous=False)
            t.eq(f"E_{n} r={r} ekr", rep.is_ekr, n >= 2 * r)
            t.eq(f"E_{n} r={r} strict", rep.is_strictly_ekr, n > 2 * r)
    return (not t.bad, "ekr iff n>=2r, strict iff n>2r",
            f"{len(t.bad)} mismatching cells", t.bad)


def disjoint_cliques() -> tuple[bool, str, str, list[str]]:
    t = _Tally()
    for tt in (2, 3):
        for n in range(1, 5):
            for r in range(1, n + 1):
                rep = ekr_status(nkt(n, tt), r, exact_anomalous=False)
                t.eq(f"{n}K_{tt} r={r} ekr", rep.is_ekr, True)
                t.eq(f"{n}K_{tt} r={r} strict", rep.is_strictly_ekr, not (tt == 2 and n == r))
    return (not t.bad, "all r-EKR; strict unless t=2, n=r", f"{len(t.bad)} mismatches", t.bad)


def dodecahedron() -> tuple[bool, str, str, list[str]]:
    g = named_graph("dodecahedron")
    alpha = independence_number(g)
    rep = ekr_status(g, 8, exact_anomalous=False)
    got = (alpha, rep.family_size, rep.max_star_size, rep.max_intersecting_size, rep.is_ekr)
    want = (8, 5, 2, 5, False)
    return got == want, str(want), str(got), []


def platonic() -> tuple[bool, str, str, list[str]]:
    t = _Tally()
    for name, alpha in [("tetrahedron", 1), ("cube", 4), ("octahedron", 2), ("icosahedron", 3)]:
        g = named_graph(name)
        t.eq(f"{name} alpha", independence_number(g), alpha)
        t.eq(f"{name} {alpha}-EKR", ekr_status(g, alpha, exact_anomalous=False).is_ekr, True)
    return not t.bad, "alpha 1,4,2,3 and alpha-EKR", "ok" if not t.bad else "; ".join(t.bad), t.bad


def icosahedron() -> tuple[bool, str, str, list[str]]:
    g = named_graph("icosahedron")
    rep = ekr_status(g, 3)
    got = (set(star_sizes(g, 3)), rep.max_anomalous_size, rep.is_strictly_ekr, minimax_independence(g))
    want = ({5}, 4, True, 2)
    return got == want, str(want), str(got), []


def spiky() -> tuple[bool, str, str, list[str]]:
    g = spiky_g(3, 4)
    t = _Tally()
    t.eq("n", g.n, 16)
    t.eq("alpha", independence_number(g), 7)
    t.eq("mu", minimax_independence(g), 3)
    rep = ekr_status(g, 3, exact_anomalous=False)
    t.eq("max star r=3", rep.max_star_size, 21)
    t.eq("max intersecting r=3", rep.max_intersecting_size, 22)
    t.eq("3-EKR", rep.is_ekr, False)
    for r, want in [(4, False), (5, False), (6, False), (7, True)]:
        t.eq(f"{r}-EKR", ekr_status(g, r, exact_anomalous=False).is_ekr, want)
    return not t.bad, "n16 a7 mu3 star21 int22; r=4,5,6 no; r=7 yes", "ok" if not t.bad else "; ".join(t.bad), t.bad


def spiky_formulas() -> tuple[bool, str, str, list[str]]:
    t = _Tally()
    for p, q in [(3, 4), (4, 5)]:
        g = spiky_g(p, q)
        want_star = max(1 + 2 * (p + q) + q * (q - 1) // 2, (q + 1) * (q + 2) // 2)
        t.eq(f"({p},{q}) max star", max_star(g, 3)[0], want_star)
        t.eq(f"({p},{q}) max anomalous", ekr_status(g, 3).max_anomalous_size, 1 + 3 * (p + q))
    return not t.bad, "star formula and anomalous 1+3(p+q)", "ok" if not t.bad else "; ".join(t.bad), t.bad


def two_bipartite() -> tuple[bool, str, str, list[str]]:
    M = MultipartiteUnion.of([3, 3], [3, 3])
    g = M.graph
    t = _Tally()
    t.eq("mu", minimax_independence(g), 6)
    t.eq("mu formula", mu_formula(M), 6)
    want = {2: (True, True), 3: (True, False), 4: (False, False), 5: (False, False)}
    for r, (ekr, strict) in want.items():
        rep = ekr_status(g, r, exact_anomalous=False)
        t.eq(f"r={r}", (rep.is_ekr, rep.is_strictly_ekr), (ekr, strict))
    for r in (4, 5):
        cx = counterexample_family(M, r)
        top = max_star(g, r)[0]
        fam = cx.family.members
        t.eq(f"witness r={r}", (is_intersecting(fam), is_anomalous(fam), len(fam) > top), (True, True, True))
    return not t.bad, "mu=6; 2 strict; 3 non-strict; not 4,5; witnesses", "ok" if not t.bad else "; ".join(t.bad), t.bad


def _graphs_upto(n: int):
    return [from_graph6(line) for line in bundled_lines(n)]


def two_ekr_formula() -> tuple[bool, str, str, list[str]]:
    t = _Tally()
    count = 0
    for g in _graphs_upto(7):
        if g.edge_count() == g.n * (g.n - 1) // 2:
            continue
        count += 1
        f = check_2ekr_formula(g)
        rep = ekr_status(g, 2)
        t.eq(f"graph n={g.n} m={g.edge_count()}", (f.is_ekr, f.is_strict, list(f.centres)),
             (rep.is_ekr, rep.is_strictly_ekr, rep.centres))
    return not t.bad, "formula == search", f"{count} graphs, {len(t.bad)} mismatches", t.bad


def lex_products() -> tuple[bool, str, str, list[str]]:
    t = _Tally()
    cases = [(empty_graph(4), 2), (path_graph(4), 2), (cycle_graph(5), 2), (nkt(2, 3), 2)]
    for g, r in cases:
        base = ekr_status(g, r, exact_anomalous=False)
        t.eq(f"{g.label} base {r}-EKR", base.is_ekr, True)
        for m in (2, 3):
            prod = lex_product(g, complete_graph(m))
            t.eq(f"{g.label}[K_{m}] {r}-EKR", ekr_status(prod, r, exact_anomalous=False).is_ekr, True)
            for v in base.centres:
                t.eq(f"{g.label}[K_{m}] centre {v}", centre_transfer_check(g, v, m, r), True)
    return not t.bad, "every G[K_m] r-EKR", "ok" if not t.bad else "; ".join(t.bad), t.bad


def coverings() -> tuple[bool, str, str, list[str]]:
    t = _Tally()
    for g, m, r in [(path_graph(3), 2, 2), (empty_graph(2), 3, 1)]:
        kc = katona_covering(g, m, r)
        t.eq(f"{g.label} m={m} q", kc.covering.q, m ** (g.n - r))
        t.eq(f"{g.label} m={m} blocks", len(kc.covering.blocks), m ** (g.n - 1))
        t.eq(f"{g.label} m={m} star equality", block_star_equality(kc), True)
    oc = octahedron_remark_case()
    t.eq("octahedron |F_x|", set(oc.face_star_sizes), {4})
    t.eq("octahedron max anomalous", oc.max_anomalous, 4)
    t.eq("octahedron q", oc.q, 1)
    return not t.bad, "q=m^(n-r), star equality, |F_x|=4, anomalous 4", "ok" if not t.bad else "; ".join(t.bad), t.bad


def compression_suite(count: int = 1000, seed: int = 20240601) -> tuple[bool, str, str, list[str]]:
    rng = random.Random(seed)
    bad = []
    for k in range(count):
        b = sorted((rng.randint(1, 3) for _ in range(rng.randint(1, 3))), reverse=True)
        d = sorted((rng.randint(1, 3) for _ in range(rng.randint(1, 3))), reverse=True)
        M = MultipartiteUnion.of(b, d)
        r = rng.randint(1, min(3, b[0] + d[0]))
        M2, fam = random_standardized_family(M, r, rng)
        checks = lemma_checks(M2, fam)
        failed = [name for name, ok in checks.items() if not ok]
        if failed:
            bad.append(f"family {k} on {M2.b}+{M2.d} r={r}: {failed}")
    return not bad, "0 violations", f"{len(bad)} violations in {count}", bad


def oracle_equivalence() -> tuple[bool, str, str, list[str]]:
    t = _Tally()
    checked = 0
    for g in _graphs_upto(5):
        alpha = independence_number(g)
        for r in range(1, alpha + 1):
            fam = independent_r_sets(g, r).members
            if len(fam) > 20:
                continue
            checked += 1
            rep = ekr_status(g, r)
            t.eq(f"n={g.n} m={g.edge_count()} r={r}", (rep.max_intersecting_size, rep.max_anomalous_size),
                 naive_extremes(fam))
    return not t.bad, "search == oracle", f"{checked} instances, {len(t.bad)} mismatches", t.bad


def conjecture_sweep(max_n: int = 8) -> tuple[bool, str, str, list[str]]:
    bad = []
    graphs = 0
    for line in bundled_lines(max_n):
        rec = sweep_graph(line)
        graphs += 1
        if rec.counterexample or rec.strict_violation:
            bad.append(f"{line}: {';'.join(v.encode() for v in rec.verdicts)}")
    return not bad, "0 counterexamples", f"{graphs} graphs, {len(bad)} violations", bad


CLAIMS: list[tuple[int, str, float, Callable[[], tuple[bool, str, str, list[str]]]]] = [
    (1, "empty graphs E_n", 10, classical_baseline),
    (2, "disjoint cliques nK_t", 30, disjoint_cliques),
    (3, "dodecahedron r=8", 10, dodecahedron),
    (4, "Platonic solids at r=alpha", 10, platonic),
    (5, "icosahedron r=3", 5, icosahedron),
    (6, "spiky_G(3,4)", 60, spiky),
    (7, "generalized spiky formulas", 120, spiky_formulas),
    (8, "K33 + K33", 120, two_bipartite),
    (9, "2-EKR formula, order <= 7", 600, two_ekr_formula),
    (10, "G[K_m] stays r-EKR", 300, lex_products),
    (11, "covering machinery", 5, coverings),
    (12, "compression lemmas", 60, compression_suite),
    (13, "search vs naive oracle", 600, oracle_equivalence),
    (14, "mu/2 conjecture sweep", 7200, conjecture_sweep),
]


def run_claim(number: int, **kwargs) -> ClaimResult:
    num, title, budget, fn = next(c for c in CLAIMS if c[0] == number)
    start = time.perf_counter()
    passed, expected, actual, detail = fn(**kwargs)
    return ClaimResult(num, title, passed, expected, actual, time.perf_counter() - start, budget, detail)
