"""Exact maximum intersecting subfamilies and the r-EKR / strict r-EKR decision.

Intersecting subfamilies of a family are the cliques of its compatibility graph
(members adjacent when they meet), so both questions reduce to maximum clique
searches in :mod:`ekrkit.search`. The functions prefixed ``family_`` work on any
list of vertex-set bitmasks; the graph-level ones enumerate ``I^(r)(G)`` first.
"""

from __future__ import annotations

import os
import sys
from dataclasses import dataclass, field
from typing import Sequence

from .graphs import Graph, GraphError, build_graph, elements
from .independent import SetFamily, independent_r_sets, max_star, star_sizes
from .search import CliqueSearch, SearchLimitExceeded

DEFAULT_MAX_FAMILY = 50_000


def max_family() -> int:
    """Search cap on |I^(r)|; the EKR_MAX_FAMILY environment variable overrides it."""
    raw = os.environ.get("EKR_MAX_FAMILY")
    if raw is None:
        return DEFAULT_MAX_FAMILY
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"EKR_MAX_FAMILY must be an integer, got {raw!r}") from None


def _check_cap(size: int) -> None:
    cap = max_family()
    if size > cap:
        raise SearchLimitExceeded(f"family has {size} members, over the search cap {cap}")
    # clique depth can reach the family size
    if sys.getrecursionlimit() < size + 1000:
        sys.setrecursionlimit(size + 1000)


# -- basic family predicates -----------------------------------------------------

def is_intersecting(members: Sequence[int] | SetFamily) -> bool:
    ms = list(members)
    return all(a & b for i, a in enumerate(ms) for b in ms[i + 1:])


def common_intersection(members: Sequence[int] | SetFamily) -> int:
    ms = list(members)
    if not ms:
        raise ValueError("common intersection of an empty family is undefined")
    out = ms[0]
    for m in ms[1:]:
        out &= m
    return out


def is_anomalous(members: Sequence[int] | SetFamily) -> bool:
    ms = list(members)
    return bool(ms) and is_intersecting(ms) and common_intersection(ms) == 0


def disjointness_graph(family: SetFamily | Sequence[int]) -> Graph:
    """One vertex per member, an edge between disjoint members."""
    ms = list(family)
    edges = [(i, j) for i in range(len(ms)) for j in range(i + 1, len(ms)) if not ms[i] & ms[j]]
    return build_graph(len(ms), edges)


def compatibility(members: Sequence[int]) -> list[int]:
    """``adj[i]`` = bitset of the other members meeting member ``i``."""
    star_mask: dict[int, int] = {}
    for i, m in enumerate(members):
        for v in elements(m):
            star_mask[v] = star_mask.get(v, 0) | (1 << i)
    adj = []
    for i, m in enumerate(members):
        row = 0
        for v in elements(m):
            row |= star_mask[v]
        adj.append(row & ~(1 << i))
    return adj


# -- family-level searches ---------------------------------------------------------

@dataclass
class FamilySearch:
    """Shared search state for one family of vertex sets."""

    members: list[int]
    spectral: bool = True
    engine: CliqueSearch = field(init=False, repr=False)

    def __post_init__(self):
        _check_cap(len(self.members))
        self.engine = CliqueSearch(compatibility(self.members), spectral=self.spectral)
        self.ground = 0
        for m in self.members:
            self.ground |= m

    def max_intersecting(self, seed: Sequence[int] = ()) -> list[int]:
        """Indices of a maximum intersecting subfamily; ``seed`` is kept on ties."""
        return self.engine.max_clique(lower=seed)

    def max_anomalous(self, at_least: int = 1) -> list[int] | None:
        """Indices of a largest anomalous subfamily with at least ``at_least``
        members, or ``None`` when there is none that large."""
        return self.engine.max_anomalous(self.members, self.ground, at_least=at_least)

    def maximum_families(self, size: int) -> list[list[int]] | None:
        """All intersecting subfamilies of ``size`` members when the spectral
        equality case applies; ``None`` otherwise."""
        return self.engine.extremal_cliques(size)


@dataclass
class AnomalousResult:
    """Outcome of the anomalous search.

    ``size`` is ``None`` when no anomalous subfamily exists. When ``exact`` is
    false the search only established ``size < below``.
    """

    size: int | None
    witness: list[int] | None
    exact: bool = True
    below: int | None = None

    def as_json(self):
        if not self.exact:
            return f"<{self.below}"
        return "none" if self.size is None else self.size


def anomalous_search(fs: FamilySearch, top: int, exact: bool = True) -> AnomalousResult:
    """Largest anomalous subfamily, given the maximum intersecting size ``top``.

    With ``exact=False`` the search only decides whether an anomalous family of
    size ``top`` exists, which is all the strictness verdict needs.
    """
    if top < 3:
        # two intersecting sets share a vertex, so anomalous families have >= 3 members
        return AnomalousResult(None, None)
    extremal = fs.maximum_families(top)
    if extremal is not None:
        for clique in extremal:
            if common_intersection([fs.members[i] for i in clique]) == 0:
                return AnomalousResult(top, clique)
        if not exact:
            return AnomalousResult(None, None, exact=False, below=top)
        # every maximum family is a star, so any anomalous family is smaller
        found = fs.max_anomalous()
        return AnomalousResult(len(found) if found else None, found)
    found = fs.max_anomalous(at_least=1 if exact else top)
    if found is not None:
        return AnomalousResult(len(found), found)
    if exact:
        return AnomalousResult(None, None)
    return AnomalousResult(None, None, exact=False, below=top)


def family_max_intersecting(members: Sequence[int]) -> list[int]:
    return FamilySearch(list(members)).max_intersecting()


def family_max_anomalous(members: Sequence[int]) -> list[int] | None:
    fs = FamilySearch(list(members))
    return fs.max_anomalous()


# -- graph level -----------------------------------------------------------------

def _as_family(g: Graph, idx: Sequence[int] | None, members: Sequence[int], r: int) -> SetFamily | None:
    if idx is None:
        return None
    return SetFamily(g, tuple(sorted(members[i] for i in idx)), r)


def max_intersecting(g: Graph, r: int) -> tuple[int, SetFamily]:
    fam = independent_r_sets(g, r)
    if not fam.members:
        return 0, fam
    ms = list(fam.members)
    fs = FamilySearch(ms)
    _, centres = max_star(g, r, fam)
    seed = [i for i, m in enumerate(ms) if m >> centres[0] & 1]
    best = fs.max_intersecting(seed)
    return len(best), _as_family(g, best, ms, r)


def max_anomalous(g: Graph, r: int) -> tuple[int | None, SetFamily | None]:
    fam = independent_r_sets(g, r)
    if not fam.members:
        return None, None
    ms = list(fam.members)
    found = FamilySearch(ms).max_anomalous()
    if found is None:
        return None, None
    return len(found), _as_family(g, found, ms, r)


@dataclass
class EkrReport:
    graph_id: str
    r: int
    family_size: int
    max_star_size: int
    star_centres: list[int]
    max_intersecting_size: int
    anomalous: AnomalousResult
    witness_family: SetFamily | None
    witness_anomalous: SetFamily | None
    star_sizes: list[int] = field(default_factory=list, repr=False)
    vacuous: bool = False

    @property
    def max_anomalous_size(self) -> int | None:
        return self.anomalous.size

    @property
    def is_ekr(self) -> bool:
        return self.max_intersecting_size == self.max_star_size

    @property
    def is_strictly_ekr(self) -> bool:
        if not self.is_ekr:
            return False
        a = self.anomalous
        if not a.exact:
            return True  # established a.size < max_intersecting
        return a.size is None or a.size < self.max_intersecting_size

    @property
    def centres(self) -> list[int]:
        """The r-centres: vertices whose star is a maximum intersecting family."""
        return list(self.star_centres) if self.is_ekr else []

    def as_dict(self, witness_limit: int = 100) -> dict:
        def fam(f: SetFamily | None):
            if f is None:
                return []
            if len(f) > witness_limit:
                return {"elided": len(f)}
            return f.as_lists()

        return {
            "graph": self.graph_id,
            "r": self.r,
            "sizes": {
                "family": self.family_size,
                "max_star": self.max_star_size,
                "max_intersecting": self.max_intersecting_size,
                "max_anomalous": self.anomalous.as_json(),
            },
            "verdict": {"ekr": self.is_ekr, "strict": self.is_strictly_ekr},
            "centres": self.centres,
            "witnesses": {
                "intersecting": fam(self.witness_family),
                "anomalous": fam(self.witness_anomalous),
            },
        }


def ekr_status(g: Graph, r: int, exact_anomalous: bool = True, graph_id: str | None = None) -> EkrReport:
    """Full verdict for ``(g, r)``.

    With ``exact_anomalous=False`` the anomalous search stops once it knows
    whether an anomalous family reaches the maximum intersecting size.
    ``r`` above the independence number gives a vacuous report (all sizes 0,
    EKR and strictly EKR by convention).
    """
    if r < 1:
        raise ValueError(f"r must be at least 1, got {r}")
    gid = graph_id or g.label or f"graph(n={g.n})"
    ms = list(independent_r_sets(g, r).members) if r <= g.n else []
    if not ms:
        return EkrReport(gid, r, 0, 0, [], 0, AnomalousResult(None, None), None, None,
                         [0] * g.n, vacuous=True)
    fam = SetFamily(g, tuple(ms), r)
    sizes = star_sizes(g, r, fam)
    top_star = max(sizes)
    centres = [v for v, s in enumerate(sizes) if s == top_star]
    fs = FamilySearch(ms)
    seed = [i for i, m in enumerate(ms) if m >> centres[0] & 1]
    best = fs.max_intersecting(seed)
    anom = anomalous_search(fs, len(best), exact=exact_anomalous)
    witness = _as_family(g, best, ms, r)
    assert is_intersecting(witness.members)
    w_anom = _as_family(g, anom.witness, ms, r)
    if w_anom is not None:
        assert is_anomalous(w_anom.members)
    return EkrReport(gid, r, len(ms), top_star, centres, len(best), anom, witness, w_anom, sizes)


def is_r_centre(g: Graph, v: int, r: int) -> bool:
    rep = ekr_status(g, r, exact_anomalous=False)
    return rep.star_sizes[v] >= rep.max_intersecting_size


def is_strict_r_centre(g: Graph, v: int, r: int) -> bool:
    """Star at ``v`` strictly larger than every anomalous subfamily."""
    rep = ekr_status(g, r, exact_anomalous=True)
    a = rep.anomalous.size
    return a is None or rep.star_sizes[v] > a


@dataclass(frozen=True)
class TwoEkrClass:
    is_ekr: bool
    is_strict: bool
    centres: tuple[int, ...]


def check_2ekr_formula(g: Graph) -> TwoEkrClass:
    """2-EKR verdict from alpha and minimum degree alone.

    Anomalous families of independent 2-sets are exactly the three 2-subsets of
    an independent 3-set, and the star at ``v`` has ``n - 1 - deg(v)`` members.
    """
    from .independent import independence_number

    n = g.n
    if g.edge_count() == n * (n - 1) // 2:
        raise GraphError("the 2-EKR formula needs a non-complete graph")
    degs = g.degrees()
    delta = min(degs)
    minimal = tuple(v for v in range(n) if degs[v] == delta)
    if independence_number(g) == 2:
        return TwoEkrClass(True, True, minimal)
    ekr = delta <= n - 4
    return TwoEkrClass(ekr, delta <= n - 5, minimal if ekr else ())
