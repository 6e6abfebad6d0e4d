"""Disjoint unions of two complete multipartite graphs and their compressions.

The structure ``K_a[b_1..b_a] + K_c[d_1..d_c]`` is laid out with the parts
``V_0..V_{a-1}`` of the first graph followed by ``W_0..W_{c-1}`` of the second,
each part's vertices consecutive. Part indices here are 0-based, so ``V_0`` and
``W_0`` are the two largest parts and the maps ``phi``/``theta`` fold part ``i``
(``i >= 1``) onto part 0 at the same inner position.

An independent set of the union lies inside ``V_i | W_j`` for some ``i, j``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from math import comb
from typing import Iterable, Sequence

from .engine import is_intersecting
from .graphs import Graph, complete_multipartite, disjoint_union, elements
from .independent import SetFamily, independent_r_sets

V, W = "V", "W"


class StructureError(ValueError):
    pass


@dataclass(frozen=True)
class MultipartiteUnion:
    b: tuple[int, ...]
    d: tuple[int, ...]
    graph: Graph = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        for sizes in (self.b, self.d):
            if not sizes or any(s < 1 for s in sizes):
                raise StructureError("part sizes must be positive and nonempty")
            if any(x < y for x, y in zip(sizes, sizes[1:])):
                raise StructureError(f"part sizes must be non-increasing, got {list(sizes)}")
        g = disjoint_union(complete_multipartite(self.b), complete_multipartite(self.d))
        label = ",".join(map(str, self.b)) + "+" + ",".join(map(str, self.d))
        object.__setattr__(self, "graph", g.relabel(label))

    @classmethod
    def of(cls, b: Iterable[int], d: Iterable[int]) -> MultipartiteUnion:
        return cls(tuple(b), tuple(d))

    @property
    def a(self) -> int:
        return len(self.b)

    @property
    def c(self) -> int:
        return len(self.d)

    @property
    def n(self) -> int:
        return sum(self.b) + sum(self.d)

    def _offset(self, side: str, i: int) -> int:
        if side == V:
            if not 0 <= i < self.a:
                raise StructureError(f"no part V_{i}")
            return sum(self.b[:i])
        if not 0 <= i < self.c:
            raise StructureError(f"no part W_{i}")
        return sum(self.b) + sum(self.d[:i])

    def vertex(self, side: str, i: int, j: int) -> int:
        """Index of ``v_{i,j}`` (side V) or ``w_{i,j}`` (side W), all 0-based."""
        size = (self.b if side == V else self.d)[i]
        if not 0 <= j < size:
            raise StructureError(f"part {side}_{i} has no slot {j}")
        return self._offset(side, i) + j

    def part(self, side: str, i: int) -> int:
        size = (self.b if side == V else self.d)[i]
        return ((1 << size) - 1) << self._offset(side, i)

    def label(self, x: int) -> str:
        for side, sizes in ((V, self.b), (W, self.d)):
            for i, size in enumerate(sizes):
                off = self._offset(side, i)
                if off <= x < off + size:
                    return f"{side.lower()}_{i},{x - off}"
        raise StructureError(f"vertex {x} out of range")

    def labeling(self) -> dict[int, str]:
        return {x: self.label(x) for x in range(self.n)}

    def swapped(self) -> MultipartiteUnion:
        return MultipartiteUnion(self.d, self.b)

    def swap_map(self, mask: int) -> int:
        """Image of a vertex set under the relabelling onto :meth:`swapped`."""
        nb = sum(self.b)
        nd = sum(self.d)
        low = mask & ((1 << nb) - 1)
        high = mask >> nb
        return (low << nd) | high


def parse_structure(text: str) -> tuple[MultipartiteUnion, bool]:
    """Parse ``"3,3+3,3"``; returns the structure and whether sizes were re-sorted."""
    halves = text.split("+")
    if len(halves) != 2:
        raise StructureError(f"expected two '+'-separated part lists, got {text!r}")
    sizes = []
    for h in halves:
        try:
            sizes.append([int(s) for s in h.split(",")])
        except ValueError:
            raise StructureError(f"non-integer part size in {text!r}") from None
    resorted = any(s != sorted(s, reverse=True) for s in sizes)
    b, d = (tuple(sorted(s, reverse=True)) for s in sizes)
    return MultipartiteUnion(b, d), resorted


# -- vertex maps and compressions ------------------------------------------------

def _fold(M: MultipartiteUnion, side: str, i: int, A: int) -> int:
    if i < 1:
        raise StructureError("the folding maps are defined for part index >= 1")
    src = M.part(side, i)
    hit = A & src
    if not hit:
        return A
    shift = M._offset(side, i) - M._offset(side, 0)
    return (A & ~src) | (hit >> shift)


def phi(M: MultipartiteUnion, i: int, A: int) -> int:
    """Relabel ``V_i`` onto ``V_0`` inside ``A``; other vertices fixed."""
    if not 1 <= i < M.a:
        raise StructureError(f"phi needs 1 <= i < {M.a}, got {i}")
    return _fold(M, V, i, A)


def theta(M: MultipartiteUnion, i: int, A: int) -> int:
    """Relabel ``W_i`` onto ``W_0`` inside ``A``; other vertices fixed."""
    if not 1 <= i < M.c:
        raise StructureError(f"theta needs 1 <= i < {M.c}, got {i}")
    return _fold(M, W, i, A)


def _members(F) -> list[int]:
    return list(F.members) if isinstance(F, SetFamily) else list(F)


def _like(F, M: MultipartiteUnion, members: list[int]):
    if isinstance(F, SetFamily):
        return SetFamily(M.graph, tuple(members), F.uniform_size)
    return members


def compress_family(M: MultipartiteUnion, i: int, side: str, F):
    """Replace each member by its folded image unless the image is already present."""
    fold = phi if side == V else theta
    ms = _members(F)
    present = set(ms)
    out = []
    for A in ms:
        B = fold(M, i, A)
        out.append(A if B in present else B)
    return _like(F, M, out)


def meeting_parts(M: MultipartiteUnion, F) -> list[tuple[str, int]]:
    ms = _members(F)
    found = []
    for side, count in ((V, M.a), (W, M.c)):
        for i in range(count):
            p = M.part(side, i)
            if all(A & p for A in ms):
                found.append((side, i))
    return found


def is_standardized(M: MultipartiteUnion, F) -> bool:
    p = M.part(V, 0)
    return all(A & p for A in _members(F))


def standardize(M: MultipartiteUnion, F) -> tuple[MultipartiteUnion, object]:
    """Equal-size intersecting family whose members all meet ``V_0``.

    Picks the first part (V parts before W parts) meeting every member, swaps the
    two graphs if it is a W part, then folds it onto part 0.
    """
    ms = _members(F)
    if not ms:
        raise StructureError("standardize needs a nonempty family")
    if not is_intersecting(ms):
        raise StructureError("standardize needs an intersecting family")
    side, i = meeting_parts(M, ms)[0]
    if side == W:
        ms = [M.swap_map(A) for A in ms]
        M = M.swapped()
    if i:
        ms = compress_family(M, i, V, ms)
    return M, _like(F, M, ms)


def full_compress(M: MultipartiteUnion, F):
    """Apply the W-side compressions, the last part first, ending with part 1."""
    ms = _members(F)
    for i in range(M.c - 1, 0, -1):
        ms = compress_family(M, i, W, ms)
    return _like(F, M, ms)


def is_compressed(M: MultipartiteUnion, F) -> bool:
    """Fixed by every W-side compression."""
    ms = _members(F)
    return all(sorted(compress_family(M, i, W, ms)) == sorted(ms) for i in range(1, M.c))


def meets_core_pairwise(M: MultipartiteUnion, F) -> bool:
    """Every two members share a vertex of ``V_0 | W_0``."""
    core = M.part(V, 0) | M.part(W, 0)
    ms = _members(F)
    return all(A & B & core for k, A in enumerate(ms) for B in ms[k:])


# -- proof diagnostics ------------------------------------------------------------

@dataclass
class ProfileDecomposition:
    r: int
    parts: list[int]                    # |A_0|, |A_1|, ..., |A_c| (W parts 0-based from A_1)
    cross_profiles: dict[tuple[int, int], int]   # (i, j) -> |B_i^(j)|, i >= 1
    star_profiles: dict[tuple[int, int], int]    # (i, j) -> |K_i^(j)| = C(b_1 - 1, j - 1)
    s: dict[int, int]
    t: int
    checks: dict[str, bool]

    @property
    def ok(self) -> bool:
        return all(self.checks.values())


def profile(M: MultipartiteUnion, F, r: int) -> ProfileDecomposition:
    """Split a standardized family by the W part it meets and by |A & V_0|.

    The ``checks`` are the inequalities that bound each piece by the matching
    piece of the star at ``v_{0,0}``. They are guaranteed only for compressed
    standardized intersecting families with ``r <= mu/2``.
    """
    ms = _members(F)
    if any(A.bit_count() != r for A in ms):
        raise StructureError(f"profile needs a family of {r}-sets")
    if not is_standardized(M, ms):
        raise StructureError("profile needs a standardized family")
    b1, d1 = M.b[0], M.d[0]
    V0 = M.part(V, 0)
    parts = [sum(1 for A in ms if not A & ~V0)]
    for i in range(M.c):
        p = M.part(W, i)
        parts.append(sum(1 for A in ms if A & p))
    t = min(r - 1, b1)
    s = {i: max(1, r - M.d[i]) for i in range(1, M.c)}
    cross: dict[tuple[int, int], int] = {}
    starp: dict[tuple[int, int], int] = {}
    traces: dict[tuple[int, int], set[int]] = {}
    for i in range(1, M.c):
        p = M.part(W, i)
        for j in range(s[i], t + 1):
            traces[i, j] = {A & V0 for A in ms if A & p and (A & V0).bit_count() == j}
            cross[i, j] = len(traces[i, j])
            starp[i, j] = comb(b1 - 1, j - 1)
    checks = {"core_pair_bound": parts[0] + parts[1] <= comb(b1 + d1 - 1, r - 1)}
    for i in range(1, M.c):
        di = M.d[i]
        a_i = parts[i + 1]
        checks[f"cross_sum_{i}"] = a_i <= sum(cross[i, j] * comb(di, r - j) for j in range(s[i], t + 1))
        for j in range(s[i], t + 1):
            if 2 * j <= b1:
                checks[f"trace_bound_{i}_{j}"] = cross[i, j] <= comb(b1 - 1, j - 1)
                if b1 - j <= t:
                    checks[f"complement_bound_{i}_{j}"] = (
                        cross[i, j] + cross.get((i, b1 - j), 0) <= comb(b1, j)
                        if b1 - j != j else 2 * cross[i, j] <= comb(b1, j))
    return ProfileDecomposition(r, parts, cross, starp, s, t, checks)


def mu_formula(M: MultipartiteUnion) -> int:
    """Smallest maximal independent set: the smallest part of each graph."""
    return M.b[-1] + M.d[-1]


# -- non-EKR witness for mu = alpha ------------------------------------------------

@dataclass
class Counterexample:
    family: SetFamily
    x: int
    blocking_set: int | None   # the r-subset U of V_0 avoiding x, when r < b
    star_size: int


def counterexample_family(M: MultipartiteUnion, r: int, x: int | None = None) -> Counterexample:
    """An intersecting family beating the star at ``x`` (a vertex of ``V_0``).

    Needs equal part sizes ``b`` and ``d`` on each side and ``mu/2 < r < mu``.
    For ``r >= b`` the family is the star at ``x`` with the sets meeting ``V_0``
    only in ``x`` swapped for those meeting it in ``V_0 - x``. For ``r < b`` it is
    the star at ``x`` plus an ``r``-set ``U`` of ``V_0`` missing ``x``, which meets
    every member of the star.
    """
    if len(set(M.b)) != 1 or len(set(M.d)) != 1:
        raise StructureError("the witness needs all parts on each side to have equal size")
    b, dd = M.b[0], M.d[0]
    mu = b + dd
    if not (mu < 2 * r and r < mu):
        raise StructureError(f"the witness needs mu/2 < r < mu (mu={mu}), got r={r}")
    x = M.vertex(V, 0, 0) if x is None else x
    V0 = M.part(V, 0)
    if not V0 >> x & 1:
        raise StructureError(f"vertex {x} is not in V_0")
    everything = independent_r_sets(M.graph, r).members
    star = [A for A in everything if A >> x & 1]
    blocking = None
    if r >= b:
        rest = V0 & ~(1 << x)
        fam = [A for A in star if A & V0 != 1 << x] + [A for A in everything if A & V0 == rest]
    else:
        rest = V0 & ~(1 << x)
        blocking = sum(1 << v for v in elements(rest)[:r])
        fam = star + [blocking]
    fam = sorted(fam)
    if not is_intersecting(fam):
        raise StructureError("the construction is not intersecting for this structure")
    return Counterexample(SetFamily(M.graph, tuple(fam), r), x, blocking, len(star))


# -- random families for property checks ---------------------------------------------

def random_intersecting_family(M: MultipartiteUnion, r: int, rng: random.Random,
                               size: int | None = None) -> list[int]:
    """Greedy insertion of shuffled independent r-sets that meet everything so far."""
    pool = list(independent_r_sets(M.graph, r).members)
    rng.shuffle(pool)
    target = size if size is not None else rng.randint(1, len(pool))
    fam: list[int] = []
    for A in pool:
        if all(A & B for B in fam):
            fam.append(A)
            if len(fam) >= target:
                break
    return fam


def random_standardized_family(M: MultipartiteUnion, r: int, rng: random.Random):
    fam = random_intersecting_family(M, r, rng)
    return standardize(M, fam)


def lemma_checks(M: MultipartiteUnion, F: Sequence[int]) -> dict[str, bool]:
    """Size, intersecting and standardization preserved by each compression, and
    the fully compressed family meets ``V_0 | W_0`` pairwise."""
    ms = list(F)
    out = {}
    for i in range(1, M.c):
        img = compress_family(M, i, W, ms)
        out[f"size_{i}"] = len(set(img)) == len(ms)
        out[f"intersecting_{i}"] = is_intersecting(img)
        out[f"standardized_{i}"] = is_standardized(M, img)
    full = full_compress(M, ms)
    out["full_size"] = len(set(full)) == len(ms)
    out["full_intersecting"] = is_intersecting(full)
    out["full_fixed"] = is_compressed(M, full)
    out["full_core"] = meets_core_pairwise(M, full)
    return out


__all__ = [
    "MultipartiteUnion", "ProfileDecomposition", "Counterexample", "StructureError",
    "parse_structure", "phi", "theta", "compress_family", "standardize", "full_compress",
    "is_compressed", "is_standardized", "meets_core_pairwise", "profile", "mu_formula",
    "counterexample_family", "random_intersecting_family", "random_standardized_family",
    "lemma_checks",
]
