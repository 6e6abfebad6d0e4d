"""Independent r-sets, stars, and the invariants alpha (independence number) and
mu (minimum size of a maximal independent set)."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .graphs import Graph, elements
from .search import CliqueSearch


@dataclass(frozen=True)
class SetFamily:
    """Duplicate-free, ordered list of independent vertex sets of ``ground``."""

    ground: Graph = field(repr=False)
    members: tuple[int, ...]
    uniform_size: int | None = None

    def __post_init__(self):
        if len(set(self.members)) != len(self.members):
            raise ValueError("family has duplicate members")
        for m in self.members:
            if m >> self.ground.n:
                raise ValueError(f"member {elements(m)} leaves the ground graph")
            if not self.ground.is_independent(m):
                raise ValueError(f"member {elements(m)} is not independent")
            if self.uniform_size is not None and m.bit_count() != self.uniform_size:
                raise ValueError(f"member {elements(m)} does not have size {self.uniform_size}")

    @classmethod
    def of(cls, ground: Graph, sets: Iterable[Iterable[int] | int], r: int | None = None) -> SetFamily:
        masks = []
        for s in sets:
            masks.append(s if isinstance(s, int) else sum(1 << v for v in s))
        return cls(ground, tuple(masks), r)

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, mask: int) -> bool:
        return mask in self.members

    def as_lists(self) -> list[list[int]]:
        return [elements(m) for m in self.members]

    def containing(self, v: int) -> SetFamily:
        """Subfamily of members containing ``v``."""
        return SetFamily(self.ground, tuple(m for m in self.members if m >> v & 1), self.uniform_size)

    def sorted(self) -> SetFamily:
        return SetFamily(self.ground, tuple(sorted(self.members)), self.uniform_size)


def _independent_masks(g: Graph, r: int) -> list[int]:
    out: list[int] = []
    if r == 0:
        return [0]
    adj = g.adj

    def extend(chosen: int, cand: int, need: int) -> None:
        if need == 0:
            out.append(chosen)
            return
        while cand.bit_count() >= need:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            extend(chosen | low, cand & ~adj[v], need - 1)

    extend(0, g.vertices, r)
    out.sort()
    return out


def independent_r_sets(g: Graph, r: int) -> SetFamily:
    if not 0 <= r <= g.n:
        raise ValueError(f"r must lie in 0..{g.n}, got {r}")
    return SetFamily(g, tuple(_independent_masks(g, r)), r)


def star(g: Graph, v: int, r: int) -> SetFamily:
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range")
    if not 1 <= r <= g.n:
        raise ValueError(f"r must lie in 1..{g.n}, got {r}")
    sub = g.adj[v] | (1 << v)
    rest = Graph(g.n, tuple(0 if (sub >> u & 1) else row & ~sub for u, row in enumerate(g.adj)))
    masks = [m | (1 << v) for m in _independent_masks(rest, r - 1) if not m & sub]
    return SetFamily(g, tuple(sorted(masks)), r)


def star_sizes(g: Graph, r: int, family: SetFamily | None = None) -> list[int]:
    fam = family if family is not None else independent_r_sets(g, r)
    counts = [0] * g.n
    for m in fam.members:
        for v in elements(m):
            counts[v] += 1
    return counts


def max_star(g: Graph, r: int, family: SetFamily | None = None) -> tuple[int, list[int]]:
    """Largest star size and every vertex attaining it (ties are all reported)."""
    if not 1 <= r <= g.n:
        raise ValueError(f"r must lie in 1..{g.n}, got {r}")
    sizes = star_sizes(g, r, family)
    best = max(sizes)
    return best, [v for v, s in enumerate(sizes) if s == best]


def maximum_independent_set(g: Graph) -> int:
    """A maximum independent set as a bitmask (max clique of the complement)."""
    if g.n == 0:
        return 0
    comp = g.complement()
    clique = CliqueSearch(comp.adj, spectral=False).max_clique()
    return sum(1 << v for v in clique)


def independence_number(g: Graph) -> int:
    if g.n < 1:
        raise ValueError("independence number needs n >= 1")
    return maximum_independent_set(g).bit_count()


def maximal_independent_sets(g: Graph) -> list[int]:
    """Every maximal independent set, via pivoting Bron-Kerbosch on the complement."""
    comp = g.complement().adj
    out: list[int] = []

    def bk(R: int, P: int, X: int) -> None:
        if not P and not X:
            out.append(R)
            return
        PX = P | X
        pivot = max(elements(PX), key=lambda u: (P & comp[u]).bit_count())
        for v in elements(P & ~comp[pivot]):
            bk(R | (1 << v), P & comp[v], X & comp[v])
            P &= ~(1 << v)
            X |= 1 << v

    bk(0, g.vertices, 0)
    return sorted(out)


def minimax_independence(g: Graph) -> int:
    """mu(G): minimum size over maximal independent sets."""
    if g.n < 1:
        raise ValueError("minimax independence number needs n >= 1")
    comp = g.complement().adj
    best = g.n

    def bk(R: int, size: int, P: int, X: int) -> None:
        nonlocal best
        if size >= best:
            return
        if not P and not X:
            best = size
            return
        PX = P | X
        pivot = max(elements(PX), key=lambda u: (P & comp[u]).bit_count())
        for v in elements(P & ~comp[pivot]):
            bk(R | (1 << v), size + 1, P & comp[v], X & comp[v])
            P &= ~(1 << v)
            X |= 1 << v

    bk(0, 0, g.vertices, 0)
    return best


@dataclass
class InvariantSummary:
    alpha: int
    mu: int
    star_sizes: dict[int, list[int]]


def summarize(g: Graph, rs: Sequence[int] | None = None) -> InvariantSummary:
    alpha = independence_number(g)
    mu = minimax_independence(g)
    rs = range(1, alpha + 1) if rs is None else rs
    return InvariantSummary(alpha, mu, {r: star_sizes(g, r) for r in rs})
