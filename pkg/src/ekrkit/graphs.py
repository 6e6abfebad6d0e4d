"""Simple graphs stored as adjacency bitmasks, plus the named graphs and products.

Vertices are the integers ``0..n-1``. A vertex set is a plain ``int`` whose bit
``v`` is set when ``v`` belongs to the set; the helpers :func:`vset` and
:func:`elements` convert to and from iterables.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Mapping, Sequence

MAX_ORDER = 128

VertexSet = int


class GraphError(ValueError):
    """Raised for malformed graph input or an order over the configured limit."""


def vset(vertices: Iterable[int]) -> VertexSet:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def elements(mask: VertexSet) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]
    label: str | None = field(default=None, compare=False)

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise GraphError(f"expected {self.n} adjacency rows, got {len(self.adj)}")
        full = (1 << self.n) - 1
        for u, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"row {u} names a vertex outside 0..{self.n - 1}")
            if row >> u & 1:
                raise GraphError(f"loop at vertex {u}")
            for w in elements(row):
                if not self.adj[w] >> u & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {w}")

    @property
    def vertices(self) -> VertexSet:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, w) for u in range(self.n) for w in elements(self.adj[u]) if u < w]

    def edge_count(self) -> int:
        return sum(self.degrees()) // 2

    def is_independent(self, mask: VertexSet) -> bool:
        rest = mask
        while rest:
            low = rest & -rest
            if self.adj[low.bit_length() - 1] & mask:
                return False
            rest ^= low
        return True

    def complement(self) -> Graph:
        full = self.vertices
        return Graph(self.n, tuple(full & ~row & ~(1 << u) for u, row in enumerate(self.adj)))

    def relabel(self, label: str | None) -> Graph:
        return Graph(self.n, self.adj, label)

    def __repr__(self):
        name = f" {self.label!r}" if self.label else ""
        return f"<Graph{name} n={self.n} m={self.edge_count()}>"


def _check_order(n: int, max_order: int) -> None:
    if n < 0:
        raise GraphError("order must be non-negative")
    if n > max_order:
        raise GraphError(f"order {n} exceeds the limit {max_order}")


def build_graph(n: int, edges: Iterable[tuple[int, int]], label: str | None = None,
                max_order: int = MAX_ORDER) -> Graph:
    _check_order(n, max_order)
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise GraphError(f"loop edge at {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj), label)


def empty_graph(n: int) -> Graph:
    return build_graph(n, (), label=f"empty({n})")


def complete_graph(n: int) -> Graph:
    return build_graph(n, combinations(range(n), 2), label=f"complete({n})")


def path_graph(n: int) -> Graph:
    return build_graph(n, ((i, i + 1) for i in range(n - 1)), label=f"path({n})")


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return build_graph(n, ((i, (i + 1) % n) for i in range(n)), label=f"cycle({n})")


def complete_multipartite(part_sizes: Sequence[int], max_order: int = MAX_ORDER) -> Graph:
    """Complete multipartite graph with parts laid out consecutively in list order.

    Sizes must be non-increasing, matching the canonical ``b_1 >= ... >= b_a``
    form used by the compression machinery.
    """
    sizes = list(part_sizes)
    if not sizes or any(s < 1 for s in sizes):
        raise GraphError("part sizes must be a nonempty list of positive integers")
    if any(a < b for a, b in zip(sizes, sizes[1:])):
        raise GraphError(f"part sizes must be non-increasing, got {sizes}")
    n = sum(sizes)
    _check_order(n, max_order)
    part_of = [i for i, s in enumerate(sizes) for _ in range(s)]
    edges = [(u, v) for u, v in combinations(range(n), 2) if part_of[u] != part_of[v]]
    label = "complete_multipartite(" + ",".join(map(str, sizes)) + ")"
    return build_graph(n, edges, label=label, max_order=max_order)


def disjoint_union(g: Graph, h: Graph, max_order: int = MAX_ORDER) -> Graph:
    n = g.n + h.n
    _check_order(n, max_order)
    adj = list(g.adj) + [row << g.n for row in h.adj]
    label = f"{g.label}+{h.label}" if g.label and h.label else None
    return Graph(n, tuple(adj), label)


def generalized_lex_product(g: Graph, assignment: Mapping[int, Graph] | Sequence[Graph],
                            max_order: int = MAX_ORDER) -> Graph:
    """Replace each vertex ``v`` of ``g`` by the graph ``assignment[v]``.

    Blocks are laid out in vertex order of ``g``; blocks of adjacent vertices are
    completely joined.
    """
    blocks = []
    for v in range(g.n):
        try:
            blocks.append(assignment[v])
        except (KeyError, IndexError):
            raise GraphError(f"vertex {v} has no replacement graph") from None
        if blocks[-1].n < 1:
            raise GraphError(f"replacement graph for vertex {v} is empty")
    offsets = [0]
    for b in blocks:
        offsets.append(offsets[-1] + b.n)
    n = offsets[-1]
    _check_order(n, max_order)
    block_mask = [((1 << b.n) - 1) << off for b, off in zip(blocks, offsets)]
    adj = []
    for v, b in enumerate(blocks):
        outside = 0
        for w in elements(g.adj[v]):
            outside |= block_mask[w]
        for row in b.adj:
            adj.append((row << offsets[v]) | outside)
    return Graph(n, tuple(adj))


def lex_product(g: Graph, h: Graph, max_order: int = MAX_ORDER) -> Graph:
    """G[H]; vertex ``(v, w)`` is numbered ``v * h.n + w``."""
    prod = generalized_lex_product(g, [h] * g.n, max_order=max_order)
    if g.label and h.label:
        prod = prod.relabel(f"{g.label}[{h.label}]")
    return prod


# Fixed numberings for the Platonic solids. Any numbering would do: every check
# made on them is isomorphism invariant.
_CUBE_EDGES = [(0, 1), (0, 3), (0, 4), (1, 2), (1, 7), (2, 3), (2, 6), (3, 5),
               (4, 5), (4, 7), (5, 6), (6, 7)]
_DODECAHEDRON_EDGES = [
    (0, 1), (0, 10), (0, 19), (1, 2), (1, 8), (2, 3), (2, 6), (3, 4), (3, 19), (4, 5),
    (4, 17), (5, 6), (5, 15), (6, 7), (7, 8), (7, 14), (8, 9), (9, 10), (9, 13),
    (10, 11), (11, 12), (11, 18), (12, 13), (12, 16), (13, 14), (14, 15), (15, 16),
    (16, 17), (17, 18), (18, 19)]
_ICOSAHEDRON_EDGES = [
    (0, 1), (0, 5), (0, 7), (0, 8), (0, 11), (1, 2), (1, 5), (1, 6), (1, 8), (2, 3),
    (2, 6), (2, 8), (2, 9), (3, 4), (3, 6), (3, 9), (3, 10), (4, 5), (4, 6), (4, 10),
    (4, 11), (5, 6), (5, 11), (7, 8), (7, 9), (7, 10), (7, 11), (8, 9), (9, 10),
    (10, 11)]
# Octahedron = K_{2,2,2}: opposite vertices are {0,1}, {2,3}, {4,5}.

# Graph F of the spiky example: 0..3 form a K_4 and vertex 4+i hangs off vertex i.
_SPIKY_F_EDGES = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4), (1, 5), (2, 6)]


def spiky_f() -> Graph:
    return build_graph(7, _SPIKY_F_EDGES, label="spiky_F")


def spiky_g(p: int, q: int) -> Graph:
    """F with v_1..v_3 blown up to K_p, v_4 to E_q, and v_5..v_7 left alone.

    Layout: three K_p blocks, then the E_q block, then the three pendant vertices.
    """
    if p < 1 or q < 1:
        raise GraphError("spiky_G needs p, q >= 1")
    k1 = complete_graph(1)
    blocks = [complete_graph(p)] * 3 + [empty_graph(q)] + [k1] * 3
    return generalized_lex_product(spiky_f(), blocks).relabel(f"spiky_G({p},{q})")


def nkt(n: int, t: int) -> Graph:
    """Disjoint union of n copies of K_t."""
    return lex_product(empty_graph(n), complete_graph(t)).relabel(f"nKt({n},{t})")


_NAMED = {
    "empty": (1, empty_graph),
    "complete": (1, complete_graph),
    "path": (1, path_graph),
    "cycle": (1, cycle_graph),
    "nKt": (2, nkt),
    "spiky_G": (2, spiky_g),
}

_SOLIDS = {
    "tetrahedron": lambda: complete_graph(4),
    "cube": lambda: build_graph(8, _CUBE_EDGES),
    "octahedron": lambda: complete_multipartite([2, 2, 2]),
    "dodecahedron": lambda: build_graph(20, _DODECAHEDRON_EDGES),
    "icosahedron": lambda: build_graph(12, _ICOSAHEDRON_EDGES),
    "spiky_F": spiky_f,
}

NAMES = sorted([*_NAMED, *_SOLIDS, "complete_multipartite"])


def named_graph(name: str, *params: int) -> Graph:
    if name in _SOLIDS:
        if params:
            raise GraphError(f"{name} takes no parameters")
        return _SOLIDS[name]().relabel(name)
    if name == "complete_multipartite":
        return complete_multipartite(params)
    if name not in _NAMED:
        raise GraphError(f"unknown graph name {name!r}; known: {', '.join(NAMES)}")
    arity, make = _NAMED[name]
    if len(params) != arity:
        raise GraphError(f"{name} takes {arity} parameter(s), got {len(params)}")
    if any(p < 0 for p in params):
        raise GraphError(f"{name} parameters must be non-negative")
    return make(*params)


_NAME_RE = re.compile(r"^\s*([A-Za-z_][A-Za-z0-9_]*)\s*(?:\(([^)]*)\))?\s*$")


def parse_named(text: str) -> Graph:
    """Parse identifiers such as ``icosahedron``, ``cycle(5)`` or ``spiky_G(3,4)``."""
    m = _NAME_RE.match(text)
    if not m:
        raise GraphError(f"cannot parse graph name {text!r}")
    name, args = m.group(1), m.group(2)
    params: list[int] = []
    if args and args.strip():
        try:
            params = [int(a) for a in args.split(",")]
        except ValueError:
            raise GraphError(f"non-integer parameter in {text!r}") from None
    return named_graph(name, *params)
