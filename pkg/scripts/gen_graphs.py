"""Regenerate the bundled stream of all graphs up to a given order, one per
isomorphism class, in canonical graph6 form sorted by order then string.

Usage: python scripts/gen_graphs.py --max-n 8 --out src/ekrkit/data/graphs_upto8.g6
"""

from __future__ import annotations

import argparse
import sys

import pynauty

from ekrkit.graph6 import to_graph6
from ekrkit.graphs import Graph, elements


def _nauty(g: Graph) -> pynauty.Graph:
    return pynauty.Graph(g.n, adjacency_dict={u: elements(g.adj[u]) for u in range(g.n)})


def canonical(g: Graph) -> Graph:
    lab = pynauty.canon_label(_nauty(g))   # lab[i] = old vertex placed at position i
    pos = {old: new for new, old in enumerate(lab)}
    adj = [0] * g.n
    for u in range(g.n):
        for w in elements(g.adj[u]):
            adj[pos[u]] |= 1 << pos[w]
    return Graph(g.n, tuple(adj))


def extend(graphs: list[Graph]) -> list[Graph]:
    """Every graph on n+1 vertices arises from one on n by adding a vertex."""
    seen: dict[str, Graph] = {}
    for g in graphs:
        n = g.n
        for nb in range(1 << n):
            adj = [row | ((nb >> u & 1) << n) for u, row in enumerate(g.adj)] + [nb]
            h = canonical(Graph(n + 1, tuple(adj)))
            seen.setdefault(to_graph6(h), h)
    return [seen[k] for k in sorted(seen)]


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=8)
    ap.add_argument("--out", default="-")
    args = ap.parse_args(argv)
    level = [Graph(1, (0,))]
    lines = [to_graph6(level[0])]
    for n in range(2, args.max_n + 1):
        level = extend(level)
        lines += [to_graph6(g) for g in level]
        print(f"n={n}: {len(level)} graphs", file=sys.stderr)
    out = sys.stdout if args.out == "-" else open(args.out, "w")
    with out:
        out.write("\n".join(lines) + "\n")


if __name__ == "__main__":
    main()
