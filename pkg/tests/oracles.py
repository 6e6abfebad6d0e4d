"""Brute-force reference implementations, deliberately independent of ekrkit's
search code: everything here enumerates subsets of vertices or of families."""

from __future__ import annotations

from itertools import combinations


def edges_of(n, adj):
    return {(u, v) for u in range(n) for v in range(u + 1, n) if adj[u] >> v & 1}


def independent(mask, adj):
    verts = [v for v in range(len(adj)) if mask >> v & 1]
    return all(not adj[u] >> v & 1 for u, v in combinations(verts, 2))


def independent_sets(n, adj, r):
    return sorted(sum(1 << v for v in c) for c in combinations(range(n), r)
                  if independent(sum(1 << v for v in c), adj))


def alpha(n, adj):
    return max(r for r in range(n + 1) if independent_sets(n, adj, r))


def mu(n, adj):
    """Smallest independent set that cannot be extended."""
    full = (1 << n) - 1
    best = n
    for mask in range(1 << n):
        if not independent(mask, adj):
            continue
        if all(not independent(mask | (1 << v), adj) for v in range(n) if not mask >> v & 1):
            best = min(best, bin(mask).count("1"))
    return best


def lex_product_edges(gn, gadj, hn, hadj):
    """Edge set of G[H] straight from the adjacency rule, vertex (v, w) -> v*hn + w."""
    out = set()
    for v, w in ((v, w) for v in range(gn) for w in range(hn)):
        for x, y in ((x, y) for x in range(gn) for y in range(hn)):
            a, b = v * hn + w, x * hn + y
            if a < b and (gadj[v] >> x & 1 or (v == x and hadj[w] >> y & 1)):
                out.add((a, b))
    return out


def family_extremes(members):
    """(max intersecting, max anomalous or None) over all 2^N subfamilies."""
    n = len(members)
    top = anom = 0
    for sub in range(1, 1 << n):
        fam = [members[i] for i in range(n) if sub >> i & 1]
        if all(a & b for a, b in combinations(fam, 2)):
            top = max(top, len(fam))
            common = fam[0]
            for x in fam[1:]:
                common &= x
            if not common:
                anom = max(anom, len(fam))
    return top, (anom or None)
