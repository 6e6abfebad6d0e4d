"""Exact maximum-clique search over bitset compatibility graphs.

Candidates are ``int`` bitsets over item indices ``0..N-1``; ``adj[i]`` is the set of
items compatible with item ``i``. Two upper bounds prune the search:

* greedy sequential colouring of the candidate set (bit-parallel, input order);
* a spectral bound on the complementary "conflict" graph restricted to the
  candidates: an independent set of a graph with ``k`` vertices, minimum degree
  ``delta`` and largest Laplacian eigenvalue ``lam`` has at most
  ``k * (1 - delta / lam)`` vertices. It is exact on Kneser-type conflict graphs,
  where colouring is far from tight.

Item order is the only source of tie-breaking, so results are deterministic.
"""

from __future__ import annotations

from itertools import product
from typing import Sequence

import numpy as np
import scipy.linalg

SPECTRAL_MIN = 16        # smallest candidate set worth an eigenvalue computation
SPECTRAL_MAX_ITEMS = 3000  # above this no dense conflict matrix is built
_EPS = 1e-7


class SearchLimitExceeded(RuntimeError):
    """The family is larger than the configured search cap."""


def bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def colour_order(P: int, adj: Sequence[int]) -> tuple[list[int], list[int]]:
    """Greedy colouring of ``P`` into classes of pairwise incompatible items.

    Returns items in colour order with the running colour count, so that
    ``colours[i]`` bounds the clique size among ``order[:i+1]``.
    """
    order: list[int] = []
    colours: list[int] = []
    k = 0
    Q = P
    while Q:
        k += 1
        R = Q
        while R:
            low = R & -R
            v = low.bit_length() - 1
            R &= ~adj[v]
            R ^= low
            Q ^= low
            order.append(v)
            colours.append(k)
    return order, colours


class CliqueSearch:
    """Branch-and-bound engine shared by the plain and anomalous searches."""

    def __init__(self, adj: Sequence[int], spectral: bool = True):
        self.adj = list(adj)
        self.N = len(self.adj)
        self.nodes = 0
        self._conflict = None
        if spectral and SPECTRAL_MIN <= self.N <= SPECTRAL_MAX_ITEMS:
            full = (1 << self.N) - 1
            conf = np.zeros((self.N, self.N), dtype=np.float64)
            for i, row in enumerate(self.adj):
                for j in bits(full & ~row & ~(1 << i)):
                    conf[i, j] = 1.0
            self._conflict = conf

    # -- bounds ---------------------------------------------------------------

    def spectral_bound(self, P: int) -> int | None:
        if self._conflict is None:
            return None
        idx = bits(P)
        k = len(idx)
        if k < SPECTRAL_MIN:
            return None
        A = self._conflict[np.ix_(idx, idx)]
        deg = A.sum(axis=1)
        delta = deg.min()
        if delta == 0:
            return None
        lam = np.linalg.eigvalsh(np.diag(deg) - A)[-1]
        return int(np.floor(k * (1.0 - delta / lam) + _EPS))

    def _bound(self, C_len: int, P: int, best: int) -> tuple[list[int], list[int], bool]:
        """Colour ``P``; report whether the node can still beat ``best``."""
        order, colours = colour_order(P, self.adj)
        top = colours[-1] if colours else 0
        if C_len + top <= best:
            return order, colours, False
        if len(order) >= SPECTRAL_MIN:
            sb = self.spectral_bound(P)
            if sb is not None and C_len + sb <= best:
                return order, colours, False
        return order, colours, True

    # -- plain maximum clique ---------------------------------------------------

    def max_clique(self, P: int | None = None, lower: Sequence[int] = ()) -> list[int]:
        """A maximum clique inside ``P``; ``lower`` seeds the incumbent.

        The seed is returned unchanged unless a strictly larger clique exists.
        """
        if P is None:
            P = (1 << self.N) - 1
        self._best = list(lower)
        self._expand([], P)
        return self._best

    def _reduce(self, C: list[int], P: int) -> int:
        """Move forced items from ``P`` into ``C``.

        An item in conflict with at most one other candidate lies in some maximum
        clique of ``P`` (swap it for its one conflict), so it is taken outright.
        """
        adj = self.adj
        changed = True
        while changed and P:
            changed = False
            R = P
            while R:
                low = R & -R
                R ^= low
                if not P & low:
                    continue
                v = low.bit_length() - 1
                conf = P & ~adj[v] & ~low
                if conf & (conf - 1) == 0:
                    C.append(v)
                    P &= adj[v]
                    R &= P
                    changed = True
        return P

    def _expand(self, C: list[int], P: int) -> None:
        self.nodes += 1
        depth = len(C)
        P = self._reduce(C, P)
        if not P:
            if len(C) > len(self._best):
                self._best = list(C)
            del C[depth:]
            return
        order, colours, alive = self._bound(len(C), P, len(self._best))
        adj = self.adj
        if alive:
            for idx in range(len(order) - 1, -1, -1):
                if len(C) + colours[idx] <= len(self._best):
                    break
                v = order[idx]
                C.append(v)
                NP = P & adj[v]
                if NP:
                    self._expand(C, NP)
                elif len(C) > len(self._best):
                    self._best = list(C)
                C.pop()
                P &= ~(1 << v)
        del C[depth:]

    # -- cliques with empty common intersection ---------------------------------

    def max_anomalous(self, members: Sequence[int], ground: int, at_least: int = 1) -> list[int] | None:
        """Largest clique whose items (vertex-set bitmasks) share no common vertex.

        The running common intersection ``I`` is threaded through the search. While
        ``I`` is nonempty, a completion must contain an item avoiding the lowest
        vertex ``v`` of ``I``; the node branches over those items only, each child
        excluding the ones tried before it. Nodes where some vertex of ``I`` is
        contained in every remaining candidate are cut.

        Returns ``None`` when no such clique has at least ``at_least`` items.
        """
        self.members = list(members)
        self._avoid_of = {}
        for x in bits(ground):
            row = 0
            for i, m in enumerate(self.members):
                if not m >> x & 1:
                    row |= 1 << i
            self._avoid_of[x] = row
        self._floor = max(at_least, 1) - 1
        self._best = []
        P = (1 << self.N) - 1
        C: list[int] = []
        for u in range(self.N):
            _, _, alive = self._bound(0, P, self._score())
            if not alive:
                break
            C.append(u)
            self._expand_anom(C, self.members[u], P & self.adj[u])
            C.pop()
            P &= ~(1 << u)
        return self._best or None

    def _score(self) -> int:
        return max(len(self._best), self._floor)

    def _record(self, C: list[int]) -> None:
        if len(C) > self._score():
            self._best = list(C)

    def _expand_anom(self, C: list[int], I: int, P: int) -> None:
        self.nodes += 1
        if not I:
            self._record(C)
        if not P:
            return
        adj = self.adj
        if I:
            for x in bits(I):
                if not P & self._avoid_of[x]:
                    return
            _, _, alive = self._bound(len(C), P, self._score())
            if not alive:
                return
            low = I & -I
            S = P & self._avoid_of[low.bit_length() - 1]
            for u in bits(S):
                C.append(u)
                self._expand_anom(C, I & self.members[u], P & adj[u])
                C.pop()
                P &= ~(1 << u)
            return
        order, colours, alive = self._bound(len(C), P, self._score())
        if not alive:
            return
        for idx in range(len(order) - 1, -1, -1):
            if len(C) + colours[idx] <= self._score():
                return
            v = order[idx]
            C.append(v)
            self._expand_anom(C, 0, P & adj[v])
            C.pop()
            P &= ~(1 << v)

    # -- equality case of the spectral bound ------------------------------------

    def extremal_cliques(self, size: int, max_dim: int = 16) -> list[list[int]] | None:
        """All cliques of ``size`` items when the spectral bound on the whole item set
        equals ``size`` exactly; ``None`` when that route does not apply.

        At equality, ``x = 1_S - (size/N) 1`` for any such clique ``S`` is a top
        Laplacian eigenvector of the conflict graph, so ``1_S`` lies in the span of
        the all-ones vector and that eigenspace. Fixing ``1_S`` on a set of pivot
        coordinates determines it, so every 0/1 assignment of the pivots is tried and
        each candidate is verified exactly.
        """
        if self._conflict is None:
            return None
        A = self._conflict
        N = self.N
        deg = A.sum(axis=1)
        delta = deg.min()
        if delta == 0:
            return None
        evals, evecs = np.linalg.eigh(np.diag(deg) - A)
        lam = evals[-1]
        if abs(N * (1.0 - delta / lam) - size) > 1e-6:
            return None
        top = evals > lam - 1e-6
        near = (evals > lam - 1e-3) & ~top
        if near.any():
            return None
        basis = np.column_stack([np.full(N, 1.0 / np.sqrt(N)), evecs[:, top]])
        k = basis.shape[1]
        if k > max_dim:
            return None
        _, _, piv = scipy.linalg.qr(basis.T, pivoting=True)
        pivots = piv[:k]
        coeffs = np.linalg.solve(basis[pivots], np.array(list(product((0.0, 1.0), repeat=k))).T)
        X = basis @ coeffs
        R = np.rint(X)
        ok = (np.abs(X - R) < 1e-6).all(axis=0) & ((R == 0) | (R == 1)).all(axis=0)
        ok &= R.sum(axis=0) == size
        found = []
        for col in np.flatnonzero(ok):
            S = [int(i) for i in np.flatnonzero(R[:, col])]
            if self.is_clique(S):
                found.append(S)
        found.sort()
        return found

    def is_clique(self, items: Sequence[int]) -> bool:
        mask = 0
        for i in items:
            mask |= 1 << i
        return all((self.adj[i] | (1 << i)) & mask == mask for i in items)
