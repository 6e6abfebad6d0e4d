"""Slow reference answers by exhaustive enumeration, for cross-checking the search."""

from __future__ import annotations

from typing import Sequence


def naive_extremes(members: Sequence[int]) -> tuple[int, int | None]:
    """(largest intersecting subfamily, largest anomalous one or ``None``).

    Walks every intersecting subfamily, adding members in index order, and keeps
    the running common intersection of each.
    """
    ms = list(members)
    best = [0, 0]

    def walk(start: int, chosen: list[int], common: int) -> None:
        k = len(chosen)
        if k > best[0]:
            best[0] = k
        if k and common == 0 and k > best[1]:
            best[1] = k
        for i in range(start, len(ms)):
            A = ms[i]
            if all(A & B for B in chosen):
                chosen.append(A)
                walk(i + 1, chosen, common & A if chosen[:-1] else A)
                chosen.pop()

    walk(0, [], 0)
    return best[0], (best[1] or None)


def naive_extremes_bruteforce(members: Sequence[int]) -> tuple[int, int | None]:
    """Same answer from all 2^N subfamilies; only usable for small N."""
    ms = list(members)
    n = len(ms)
    top = 0
    anom = 0
    for sub in range(1, 1 << n):
        fam = [ms[i] for i in range(n) if sub >> i & 1]
        if all(a & b for i, a in enumerate(fam) for b in fam[i + 1:]):
            top = max(top, len(fam))
            common = fam[0]
            for A in fam[1:]:
                common &= A
            if not common:
                anom = max(anom, len(fam))
    return top, (anom or None)
