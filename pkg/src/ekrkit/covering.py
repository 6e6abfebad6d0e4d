"""Coverings of set families by subfamilies, and the shift-class covering of the
independent r-sets of G[K_m].

A collection of subfamilies is a q-covering of a family when every member lies in
exactly q of them. If a vertex is an r-centre of every block of a q-covering,
double counting shows it is an r-centre of the whole family.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from itertools import chain, combinations, product
from typing import Sequence

from .engine import FamilySearch, anomalous_search, common_intersection, ekr_status, is_intersecting
from .graphs import Graph, complete_graph, elements, lex_product, nkt
from .independent import SetFamily, independent_r_sets, star_sizes

KATONA_BUDGET = 10 ** 6


@dataclass
class Covering:
    ground: tuple[int, ...]
    blocks: list[tuple[int, ...]]
    q: int | None = None


@dataclass
class CoveringCheck:
    q: int | None
    deviant: int | None = None        # a ground member with the wrong multiplicity
    multiplicity: int | None = None
    stray: int | None = None          # a block member outside the ground family
    double_count_ok: bool = True

    @property
    def ok(self) -> bool:
        return self.q is not None


def _sample_subfamilies(ground: Sequence[int], rng: random.Random, samples: int):
    if len(ground) <= 12:
        return chain.from_iterable(combinations(ground, k) for k in range(len(ground) + 1))
    return (rng.sample(list(ground), rng.randint(1, len(ground))) for _ in range(samples))


def verify_q_covering(C: Covering, seed: int = 0, samples: int = 200) -> CoveringCheck:
    """Constant multiplicity of every ground member across the blocks.

    Also checks ``q |A| = sum over blocks of |A & block|`` on subfamilies ``A``
    (all of them for ground families of at most 12 members, a seeded sample otherwise).
    """
    ground = set(C.ground)
    counts: Counter[int] = Counter()
    for block in C.blocks:
        for m in set(block):
            if m not in ground:
                return CoveringCheck(None, stray=m)
            counts[m] += 1
    mults = {counts[m] for m in C.ground}
    if len(mults) != 1:
        common = Counter(counts[m] for m in C.ground).most_common(1)[0][0]
        bad = next(m for m in C.ground if counts[m] != common)
        return CoveringCheck(None, deviant=bad, multiplicity=counts[bad])
    q = mults.pop() if C.ground else 0
    block_sets = [set(b) for b in C.blocks]
    rng = random.Random(seed)
    ok = all(q * len(A) == sum(len(set(A) & b) for b in block_sets)
             for A in _sample_subfamilies(C.ground, rng, samples))
    if not ok:
        return CoveringCheck(None, double_count_ok=False)
    C.q = q
    return CoveringCheck(q)


@dataclass(frozen=True)
class ShiftClass:
    """Functions ``[n] -> Z_m`` equal up to adding a constant; stored by the
    representative with value 0 at vertex 0."""

    n: int
    m: int
    representative: tuple[int, ...]

    def __post_init__(self):
        if len(self.representative) != self.n or (self.n and self.representative[0] != 0):
            raise ValueError("representative must have n digits with the first equal to 0")

    @property
    def digits(self) -> str:
        return "".join(map(str, self.representative))

    def functions(self) -> list[tuple[int, ...]]:
        return [tuple((f + z) % self.m for f in self.representative) for z in range(self.m)]

    @staticmethod
    def of(f: Sequence[int], m: int) -> ShiftClass:
        z = f[0] if f else 0
        return ShiftClass(len(f), m, tuple((x - z) % m for x in f))


def shift_classes(n: int, m: int) -> list[ShiftClass]:
    if m < 1:
        raise ValueError("modulus must be at least 1")
    if n == 0:
        return [ShiftClass(0, m, ())]
    return [ShiftClass(n, m, (0, *rest)) for rest in product(range(m), repeat=n - 1)]


def compose(X: int, f: Sequence[int], m: int) -> int:
    """``X o f`` as a vertex set of G[K_m]: vertex ``v`` goes to ``(v, f(v))``."""
    out = 0
    for v in elements(X):
        out |= 1 << (v * m + f[v])
    return out


@dataclass
class KatonaCovering:
    base: Graph
    m: int
    r: int
    product: Graph
    covering: Covering
    classes: list[ShiftClass] = field(repr=False)

    @property
    def expected_q(self) -> int:
        return self.m ** (self.base.n - self.r)


def katona_covering(g: Graph, m: int, r: int, budget: int = KATONA_BUDGET) -> KatonaCovering:
    """One block per shift class: all ``X o f`` with ``X`` an independent r-set of
    ``g`` and ``f`` in the class. Vertex numbering matches :func:`lex_product`."""
    if m < 1:
        raise ValueError("modulus must be at least 1")
    if m ** g.n > budget:
        raise ValueError(f"{m}^{g.n} functions exceed the enumeration budget {budget}")
    prod = lex_product(g, complete_graph(m))
    base_sets = independent_r_sets(g, r).members
    ground = independent_r_sets(prod, r).members
    classes = shift_classes(g.n, m)
    blocks = []
    for cls in classes:
        block = sorted({compose(X, f, m) for X in base_sets for f in cls.functions()})
        blocks.append(tuple(block))
    cov = Covering(tuple(ground), blocks)
    check = verify_q_covering(cov)
    if check.q != m ** (g.n - r):
        raise AssertionError(f"shift-class covering has multiplicity {check.q}, expected {m ** (g.n - r)}")
    return KatonaCovering(g, m, r, prod, cov, classes)


def block_star_sizes(kc: KatonaCovering) -> list[list[int]]:
    """``out[k][y]`` = members of block ``k`` containing product vertex ``y``."""
    out = []
    for block in kc.covering.blocks:
        counts = [0] * kc.product.n
        for mem in block:
            for y in elements(mem):
                counts[y] += 1
        out.append(counts)
    return out


def block_star_equality(kc: KatonaCovering) -> bool:
    """Each block's star at ``(v, x)`` has the size of the base star at ``v``."""
    base = star_sizes(kc.base, kc.r)
    return all(row[y] == base[y // kc.m] for row in block_star_sizes(kc) for y in range(kc.product.n))


def double_count_at_vertices(kc: KatonaCovering) -> bool:
    """``q |F_y| = sum over blocks of |block_y|`` at every product vertex ``y``."""
    q = kc.expected_q
    whole = star_sizes(kc.product, kc.r)
    rows = block_star_sizes(kc)
    return all(q * whole[y] == sum(row[y] for row in rows) for y in range(kc.product.n))


def centre_transfer_check(g: Graph, v: int, m: int, r: int) -> bool:
    """Every ``(v, x)`` is an r-centre of G[K_m], given that ``v`` is one of G."""
    base = ekr_status(g, r, exact_anomalous=False)
    if base.star_sizes[v] < base.max_intersecting_size:
        raise ValueError(f"vertex {v} is not an {r}-centre of the base graph")
    prod = lex_product(g, complete_graph(m))
    rep = ekr_status(prod, r, exact_anomalous=False)
    return all(rep.star_sizes[v * m + x] >= rep.max_intersecting_size for x in range(m))


# -- the octahedron faces -----------------------------------------------------------

@dataclass
class OctahedronCase:
    faces: tuple[int, ...]
    blocks: list[tuple[int, ...]]
    q: int | None
    face_star_sizes: list[int]
    max_intersecting: int
    max_anomalous: int | None
    anomalous_witness: list[int]
    strict_centre_of_blocks: bool
    centre_of_faces: bool
    strict_centre_of_faces: bool
    two_vertex_families_ok: bool


def _family_centres(members: Sequence[int], n: int) -> tuple[int, int | None, list[int]]:
    fs = FamilySearch(list(members))
    top = len(fs.max_intersecting())
    anom = anomalous_search(fs, top, exact=True)
    witness = sorted(members[i] for i in anom.witness) if anom.witness else []
    return top, anom.size, witness


def octahedron_remark_case() -> OctahedronCase:
    """The 8 faces of the octahedron as 3-sets of its 6 vertices, split into 4
    pairs of opposite faces.

    A face takes one vertex from each opposite pair ``{0,1}, {2,3}, {4,5}``, so the
    faces are the independent 3-sets of three disjoint edges on those pairs.
    """
    n = 6
    faces = independent_r_sets(nkt(3, 2), 3).members
    full = (1 << n) - 1
    blocks = sorted({tuple(sorted((f, full & ~f))) for f in faces})
    cov = Covering(tuple(faces), [tuple(b) for b in blocks])
    q = verify_q_covering(cov).q
    fx = [sum(1 for f in faces if f >> x & 1) for x in range(n)]
    top, anom, witness = _family_centres(faces, n)

    strict_blocks = True
    for block in blocks:
        b_top, b_anom, _ = _family_centres(block, n)
        for x in range(n):
            bx = sum(1 for f in block if f >> x & 1)
            if not (bx >= b_top and (b_anom is None or bx > b_anom)):
                strict_blocks = False

    # for each face, the faces sharing at least two of its vertices
    two_ok = True
    for f in faces:
        fam = [g for g in faces if (f & g).bit_count() >= 2]
        if not (len(fam) == 4 and is_intersecting(fam) and common_intersection(fam) == 0):
            two_ok = False
    return OctahedronCase(
        faces=tuple(faces), blocks=[tuple(b) for b in blocks], q=q, face_star_sizes=fx,
        max_intersecting=top, max_anomalous=anom, anomalous_witness=witness,
        strict_centre_of_blocks=strict_blocks,
        centre_of_faces=all(s >= top for s in fx),
        strict_centre_of_faces=all(anom is None or s > anom for s in fx),
        two_vertex_families_ok=two_ok,
    )
