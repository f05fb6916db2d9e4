"""Betti elements, the shared-support factorization graph, and the
structural classification of symmetric embedding-dimension-3 semigroups.

An element is a Betti element when its factorization graph (vertices the
factorizations, edges between factorizations sharing a nonzero coordinate)
is disconnected.  There are at most three; the count determines the
structural form:

* one Betti element:   (n1, n2, n3) = (s2*s3, s1*s3, s1*s2) for pairwise
  coprime s1 > s2 > s3,
* two Betti elements:  (n1, n2, n3) ~ (a*m1, a*m2, b*m1 + c*m2) up to order,
* three Betti elements: the semigroup is not symmetric.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Union

from .errors import ElementNotInSemigroup, StructureMismatch
from .semigroup import Generators, factorizations


@dataclass(frozen=True)
class BettiData:
    """The minimal multipliers c_i (least c with c*n_i representable by the
    other two atoms) and the deduplicated set {c1*n1, c2*n2, c3*n3}."""

    c1: int
    c2: int
    c3: int
    elements: tuple[int, ...]


@dataclass(frozen=True)
class OneBettiForm:
    s1: int
    s2: int
    s3: int


@dataclass(frozen=True)
class TwoBettiForm:
    a: int
    m1: int
    m2: int
    b: int
    c: int
    #: position of each structural generator (a*m1, a*m2, b*m1+c*m2) in the
    #: sorted triple, i.e. sorted[order[k]] == structural[k]
    order: tuple[int, int, int]


@dataclass(frozen=True)
class ThreeBettiForm:
    pass


StructuralForm = Union[OneBettiForm, TwoBettiForm, ThreeBettiForm]


def nabla_graph_connected(S: Generators, s: int) -> bool:
    """Connectivity of the factorization graph of s (union-find)."""
    zs = factorizations(S, s)
    if not zs:
        raise ElementNotInSemigroup(f"{s} is not in <{S.n1},{S.n2},{S.n3}>")
    parent = list(range(len(zs)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(len(zs)):
        for j in range(i + 1, len(zs)):
            zi, zj = zs[i], zs[j]
            if zi.z1 * zj.z1 or zi.z2 * zj.z2 or zi.z3 * zj.z3:
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[rj] = ri
    root = find(0)
    return all(find(i) == root for i in range(len(zs)))


def _least_multiplier(n: int, p: int, q: int) -> int:
    """Least c >= 1 with c*n representable as a*p + b*q, a, b >= 0."""
    d = gcd(p, q)
    c = 1
    while True:
        x = c * n
        if x % d == 0:
            xd, pd, qd = x // d, p // d, q // d
            a = 0 if qd == 1 else (xd * pow(pd, -1, qd)) % qd
            if a * pd <= xd:
                return c
        c += 1


def betti_elements(S: Generators) -> BettiData:
    """The Betti elements of S via the minimal multipliers c_i."""
    n1, n2, n3 = S.triple
    c1 = _least_multiplier(n1, n2, n3)
    c2 = _least_multiplier(n2, n1, n3)
    c3 = _least_multiplier(n3, n1, n2)
    elements = tuple(sorted({c1 * n1, c2 * n2, c3 * n3}))
    for b in elements:
        if nabla_graph_connected(S, b):
            raise StructureMismatch(
                f"claimed Betti element {b} has a connected factorization graph"
            )
    return BettiData(c1, c2, c3, elements)


def _two_betti_candidate(
    S: Generators, i: int, j: int, k: int
) -> TwoBettiForm | None:
    """Try to express the sorted triple with atoms i, j as (a*m1, a*m2)."""
    gens = S.triple
    a = gcd(gens[i], gens[j])
    if a < 2:
        return None
    m1, m2 = gens[i] // a, gens[j] // a
    nk = gens[k]
    # canonical representative: least b >= 0 with b*m1 == nk (mod m2)
    b = (nk * pow(m1, -1, m2)) % m2 if m2 > 1 else 0
    c, rem = divmod(nk - b * m1, m2)
    if rem or c < 0 or b + c < 2:
        return None
    return TwoBettiForm(a, m1, m2, b, c, (i, j, k))


def classify(S: Generators, B: BettiData) -> StructuralForm:
    """Recover the structural parameters from the Betti count.

    The recovered parameters are verified against the generator triple and
    against the independently computed Betti set; any inconsistency raises
    ``StructureMismatch``.
    """
    n1, n2, n3 = S.triple
    count = len(B.elements)
    if count == 3:
        return ThreeBettiForm()
    if count == 1:
        s1, s2, s3 = gcd(n2, n3), gcd(n1, n3), gcd(n1, n2)
        if (
            (s2 * s3, s1 * s3, s1 * s2) != (n1, n2, n3)
            or not (s1 > s2 > s3 >= 1)
            or gcd(s1, s2) != 1
            or gcd(s1, s3) != 1
            or gcd(s2, s3) != 1
            or B.elements != (s1 * s2 * s3,)
        ):
            raise StructureMismatch(
                f"single Betti element but no product form for {S.triple}"
            )
        return OneBettiForm(s1, s2, s3)
    candidates = []
    for i, j, k in ((0, 1, 2), (0, 2, 1), (1, 2, 0)):
        form = _two_betti_candidate(S, i, j, k)
        if form is None:
            continue
        induced = tuple(
            sorted({form.a * (form.b * form.m1 + form.c * form.m2),
                    form.a * form.m1 * form.m2})
        )
        if induced == B.elements:
            candidates.append(form)
    if not candidates:
        raise StructureMismatch(
            f"two Betti elements but no (a*m1, a*m2, b*m1+c*m2) form for {S.triple}"
        )
    return min(candidates, key=lambda f: (f.a, f.m1))
