"""Embedding-dimension-3 numerical semigroups and per-element factorization data.

A numerical semigroup here is the set of nonnegative integer combinations of
three validated atoms n1 < n2 < n3.  This module provides membership, the
Frobenius number, the symmetry test, and complete factorization enumeration
together with the derived length and distance sets of single elements.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from math import gcd
from typing import Iterable, NamedTuple

from .errors import (
    ElementNotInSemigroup,
    GcdNotOne,
    NotMinimal,
    NotThreeAtoms,
)


class Factorization(NamedTuple):
    """One way of writing an element as a sum of atoms: z1*n1 + z2*n2 + z3*n3."""

    z1: int
    z2: int
    z3: int

    @property
    def length(self) -> int:
        return self.z1 + self.z2 + self.z3


class KernelVector(NamedTuple):
    """Integer vector orthogonal to the generator triple: v1*n1 + v2*n2 + v3*n3 = 0."""

    v1: int
    v2: int
    v3: int

    @property
    def length(self) -> int:
        return self.v1 + self.v2 + self.v3

    def positive_part(self) -> Factorization:
        return Factorization(max(self.v1, 0), max(self.v2, 0), max(self.v3, 0))

    def negative_part(self) -> Factorization:
        return Factorization(max(-self.v1, 0), max(-self.v2, 0), max(-self.v3, 0))


@dataclass(frozen=True)
class DeltaSet:
    """A sorted set of distances between consecutive factorization lengths."""

    values: tuple[int, ...]

    @classmethod
    def of(cls, values: Iterable[int]) -> "DeltaSet":
        vs = sorted(set(values))
        if vs and vs[0] <= 0:
            raise ValueError("distances must be positive")
        return cls(tuple(vs))

    def as_set(self) -> set[int]:
        return set(self.values)

    def __iter__(self):
        return iter(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __contains__(self, d: int) -> bool:
        return d in self.values

    def __bool__(self) -> bool:
        return bool(self.values)

    def min(self) -> int:
        return self.values[0]

    def max(self) -> int:
        return self.values[-1]


@dataclass(frozen=True)
class Generators:
    """Validated generator triple, stored sorted ascending.

    ``original`` keeps the order the user supplied, for reporting only.
    """

    n1: int
    n2: int
    n3: int
    original: tuple[int, int, int]

    @property
    def triple(self) -> tuple[int, int, int]:
        return (self.n1, self.n2, self.n3)

    def dot(self, z: tuple[int, int, int]) -> int:
        return z[0] * self.n1 + z[1] * self.n2 + z[2] * self.n3


def _in_two_generator_semigroup(x: int, p: int, q: int) -> bool:
    """Whether x = a*p + b*q has a solution with a, b >= 0."""
    if x < 0:
        return False
    d = gcd(p, q)
    if x % d:
        return False
    x, p, q = x // d, p // d, q // d
    if q == 1:
        return True
    # minimal a >= 0 with a*p == x (mod q); representable iff a*p <= x
    a = (x * pow(p, -1, q)) % q
    return a * p <= x


def validate_generators(raw: Iterable[int]) -> Generators:
    """Check a triple and return canonical ``Generators``.

    Raises ``NotThreeAtoms`` (wrong arity, non-positive, or duplicate values),
    ``GcdNotOne``, or ``NotMinimal`` (a generator representable by the other
    two, so the embedding dimension is below three).
    """
    try:
        vals = tuple(operator.index(v) for v in raw)
    except TypeError as exc:
        raise NotThreeAtoms(f"generators must be integers: {exc}") from None
    if len(vals) != 3:
        raise NotThreeAtoms(f"expected three generators, got {len(vals)}")
    for v in vals:
        if v <= 0:
            raise NotThreeAtoms(f"generators must be positive integers, got {v!r}")
    if len(set(vals)) != 3:
        raise NotThreeAtoms(f"generators must be distinct, got {vals}")
    n1, n2, n3 = sorted(vals)
    if gcd(gcd(n1, n2), n3) != 1:
        raise GcdNotOne(f"gcd{(n1, n2, n3)} = {gcd(gcd(n1, n2), n3)} != 1")
    for x, p, q in ((n3, n1, n2), (n2, n1, n3), (n1, n2, n3)):
        if _in_two_generator_semigroup(x, p, q):
            raise NotMinimal(f"{x} lies in the semigroup generated by {p} and {q}")
    return Generators(n1, n2, n3, vals)


# Lazily built per-triple membership tables.  Writes are idempotent (the
# table for a triple is a pure function of it), so concurrent builders can
# only ever store identical values.
_MEMBERSHIP: dict[Generators, tuple[bytes, int]] = {}


def _membership_table(S: Generators) -> tuple[bytes, int]:
    """Membership flags for 0..F(S)+n1 and the Frobenius number.

    The scan stops after n1 consecutive members, at which point every larger
    integer is a member.
    """
    cached = _MEMBERSHIP.get(S)
    if cached is not None:
        return cached
    n1, n2, n3 = S.triple
    flags = bytearray([1])
    run = 1
    s = 0
    while run < n1:
        s += 1
        member = (
            (s >= n1 and flags[s - n1])
            or (s >= n2 and flags[s - n2])
            or (s >= n3 and flags[s - n3])
        )
        flags.append(1 if member else 0)
        run = run + 1 if member else 0
    result = (bytes(flags), s - n1)
    _MEMBERSHIP[S] = result
    return result


def contains(S: Generators, s: int) -> bool:
    """Whether s has at least one factorization over the atoms of S."""
    if s < 0:
        return False
    if s == 0:
        return True
    cached = _MEMBERSHIP.get(S)
    if cached is not None:
        flags, frob = cached
        return s > frob or bool(flags[s])
    n1, n2, n3 = S.triple
    for z3 in range(s // n3 + 1):
        if _in_two_generator_semigroup(s - z3 * n3, n1, n2):
            return True
    return False


def frobenius_number(S: Generators) -> int:
    """Largest integer with no factorization."""
    return _membership_table(S)[1]


def gaps(S: Generators) -> list[int]:
    """All positive integers outside the semigroup, ascending."""
    flags, frob = _membership_table(S)
    return [x for x in range(1, frob + 1) if not flags[x]]


def is_symmetric(S: Generators) -> bool:
    """Defining condition of symmetry, checked over every gap.

    x outside S must imply F(S) - x inside S.
    """
    flags, frob = _membership_table(S)
    for x in range(1, frob + 1):
        if not flags[x] and not flags[frob - x]:
            return False
    return True


def factorizations(S: Generators, s: int) -> list[Factorization]:
    """Complete factorization list of s, in descending lexicographic order.

    Empty exactly when s is not in the semigroup.
    """
    if s < 0:
        return []
    n1, n2, n3 = S.triple
    out: list[Factorization] = []
    d = gcd(n1, n2)
    step = n1 // d
    inv = pow(n2 // d, -1, step) if step > 1 else 0
    for z3 in range(s // n3, -1, -1):
        r = s - z3 * n3
        if r % d:
            continue
        # z2 must satisfy z2*n2 == r (mod n1); walk that residue class only
        z2_first = ((r // d) * inv) % step if step > 1 else 0
        for z2 in range(z2_first, r // n2 + 1, step):
            out.append(Factorization((r - z2 * n2) // n1, z2, z3))
    out.sort(reverse=True)
    return out


def length_set(S: Generators, s: int) -> list[int]:
    """Sorted distinct factorization lengths of s."""
    zs = factorizations(S, s)
    if not zs:
        raise ElementNotInSemigroup(f"{s} is not in <{S.n1},{S.n2},{S.n3}>")
    return sorted({z.length for z in zs})


def delta_of_element(S: Generators, s: int) -> DeltaSet:
    """Distances between consecutive lengths of s."""
    ls = length_set(S, s)
    return DeltaSet.of(b - a for a, b in zip(ls, ls[1:]))
