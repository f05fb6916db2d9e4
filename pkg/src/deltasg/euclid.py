"""Fast Delta-set computation for symmetric embedding-dimension-3 semigroups.

The kernel lattice of the generator triple has a basis (v1, v2) read off the
structural form, with lengths delta1 = len(v1) and delta2 = |len(v2)|.  The
Delta set of the semigroup is then exactly the set of values visited by the
subtraction-based gcd computation on (delta1, delta2), organized in levels
D(eta_j, eta_{j+1}) along the remainder chain eta_1 > eta_2 > ... > 0.

This module builds that set, the canonical two-coefficient decompositions of
values against (delta1, delta2), basements (set members whose coefficients
are strictly closer to zero than a given outside value's), constructive
witnesses realizing every distance, and intermediate factorizations showing
that no other gap occurs.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from math import gcd
from typing import Literal

from .betti import (
    BettiData,
    OneBettiForm,
    StructuralForm,
    ThreeBettiForm,
    TwoBettiForm,
    betti_elements,
    classify,
)
from .errors import (
    GapInEuclid,
    InEuclidSet,
    InternalInvariantError,
    MoreThanTwoDistinctValues,
    NonSymmetric,
    NotMultipleOfGcd,
    NotNonSymmetric,
    OutOfRange,
    PreconditionViolated,
    ZeroLength,
)
from .semigroup import DeltaSet, Factorization, Generators, KernelVector, delta_of_element


# ---------------------------------------------------------------------------
# canonical decompositions


@dataclass(frozen=True)
class Decomposition:
    """The two canonical ways of writing x = a*delta1 + b*delta2.

    ``pos`` has 0 < a <= delta2/g and -delta1/g < b <= 0;
    ``neg`` has -delta2/g < a <= 0 and 0 < b <= delta1/g.
    They differ by exactly (delta2/g, -delta1/g).
    """

    x: int
    delta1: int
    delta2: int
    g: int
    pos: tuple[int, int]
    neg: tuple[int, int]


def decompose(x: int, delta1: int, delta2: int) -> Decomposition:
    """Canonical coefficient pairs of x against (delta1, delta2)."""
    if delta1 <= 0 or delta2 <= 0:
        raise OutOfRange(f"decompose needs positive deltas, got ({delta1}, {delta2})")
    g = gcd(delta1, delta2)
    if x <= 0 or x > max(delta1, delta2):
        raise OutOfRange(f"x={x} outside (0, max({delta1}, {delta2})]")
    if x % g:
        raise NotMultipleOfGcd(f"x={x} is not a multiple of gcd={g}")
    p, q = delta1 // g, delta2 // g
    x1 = 1 if q == 1 else ((x // g) * pow(p, -1, q) - 1) % q + 1
    x2, rem = divmod(x - x1 * delta1, delta2)
    if rem:
        raise InternalInvariantError(f"decompose({x}, {delta1}, {delta2}) inexact")
    if not (0 < x1 <= q and -p < x2 <= 0):
        raise InternalInvariantError(
            f"decompose({x}, {delta1}, {delta2}) outside its box: {(x1, x2)}"
        )
    return Decomposition(x, delta1, delta2, g, (x1, x2), (x1 - q, x2 + p))


# ---------------------------------------------------------------------------
# the Euclid set


@dataclass(frozen=True)
class EuclidSet:
    """All values visited by subtraction-based gcd on (delta1, delta2).

    ``chain`` is the remainder chain (eta_1, eta_2, ..., 0); ``levels[j]``
    holds D(eta_{j+1}, eta_{j+2}) in descending order.  ``values`` is the
    sorted union, always containing 0.
    """

    delta1: int
    delta2: int
    g: int
    chain: tuple[int, ...]
    levels: tuple[tuple[int, ...], ...]
    values: tuple[int, ...]

    def __contains__(self, x: int) -> bool:
        return x in self._members

    @functools.cached_property
    def _members(self) -> frozenset[int]:
        return frozenset(self.values)

    @functools.cached_property
    def _level_index(self) -> dict[int, int]:
        # first containing level wins; the chain tail repeats small values
        idx: dict[int, int] = {}
        for j, level in enumerate(self.levels, start=1):
            for d in level:
                idx.setdefault(d, j)
        return idx

    @property
    def max(self) -> int:
        return self.chain[0]

    def positive_values(self) -> tuple[int, ...]:
        return self.values[1:]

    def level_of(self, d: int) -> int:
        """1-based index of the first level containing d."""
        return self._level_index[d]


def euclid_set(delta1: int, delta2: int) -> EuclidSet:
    """Level decomposition of the subtraction-gcd value set.

    The first two levels start at eta_1 and eta_2 themselves; later levels
    start one subtraction in, since eta_j already appears two levels up.
    ``delta2 == 0`` degenerates to the two-value set {delta1, 0}.
    """
    if delta1 <= 0 or delta2 < 0:
        raise OutOfRange(f"need delta1 > 0 and delta2 >= 0, got ({delta1}, {delta2})")
    if delta2 == 0:
        chain: tuple[int, ...] = (delta1, 0)
        levels: tuple[tuple[int, ...], ...] = ((delta1, 0),)
        return EuclidSet(delta1, delta2, delta1, chain, levels, (0, delta1))
    etas = [max(delta1, delta2), min(delta1, delta2)]
    while etas[-1] > 0:
        etas.append(etas[-2] % etas[-1])
    lvls = []
    for j in range(len(etas) - 2):
        hi, lo = etas[j], etas[j + 1]
        first_k = 0 if j < 2 else 1
        lvls.append(tuple(hi - k * lo for k in range(first_k, hi // lo + 1)))
    values = sorted(set().union(*lvls))
    g = gcd(delta1, delta2)
    if values[0] != 0 or values[-1] != etas[0] or min(values[1:]) != g:
        raise InternalInvariantError(f"euclid_set({delta1}, {delta2}) malformed")
    if any(v % g for v in values):
        raise InternalInvariantError(f"euclid_set({delta1}, {delta2}) left gZ")
    return EuclidSet(delta1, delta2, g, tuple(etas), tuple(lvls), tuple(values))


# ---------------------------------------------------------------------------
# basis selection


@dataclass(frozen=True)
class BasisPair:
    """Kernel-lattice basis (v1, v2) with its distance data.

    Vectors are in the coordinates of the sorted generator triple;
    ``order`` records where each structural coordinate landed, as in
    ``TwoBettiForm.order``.  ``sigma`` is the sign of len(v2), and
    delta2 = sigma * len(v2) >= 0.
    """

    v1: KernelVector
    v2: KernelVector
    delta1: int
    delta2: int
    sigma: int
    g: int
    order: tuple[int, int, int]

    def structural(self, v: KernelVector) -> KernelVector:
        """View a sorted-coordinates vector in structural coordinates."""
        return KernelVector(*(v[self.order[k]] for k in range(3)))

    def combine(self, a: int, b: int) -> KernelVector:
        """a*v1 + sigma*b*v2."""
        s = self.sigma
        return KernelVector(
            a * self.v1.v1 + s * b * self.v2.v1,
            a * self.v1.v2 + s * b * self.v2.v2,
            a * self.v1.v3 + s * b * self.v2.v3,
        )


def _to_sorted_coords(v: tuple[int, int, int], order: tuple[int, int, int]) -> KernelVector:
    out = [0, 0, 0]
    for k in range(3):
        out[order[k]] = v[k]
    return KernelVector(*out)


def basis_and_deltas(S: Generators, form: StructuralForm) -> BasisPair:
    """Kernel basis and seed distances for a symmetric semigroup."""
    if isinstance(form, ThreeBettiForm):
        raise NonSymmetric("basis selection is defined for symmetric semigroups only")
    if isinstance(form, OneBettiForm):
        s1, s2, s3 = form.s1, form.s2, form.s3
        v1 = KernelVector(s1, -s2, 0)
        v2 = KernelVector(0, s2, -s3)
        order = (0, 1, 2)
        sigma = 1
    else:
        assert isinstance(form, TwoBettiForm)
        a, m1, m2, b, c = form.a, form.m1, form.m2, form.b, form.c
        best: tuple[int, int] | None = None  # (lam, length)
        for lam in range(-(b // m2), c // m1 + 1):
            ell = b + c + lam * (m2 - m1) - a
            if (
                best is None
                or abs(ell) < abs(best[1])
                or (abs(ell) == abs(best[1]) and ell > best[1])
            ):
                best = (lam, ell)
        lam, ell = best
        v1 = _to_sorted_coords((m2, -m1, 0), form.order)
        v2 = _to_sorted_coords((b + lam * m2, c - lam * m1, -a), form.order)
        order = form.order
        sigma = 1 if ell >= 0 else -1
    d1 = v1.length
    d2 = sigma * v2.length
    if S.dot(v1) != 0 or S.dot(v2) != 0:
        raise InternalInvariantError(f"basis vectors not in the kernel of {S.triple}")
    if d1 <= 0 or d2 < 0:
        raise InternalInvariantError(f"bad distances ({d1}, {d2}) for {S.triple}")
    return BasisPair(v1, v2, d1, d2, sigma, gcd(d1, d2), order)


@functools.lru_cache(maxsize=1024)
def _structure(S: Generators) -> tuple[BettiData, StructuralForm, BasisPair | None]:
    B = betti_elements(S)
    form = classify(S, B)
    basis = None if isinstance(form, ThreeBettiForm) else basis_and_deltas(S, form)
    return B, form, basis


def delta_set_fast(S: Generators) -> DeltaSet:
    """Delta set of a symmetric semigroup without any enumeration."""
    _, form, basis = _structure(S)
    if basis is None:
        raise NonSymmetric(
            "three Betti elements; use the oracle or the experimental "
            "non-symmetric seeding"
        )
    E = euclid_set(basis.delta1, basis.delta2)
    return DeltaSet.of(E.positive_values())


def delta_set_nonsymmetric(S: Generators) -> DeltaSet:
    """EXPERIMENTAL seeding of the Euclid set for non-symmetric semigroups.

    Collects the distinct distances of the Betti elements (at most two, each
    a singleton in this case) and runs the same remainder-chain construction
    on them.  Callers should cross-check against the brute-force oracle.
    """
    B, form, _ = _structure(S)
    if not isinstance(form, ThreeBettiForm):
        raise NotNonSymmetric("semigroup is symmetric; use delta_set_fast")
    seeds: set[int] = set()
    for b in B.elements:
        seeds.update(delta_of_element(S, b).values)
    if len(seeds) > 2:
        raise MoreThanTwoDistinctValues(
            f"Betti distances {sorted(seeds)} exceed the expected two values"
        )
    if not seeds:
        return DeltaSet.of(())
    d1, d2 = (max(seeds), min(seeds))
    return DeltaSet.of(euclid_set(d1, d2).positive_values())


# ---------------------------------------------------------------------------
# basements


def _eta_variant(E: EuclidSet, variant: str) -> str:
    """Map a (delta1, delta2)-convention variant onto the remainder chain.

    When delta2 > delta1 the roles of the coefficients swap, because the
    chain starts at max(delta1, delta2).
    """
    if E.delta1 >= E.delta2:
        return variant
    return "neg" if variant == "pos" else "pos"


def basement(x: int, E: EuclidSet, variant: Literal["pos", "neg"]) -> int:
    """A set member whose coefficients the outside value x strictly dominates.

    ``variant`` selects which canonical decomposition of x is dominated:
    ``pos`` compares against decompose(x).pos, ``neg`` against .neg.  The
    value is located between two chain elements; the construction anchors at
    the enclosing odd level, returning the last chain-step below x for one
    variant and the chain element itself for the other.  The dominance
    property is re-checked at return time.
    """
    if variant not in ("pos", "neg"):
        raise ValueError(f"variant must be 'pos' or 'neg', got {variant!r}")
    if x <= 0 or x >= E.max:
        raise OutOfRange(f"x={x} outside (0, max={E.max})")
    if x % E.g:
        raise NotMultipleOfGcd(f"x={x} not a multiple of g={E.g}")
    if x in E:
        raise InEuclidSet(f"{x} is already a realized distance")
    ev = _eta_variant(E, variant)
    chain = E.chain
    j = next(i + 1 for i in range(len(chain) - 1) if chain[i + 1] < x < chain[i])
    J = j if j % 2 == 1 else j - 1
    hi, lo = chain[J - 1], chain[J]
    if ev == "pos":
        d = hi - ((hi - x) // lo + 1) * lo
    else:
        d = lo
    _check_dominance(x, d, E, variant)
    return d


def _check_dominance(x: int, d: int, E: EuclidSet, variant: str) -> None:
    dx = decompose(x, E.delta1, E.delta2)
    dd = decompose(d, E.delta1, E.delta2)
    if variant == "pos":
        (x1, x2), (d1, d2) = dx.pos, dd.pos
        ok = 0 < d1 < x1 and x2 < d2 < 0
    else:
        (x1, x2), (d1, d2) = dx.neg, dd.neg
        ok = (x1 < d1 <= 0 or x1 == d1 == 0) and 0 < d2 < x2
    if not ok:
        raise InternalInvariantError(
            f"basement {d} does not dominate {x} on the {variant} side "
            f"({dd.pos if variant == 'pos' else dd.neg} vs "
            f"{dx.pos if variant == 'pos' else dx.neg})"
        )


# ---------------------------------------------------------------------------
# normalization of kernel vectors


def _basis_coords(v: KernelVector, B: BasisPair) -> tuple[int, int]:
    """Integer coordinates of v in the basis (v1, sigma*v2)."""
    w1 = B.v1
    w2 = B.combine(0, 1)
    for i, j in ((0, 1), (0, 2), (1, 2)):
        det = w1[i] * w2[j] - w1[j] * w2[i]
        if det:
            l1, r1 = divmod(v[i] * w2[j] - v[j] * w2[i], det)
            l2, r2 = divmod(w1[i] * v[j] - w1[j] * v[i], det)
            if r1 or r2:
                raise PreconditionViolated(f"{tuple(v)} is not in the kernel lattice")
            if B.combine(l1, l2) != v:
                raise PreconditionViolated(f"{tuple(v)} is not in the kernel lattice")
            return l1, l2
    raise InternalInvariantError("degenerate kernel basis")


def _boxed_candidates(
    lam1: int, lam2: int, B: BasisPair
) -> list[tuple[int, int, int]]:
    """The two (a1, a2, alpha) triples with a1, a2 in the canonical boxes."""
    q = B.delta2 // B.g
    p = B.delta1 // B.g
    a1 = (lam1 - 1) % q + 1  # in (0, q]
    alpha = (lam1 - a1) // q
    a2 = lam2 + alpha * p
    first = (a1, a2, alpha)
    second = (a1 - q, a2 + p, alpha + 1)
    for ca1, ca2, _ in (first, second):
        if not (-q < ca1 <= q and -p < ca2 <= p and ca1 * ca2 <= 0):
            raise InternalInvariantError(
                f"candidate {(ca1, ca2)} escaped its box (p={p}, q={q})"
            )
    return [first, second]


def normalize_kernel_vector(
    v: KernelVector, B: BasisPair
) -> tuple[int, int, int]:
    """Write v as a1*v1 + sigma*a2*v2 + alpha*(zero-length vector).

    The coefficients a1, a2 lie in the canonical boxes with a1*a2 <= 0, and
    the sign of the third coordinate of u = a1*v1 + sigma*a2*v2 matches v's
    (a zero third coordinate of u matches only a zero, except that no exact
    match leaves the zero-u candidate as the unique consistent choice).
    """
    v = KernelVector(*v)
    ell = v.length
    if ell == 0:
        raise ZeroLength(
            "zero-length vectors are multiples of "
            "(delta2/g)*v1 - sigma*(delta1/g)*v2"
        )
    if ell < 0 or ell > max(B.delta1, B.delta2):
        raise OutOfRange(f"length {ell} outside (0, max(delta1, delta2)]")
    lam1, lam2 = _basis_coords(v, B)
    if B.delta2 == 0:
        # the zero-length lattice vector degenerates to -sigma*v2
        return lam1, 0, -lam2
    exact = []
    zeroed = []
    for a1, a2, alpha in _boxed_candidates(lam1, lam2, B):
        u3 = B.combine(a1, a2).v3
        if (u3 > 0 and v.v3 > 0) or (u3 < 0 and v.v3 < 0) or (u3 == 0 and v.v3 == 0):
            exact.append((a1, a2, alpha))
        elif u3 == 0:
            zeroed.append((a1, a2, alpha))
    if len(exact) == 1:
        return exact[0]
    if not exact and len(zeroed) == 1:
        return zeroed[0]
    raise InternalInvariantError(
        f"normalization of {tuple(v)} is not uniquely sign-matched"
    )


# ---------------------------------------------------------------------------
# witnesses


@dataclass(frozen=True)
class Witness:
    """An element with two factorizations realizing a distance as an
    adjacent gap in its length set."""

    s: int
    z: Factorization
    z_prime: Factorization
    vector: KernelVector
    coefficients: tuple[int, int]

    @property
    def gap(self) -> int:
        return self.z.length - self.z_prime.length


def witness(S: Generators, B: BasisPair, d: int) -> Witness:
    """Constructive witness that d is a distance of the semigroup.

    The witness vector is the level-matched canonical combination of the
    basis; its positive and negative parts are the two factorizations, and
    no factorization of the witness element has length strictly between
    them.
    """
    E = euclid_set(B.delta1, B.delta2)
    if d == 0 or d not in E:
        raise OutOfRange(f"{d} is not a positive realized distance")
    if B.delta2 == 0:
        coeffs = (1, 0)
        vec = B.v1
    else:
        level = E.level_of(d)
        eta_pos = level % 2 == 1
        pos = eta_pos if B.delta1 >= B.delta2 else not eta_pos
        dec = decompose(d, B.delta1, B.delta2)
        coeffs = dec.pos if pos else dec.neg
        vec = B.combine(*coeffs)
    if vec.length != d:
        raise InternalInvariantError(f"witness vector for {d} has length {vec.length}")
    z, zp = vec.positive_part(), vec.negative_part()
    s = S.dot(z)
    if s != S.dot(zp):
        raise InternalInvariantError(f"witness parts of {tuple(vec)} disagree")
    return Witness(s, z, zp, vec, coeffs)


# ---------------------------------------------------------------------------
# intermediate factorizations


def _dominated_members(
    E: EuclidSet, x: int, a1: int, a2: int, side: str
) -> list[tuple[int, tuple[int, int]]]:
    """Set members below x whose side-decomposition fits inside (a1, a2)."""
    out = []
    for e in reversed(E.values):
        if e == 0 or e >= x:
            continue
        dec = decompose(e, E.delta1, E.delta2)
        e1, e2 = dec.pos if side == "pos" else dec.neg
        if (e1, e2) == (a1, a2):
            continue
        if side == "pos":
            fits = 0 < e1 <= a1 and a2 <= e2 <= 0
        else:
            fits = a1 <= e1 <= 0 and 0 < e2 <= a2
        if fits:
            out.append((e, (e1, e2)))
    return out


def intermediate_factorization(
    S: Generators, z: Factorization, z_prime: Factorization
) -> Factorization:
    """A factorization of the same element with length strictly between.

    Exists whenever the length gap is not a realized distance; built by
    stripping the common support, normalizing the difference vector, and
    adding or subtracting the dominated witness vector of a smaller set
    member, as in the constructive proof.
    """
    z = Factorization(*z)
    z_prime = Factorization(*z_prime)
    if min(z) < 0 or min(z_prime) < 0:
        raise PreconditionViolated("factorizations must be nonnegative")
    s = S.dot(z)
    if s != S.dot(z_prime):
        raise PreconditionViolated(
            f"factorizations of different elements: {s} != {S.dot(z_prime)}"
        )
    if z.length < z_prime.length:
        z, z_prime = z_prime, z
    x = z.length - z_prime.length
    _, form, basis = _structure(S)
    if basis is None:
        raise NonSymmetric("intermediate construction needs a symmetric semigroup")
    if x == 0 or x > max(basis.delta1, basis.delta2):
        raise PreconditionViolated(
            f"gap {x} outside (0, max(delta1, delta2)={max(basis.delta1, basis.delta2)}]"
        )
    E = euclid_set(basis.delta1, basis.delta2)
    if x in E:
        raise GapInEuclid(f"{x} is a realized distance; no intermediate is guaranteed")
    common = Factorization(
        min(z.z1, z_prime.z1), min(z.z2, z_prime.z2), min(z.z3, z_prime.z3)
    )
    zs = Factorization(z.z1 - common.z1, z.z2 - common.z2, z.z3 - common.z3)
    zps = Factorization(
        z_prime.z1 - common.z1, z_prime.z2 - common.z2, z_prime.z3 - common.z3
    )
    diff = KernelVector(zs.z1 - zps.z1, zs.z2 - zps.z2, zs.z3 - zps.z3)
    lam1, lam2 = _basis_coords(diff, basis)
    candidates = _boxed_candidates(lam1, lam2, basis)
    # prefer the sign-matched normalization, but try both rather than fail
    def _rank(cand: tuple[int, int, int]) -> int:
        u3 = basis.combine(cand[0], cand[1]).v3
        if (u3 > 0 and diff.v3 > 0) or (u3 < 0 and diff.v3 < 0):
            return 0
        return 1 if u3 == 0 else 2

    for a1, a2, _alpha in sorted(candidates, key=_rank):
        side = "pos" if a1 > 0 else "neg"
        for _e, (e1, e2) in _dominated_members(E, x, a1, a2, side):
            w = basis.combine(e1, e2)
            for cand in (
                Factorization(zs.z1 - w.v1, zs.z2 - w.v2, zs.z3 - w.v3),
                Factorization(zps.z1 + w.v1, zps.z2 + w.v2, zps.z3 + w.v3),
            ):
                if min(cand) < 0:
                    continue
                result = Factorization(
                    cand.z1 + common.z1, cand.z2 + common.z2, cand.z3 + common.z3
                )
                if S.dot(result) != s:
                    raise InternalInvariantError("intermediate left the element")
                if not z_prime.length < result.length < z.length:
                    raise InternalInvariantError("intermediate length out of band")
                return result
    raise InternalInvariantError(
        f"no intermediate factorization found for gap {x} on {S.triple}"
    )
