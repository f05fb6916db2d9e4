"""Shared corpora: randomly generated semigroups of both symmetric kinds.

Generation is seeded, so every run sees the same corpus.  Candidates are
pushed through the library's own validation and kept only when they land in
the intended structural class.
"""

from __future__ import annotations

import random
from math import gcd

import pytest

from deltasg import (
    Generators,
    OneBettiForm,
    ThreeBettiForm,
    TwoBettiForm,
    betti_elements,
    classify,
    validate_generators,
)
from deltasg.errors import DeltaSGError

ONE_BETTI_COUNT = 50
TWO_BETTI_COUNT = 55


def _try_validate(triple) -> Generators | None:
    try:
        return validate_generators(triple)
    except DeltaSGError:
        return None


def sample_one_betti(rng: random.Random, limit: int = 60) -> Generators:
    """Random pairwise-coprime s1 > s2 > s3 >= 2 up to the limit."""
    while True:
        s3 = rng.randint(2, limit - 2)
        s2 = rng.randint(s3 + 1, limit - 1)
        s1 = rng.randint(s2 + 1, limit)
        if gcd(s1, s2) == 1 and gcd(s1, s3) == 1 and gcd(s2, s3) == 1:
            S = _try_validate((s2 * s3, s1 * s3, s1 * s2))
            if S is not None:
                return S


def sample_two_betti(rng: random.Random, limit: int = 12) -> Generators:
    """Random (a, m1, m2, b, c) up to the limit, filtered to two Betti elements."""
    while True:
        a = rng.randint(2, limit)
        m1 = rng.randint(1, limit - 1)
        m2 = rng.randint(m1 + 1, limit)
        b = rng.randint(0, limit)
        c = rng.randint(0, limit)
        if gcd(m1, m2) != 1 or b + c < 2:
            continue
        S = _try_validate((a * m1, a * m2, b * m1 + c * m2))
        if S is None:
            continue
        form = classify(S, betti_elements(S))
        if isinstance(form, TwoBettiForm):
            return S


@pytest.fixture(scope="session")
def one_betti_corpus() -> list[Generators]:
    rng = random.Random(20260810)
    return [sample_one_betti(rng) for _ in range(ONE_BETTI_COUNT)]


@pytest.fixture(scope="session")
def two_betti_corpus() -> list[Generators]:
    rng = random.Random(20260811)
    return [sample_two_betti(rng) for _ in range(TWO_BETTI_COUNT)]


@pytest.fixture(scope="session")
def symmetric_corpus(one_betti_corpus, two_betti_corpus) -> list[Generators]:
    return one_betti_corpus + two_betti_corpus


@pytest.fixture(scope="session")
def nonsymmetric_corpus() -> list[Generators]:
    """Small non-symmetric semigroups (three Betti elements), generators <= 60."""
    rng = random.Random(20260812)
    out: list[Generators] = []
    while len(out) < 25:
        n1 = rng.randint(3, 40)
        n2 = rng.randint(n1 + 1, 50)
        n3 = rng.randint(n2 + 1, 60)
        S = _try_validate((n1, n2, n3))
        if S is None:
            continue
        if isinstance(classify(S, betti_elements(S)), ThreeBettiForm):
            out.append(S)
    return out


@pytest.fixture(scope="session")
def small_symmetric_corpus(symmetric_corpus) -> list[Generators]:
    """Members cheap enough for gap-by-gap symmetry checks."""
    return [S for S in symmetric_corpus if S.n3 <= 200]
