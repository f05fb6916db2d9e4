"""Independent brute-force Delta sets, and differential verification.

The oracle never looks at the structural theory: it enumerates the length
set of every element up to a bound via the obvious recurrence
L(s) = union of (L(s - n_i) + 1), holding each L(s) as a bitmask, and
collects the distances between consecutive lengths.  Two equivalent engines
share that definition: a bigint engine for small scans and a word-packed
numpy engine for large ones.

Work is accounted in "cells", one per (element, length) pair materialized.
A scan that would exceed the budget raises ``BudgetExceeded``; partial
results are never returned.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from math import isqrt

import numpy as np

from .betti import ThreeBettiForm
from .errors import BudgetExceeded, NonSymmetric, PreconditionViolated
from .euclid import _structure, delta_set_fast, delta_set_nonsymmetric
from .semigroup import DeltaSet, Generators

DEFAULT_BUDGET = 250_000_000
BUDGET_ENV_VAR = "DELTA_SG_TUPLE_BUDGET"

_NUMPY_ENGINE_MIN_BOUND = 300_000


def work_budget(budget: int | None = None) -> int:
    """Resolve the cell budget: explicit argument, else environment, else default."""
    if budget is not None:
        return budget
    env = os.environ.get(BUDGET_ENV_VAR)
    if env is not None:
        value = int(env)
        if value <= 0:
            raise PreconditionViolated(f"{BUDGET_ENV_VAR} must be positive, got {env}")
        return value
    return DEFAULT_BUDGET


def estimated_cells(S: Generators, bound: int) -> int:
    """Upper estimate of the (element, length) pairs a scan will touch."""
    n1, _, n3 = S.triple
    return bound * bound * (n3 - n1) // (2 * n1 * n3) + bound + 1


def default_bound(S: Generators, budget: int | None = None) -> int:
    """Default scan bound: the n2*n3 scale at which every distance has
    been observed to materialize, capped so the work fits the budget."""
    n1, n2, n3 = S.triple
    cap = isqrt(2 * work_budget(budget) * n1 * n3 // (n3 - n1))
    return min(n2 * n3 + n3, max(cap, n1))


def _collect_gaps(flat_bits: np.ndarray, rowbits: int, observed: set[int]) -> int:
    """Pull consecutive-bit gaps out of row-major unpacked bits.

    Returns the number of set bits (the cell count of this batch).
    """
    fn = np.flatnonzero(flat_bits)
    if fn.size >= 2:
        dd = np.diff(fn)
        same_row = (fn[1:] // rowbits) == (fn[:-1] // rowbits)
        gg = dd[same_row]
        if gg.size:
            counts = np.bincount(gg)
            observed.update(np.flatnonzero(counts).tolist())
    return int(fn.size)


def _scan_bigint(S: Generators, bound: int, budget: int) -> set[int]:
    """Reference engine: python-int masks, window of the last n3 rows."""
    n1, n2, n3 = S.triple
    window = n3 + 1
    masks = [0] * window
    masks[0] = 1
    observed: set[int] = set()
    cells = 1
    batch: list[tuple[int, int]] = []  # (shift, mask >> shift)
    batch_bits = 0
    batch_width = 0

    def flush() -> None:
        nonlocal batch, batch_bits, batch_width
        if not batch:
            return
        nbytes = batch_width // 8 + 1
        buf = bytearray()
        for _shift, m in batch:
            buf += m.to_bytes(nbytes, "little")
        bits = np.unpackbits(np.frombuffer(bytes(buf), dtype=np.uint8),
                             bitorder="little")
        _collect_gaps(bits, nbytes * 8, observed)
        batch = []
        batch_bits = 0
        batch_width = 0

    for s in range(1, bound + 1):
        m = masks[(s - n1) % window] if s >= n1 else 0
        if s >= n2:
            m |= masks[(s - n2) % window]
        if s >= n3:
            m |= masks[(s - n3) % window]
        if m:
            m <<= 1
        masks[s % window] = m
        if m:
            c = m.bit_count()
            cells += c
            if cells > budget:
                raise BudgetExceeded(
                    f"scan to {bound} exceeded the budget of {budget} cells"
                )
            if c >= 2:
                shift = s // n3
                mm = m >> shift
                batch.append((shift, mm))
                batch_width = max(batch_width, mm.bit_length())
                batch_bits += batch_width
                if batch_bits >= 1 << 23:
                    flush()
    flush()
    return observed


def _scan_numpy(S: Generators, bound: int, budget: int) -> set[int]:
    """Word-packed engine: rows advance in blocks of n1, fully vectorized."""
    n1, n2, n3 = S.triple
    words = (bound // n1 + 2 + 63) // 64 + 1
    keep = n3 + n1
    cap_rows = keep + 8 * n1
    buf = np.zeros((cap_rows, words), dtype=np.uint64)
    buf[0, 0] = np.uint64(1)
    base = 0
    top = 1
    observed: set[int] = set()
    cells = 1
    one = np.uint64(1)
    sixty_three = np.uint64(63)
    while top <= bound:
        n = min(n1, bound + 1 - top)
        if top + n - base > cap_rows:
            lo = top - keep
            buf[: top - lo] = buf[lo - base: top - base]
            buf[top - lo:] = 0
            base = lo
        acc = np.zeros((n, words), dtype=np.uint64)
        for gen in (n1, n2, n3):
            first = max(top, gen)
            if first < top + n:
                dst = first - top
                src = first - gen - base
                acc[dst:n] |= buf[src: src + (n - dst)]
        carry = acc >> sixty_three
        acc <<= one
        acc[:, 1:] |= carry[:, :-1]
        buf[top - base: top - base + n] = acc
        # extraction over the feasible length window of these rows
        w_lo = (top // n3) // 64
        w_hi = min(words, ((top + n) // n1) // 64 + 1)
        view = np.ascontiguousarray(acc[:, w_lo:w_hi])
        bits = np.unpackbits(view.view(np.uint8), bitorder="little")
        cells += _collect_gaps(bits, (w_hi - w_lo) * 64, observed)
        if cells > budget:
            raise BudgetExceeded(
                f"scan to {bound} exceeded the budget of {budget} cells"
            )
        top += n
    return observed


def delta_set_bruteforce(
    S: Generators, bound: int, budget: int | None = None
) -> DeltaSet:
    """Union of the per-element distance sets over all elements <= bound.

    A bound below the smallest atom sees no factorizations and yields the
    empty set.
    """
    n1 = S.n1
    if bound < 0:
        raise PreconditionViolated(f"bound must be nonnegative, got {bound}")
    if bound < n1:
        return DeltaSet.of(())
    budget = work_budget(budget)
    if estimated_cells(S, bound) > budget:
        raise BudgetExceeded(
            f"scan to {bound} needs about {estimated_cells(S, bound)} cells, "
            f"over the budget of {budget}"
        )
    if bound >= _NUMPY_ENGINE_MIN_BOUND and n1 >= 64:
        observed = _scan_numpy(S, bound, budget)
    else:
        observed = _scan_bigint(S, bound, budget)
    return DeltaSet.of(observed)


@dataclass(frozen=True)
class OracleReport:
    """Outcome of comparing the enumerated distances with the fast path.

    ``extra`` (observed but not claimed) falsifies the fast path, hence
    forces the ``Mismatch`` verdict.  ``missing`` only means the scan bound
    was too small to realize some claimed distances.
    """

    bound: int
    observed: DeltaSet
    fast: DeltaSet
    missing: tuple[int, ...]
    extra: tuple[int, ...]
    verdict: str
    fast_method: str


def verify(
    S: Generators, bound: int | None = None, budget: int | None = None
) -> OracleReport:
    """Differential test of the fast Delta set against the oracle."""
    if bound is None:
        bound = default_bound(S, budget)
    _, form, _ = _structure(S)
    if isinstance(form, ThreeBettiForm):
        fast = delta_set_nonsymmetric(S)
        fast_method = "nonsymmetric-experimental"
    else:
        fast = delta_set_fast(S)
        fast_method = "fast"
    observed = delta_set_bruteforce(S, bound, budget)
    missing = tuple(sorted(fast.as_set() - observed.as_set()))
    extra = tuple(sorted(observed.as_set() - fast.as_set()))
    if extra:
        verdict = "Mismatch"
    elif missing:
        verdict = "FastContainsObserved"
    else:
        verdict = "ExactMatch"
    return OracleReport(bound, observed, fast, missing, extra, verdict, fast_method)
