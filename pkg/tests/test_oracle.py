import pytest

from deltasg import (
    BudgetExceeded,
    default_bound,
    delta_set_bruteforce,
    delta_set_fast,
    estimated_cells,
    factorizations,
    validate_generators,
    verify,
)
from deltasg.oracle import _scan_bigint, _scan_numpy, work_budget


def S(*gens):
    return validate_generators(gens)


def reference_deltas(sg, bound):
    """Third opinion: per-element enumeration through factorizations()."""
    out = set()
    for s in range(bound + 1):
        ls = sorted({z.length for z in factorizations(sg, s)})
        out.update(b - a for a, b in zip(ls, ls[1:]))
    return out


class TestBruteforce:
    def test_paper_cases(self):
        assert delta_set_bruteforce(S(6, 10, 15), 300).as_set() == {1, 2}
        assert delta_set_bruteforce(S(6, 8, 11), 300).as_set() == {1}
        assert delta_set_bruteforce(S(3, 5, 7), 200).as_set() == {2}

    def test_matches_reference_enumeration(self):
        for gens, bound in (((3, 5, 7), 120), ((6, 10, 15), 180), ((10, 14, 21), 260)):
            sg = S(*gens)
            assert delta_set_bruteforce(sg, bound).as_set() == reference_deltas(sg, bound)

    def test_engines_agree(self):
        sg = S(17 * 11, 29 * 11, 29 * 17)  # one-Betti form (29, 17, 11)
        bound = 400_000
        budget = 10**9
        assert _scan_bigint(sg, bound, budget) == _scan_numpy(sg, bound, budget)

    def test_monotone_in_bound(self):
        sg = S(6, 10, 15)
        prev = set()
        for bound in (60, 120, 240, 480):
            cur = delta_set_bruteforce(sg, bound).as_set()
            assert prev <= cur
            prev = cur

    def test_budget_guard(self):
        sg = S(2015, 7124, 84940)
        with pytest.raises(BudgetExceeded):
            delta_set_bruteforce(sg, 10**6, budget=1000)

    def test_budget_env_override(self, monkeypatch):
        monkeypatch.setenv("DELTA_SG_TUPLE_BUDGET", "12345")
        assert work_budget() == 12345
        monkeypatch.delenv("DELTA_SG_TUPLE_BUDGET")
        assert work_budget() == work_budget(None)


class TestDefaultBound:
    def test_respects_budget(self, symmetric_corpus):
        for sg in symmetric_corpus:
            b = default_bound(sg)
            assert b >= sg.n1
            assert estimated_cells(sg, b) <= work_budget() + b + 1

    def test_small_cases_cover_everything(self):
        for gens in ((3, 5, 7), (6, 8, 11), (6, 10, 15)):
            sg = S(*gens)
            assert default_bound(sg) >= sg.n2 * sg.n3


class TestVerify:
    def test_exact_small(self):
        assert verify(S(6, 10, 15), bound=300).verdict == "ExactMatch"
        assert verify(S(6, 8, 11), bound=300).verdict == "ExactMatch"

    def test_flagship_small_bound_is_containment(self):
        report = verify(S(2015, 7124, 84940), bound=200_000)
        assert report.verdict == "FastContainsObserved"
        assert not report.extra
        assert 393 in report.missing

    def test_tiny_bound_observes_nothing(self):
        report = verify(S(6, 10, 15), bound=5)
        assert report.observed.as_set() == set()
        assert report.verdict == "FastContainsObserved"

    def test_nonsymmetric_uses_experimental(self):
        report = verify(S(3, 5, 7), bound=200)
        assert report.fast_method == "nonsymmetric-experimental"
        assert report.verdict == "ExactMatch"

    def test_special_members(self):
        # sigma = -1, delta2 = 0, and the zero-second-coordinate edge
        for gens in ((22, 33, 5), (4, 7, 10), (10, 14, 21)):
            sg = S(*gens)
            report = verify(sg)
            assert report.verdict == "ExactMatch", (gens, report)

    def test_observed_is_subset_of_fast(self, nonsymmetric_corpus):
        # the experimental seeding must never be falsified silently
        for sg in nonsymmetric_corpus[:8]:
            report = verify(sg, bound=min(default_bound(sg), 50_000))
            assert report.verdict != "Mismatch", (sg.triple, report.extra)
