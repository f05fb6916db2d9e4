import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from deltasg import (
    DeltaSet,
    ElementNotInSemigroup,
    Factorization,
    GcdNotOne,
    NotMinimal,
    NotThreeAtoms,
    contains,
    delta_of_element,
    factorizations,
    frobenius_number,
    gaps,
    is_symmetric,
    length_set,
    validate_generators,
)


def S(*gens):
    return validate_generators(gens)


class TestValidation:
    def test_paper_triples_accepted(self):
        for triple in ((3, 5, 7), (6, 8, 11), (6, 10, 15), (2015, 7124, 84940)):
            g = validate_generators(triple)
            assert g.triple == tuple(sorted(triple))
            assert g.original == triple

    def test_sorting_keeps_original(self):
        g = validate_generators((15, 6, 10))
        assert g.triple == (6, 10, 15)
        assert g.original == (15, 6, 10)

    def test_not_minimal(self):
        with pytest.raises(NotMinimal):
            validate_generators((2, 4, 7))
        with pytest.raises(NotMinimal):
            validate_generators((2, 3, 5))  # 5 = 2 + 3

    def test_gcd_not_one(self):
        with pytest.raises(GcdNotOne):
            validate_generators((4, 6, 10))

    def test_not_three_atoms(self):
        for bad in ((3, 5, 5), (3, 5), (3, 5, 7, 9), (0, 5, 7), (-3, 5, 7)):
            with pytest.raises(NotThreeAtoms):
                validate_generators(bad)


class TestMembership:
    def test_examples(self):
        s357 = S(3, 5, 7)
        assert not contains(s357, 4)
        assert contains(s357, 6)
        assert contains(s357, 0)
        assert not contains(s357, -1)

    def test_agrees_with_factorizations_near_frobenius(self, small_symmetric_corpus):
        for sg in small_symmetric_corpus[:10]:
            frob = frobenius_number(sg)
            for s in range(frob + sg.n1 + sg.n2 + sg.n3 + 1):
                assert contains(sg, s) == bool(factorizations(sg, s))

    def test_beyond_frobenius(self, small_symmetric_corpus):
        for sg in small_symmetric_corpus[:10]:
            frob = frobenius_number(sg)
            assert all(contains(sg, frob + k) for k in range(1, 50))


class TestFrobenius:
    def test_357(self):
        assert frobenius_number(S(3, 5, 7)) == 4

    def test_6_10_15_against_enumeration(self):
        # independent check: reachable sums up to n1*n2 = 60 by brute force
        reachable = {0}
        for _ in range(12):
            reachable |= {r + g for r in reachable for g in (6, 10, 15) if r + g <= 60}
        expected = max(x for x in range(61) if x not in reachable)
        assert expected == 29
        assert frobenius_number(S(6, 10, 15)) == 29

    def test_embedding_dimension_two_rejected(self):
        with pytest.raises(NotMinimal):
            validate_generators((2, 3, 7))


class TestSymmetry:
    def test_examples(self):
        assert not is_symmetric(S(3, 5, 7))
        assert is_symmetric(S(6, 10, 15))
        assert is_symmetric(S(6, 8, 11))

    def test_gap_count_characterization(self, small_symmetric_corpus, nonsymmetric_corpus):
        # symmetric iff the gaps fill exactly half of 0..F
        for sg in small_symmetric_corpus[:15] + nonsymmetric_corpus[:10]:
            frob = frobenius_number(sg)
            assert is_symmetric(sg) == (2 * len(gaps(sg)) == frob + 1)


def _naive_factorizations(triple, s):
    n1, n2, n3 = triple
    out = []
    for z3 in range(s // n3 + 1):
        for z2 in range((s - z3 * n3) // n2 + 1):
            r = s - z3 * n3 - z2 * n2
            if r % n1 == 0:
                out.append((r // n1, z2, z3))
    return sorted(out, reverse=True)


class TestFactorizations:
    def test_paper_lists(self):
        assert factorizations(S(6, 10, 15), 30) == [(5, 0, 0), (0, 3, 0), (0, 0, 2)]
        assert factorizations(S(6, 8, 11), 24) == [(4, 0, 0), (0, 3, 0)]
        assert factorizations(S(6, 8, 11), 22) == [(1, 2, 0), (0, 0, 2)]
        assert factorizations(S(3, 5, 7), 10) == [(1, 0, 1), (0, 2, 0)]
        assert factorizations(S(3, 5, 7), 12) == [(4, 0, 0), (0, 1, 1)]
        assert factorizations(S(3, 5, 7), 14) == [(3, 1, 0), (0, 0, 2)]

    def test_zero_and_gap(self):
        assert factorizations(S(3, 5, 7), 0) == [(0, 0, 0)]
        assert factorizations(S(3, 5, 7), 4) == []

    @settings(max_examples=150, deadline=None)
    @given(st.integers(0, 400), st.data())
    def test_matches_naive_enumeration(self, s, data):
        triple = data.draw(
            st.sampled_from(((3, 5, 7), (6, 8, 11), (6, 10, 15), (10, 14, 21), (14, 18, 63)))
        )
        sg = S(*triple)
        got = factorizations(sg, s)
        assert [tuple(z) for z in got] == _naive_factorizations(sg.triple, s)
        for z in got:
            assert sg.dot(z) == s and min(z) >= 0


class TestLengthsAndDeltas:
    def test_paper_values(self):
        assert length_set(S(6, 10, 15), 30) == [2, 3, 5]
        assert delta_of_element(S(6, 10, 15), 30).as_set() == {1, 2}
        assert delta_of_element(S(3, 5, 7), 10).as_set() == set()
        assert length_set(S(6, 8, 11), 22) == [2, 3]
        assert delta_of_element(S(6, 8, 11), 22).as_set() == {1}
        assert delta_of_element(S(3, 5, 7), 12).as_set() == {2}
        assert delta_of_element(S(3, 5, 7), 14).as_set() == {2}

    def test_not_in_semigroup(self):
        with pytest.raises(ElementNotInSemigroup):
            length_set(S(3, 5, 7), 4)
        with pytest.raises(ElementNotInSemigroup):
            delta_of_element(S(3, 5, 7), 1)

    def test_zero_element(self):
        assert length_set(S(3, 5, 7), 0) == [0]
        assert not delta_of_element(S(3, 5, 7), 0)

    def test_empty_iff_single_length(self, small_symmetric_corpus):
        sg = small_symmetric_corpus[0]
        for s in range(sg.n1, sg.n1 + 120):
            if contains(sg, s):
                assert bool(delta_of_element(sg, s)) == (len(length_set(sg, s)) > 1)


class TestDeltaSetType:
    def test_sorted_dedup(self):
        d = DeltaSet.of([3, 1, 3, 2])
        assert d.values == (1, 2, 3)
        assert d.min() == 1 and d.max() == 3
        assert 2 in d and 4 not in d

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            DeltaSet.of([0, 1])


def test_factorization_length():
    assert Factorization(1, 2, 3).length == 6
