import pytest
from hypothesis import given, settings, strategies as st

from goldbach_lab.dc import (
    DcResult,
    dc_min,
    dc_oracle,
    dc_oracle_table,
    decompositions,
    goldbach_pairs,
)
from goldbach_lab.errors import (
    AboveEnumerationCap,
    AboveOracleCap,
    NotEven,
    TargetTooSmall,
)

from oracles import min_prime_summands, trial_is_prime, trial_primes_between


def assert_sound(result: DcResult):
    assert len(result.witness) == result.value
    assert sum(result.witness) == result.target
    assert all(trial_is_prime(p) for p in result.witness)
    assert list(result.witness) == sorted(result.witness)


class TestDcMin:
    def test_eight(self):
        result = dc_min(8)
        assert result.value == 2
        assert result.witness == (3, 5)

    def test_216_has_a_valid_pair(self):
        # 213 + 3 is NOT a decomposition (213 = 3 * 71); the searched witness is
        result = dc_min(216)
        assert result.value == 2
        assert_sound(result)

    def test_four(self):
        assert dc_min(4) == DcResult(4, 2, (2, 2))

    def test_27_needs_three(self):
        # 27 and 25 both composite, so two primes cannot reach 27
        result = dc_min(27)
        assert result.value == 3
        assert_sound(result)

    def test_prime_targets_score_one(self):
        assert dc_min(2) == DcResult(2, 1, (2,))
        assert dc_min(3) == DcResult(3, 1, (3,))
        assert dc_min(97) == DcResult(97, 1, (97,))

    def test_odd_composite_with_prime_complement(self):
        assert dc_min(9) == DcResult(9, 2, (2, 7))

    def test_too_small(self):
        with pytest.raises(TargetTooSmall):
            dc_min(1)

    def test_even_witness_starts_at_smallest_prime(self):
        for target in range(4, 300, 2):
            result = dc_min(target)
            p = result.witness[0]
            smaller = [
                q for q in trial_primes_between(2, p - 1) if trial_is_prime(target - q)
            ]
            assert smaller == []

    @settings(max_examples=150, deadline=None)
    @given(target=st.integers(2, 10**5))
    def test_witness_soundness(self, target):
        assert_sound(dc_min(target))

    @settings(max_examples=100, deadline=None)
    @given(target=st.integers(2, 10**4))
    def test_sum_parity_consistency(self, target):
        witness = dc_min(target).witness
        assert sum(witness) % 2 == target % 2
        # an odd sum of evenly many primes (and vice versa) forces a 2
        if target % 2 != len(witness) % 2:
            assert 2 in witness


class TestDcOracle:
    def test_eight(self):
        assert dc_oracle(8) == 2

    def test_two(self):
        assert dc_oracle(2) == 1

    def test_eleven(self):
        assert dc_oracle(11) == 1

    def test_too_small(self):
        with pytest.raises(TargetTooSmall):
            dc_oracle(1)

    def test_above_cap(self):
        with pytest.raises(AboveOracleCap):
            dc_oracle(1001, cap=1000)
        with pytest.raises(AboveOracleCap):
            dc_oracle_table(1001, cap=1000)

    def test_table_against_exhaustive_enumeration(self):
        table = dc_oracle_table(60)
        for target in range(2, 61):
            assert table[target] == min_prime_summands(target)

    def test_unreachable_entries_are_zero(self):
        table = dc_oracle_table(50)
        assert table[0] == 0 and table[1] == 0

    def test_agrees_with_dc_min_up_to_5000(self):
        table = dc_oracle_table(5000)
        for target in range(2, 5001):
            assert dc_min(target).value == table[target]


class TestDecompositions:
    def test_eight_into_four(self):
        assert (2, 2, 2, 2) in decompositions(8, 4)

    def test_eight_into_two(self):
        assert decompositions(8, 2) == [(3, 5)]

    def test_four_into_three_is_empty(self):
        assert decompositions(4, 3) == []

    def test_above_cap(self):
        with pytest.raises(AboveEnumerationCap):
            decompositions(10**5, 2)

    def test_bad_k(self):
        with pytest.raises(ValueError):
            decompositions(8, 0)

    def test_too_small(self):
        with pytest.raises(TargetTooSmall):
            decompositions(1, 1)

    @settings(max_examples=80, deadline=None)
    @given(target=st.integers(2, 120), k=st.integers(1, 6))
    def test_results_are_complete_and_sound(self, target, k):
        found = decompositions(target, k)
        assert len(set(found)) == len(found)
        for combo in found:
            assert len(combo) == k
            assert sum(combo) == target
            assert all(trial_is_prime(p) for p in combo)
            assert list(combo) == sorted(combo)
        # cross-check against the brute-force enumeration
        from itertools import combinations_with_replacement

        primes = trial_primes_between(2, target)
        expected = [
            combo
            for combo in combinations_with_replacement(primes, k)
            if sum(combo) == target
        ]
        assert sorted(found) == sorted(expected)


class TestGoldbachPairs:
    def test_hundred(self):
        assert goldbach_pairs(100) == [
            (3, 97),
            (11, 89),
            (17, 83),
            (29, 71),
            (41, 59),
            (47, 53),
        ]

    def test_four(self):
        assert goldbach_pairs(4) == [(2, 2)]

    def test_odd_rejected(self):
        with pytest.raises(NotEven):
            goldbach_pairs(7)

    def test_two_rejected(self):
        with pytest.raises(TargetTooSmall):
            goldbach_pairs(2)

    def test_above_cap(self):
        with pytest.raises(AboveEnumerationCap):
            goldbach_pairs(10**7)

    @settings(max_examples=100, deadline=None)
    @given(target=st.integers(2, 2500).map(lambda n: 2 * n))
    def test_pairs_match_two_prime_decompositions(self, target):
        pairs = goldbach_pairs(target)
        assert pairs == decompositions(target, 2)
        assert (dc_min(target).value == 2) == bool(pairs)
        for p, q in pairs:
            assert p <= q and p + q == target
            assert trial_is_prime(p) and trial_is_prime(q)
