from fractions import Fraction
from math import factorial

import pytest

from bghultman import census
from bghultman.census import (
    DistributionTable,
    hultman_census,
    matching_census,
    moments_from_table,
    odd_hultman_census,
    signed_hultman_census,
)
from bghultman.hultman import (
    MomentPair,
    hultman_bona_flynn,
    signed_hultman,
    signed_moments,
    unsigned_moments,
)
from bghultman.perm import GuardError


def double_factorial_odd(m):
    out = 1
    for v in range(1, 2 * m, 2):
        out *= v
    return out


class TestCycleCensuses:
    def test_known_rows(self):
        assert signed_hultman_census(3).counts == {1: 20, 2: 21, 3: 6, 4: 1}
        assert signed_hultman_census(1).counts == {1: 1, 2: 1}
        assert hultman_census(2).counts == {1: 1, 3: 1}

    def test_matches_closed_forms(self):
        for n in range(0, 7):
            table = hultman_census(n)
            assert table.total() == factorial(n)
            assert all(table.count(k) == hultman_bona_flynn(n, k) for k in range(1, n + 2))
        for n in range(0, 6):
            table = signed_hultman_census(n)
            assert table.total() == 2**n * factorial(n)
            assert all(table.count(k) == signed_hultman(n, k) for k in range(1, n + 2))

    def test_guard(self):
        with pytest.raises(GuardError):
            hultman_census(11)
        with pytest.raises(GuardError):
            signed_hultman_census(9)

    def test_parallel_matches_sequential(self):
        assert hultman_census(5, jobs=4) == hultman_census(5)
        assert signed_hultman_census(4, jobs=4) == signed_hultman_census(4)
        assert odd_hultman_census(5, jobs=3) == odd_hultman_census(5)


class TestOddCensus:
    def test_singleton(self):
        assert odd_hultman_census(1).counts == {2: 1}

    def test_total_and_parity(self):
        for n in range(0, 7):
            table = odd_hultman_census(n)
            assert table.total() == factorial(n)
            for k in table.counts:
                assert k % 2 == (n + 1) % 2


class TestMatchingCensus:
    def test_tiny_case(self):
        assert matching_census(1) == {(2, 1): 1, (1, 1): 1, (1, 2): 1}

    def test_total_is_double_factorial(self):
        for n in range(0, 5):
            pairs = matching_census(n)
            assert sum(pairs.values()) == double_factorial_odd(n + 1)

    def test_hamiltonian_slice_is_signed_row(self):
        for n in range(0, 5):
            pairs = matching_census(n)
            row = {i: v for (i, j), v in pairs.items() if j == 1}
            assert row == {
                k: signed_hultman(n, k) for k in range(1, n + 2) if signed_hultman(n, k)
            }
            assert sum(row.values()) == 2**n * factorial(n)

    def test_guard(self):
        with pytest.raises(GuardError):
            matching_census(7)


class TestMomentsFromTable:
    def test_examples(self):
        signed1 = DistributionTable(1, "signed_cycles", {1: 1, 2: 1})
        assert moments_from_table(signed1, 2) == MomentPair(Fraction(3, 2), Fraction(1, 4))
        unsigned1 = DistributionTable(1, "unsigned_cycles", {2: 1})
        assert moments_from_table(unsigned1, 1) == MomentPair(Fraction(2), Fraction(0))
        unsigned2 = DistributionTable(2, "unsigned_cycles", {1: 1, 3: 1})
        assert moments_from_table(unsigned2, 2) == MomentPair(Fraction(2), Fraction(1))

    def test_total_mismatch(self):
        table = DistributionTable(1, "unsigned_cycles", {2: 1})
        with pytest.raises(ValueError):
            moments_from_table(table, 5)

    def test_matches_formula_moments(self):
        for n in range(1, 6):
            assert (
                moments_from_table(hultman_census(n), factorial(n)) == unsigned_moments(n)
            )
            assert (
                moments_from_table(signed_hultman_census(n), 2**n * factorial(n))
                == signed_moments(n)
            )


class TestDistributionTable:
    def test_accessors(self):
        table = DistributionTable(3, "x", {2: 5, 1: 1})
        assert table.count(2) == 5
        assert table.count(7) == 0
        assert table.total() == 6
        assert table.support() == [1, 2]
