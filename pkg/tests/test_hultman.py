from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bghultman import census
from bghultman.exactmath import Polynomial, binomial, harmonic, harmonic_squares
from bghultman.hultman import (
    HookPartition,
    MomentPair,
    c_lambda,
    f_lambda_deriv_at_zero,
    f_lambda_poly,
    hook_partitions,
    hultman_bona_flynn,
    hultman_new_formula,
    r_abs_sum,
    r_coefficient,
    r_sum,
    signed_gf,
    signed_hultman,
    signed_hultman_special,
    signed_mean,
    signed_moments,
    sury_identity_check,
    unsigned_gf,
    unsigned_mean,
    unsigned_moments,
)


class TestUnsignedFormulas:
    def test_examples(self):
        assert hultman_bona_flynn(2, 1) == 1
        assert hultman_bona_flynn(3, 2) == 5
        assert hultman_bona_flynn(4, 2) == 0
        assert hultman_new_formula(2, 3) == 1
        assert hultman_new_formula(3, 2) == 5
        assert hultman_new_formula(0, 1) == 1

    def test_out_of_range_k(self):
        assert hultman_bona_flynn(3, 0) == 0
        assert hultman_bona_flynn(3, 5) == 0
        with pytest.raises(ValueError):
            hultman_new_formula(3, 0)

    def test_parity_zeros(self):
        for n in range(0, 12):
            for k in range(1, n + 2):
                if (n - k) % 2 == 0:
                    assert hultman_bona_flynn(n, k) == 0
                    assert hultman_new_formula(n, k) == 0

    def test_agreement(self):
        for n in range(0, 26):
            for k in range(1, n + 2):
                assert hultman_new_formula(n, k) == hultman_bona_flynn(n, k)

    def test_row_totals(self):
        for n in range(0, 26):
            assert sum(hultman_bona_flynn(n, k) for k in range(1, n + 2)) == factorial(n)

    def test_census_oracle(self):
        for n in range(0, 7):
            table = census.hultman_census(n)
            for k in range(1, n + 2):
                assert hultman_bona_flynn(n, k) == table.count(k)


class TestHookPartitions:
    def test_iteration_order_and_shapes(self):
        for n in range(0, 9):
            shapes = list(hook_partitions(n))
            assert shapes[-1] == HookPartition(n + 1, 0, n)
            assert len(shapes) == len(set(shapes))
            bs = [lam.b for lam in shapes[:-1]]
            assert bs == sorted(bs)
            for lam in shapes[:-1]:
                # parts (a, b, 1^(n-a-b+1)) add up to n+1
                assert lam.a + lam.b + (n - lam.a - lam.b + 1) == n + 1

    def test_invalid_shapes_rejected(self):
        with pytest.raises(ValueError):
            HookPartition(1, 2, 3)
        with pytest.raises(ValueError):
            HookPartition(4, 0, 4)
        with pytest.raises(ValueError):
            HookPartition(3, 3, 3)


class TestHookPolynomials:
    def test_f_lambda_examples(self):
        assert f_lambda_poly(HookPartition(2, 0, 1)) == Polynomial((0, 2, 1))
        assert f_lambda_poly(HookPartition(1, 1, 1)) == Polynomial((0, -1, 1))

    def test_single_row_product_form(self):
        for n in range(0, 9):
            expected = Polynomial((0, 1))
            for k in range(1, n + 1):
                expected = expected * Polynomial((2 * k, 1))
            assert f_lambda_poly(HookPartition(n + 1, 0, n)) == expected

    def test_deriv_at_zero_matches_polynomial(self):
        for n in range(0, 9):
            for lam in hook_partitions(n):
                assert f_lambda_poly(lam).coefficient(1) == f_lambda_deriv_at_zero(lam)

    def test_c_lambda_examples(self):
        assert c_lambda(HookPartition(1, 1, 1)) == Fraction(-1, 3)
        assert c_lambda(HookPartition(2, 0, 1)) == Fraction(1, 3)
        for n in range(0, 21):
            assert c_lambda(HookPartition(n + 1, 0, n)) > 0


class TestSignedFormula:
    def test_examples(self):
        assert signed_hultman(5, 1) == 1348
        assert signed_hultman(8, 3) == 2325740
        assert signed_hultman(1, 2) == 1

    def test_out_of_range_k(self):
        assert signed_hultman(3, 0) == 0
        assert signed_hultman(3, 5) == 0

    def test_census_oracle(self):
        for n in range(0, 6):
            table = census.signed_hultman_census(n)
            for k in range(1, n + 2):
                assert signed_hultman(n, k) == table.count(k)

    def test_row_totals(self):
        for n in range(0, 26):
            assert sum(signed_hultman(n, k) for k in range(1, n + 2)) == 2**n * factorial(n)

    def test_special_cases(self):
        assert signed_hultman_special(4, 5) == 1
        assert signed_hultman_special(4, 4) == 10 == binomial(5, 2)
        assert signed_hultman_special(4, 3) == 65
        for n in range(1, 31):
            assert signed_hultman(n, n + 1) == signed_hultman_special(n, n + 1) == 1
            assert signed_hultman(n, n) == signed_hultman_special(n, n)
            if n >= 2:
                assert signed_hultman(n, n - 1) == signed_hultman_special(n, n - 1)

    def test_special_case_domain(self):
        with pytest.raises(ValueError):
            signed_hultman_special(4, 2)
        with pytest.raises(ValueError):
            signed_hultman_special(0, -1)


class TestGeneratingFunctions:
    def test_unsigned_examples(self):
        assert unsigned_gf(1) == Polynomial((0, 0, 1))
        assert unsigned_gf(2) == Polynomial((0, 1, 0, 1))

    def test_signed_examples(self):
        assert signed_gf(1) == Polynomial((0, 1, 1))
        assert signed_gf(3) == Polynomial((0, 20, 21, 6, 1))

    def test_mass_at_one(self):
        for n in range(0, 13):
            assert unsigned_gf(n).evaluate(1) == factorial(n)
        for n in range(0, 11):
            assert signed_gf(n).evaluate(1) == 2**n * factorial(n)

    def test_coefficients_match_closed_forms(self):
        # For k outside 1..n+1 both routes give zero.
        for n in range(0, 16):
            F, G = unsigned_gf(n), signed_gf(n)
            for k in range(0, n + 3):
                assert F.coefficient(k) == hultman_bona_flynn(n, k)
                assert G.coefficient(k) == signed_hultman(n, k)

    def test_unsigned_derivatives_closed_forms(self):
        # First and second derivative of the unsigned generating function at 1,
        # against their harmonic-number expressions.
        for n in range(0, 16):
            F = unsigned_gf(n)
            den = 2 * binomial(n + 2, 2)
            sign = -1 if (n - 1) % 2 else 1
            d1_expected = Fraction(
                factorial(n + 2) * harmonic(n + 2) + sign * factorial(n), den
            )
            assert Fraction(F.derivative().evaluate(1)) == d1_expected
            sign2 = 1 if n % 2 == 0 else -1
            d2_expected = (
                factorial(n + 2) * (harmonic(n + 2) ** 2 - harmonic_squares(n + 2))
                + 2 * sign2 * factorial(n) * (harmonic(n) - 1)
            ) / den
            assert Fraction(F.derivative().derivative().evaluate(1)) == d2_expected


def gf_moments(poly):
    total = Fraction(poly.evaluate(1))
    d1 = Fraction(poly.derivative().evaluate(1))
    d2 = Fraction(poly.derivative().derivative().evaluate(1))
    mean = d1 / total
    return MomentPair(mean, mean + d2 / total - mean * mean)


class TestMoments:
    def test_unsigned_examples(self):
        assert unsigned_moments(1) == MomentPair(Fraction(2), Fraction(0))
        assert unsigned_mean(2) == 2
        assert harmonic(2) + Fraction(1, 2) == 2

    def test_signed_examples(self):
        assert signed_moments(1) == MomentPair(Fraction(3, 2), Fraction(1, 4))

    def test_defined_at_zero(self):
        assert unsigned_moments(0) == MomentPair(Fraction(1), Fraction(0))
        assert signed_moments(0) == MomentPair(Fraction(1), Fraction(0))

    def test_matches_generating_functions(self):
        for n in range(0, 13):
            assert gf_moments(unsigned_gf(n)) == unsigned_moments(n)
            assert gf_moments(signed_gf(n)) == signed_moments(n)

    def test_census_oracle(self):
        for n in range(1, 6):
            table = census.hultman_census(n)
            assert census.moments_from_table(table, factorial(n)) == unsigned_moments(n)
            stable = census.signed_hultman_census(n)
            assert census.moments_from_table(stable, 2**n * factorial(n)) == signed_moments(n)


class TestRCoefficients:
    def test_example(self):
        assert r_coefficient(1, 1, 1) == Fraction(-1, 6)

    def test_domain(self):
        with pytest.raises(ValueError):
            r_coefficient(3, 1, 2)
        with pytest.raises(ValueError):
            r_coefficient(3, 4, 1)

    def test_grouped_sum_matches_direct(self):
        for n in range(0, 21):
            direct = sum(
                (
                    r_coefficient(n, a, b)
                    for b in range(1, (n + 1) // 2 + 1)
                    for a in range(b, n + 2 - b)
                ),
                Fraction(0),
            )
            assert r_sum(n) == direct

    def test_abs_sum_bound(self):
        for n in range(0, 31):
            bound = Fraction(2) * (1 - Fraction(1, 2**n)) / (n + 2)
            assert r_abs_sum(n) <= bound

    def test_mean_uses_r_sum(self):
        for n in range(0, 9):
            expected = harmonic(2 * n + 1) - harmonic(n) / 2 - r_sum(n)
            assert signed_mean(n) == expected


class TestSuryIdentity:
    def test_examples(self):
        assert sury_identity_check(1) == (0, 0)
        assert sury_identity_check(2) == (Fraction(3, 2), Fraction(3, 2))
        assert sury_identity_check(4) == (Fraction(5, 3), Fraction(5, 3))

    def test_range(self):
        for n in range(0, 51):
            lhs, rhs = sury_identity_check(n)
            assert lhs == rhs


@given(st.integers(0, 20), st.integers(-2, 25))
@settings(max_examples=120)
def test_signed_nonnegative_and_bounded(n, k):
    value = signed_hultman(n, k)
    assert value >= 0
    if k < 1 or k > n + 1:
        assert value == 0
