"""Closed-form cycle counts for breakpoint graphs, and their exact moments.

Unsigned counts come in two equivalent forms: a quotient of a Stirling
number of the first kind by a binomial, and an average of falling-factorial
coefficients.  Signed counts sum over hook-shaped partitions (a, b, 1^m) of
n+1, combining three ingredients per partition: a rational weight, a
coefficient of the hook polynomial F, and the linear coefficient F'(0).
Generating functions for both cases yield exact means and variances, which
are also available directly as harmonic-number formulas.

All arithmetic is exact; any inexact internal division raises
ExactnessError, which always indicates a bug rather than bad input.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterator

from .exactmath import (
    ExactnessError,
    Polynomial,
    binomial,
    exact_div,
    harmonic,
    harmonic_squares,
    linear_product,
    rising_factorial_poly,
    shifted_falling_factorial_poly,
    stirling_first,
)

__all__ = [
    "HookPartition",
    "MomentPair",
    "hook_partitions",
    "hultman_bona_flynn",
    "hultman_new_formula",
    "f_lambda_poly",
    "f_lambda_deriv_at_zero",
    "c_lambda",
    "signed_hultman",
    "signed_hultman_special",
    "unsigned_gf",
    "signed_gf",
    "unsigned_mean",
    "unsigned_variance",
    "unsigned_moments",
    "signed_mean",
    "signed_variance",
    "signed_moments",
    "r_coefficient",
    "r_sum",
    "r_abs_sum",
    "sury_identity_check",
]


@dataclass(frozen=True)
class HookPartition:
    """Hook-shaped partition (a, b, 1^(n-a-b+1)) of n+1.

    Either a >= b >= 1 with a + b <= n+1, or (a, b) = (n+1, 0) for the
    single-row shape.
    """

    a: int
    b: int
    n: int

    def __post_init__(self) -> None:
        ok_hook = self.b >= 1 and self.a >= self.b and self.a + self.b <= self.n + 1
        ok_row = self.a == self.n + 1 and self.b == 0
        if not (ok_hook or ok_row):
            raise ValueError(f"({self.a}, {self.b}) is not a hook shape for n={self.n}")


@dataclass(frozen=True)
class MomentPair:
    mean: Fraction
    variance: Fraction

    def __post_init__(self) -> None:
        if self.variance < 0:
            raise ValueError("variance must be >= 0")


def hook_partitions(n: int) -> Iterator[HookPartition]:
    """All hook shapes for n, b ascending then a ascending, (n+1, 0) last."""
    for b in range(1, (n + 1) // 2 + 1):
        for a in range(b, n + 2 - b):
            yield HookPartition(a, b, n)
    yield HookPartition(n + 1, 0, n)


def hultman_bona_flynn(n: int, k: int) -> int:
    """Unsigned permutations of n elements with k breakpoint-graph cycles.

    Equals stirling_first(n+2, k) / C(n+2, 2) when n - k is odd, else 0.
    The division is always exact.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if k < 1 or k > n + 1 or (n - k) % 2 == 0:
        return 0
    return exact_div(stirling_first(n + 2, k), binomial(n + 2, 2))


@lru_cache(maxsize=None)
def _falling_sum_poly(n: int) -> Polynomial:
    # Sum over i = 1..n+1 of the length-(n+1) falling factorial shifted by
    # n-i+1; dividing its coefficients by n+1 gives the unsigned counts.
    total = Polynomial.zero()
    for i in range(1, n + 2):
        total = total + shifted_falling_factorial_poly(n - i + 1, n + 1)
    return total


def hultman_new_formula(n: int, k: int) -> int:
    """Unsigned count via the averaged falling-factorial coefficients.

    Agrees with hultman_bona_flynn everywhere; kept as an independent route
    because the two are cross-checked in the verification suites.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if not 1 <= k <= n + 1:
        raise ValueError(f"k={k} outside 1..{n + 1}")
    return exact_div(_falling_sum_poly(n).coefficient(k), n + 1)


def f_lambda_poly(lam: HookPartition) -> Polynomial:
    """Hook polynomial F for a shape of n+1.

    Product form with integer coefficients:
    (x+2a-2)(x+2a-4)...(x+2b) times the falling factorial of length
    n+1-a+b starting at x+2b-2.  The first factor absorbs the power of two
    attached to the half-argument falling factorial.
    """
    a, b, n = lam.a, lam.b, lam.n
    offsets = [2 * j for j in range(b, a)]
    offsets += [2 * b - 2 - t for t in range(n + 1 - a + b)]
    return linear_product(offsets)


def f_lambda_deriv_at_zero(lam: HookPartition) -> int:
    """Linear coefficient F'(0) of the hook polynomial, in closed form.

    The single-row shape uses the explicit value 2^n * n!, sidestepping the
    (2b - 1) = -1 denominator the hook-case expression would need at b = 0.
    """
    a, b, n = lam.a, lam.b, lam.n
    if b == 0:
        return 2**n * factorial(n)
    sign = -1 if (n - a - b) % 2 else 1
    return (
        sign
        * 2 ** (a - b)
        * (factorial(a - 1) // factorial(b - 1))
        * factorial(2 * b - 2)
        * factorial(n - a - b + 2)
    )


def c_lambda(lam: HookPartition) -> Fraction:
    """Rational weight of a hook shape (zonal expansion coefficient)."""
    a, b, n = lam.a, lam.b, lam.n
    m = n + 1
    if b == 0:
        return Fraction(2**m * factorial(m), factorial(2 * m))
    sign = -1 if (m + a - b + 1) % 2 else 1
    num = sign * 2 ** (a - b + 1) * m * (2 * a - 2 * b + 1) * factorial(a - 1)
    den = (
        (m + a - b + 1)
        * (m + a - b)
        * (m - a + b)
        * (m - a + b - 1)
        * factorial(m - a - b)
        * factorial(2 * a - 1)
        * factorial(b - 1)
    )
    return Fraction(num, den)


def _exact_int(value: Fraction, what: str) -> int:
    if value.denominator != 1:
        raise ExactnessError(f"{what} is not an integer: {value}")
    return value.numerator


@lru_cache(maxsize=None)
def signed_gf(n: int) -> Polynomial:
    """Generating function of signed counts: sum of c * F(x) * F'(0)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    total = Polynomial.zero()
    for lam in hook_partitions(n):
        weight = c_lambda(lam) * f_lambda_deriv_at_zero(lam)
        total = total + f_lambda_poly(lam) * weight
    coeffs = tuple(_exact_int(Fraction(c), f"signed count coefficient of x^{k}")
                   for k, c in enumerate(total.coeffs))
    return Polynomial(coeffs)


def signed_hultman(n: int, k: int) -> int:
    """Signed permutations of n elements with k breakpoint-graph cycles."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if k < 1 or k > n + 1:
        return 0
    return signed_gf(n).coefficient(k)


def signed_hultman_special(n: int, k: int) -> int:
    """Closed forms for the top three cycle counts.

    k = n+1: only the identity.  k = n: C(n+1, 2), one 2-cycle.  k = n-1:
    5*C(n+1, 4) + 4*C(n+1, 3), two 2-cycles or one 3-cycle.
    """
    if k == n + 1:
        return 1
    if k == n:
        if n < 1:
            raise ValueError("k = n requires n >= 1")
        return binomial(n + 1, 2)
    if k == n - 1:
        if n < 1:
            raise ValueError("k = n-1 requires n >= 1")
        return 5 * binomial(n + 1, 4) + 4 * binomial(n + 1, 3)
    raise ValueError(f"k={k} is not one of n+1, n, n-1 for n={n}")


@lru_cache(maxsize=None)
def unsigned_gf(n: int) -> Polynomial:
    """Generating function of unsigned counts.

    (rising factorial of length n+2 minus falling factorial of length n+2)
    divided by 2*C(n+2, 2); coefficients are the per-k counts.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    diff = rising_factorial_poly(n + 2) - shifted_falling_factorial_poly(0, n + 2)
    den = 2 * binomial(n + 2, 2)
    coeffs = tuple(exact_div(c, den) for c in diff.coeffs)
    return Polynomial(coeffs)


def unsigned_mean(n: int) -> Fraction:
    """Expected cycle count over unsigned permutations: H_n + 1/floor((n+2)/2)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return harmonic(n) + Fraction(1, (n + 2) // 2)


def unsigned_variance(n: int) -> Fraction:
    """Exact variance of the unsigned cycle count."""
    if n < 0:
        raise ValueError("n must be >= 0")
    sign = 1 if n % 2 == 0 else -1
    d = (n + 1) * (n + 2)
    return (
        harmonic(n + 2)
        - harmonic_squares(n + 2)
        + Fraction(sign, d) * (2 * harmonic(n + 2) + 2 * harmonic(n) - 3)
        - Fraction(1, d * d)
    )


def unsigned_moments(n: int) -> MomentPair:
    return MomentPair(unsigned_mean(n), unsigned_variance(n))


def r_coefficient(n: int, a: int, b: int) -> Fraction:
    """Correction coefficient r_n(a, b) in the signed mean and variance.

    Defined for a >= b >= 1 with a + b <= n+1 (the index set A_n).
    """
    if not (a >= b >= 1 and a + b <= n + 1):
        raise ValueError(f"(a, b) = ({a}, {b}) outside the index set for n={n}")
    sign = -1 if (n + a - b) % 2 else 1
    num = (
        sign
        * (n + 1)
        * (2 * a - 2 * b + 1)
        * factorial(a - 1)
        * factorial(2 * b - 2)
        * factorial(n - a - b + 2)
    )
    den = (
        2 ** (n - a + b - 1)
        * factorial(n)
        * factorial(b - 1)
        * (n + a - b + 2)
        * (n + a - b + 1)
        * (n - a + b + 1)
        * (n - a + b)
    )
    return Fraction(num, den)


def r_sum(n: int) -> Fraction:
    """Sum of r_n(a, b) over the whole index set A_n.

    Grouped by k = a - b so the inner sums stay in integer arithmetic;
    direct term-by-term Fraction summation is too slow for n ~ 1000.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    fact = [1] * (n + 3)
    for i in range(1, n + 3):
        fact[i] = fact[i - 1] * i
    total = Fraction(0)
    for k in range(0, n):
        inner = 0
        for b in range(1, (n + 1 - k) // 2 + 1):
            a = k + b
            inner += (fact[a - 1] // fact[b - 1]) * fact[2 * b - 2] * fact[n - a - b + 2]
        if inner == 0:
            continue
        sign = -1 if (n + k) % 2 else 1
        den = (
            2 ** (n - k - 1)
            * fact[n]
            * (n + k + 2)
            * (n + k + 1)
            * (n - k + 1)
            * (n - k)
        )
        total += Fraction(sign * (n + 1) * (2 * k + 1) * inner, den)
    return total


def r_abs_sum(n: int) -> Fraction:
    """Sum of |r_n(a, b)| over A_n; bounded by 2(1 - 2^-n)/(n+2)."""
    total = Fraction(0)
    for b in range(1, (n + 1) // 2 + 1):
        for a in range(b, n + 2 - b):
            total += abs(r_coefficient(n, a, b))
    return total


def signed_mean(n: int) -> Fraction:
    """Expected cycle count over signed permutations."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return harmonic(2 * n + 1) - harmonic(n) / 2 - r_sum(n)


def _odd_reciprocal_squares(n: int) -> Fraction:
    # Sum of 1/(2k+1)^2 for k = 0..n.
    return harmonic_squares(2 * n + 1) - harmonic_squares(n) / 4


def signed_variance(n: int) -> Fraction:
    """Exact variance of the signed cycle count."""
    if n < 0:
        raise ValueError("n must be >= 0")
    h = harmonic(2 * n + 1)
    hn = harmonic(n)
    rsum = Fraction(0)
    weighted = Fraction(0)
    for b in range(1, (n + 1) // 2 + 1):
        for a in range(b, n + 2 - b):
            r = r_coefficient(n, a, b)
            rsum += r
            weighted += r * (
                2 * h
                - hn
                - 2 * harmonic(2 * a - 1)
                + 2 * harmonic(n - a - b + 1)
                + harmonic(a - 1)
                - harmonic(b - 1)
                - 1
            )
    return h - hn / 2 - _odd_reciprocal_squares(n) - rsum * rsum + weighted


def signed_moments(n: int) -> MomentPair:
    return MomentPair(signed_mean(n), signed_variance(n))


def sury_identity_check(n: int) -> tuple[Fraction, Fraction]:
    """Both sides of the alternating inverse-binomial identity.

    Left: sum over i of (-1)^i / C(n, i).  Right: (1 + (-1)^n)(n+1)/(n+2).
    The two are provably equal; this evaluates them independently.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    lhs = Fraction(0)
    for i in range(n + 1):
        term = Fraction(1, binomial(n, i))
        lhs += -term if i % 2 else term
    rhs = Fraction((1 + (-1 if n % 2 else 1)) * (n + 1), n + 2)
    return lhs, rhs
