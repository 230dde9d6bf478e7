"""Exact arithmetic building blocks: big integers, rationals, dense polynomials.

Every count and moment in this library is exact.  Integers are Python's
arbitrary-precision ``int`` and rationals are ``fractions.Fraction``; the
aliases ``ExactInt`` / ``ExactRational`` mark intent in signatures.  The
``Polynomial`` class stores exact coefficients densely in ascending-degree
order, which is the right shape for factorial polynomials and generating
functions whose degree stays small (at most a few dozen here).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterable, Union

ExactInt = int
ExactRational = Fraction
Scalar = Union[int, Fraction]

__all__ = [
    "ExactInt",
    "ExactRational",
    "Scalar",
    "ExactnessError",
    "exact_div",
    "Polynomial",
    "linear_product",
    "rising_factorial_poly",
    "shifted_falling_factorial_poly",
    "stirling_first",
    "harmonic",
    "harmonic_squares",
    "binomial",
]


class ExactnessError(ArithmeticError):
    """A division that must be exact left a remainder; indicates a bug."""


def exact_div(a: int, b: int) -> int:
    """Integer division that refuses to round."""
    q, r = divmod(a, b)
    if r:
        raise ExactnessError(f"inexact division: {a} / {b}")
    return q


@dataclass(frozen=True)
class Polynomial:
    """Dense univariate polynomial with exact coefficients.

    ``coeffs[k]`` is the coefficient of x^k.  The tuple carries no trailing
    zeros, so the zero polynomial is the empty tuple and ``degree`` of zero
    is -1.  Coefficients may be ints or Fractions; the two interoperate and
    compare equal when they represent the same value.
    """

    coeffs: tuple[Scalar, ...]

    def __post_init__(self) -> None:
        c = self.coeffs if isinstance(self.coeffs, tuple) else tuple(self.coeffs)
        while c and c[-1] == 0:
            c = c[:-1]
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls(())

    @classmethod
    def constant(cls, value: Scalar) -> "Polynomial":
        return cls((value,))

    @classmethod
    def monomial(cls, degree: int, coefficient: Scalar = 1) -> "Polynomial":
        if degree < 0:
            raise ValueError("monomial degree must be >= 0")
        return cls((0,) * degree + (coefficient,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, k: int) -> Scalar:
        """Coefficient of x^k; zero beyond the degree (and for k < 0)."""
        if k < 0 or k >= len(self.coeffs):
            return 0
        return self.coeffs[k]

    def __add__(self, other: "Polynomial") -> "Polynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] += c
        return Polynomial(tuple(out))

    def __neg__(self) -> "Polynomial":
        return Polynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: "Polynomial | Scalar") -> "Polynomial":
        if isinstance(other, Polynomial):
            if self.is_zero or other.is_zero:
                return Polynomial(())
            out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if a == 0:
                    continue
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
            return Polynomial(tuple(out))
        return Polynomial(tuple(c * other for c in self.coeffs))

    def __rmul__(self, other: Scalar) -> "Polynomial":
        return self.__mul__(other)

    def evaluate(self, x: Scalar) -> Scalar:
        """Evaluate by Horner's rule; exact for int/Fraction arguments."""
        acc: Scalar = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "Polynomial":
        return Polynomial(tuple(k * c for k, c in enumerate(self.coeffs) if k > 0))


def linear_product(offsets: Iterable[Scalar]) -> Polynomial:
    """Product of linear factors (x + a) over the given offsets.

    Runs in O(len * degree) coefficient operations, which beats repeated
    generic multiplication for the factorial polynomials built here.
    """
    coeffs: list[Scalar] = [1]
    for a in offsets:
        nxt: list[Scalar] = [0] * (len(coeffs) + 1)
        for k, c in enumerate(coeffs):
            nxt[k + 1] += c
            if a != 0:
                nxt[k] += a * c
        coeffs = nxt
    return Polynomial(tuple(coeffs))


def rising_factorial_poly(n: int) -> Polynomial:
    """x(x+1)...(x+n-1); its x^k coefficient is stirling_first(n, k)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return linear_product(range(n))


def shifted_falling_factorial_poly(offset: int, length: int) -> Polynomial:
    """Product (x+offset)(x+offset-1)...(x+offset-length+1).

    With offset 0 this is the plain falling factorial, whose x^k coefficient
    is (-1)^(length-k) * stirling_first(length, k).
    """
    if length < 0:
        raise ValueError("length must be >= 0")
    return linear_product(offset - j for j in range(length))


@lru_cache(maxsize=None)
def _stirling_row(n: int) -> tuple[int, ...]:
    # Row n of the unsigned Stirling-first triangle via
    # [n, k] = [n-1, k-1] + (n-1) * [n-1, k].  Rows are immutable tuples,
    # so concurrent readers are safe once a row is cached.
    if n == 0:
        return (1,)
    prev = _stirling_row(n - 1)
    row = [0] * (n + 1)
    for k in range(1, n + 1):
        row[k] = prev[k - 1] + (n - 1) * (prev[k] if k < n else 0)
    return tuple(row)


def stirling_first(n: int, k: int) -> int:
    """Unsigned Stirling number of the first kind [n, k].

    Counts permutations of n elements with exactly k disjoint cycles.
    Returns 0 for k < 0 or k > n.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if k < 0 or k > n:
        return 0
    return _stirling_row(n)[k]


@lru_cache(maxsize=None)
def harmonic(n: int) -> Fraction:
    """H_n = 1 + 1/2 + ... + 1/n, exactly (H_0 = 0)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    total = Fraction(0)
    for i in range(1, n + 1):
        total += Fraction(1, i)
    return total


@lru_cache(maxsize=None)
def harmonic_squares(n: int) -> Fraction:
    """Sum of 1/i^2 for i = 1..n, exactly."""
    if n < 0:
        raise ValueError("n must be >= 0")
    total = Fraction(0)
    for i in range(1, n + 1):
        total += Fraction(1, i * i)
    return total


def binomial(n: int, k: int) -> int:
    """C(n, k) for n >= 0; zero outside 0 <= k <= n."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if k < 0 or k > n:
        return 0
    return comb(n, k)
