"""Unsigned and signed permutations.

A signed permutation of n elements stores, for each position 1..n, a signed
image whose absolute values form a bijection of {1..n}.  Unsigned
permutations are the all-positive special case of the same type.  The module
provides validation, group operations, disjoint-cycle structure,
deterministic (lexicographic) enumeration streams that can be split by first
image for parallel consumption, and a brute-force counter of cycle
factorisations used as an oracle elsewhere.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

__all__ = [
    "PermutationError",
    "GuardError",
    "SignedPermutation",
    "CycleDecomposition",
    "validate",
    "identity",
    "compose",
    "inverse",
    "conjugate",
    "cycle_decomposition",
    "cycle_count",
    "iter_images_unsigned",
    "iter_images_signed",
    "first_values",
    "enumerate_unsigned",
    "enumerate_signed",
    "count_factorizations",
    "parse_permutation",
    "format_permutation",
    "UNSIGNED_ENUMERATION_GUARD",
    "SIGNED_ENUMERATION_GUARD",
    "FACTORIZATION_GUARD",
]

UNSIGNED_ENUMERATION_GUARD = 12
SIGNED_ENUMERATION_GUARD = 9
FACTORIZATION_GUARD = 7


class PermutationError(ValueError):
    """Invalid permutation data or mismatched operands."""


class GuardError(RuntimeError):
    """An exhaustive enumeration was requested above its size guard.

    Pass force=True to run anyway; guards exist to catch accidental
    factorial blowups, not to forbid large runs.
    """


@dataclass(frozen=True)
class SignedPermutation:
    """Permutation of {1..n} with per-element signs, as a tuple of images."""

    images: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.images)

    @property
    def is_unsigned(self) -> bool:
        return all(v > 0 for v in self.images)

    def __str__(self) -> str:
        return format_permutation(self)


@dataclass(frozen=True)
class CycleDecomposition:
    """Disjoint cycles covering {1..n}, in canonical form.

    Each cycle is rotated so its minimum element comes first, and cycles are
    sorted by their minima, so equal decompositions compare equal.
    """

    cycles: tuple[tuple[int, ...], ...]

    @property
    def count(self) -> int:
        return len(self.cycles)


def validate(images: Iterable[int]) -> SignedPermutation:
    """Check the bijection invariants and build a permutation.

    Raises PermutationError naming the first offending position.
    """
    imgs = tuple(images)
    n = len(imgs)
    seen = [False] * (n + 1)
    for pos, v in enumerate(imgs, start=1):
        if v == 0:
            raise PermutationError(f"position {pos}: image 0 is not allowed")
        a = abs(v)
        if a > n:
            raise PermutationError(f"position {pos}: |{v}| outside 1..{n}")
        if seen[a]:
            raise PermutationError(f"position {pos}: duplicate absolute value {a}")
        seen[a] = True
    return SignedPermutation(imgs)


def identity(n: int) -> SignedPermutation:
    return SignedPermutation(tuple(range(1, n + 1)))


def compose(sigma: SignedPermutation, pi: SignedPermutation) -> SignedPermutation:
    """sigma applied after pi (composition right to left)."""
    if sigma.n != pi.n:
        raise PermutationError(f"size mismatch: {sigma.n} vs {pi.n}")
    s = sigma.images
    out = []
    for v in pi.images:
        w = s[v - 1] if v > 0 else -s[-v - 1]
        out.append(w)
    return SignedPermutation(tuple(out))


def inverse(pi: SignedPermutation) -> SignedPermutation:
    out = [0] * pi.n
    for pos, v in enumerate(pi.images, start=1):
        if v > 0:
            out[v - 1] = pos
        else:
            out[-v - 1] = -pos
    return SignedPermutation(tuple(out))


def conjugate(pi: SignedPermutation, sigma: SignedPermutation) -> SignedPermutation:
    """sigma o pi o sigma^{-1}: relabels pi's cycle structure through sigma."""
    return compose(compose(sigma, pi), inverse(sigma))


def cycle_decomposition(pi: SignedPermutation) -> CycleDecomposition:
    """Canonical disjoint-cycle decomposition; fixed points are 1-cycles."""
    if not pi.is_unsigned:
        raise PermutationError("cycle decomposition requires an unsigned permutation")
    imgs = pi.images
    n = pi.n
    seen = [False] * (n + 1)
    cycles = []
    for start in range(1, n + 1):
        if seen[start]:
            continue
        cyc = []
        j = start
        while not seen[j]:
            seen[j] = True
            cyc.append(j)
            j = imgs[j - 1]
        cycles.append(tuple(cyc))
    return CycleDecomposition(tuple(cycles))


def cycle_count(pi: SignedPermutation) -> int:
    return cycle_decomposition(pi).count


def _tuple_cycle_count(images: Sequence[int]) -> int:
    # Unsigned raw-tuple fast path.
    n = len(images)
    seen = bytearray(n)
    c = 0
    for i in range(n):
        if not seen[i]:
            c += 1
            j = i
            while not seen[j]:
                seen[j] = 1
                j = images[j] - 1
    return c


def iter_images_unsigned(n: int, first: int | None = None) -> Iterator[tuple[int, ...]]:
    """Raw lexicographic stream of unsigned image tuples (census hot path).

    With ``first`` given, only permutations starting with that image are
    produced; the full stream is the concatenation over first = 1..n.
    """
    if first is None:
        yield from itertools.permutations(range(1, n + 1))
        return
    rest = [v for v in range(1, n + 1) if v != first]
    for tail in itertools.permutations(rest):
        yield (first,) + tail


def iter_images_signed(n: int, first: int | None = None) -> Iterator[tuple[int, ...]]:
    """Raw lexicographic stream of signed image tuples (census hot path)."""
    if n == 0:
        yield ()
        return
    values = list(range(-n, 0)) + list(range(1, n + 1))
    used = [False] * (n + 1)
    acc = [0] * n

    def rec(pos: int) -> Iterator[tuple[int, ...]]:
        if pos == n:
            yield tuple(acc)
            return
        for v in values:
            a = v if v > 0 else -v
            if used[a]:
                continue
            used[a] = True
            acc[pos] = v
            yield from rec(pos + 1)
            used[a] = False

    if first is None:
        yield from rec(0)
    else:
        a = abs(first)
        if not 1 <= a <= n:
            raise PermutationError(f"first image {first} outside range for n={n}")
        used[a] = True
        acc[0] = first
        yield from rec(1)


def first_values(n: int, signed: bool) -> tuple[int, ...]:
    """First-image values splitting the enumeration into disjoint ranges."""
    if signed:
        return tuple(range(-n, 0)) + tuple(range(1, n + 1))
    return tuple(range(1, n + 1))


def enumerate_unsigned(n: int, force: bool = False) -> Iterator[SignedPermutation]:
    """All n! unsigned permutations in lexicographic image order."""
    if n > UNSIGNED_ENUMERATION_GUARD and not force:
        raise GuardError(
            f"n={n} exceeds the unsigned enumeration guard "
            f"({UNSIGNED_ENUMERATION_GUARD}); pass force=True to run anyway"
        )
    return (SignedPermutation(t) for t in iter_images_unsigned(n))


def enumerate_signed(n: int, force: bool = False) -> Iterator[SignedPermutation]:
    """All 2^n * n! signed permutations in lexicographic image order."""
    if n > SIGNED_ENUMERATION_GUARD and not force:
        raise GuardError(
            f"n={n} exceeds the signed enumeration guard "
            f"({SIGNED_ENUMERATION_GUARD}); pass force=True to run anyway"
        )
    return (SignedPermutation(t) for t in iter_images_signed(n))


def count_factorizations(n: int, k: int, force: bool = False) -> int:
    """Count factorisations of the fixed (n+1)-cycle (1 2 ... n+1).

    Counts permutations omega of n+1 elements with k disjoint cycles such
    that beta = rho o omega for some (n+1)-cycle rho, i.e. beta o omega^{-1}
    is a single (n+1)-cycle.  Brute force over all (n+1)! candidates; the
    result equals the count of unsigned permutations of n elements whose
    breakpoint graph has k alternating cycles.
    """
    if not 1 <= k <= n + 1:
        raise ValueError(f"k={k} outside 1..{n + 1}")
    if n > FACTORIZATION_GUARD and not force:
        raise GuardError(
            f"n={n} exceeds the factorisation guard ({FACTORIZATION_GUARD})"
        )
    beta = tuple(range(2, n + 2)) + (1,)
    count = 0
    rho = [0] * (n + 1)
    for omega in itertools.permutations(range(1, n + 2)):
        if _tuple_cycle_count(omega) != k:
            continue
        # rho = beta o omega^{-1} without materialising the inverse:
        # omega(i) = w implies rho(w) = beta(i).
        for i, w in enumerate(omega):
            rho[w - 1] = beta[i]
        if _tuple_cycle_count(rho) == 1:
            count += 1
    return count


def parse_permutation(text: str) -> SignedPermutation:
    """Parse comma- or space-separated signed integers, e.g. "-5 1 2 4"."""
    tokens = text.replace(",", " ").split()
    try:
        images = [int(t) for t in tokens]
    except ValueError as exc:
        raise PermutationError(f"cannot parse permutation from {text!r}") from exc
    return validate(images)


def format_permutation(pi: SignedPermutation) -> str:
    return " ".join(str(v) for v in pi.images)
