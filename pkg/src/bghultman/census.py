"""Exhaustive-census engines producing exact distribution tables.

A census walks a full permutation group (or a perfect-matching family) and
tallies an exact statistic.  Enumeration splits by first image into disjoint
ranges, partial tables merge by per-key addition, and exact arithmetic makes
the merge order irrelevant, so parallel and sequential runs produce
identical tables.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from . import bpgraph, perm
from .hultman import MomentPair
from .perm import GuardError

__all__ = [
    "DistributionTable",
    "hultman_census",
    "signed_hultman_census",
    "odd_hultman_census",
    "matching_census",
    "moments_from_table",
    "UNSIGNED_CENSUS_GUARD",
    "SIGNED_CENSUS_GUARD",
    "MATCHING_CENSUS_GUARD",
]

UNSIGNED_CENSUS_GUARD = 10
SIGNED_CENSUS_GUARD = 8
MATCHING_CENSUS_GUARD = 6


@dataclass(frozen=True)
class DistributionTable:
    """Exact map k -> count for a named statistic at a given n.

    Absent keys mean zero; stored counts are positive.
    """

    n: int
    statistic: str
    counts: Mapping[int, int]

    def count(self, k: int) -> int:
        return self.counts.get(k, 0)

    def total(self) -> int:
        return sum(self.counts.values())

    def support(self) -> list[int]:
        return sorted(self.counts)


def _tally(n: int, signed: bool, statistic: str, first: int | None) -> dict[int, int]:
    it = perm.iter_images_signed(n, first) if signed else perm.iter_images_unsigned(n, first)
    counts: dict[int, int] = {}
    if statistic == "cycles":
        count_of = bpgraph.cycle_count_images
        for images in it:
            k = count_of(images)
            counts[k] = counts.get(k, 0) + 1
    elif statistic == "odd":
        lengths_of = bpgraph.cycle_lengths_images
        for images in it:
            k = sum(1 for length in lengths_of(images) if length % 2 == 1)
            counts[k] = counts.get(k, 0) + 1
    else:
        raise ValueError(f"unknown statistic {statistic!r}")
    return counts


def _tally_worker(args: tuple[int, bool, str, int | None]) -> dict[int, int]:
    return _tally(*args)


def _merge(parts: list[dict[int, int]]) -> dict[int, int]:
    merged: dict[int, int] = {}
    for part in parts:
        for k, v in part.items():
            merged[k] = merged.get(k, 0) + v
    return merged


def _run_census(
    n: int, signed: bool, statistic: str, label: str, guard: int, jobs: int, force: bool
) -> DistributionTable:
    if n < 0:
        raise ValueError("n must be >= 0")
    if n > guard and not force:
        raise GuardError(
            f"n={n} exceeds the census guard ({guard}); pass force=True to run anyway"
        )
    if jobs <= 1 or n == 0:
        counts = _tally(n, signed, statistic, None)
    else:
        tasks = [(n, signed, statistic, first) for first in perm.first_values(n, signed)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            counts = _merge(list(pool.map(_tally_worker, tasks)))
    return DistributionTable(n, label, counts)


def hultman_census(n: int, jobs: int = 1, force: bool = False) -> DistributionTable:
    """Counts of breakpoint-graph cycle numbers over all of S_n."""
    return _run_census(n, False, "cycles", "unsigned_cycles", UNSIGNED_CENSUS_GUARD, jobs, force)


def signed_hultman_census(n: int, jobs: int = 1, force: bool = False) -> DistributionTable:
    """Counts of breakpoint-graph cycle numbers over all signed permutations."""
    return _run_census(n, True, "cycles", "signed_cycles", SIGNED_CENSUS_GUARD, jobs, force)


def odd_hultman_census(n: int, jobs: int = 1, force: bool = False) -> DistributionTable:
    """Counts of odd-length breakpoint-graph cycles over S_n.

    No closed form is known for these numbers; the census is the only
    implementation by design, not a placeholder.
    """
    return _run_census(n, False, "odd", "unsigned_odd_cycles", UNSIGNED_CENSUS_GUARD, jobs, force)


def matching_census(n: int, force: bool = False) -> dict[tuple[int, int], int]:
    """Bivariate cycle census over perfect matchings of 0..2n+1.

    For each matching tau, tallies the pair (cycles of grey union tau,
    cycles of tau union shifted-grey).  The slice with second coordinate 1
    is exactly the signed cycle-count distribution for n, since those tau
    are the black matchings of valid breakpoint graphs.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if n > MATCHING_CENSUS_GUARD and not force:
        raise GuardError(
            f"n={n} exceeds the matching census guard ({MATCHING_CENSUS_GUARD})"
        )
    grey = bpgraph.grey_matching(n).partner
    shifted = bpgraph.grey_complement_matching(n).partner
    size = 2 * n + 2
    counts: dict[tuple[int, int], int] = {}
    seen = bytearray(size)
    for tau in bpgraph.iter_partner_tuples(n + 1):
        i = 0
        for v in range(size):
            if not seen[v]:
                i += 1
                w = v
                while not seen[w]:
                    seen[w] = 1
                    u = grey[w]
                    seen[u] = 1
                    w = tau[u]
        j = 0
        for v in range(size):
            seen[v] = 0
        for v in range(size):
            if not seen[v]:
                j += 1
                w = v
                while not seen[w]:
                    seen[w] = 1
                    u = tau[w]
                    seen[u] = 1
                    w = shifted[u]
        for v in range(size):
            seen[v] = 0
        key = (i, j)
        counts[key] = counts.get(key, 0) + 1
    return counts


def moments_from_table(table: DistributionTable, total: int) -> MomentPair:
    """Exact mean and variance of a distribution table.

    ``total`` is the expected mass (e.g. the group order); a mismatch with
    the table's actual total is an error, not a normalisation.
    """
    if table.total() != total:
        raise ValueError(f"table total {table.total()} != expected {total}")
    mean = Fraction(sum(k * v for k, v in table.counts.items()), total)
    second = Fraction(sum(k * k * v for k, v in table.counts.items()), total)
    return MomentPair(mean, second - mean * mean)
