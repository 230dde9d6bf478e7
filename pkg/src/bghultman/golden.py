"""Golden reference data for the verification suites.

Signed cycle-count distributions for n = 1..11, stored as decimal strings so
the fixture is exact, self-contained, and independent of every code path it
checks.  Row n lists the counts for k = 1..n+1.
"""

from __future__ import annotations

SIGNED_CYCLE_COUNTS: dict[int, tuple[str, ...]] = {
    1: ("1", "1"),
    2: ("4", "3", "1"),
    3: ("20", "21", "6", "1"),
    4: ("148", "160", "65", "10", "1"),
    5: ("1348", "1620", "701", "155", "15", "1"),
    6: ("15104", "19068", "9324", "2247", "315", "21", "1"),
    7: ("198144", "264420", "138016", "38029", "5908", "574", "28", "1"),
    8: ("2998656", "4166880", "2325740", "692088", "124029", "13524", "966", "36", "1"),
    9: (
        "51290496",
        "74011488",
        "43448940",
        "13945700",
        "2723469",
        "344961",
        "27930",
        "1530",
        "45",
        "1",
    ),
    10: (
        "979732224",
        "1459381440",
        "897020784",
        "305142068",
        "64711856",
        "8996295",
        "850905",
        "53262",
        "2310",
        "55",
        "1",
    ),
    11: (
        "20661458688",
        "31674232128",
        "20241273264",
        "7255047116",
        "1640552028",
        "249029717",
        "26004330",
        "1910403",
        "95304",
        "3355",
        "66",
        "1",
    ),
}


def golden_value(n: int, k: int) -> int:
    """The reference signed count for (n, k), as an exact integer."""
    return int(SIGNED_CYCLE_COUNTS[n][k - 1])
