"""Odd prime labelings of the maximal prime graph R_n for n <= 50.

R_n joins i and j exactly when gcd(i, j) = 1, so every prime graph of order n
is a spanning subgraph of it. A coprimality-preserving map from ``1..n`` onto
``{1, 3, ..., 2n-1}`` therefore turns any prime labeling into an odd prime
labeling. Each table row serves a range of orders; order n uses the row's
first n entries.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import Graph, Labeling, VerificationReport, verify_labeling
from .errors import NotAPrimeLabeling, OrderOutOfRange
from .families import MaximalPrimeGraph, build_family

MAX_ORDER = 50

_ROWS = (
    ((1, 4), (
        1, 3, 5, 7,
    )),
    ((5, 7), (
        1, 3, 5, 9, 7, 11, 13,
    )),
    ((8, 10), (
        1, 3, 5, 9, 7, 15, 11, 13, 17, 19,
    )),
    ((11, 12), (
        1, 3, 5, 9, 7, 15, 11, 13, 17, 21, 19, 23,
    )),
    ((13, 16), (
        1, 3, 5, 9, 7, 15, 11, 13, 25, 21, 17, 23, 19, 27, 29, 31,
    )),
    ((17, 17), (
        1, 3, 5, 9, 7, 15, 11, 27, 25, 21, 13, 17, 19, 33, 23, 29, 31,
    )),
    ((18, 22), (
        1, 3, 5, 9, 7, 15, 11, 27, 25, 21, 17, 13, 19, 33, 35, 23, 29, 31, 37, 39, 41, 43,
    )),
    ((23, 27), (
        1, 3, 5, 9, 7, 15, 11, 27, 25, 21, 13, 45, 17, 33, 35, 19, 23, 29, 31, 37, 41, 39, 43,
        47, 49, 51, 53,
    )),
    ((28, 28), (
        1, 3, 5, 9, 7, 15, 11, 27, 25, 21, 13, 45, 17, 33, 35, 19, 23, 29, 31, 41, 55, 39, 37,
        43, 49, 51, 47, 53,
    )),
    ((29, 31), (
        1, 3, 5, 9, 7, 15, 11, 27, 25, 21, 13, 45, 17, 33, 35, 57, 23, 19, 29, 37, 55, 39, 31,
        41, 49, 51, 43, 47, 53, 59, 61,
    )),
    ((32, 33), (
        1, 3, 5, 9, 7, 15, 11, 27, 25, 21, 13, 45, 17, 33, 35, 57, 23, 19, 29, 63, 55, 39, 31,
        37, 49, 51, 41, 43, 47, 53, 59, 61, 65,
    )),
    ((34, 34), (
        1, 3, 5, 9, 7, 15, 11, 27, 25, 21, 13, 45, 17, 33, 35, 23, 19, 29, 31, 63, 55, 39, 37,
        41, 49, 51, 43, 47, 53, 59, 61, 67, 65, 57,
    )),
    ((35, 37), (
        1, 3, 5, 9, 7, 15, 11, 27, 25, 21, 13, 45, 17, 33, 35, 23, 19, 29, 31, 63, 55, 39, 37,
        41, 49, 51, 43, 47, 53, 59, 61, 69, 65, 57, 67, 71, 73,
    )),
    ((38, 38), (
        1, 3, 5, 9, 7, 15, 11, 27, 25, 21, 13, 45, 17, 33, 35, 23, 19, 75, 29, 63, 55, 39, 31,
        37, 49, 51, 41, 43, 47, 53, 59, 69, 65, 57, 61, 67, 71, 73,
    )),
    ((39, 40), (
        1, 3, 5, 9, 7, 15, 11, 27, 25, 21, 13, 45, 17, 33, 35, 23, 19, 75, 29, 63, 55, 39, 31,
        37, 49, 51, 41, 43, 47, 53, 59, 69, 65, 57, 77, 61, 67, 71, 73, 79,
    )),
    ((41, 42), (
        1, 3, 5, 9, 7, 15, 11, 27, 25, 21, 13, 45, 17, 33, 35, 81, 19, 75, 23, 63, 55, 39, 29,
        31, 49, 51, 37, 41, 43, 47, 53, 59, 65, 57, 77, 61, 67, 69, 71, 73, 79, 83,
    )),
    ((43, 43), (
        1, 3, 5, 9, 7, 15, 11, 27, 25, 21, 13, 45, 17, 33, 35, 81, 19, 75, 23, 63, 55, 39, 29,
        31, 49, 51, 37, 41, 43, 47, 53, 59, 65, 57, 77, 61, 67, 69, 85, 71, 73, 79, 83,
    )),
    ((44, 45), (
        1, 3, 5, 9, 7, 15, 11, 27, 25, 21, 13, 45, 17, 33, 35, 81, 19, 75, 23, 63, 55, 39, 31,
        29, 49, 51, 37, 41, 43, 47, 53, 59, 65, 57, 77, 61, 67, 69, 85, 71, 73, 79, 83, 87, 89,
    )),
    ((46, 46), (
        1, 3, 5, 9, 7, 15, 11, 27, 25, 21, 29, 45, 17, 33, 35, 81, 19, 75, 23, 63, 55, 39, 31,
        65, 49, 51, 37, 13, 41, 91, 43, 47, 53, 57, 77, 59, 61, 69, 85, 67, 71, 73, 79, 87, 83,
        89,
    )),
    ((47, 47), (
        1, 3, 5, 9, 7, 15, 11, 27, 25, 21, 29, 45, 17, 33, 35, 81, 19, 75, 23, 63, 55, 39, 31,
        65, 49, 51, 37, 13, 41, 91, 43, 47, 53, 57, 77, 59, 61, 69, 85, 67, 71, 73, 79, 87, 83,
        93, 89,
    )),
    ((48, 49), (
        1, 3, 5, 9, 7, 15, 11, 27, 25, 21, 29, 45, 17, 33, 35, 81, 59, 75, 23, 63, 55, 39, 31,
        65, 49, 51, 37, 13, 41, 91, 43, 47, 19, 53, 77, 57, 61, 69, 85, 67, 71, 73, 79, 87, 83,
        93, 89, 95, 97,
    )),
    ((50, 50), (
        1, 3, 5, 9, 7, 15, 11, 27, 25, 21, 29, 45, 17, 33, 35, 81, 59, 75, 23, 63, 55, 39, 31,
        65, 49, 51, 37, 99, 41, 91, 43, 47, 19, 53, 77, 57, 61, 69, 85, 67, 71, 73, 79, 87, 83,
        93, 89, 95, 97, 13,
    )),
)


@dataclass(frozen=True)
class RnRow:
    lo: int
    hi: int
    sequence: tuple[int, ...]


class RnTable:
    def __init__(self, rows):
        self.rows = tuple(RnRow(lo, hi, tuple(seq)) for (lo, hi), seq in rows)
        self.check()

    def row_for(self, n: int) -> RnRow:
        for row in self.rows:
            if row.lo <= n <= row.hi:
                return row
        raise OrderOutOfRange(f"no table row for order {n}; supported orders are 1..{MAX_ORDER}")

    def lookup(self, n: int) -> list[int]:
        return list(self.row_for(n).sequence[:n])

    def check(self) -> None:
        """Assert the row invariants; a transcription error fails here, at import."""
        expected_lo = 1
        for row in self.rows:
            assert row.lo == expected_lo and row.lo <= row.hi, f"row {row.lo}-{row.hi} breaks the partition"
            expected_lo = row.hi + 1
            seq = row.sequence
            assert len(seq) == row.hi, f"row {row.lo}-{row.hi} has {len(seq)} entries"
            assert len(set(seq)) == len(seq), f"row {row.lo}-{row.hi} repeats a label"
            assert all(x % 2 == 1 and 1 <= x <= 2 * row.hi - 1 for x in seq), f"row {row.lo}-{row.hi} label out of range"
            for n in range(row.lo, row.hi + 1):
                assert set(seq[:n]) == set(range(1, 2 * n, 2)), f"order {n}: labels are not 1..{2 * n - 1}"
            for i in range(1, row.hi + 1):
                for j in range(i + 1, row.hi + 1):
                    if math.gcd(i, j) == 1:
                        assert math.gcd(seq[i - 1], seq[j - 1]) == 1, f"row {row.lo}-{row.hi}: pair ({i}, {j})"
        assert expected_lo == MAX_ORDER + 1, "rows do not cover 1..50"


TABLE = RnTable(_ROWS)


def _check_order(n: int) -> None:
    if not 1 <= n <= MAX_ORDER:
        raise OrderOutOfRange(f"order {n} outside 1..{MAX_ORDER}")


def rn_sequence(n: int) -> list[int]:
    """Labels of ``v_1, ..., v_n`` in an odd prime labeling of R_n."""
    _check_order(n)
    return TABLE.lookup(n)


def rn_labeling(n: int) -> Labeling:
    return Labeling.from_sequence(rn_sequence(n))


def verify_rn(n: int) -> VerificationReport:
    _check_order(n)
    return verify_labeling(build_family(MaximalPrimeGraph(n)), rn_labeling(n))


def convert_prime_to_odd(g: Graph, prime_labeling: Labeling) -> Labeling:
    """Compose a prime labeling (onto ``1..n``) with the R_n row for ``n``."""
    n = g.order
    _check_order(n)
    values = [prime_labeling.labels.get(v) for v in g.vertices]
    if None in values or len(prime_labeling) != n or sorted(values) != list(range(1, n + 1)):
        raise NotAPrimeLabeling(f"labels must be a bijection from the {n} vertices onto 1..{n}")
    bad = [(u, v, math.gcd(prime_labeling[u], prime_labeling[v])) for u, v in g.edges]
    bad = [e for e in bad if e[2] != 1]
    if bad:
        raise NotAPrimeLabeling(f"{len(bad)} edge(s) have non-coprime labels", bad)
    seq = rn_sequence(n)
    return Labeling({v: seq[prime_labeling[v] - 1] for v in g.vertices})
