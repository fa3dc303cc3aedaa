"""Brute-force partition ground truth: enumeration, crank, counting oracles.

Everything in this module is deliberately independent of the series
machinery so that tallies computed here can act as oracles for the
generating-function routes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement, product
from typing import Iterator

__all__ = [
    "Partition",
    "CrankTally",
    "partitions",
    "crank",
    "crank_tally",
    "nu2",
    "a_oracle",
    "a_oracle_literal",
    "A_INTERPRETATIONS",
    "EXHAUSTIVE_TALLY_BOUND",
]

# p(45) = 89134 partitions; exhaustive runs stay sub-second up to here.
EXHAUSTIVE_TALLY_BOUND = 45


@dataclass(frozen=True)
class Partition:
    """Non-increasing positive parts summing to n; empty allowed for n = 0."""

    parts: tuple

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p < 1 for p in parts):
            raise ValueError(f"parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts must be non-increasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)


@dataclass(frozen=True)
class CrankTally:
    """Even/odd crank counts for the partitions of n."""

    n: int
    c_even: int
    c_odd: int

    @property
    def c_diff(self) -> int:
        return self.c_even - self.c_odd

    @property
    def total(self) -> int:
        return self.c_even + self.c_odd


def partitions(n: int) -> Iterator[Partition]:
    """Stream all partitions of n in reverse lexicographic order.

    In-place successor computation: [n] first, [1]*n last, one yield per
    partition with no global materialization.
    """
    if n < 0:
        raise ValueError(f"cannot partition a negative integer: {n}")
    if n == 0:
        yield Partition(())
        return
    a = [n]
    while True:
        yield Partition(tuple(a))
        # find the rightmost part greater than 1
        i = len(a) - 1
        ones = 0
        while i >= 0 and a[i] == 1:
            ones += 1
            i -= 1
        if i < 0:
            return
        a[i] -= 1
        rest = ones + 1
        del a[i + 1:]
        # refill with the largest parts allowed (each at most a[i])
        cap = a[i]
        while rest:
            part = min(cap, rest)
            a.append(part)
            rest -= part


def crank(p: Partition) -> int:
    """Andrews-Garvan crank: largest part if no ones, else mu - omega.

    The empty partition is assigned crank 0 (even); the convention keeps
    C(0) = 1 in line with the generating function.
    """
    if not p.parts:
        return 0
    ones = sum(1 for x in p.parts if x == 1)
    if ones == 0:
        return p.parts[0]
    mu = sum(1 for x in p.parts if x > ones)
    return mu - ones


def crank_tally(n: int) -> CrankTally:
    """Exhaustive even/odd crank tally over all partitions of n."""
    even = odd = 0
    for p in partitions(n):
        if crank(p) % 2 == 0:
            even += 1
        else:
            odd += 1
    return CrankTally(n, even, odd)


def nu2(n: int) -> int:
    """2-adic valuation: exponent of the largest power of 2 dividing n."""
    if n < 1:
        raise ValueError(f"nu2 requires a positive integer, got {n}")
    return (n & -n).bit_length() - 1


def _multiplicities(p: Partition) -> dict:
    mult: dict = {}
    for x in p.parts:
        mult[x] = mult.get(x, 0) + 1
    return mult


def _weight_odd_3colors(value: int, mult: int) -> int:
    # odd parts get a multiset of 3 colors: C(mult+2, 2) colorings
    if value % 2 == 0:
        return 1
    return math.comb(mult + 2, 2)


def _weight_distinct_nu2(value: int, mult: int) -> int:
    # each (value, color) pair used at most once, 3 + nu2(value) colors
    return math.comb(3 + nu2(value), mult)


def _weight_first_two(value: int, mult: int) -> int:
    # first two occurrences may take distinct colors from {1, 2}:
    # 3 choices for a single occurrence, 4 once there are at least two
    return 3 if mult == 1 else 4


A_INTERPRETATIONS = {
    "odd_parts_3colors": _weight_odd_3colors,
    "distinct_nu2_colors": _weight_distinct_nu2,
    "first_two_occurrences": _weight_first_two,
}


def a_oracle(n: int, interpretation: str) -> int:
    """Count the colored objects of one combinatorial reading of a(n).

    All three interpretations agree; counting multiplies per-part color
    weights over the plain partitions of n instead of materializing the
    colored objects themselves.
    """
    try:
        weight = A_INTERPRETATIONS[interpretation]
    except KeyError:
        raise ValueError(
            f"unknown interpretation {interpretation!r}; "
            f"known: {sorted(A_INTERPRETATIONS)}") from None
    total = 0
    for p in partitions(n):
        w = 1
        for value, mult in _multiplicities(p).items():
            w *= weight(value, mult)
            if w == 0:
                break
        total += w
    return total


def _literal_colorings(interpretation: str, value: int, mult: int) -> list:
    """Explicit color assignments for `mult` copies of `value`."""
    if interpretation == "odd_parts_3colors":
        if value % 2 == 0:
            return [()]
        return list(combinations_with_replacement(range(3), mult))
    if interpretation == "distinct_nu2_colors":
        return list(combinations(range(3 + nu2(value)), mult))
    if interpretation == "first_two_occurrences":
        # which of the two colors are used on the first occurrences
        options = [(), (1,), (2,)] if mult == 1 else [(), (1,), (2,), (1, 2)]
        return options
    raise ValueError(f"unknown interpretation {interpretation!r}")


def a_oracle_literal(n: int, interpretation: str) -> int:
    """Count colored objects by generating them one by one.

    Cross-check for :func:`a_oracle`; meant for small n (say n <= 8),
    where the object lists match the hand-enumerable ones.
    """
    if interpretation not in A_INTERPRETATIONS:
        raise ValueError(f"unknown interpretation {interpretation!r}")
    total = 0
    for p in partitions(n):
        mult = _multiplicities(p)
        per_value = [_literal_colorings(interpretation, v, m)
                     for v, m in sorted(mult.items())]
        for assignment in product(*per_value):
            total += 1
            assert assignment is not None
    return total
