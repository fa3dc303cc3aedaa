"""Named infinite products and theta series as truncated Series.

Everything here is a sparse construction wherever the support allows it:
Euler products place O(sqrt N) terms by the pentagonal number theorem and
the theta kinds are weighted index loops, so congruence checks stay cheap
even at orders of 20000 and beyond.
"""

from __future__ import annotations

import functools
import re
from dataclasses import dataclass

from .series import Series, SeriesError

__all__ = [
    "pentagonal",
    "triangular",
    "PentTriIndex",
    "PENTAGONAL",
    "TRIANGULAR",
    "euler_product",
    "euler_product_dense",
    "pochhammer",
    "triple_product",
    "EtaQuotientSpec",
    "eta_expand",
    "theta",
    "THETA_KINDS",
]


def pentagonal(k: int) -> int:
    """k-th generalized pentagonal number: 0, 1, 2, 5, 7, 12, 15, 22, 26, ...

    Computed as ceil(k/2) * ceil((3k+1)/2) / 2, which interleaves the two
    closed forms n(3n+1)/2 (even k = 2n) and n(3n-1)/2 (odd k = 2n-1).
    The ordering is pinned by the support of (q;q)_inf, see the tests.
    """
    if k < 0:
        raise ValueError(f"pentagonal index must be >= 0, got {k}")
    return (-(-k // 2)) * (-(-(3 * k + 1) // 2)) // 2


def triangular(k: int) -> int:
    """k-th triangular number k(k+1)/2."""
    if k < 0:
        raise ValueError(f"triangular index must be >= 0, got {k}")
    return k * (k + 1) // 2


class PentTriIndex:
    """Cached increasing table of pentagonal or triangular numbers."""

    def __init__(self, kind: str):
        if kind not in ("generalized_pentagonal", "triangular"):
            raise ValueError(f"unknown index kind: {kind}")
        self.kind = kind
        self._fn = pentagonal if kind == "generalized_pentagonal" else triangular
        self._values = [self._fn(0)]

    def value(self, k: int) -> int:
        return self._fn(k)

    def _extend(self, bound: int) -> None:
        while self._values[-1] <= bound:
            self._values.append(self._fn(len(self._values)))

    def upto(self, bound: int) -> list:
        """All table values <= bound, in index order."""
        self._extend(bound)
        return [v for v in self._values if v <= bound]

    def contains(self, x: int) -> bool:
        return self.index_of(x) is not None

    def index_of(self, x: int):
        """Index k with value(k) == x, or None."""
        if x < 0:
            return None
        self._extend(x)
        lo, hi = 0, len(self._values)
        while lo < hi:
            mid = (lo + hi) // 2
            if self._values[mid] < x:
                lo = mid + 1
            else:
                hi = mid
        if lo < len(self._values) and self._values[lo] == x:
            return lo
        return None


PENTAGONAL = PentTriIndex("generalized_pentagonal")
TRIANGULAR = PentTriIndex("triangular")


def _pentagonal_sign(k: int) -> int:
    # (-1)^(k(k+1)/2): the sign pattern + - - + + - - ...
    return -1 if triangular(k) % 2 else 1


@functools.lru_cache(maxsize=None)
def euler_product(delta: int, order: int, modulus: int | None = None) -> Series:
    """(q^delta; q^delta)_inf as a sparse pentagonal sum, truncated."""
    if delta < 1:
        raise SeriesError(f"delta must be positive, got {delta}")
    terms = {}
    k = 0
    while True:
        e = delta * pentagonal(k)
        if e > order:
            break
        terms[e] = _pentagonal_sign(k)
        k += 1
    return Series.from_terms(terms, order, modulus)


def euler_product_dense(delta: int, order: int,
                        modulus: int | None = None) -> Series:
    """Brute-force product over (1 - q^(delta*n)); oracle for the sparse form."""
    out = Series.one(order, modulus)
    e = delta
    while e <= order:
        out = out * Series.from_terms({0: 1, e: -1}, order, modulus)
        e += delta
    return out


def pochhammer(a: int, m: int, order: int,
               modulus: int | None = None) -> Series:
    """(q^a; q^m)_inf = prod over j >= 0 of (1 - q^(a + j m)), truncated."""
    if a < 1 or m < 1:
        raise SeriesError(f"pochhammer parameters must be positive, got ({a}, {m})")
    out = Series.one(order, modulus)
    e = a
    while e <= order:
        out = out * Series.from_terms({0: 1, e: -1}, order, modulus)
        e += m
    return out


def triple_product(a: int, m: int, order: int,
                   modulus: int | None = None) -> Series:
    """(q^a; q^m)_inf (q^(m-a); q^m)_inf (q^m; q^m)_inf by direct product."""
    if not 0 < a < m:
        raise SeriesError(f"triple product requires 0 < a < m, got a={a}, m={m}")
    return (pochhammer(a, m, order, modulus)
            * pochhammer(m - a, m, order, modulus)
            * euler_product(m, order, modulus))


@dataclass(frozen=True)
class EtaQuotientSpec:
    """Formal product q^q_shift * prod (q^delta; q^delta)_inf^exponent."""

    factors: tuple
    q_shift: int = 0

    def __post_init__(self):
        factors = tuple((int(d), int(r)) for d, r in self.factors)
        deltas = [d for d, _ in factors]
        if any(d < 1 for d in deltas):
            raise SeriesError(f"deltas must be positive: {deltas}")
        if len(set(deltas)) != len(deltas) or deltas != sorted(deltas):
            raise SeriesError(f"deltas must be distinct and ascending: {deltas}")
        object.__setattr__(self, "factors", factors)

    @classmethod
    def parse(cls, text: str) -> "EtaQuotientSpec":
        """Parse the CLI syntax ``delta:exponent[,...][;qshift=s]``."""
        body, _, tail = text.partition(";")
        q_shift = 0
        if tail:
            m = re.fullmatch(r"\s*qshift\s*=\s*(-?\d+)\s*", tail)
            if not m:
                raise SeriesError(
                    f"bad qshift clause at position {len(body) + 1}: {tail!r}")
            q_shift = int(m.group(1))
        factors = []
        pos = 0
        for chunk in body.split(","):
            m = re.fullmatch(r"\s*(\d+)\s*:\s*(-?\d+)\s*", chunk)
            if not m:
                raise SeriesError(
                    f"bad factor at position {pos + 1}: {chunk!r} "
                    "(expected delta:exponent)")
            factors.append((int(m.group(1)), int(m.group(2))))
            pos += len(chunk) + 1
        factors.sort()
        return cls(tuple(factors), q_shift)

    def __str__(self):
        body = ",".join(f"{d}:{r}" for d, r in self.factors)
        return body + (f";qshift={self.q_shift}" if self.q_shift else "")


ORDER_CAP = 10**8


def eta_expand(spec: EtaQuotientSpec, order: int,
               modulus: int | None = None) -> Series:
    """Expand an eta-quotient spec to the given order."""
    if order + abs(spec.q_shift) > ORDER_CAP:
        raise SeriesError(
            f"order {order} with shift {spec.q_shift} exceeds cap {ORDER_CAP}")
    # positive exponents first keeps intermediate valuations at zero
    out = Series.one(order, modulus)
    for d, r in sorted(spec.factors, key=lambda fr: fr[1], reverse=True):
        if r:
            out = out * euler_product(d, order, modulus) ** r
    return out.shift(spec.q_shift)


def _theta_bilateral(order: int, exponent, weight) -> dict:
    """Accumulate weight(n) q^exponent(n) over n = 0, +-1, +-2, ...

    Symmetric terms are emitted separately so that no analytic merging
    of the two sides of the sum is assumed.
    """
    terms: dict = {}

    def emit(n: int) -> bool:
        e = exponent(n)
        if e > order:
            return False
        terms[e] = terms.get(e, 0) + weight(n)
        return True

    emit(0)
    n = 1
    while True:
        alive = emit(n)
        alive |= emit(-n)
        if not alive:
            break
        n += 1
    return terms


def _theta_onesided(order: int, exponent, weight) -> dict:
    terms: dict = {}
    n = 0
    while True:
        e = exponent(n)
        if e > order:
            break
        terms[e] = terms.get(e, 0) + weight(n)
        n += 1
    return terms


# kind -> (bilateral, exponent(n), weight(n))
THETA_KINDS = {
    # (q;q)/(-q;q) = 1 + 2 sum (-1)^n q^(n^2)
    "gauss_squares": (True, lambda n: n * n, lambda n: (-1) ** (n & 1)),
    # (q^2;q^2)^2/(q;q) = sum q^(k(k+1)/2)
    "triangular": (False, triangular, lambda n: 1),
    # (q;q)^3 = sum (-1)^n (2n+1) q^(k(k+1)/2)
    "jacobi": (False, triangular, lambda n: (-1) ** (n & 1) * (2 * n + 1)),
    # (q;q)^5/(q^2;q^2)^2 = sum (1-6n) q^(n(3n-1)/2) over all integers n
    "weighted_pent": (True, lambda n: n * (3 * n - 1) // 2, lambda n: 1 - 6 * n),
    # (q^2;q^2)^5/(q;q)^2 = sum (-1)^n (3n+1) q^(3n^2+2n)
    "ramanujan_3n2_2n": (True, lambda n: n * (3 * n + 2),
                         lambda n: (-1) ** (n & 1) * (3 * n + 1)),
    # (q;q)^3/(-q;q)^2 = sum (1-6n) q^(n(3n-1)/2); same expansion as
    # weighted_pent but catalogued separately for the mod-16 route
    "fine_32_6": (True, lambda n: n * (3 * n - 1) // 2, lambda n: 1 - 6 * n),
}


def theta(kind: str, order: int, modulus: int | None = None) -> Series:
    """One of the named sparse theta expansions, truncated to the order."""
    try:
        bilateral, exponent, weight = THETA_KINDS[kind]
    except KeyError:
        raise SeriesError(
            f"unknown theta kind {kind!r}; known: {sorted(THETA_KINDS)}") from None
    builder = _theta_bilateral if bilateral else _theta_onesided
    return Series.from_terms(builder(order, exponent, weight), order, modulus)
