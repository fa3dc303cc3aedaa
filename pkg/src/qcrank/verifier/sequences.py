"""Shared series builders and theta-weighted convolutions for the checks.

The crank-parity series C, the colored-partition series a, and the
partition-number series p are built here once per (order, modulus) and
cached; checks running concurrently share the read-only results.
"""

from __future__ import annotations

import functools

from ..series import Series, SeriesError
from ..products import (EtaQuotientSpec, eta_expand, euler_product, theta,
                        _theta_bilateral, _theta_onesided)

__all__ = [
    "p_series",
    "c_series",
    "a_series",
    "c54_series",
    "theta_convolution",
    "theta_weight_series",
    "theta_convolution_sum",
    "SHIFT_KINDS",
]

A_SPEC = EtaQuotientSpec(((1, -3), (2, 2)))          # (-q;q)^2 / (q;q)
C_TAIL_SPEC = EtaQuotientSpec(((1, 3), (2, -2)))     # (q;q) / (-q;q)^2
C54_SPEC = EtaQuotientSpec(((1, 2), (2, -4), (5, 1), (10, 2)))


@functools.lru_cache(maxsize=None)
def p_series(order: int, modulus: int | None = None) -> Series:
    """Partition numbers: 1 / (q;q)_inf."""
    return euler_product(1, order, modulus).invert()


@functools.lru_cache(maxsize=None)
def c_series(order: int, modulus: int | None = None) -> Series:
    """Crank parity difference: sum C(n) q^n = 2q + (q;q)/(-q;q)^2."""
    return (eta_expand(C_TAIL_SPEC, order, modulus)
            + Series.monomial(2, 1, order, modulus))


@functools.lru_cache(maxsize=None)
def a_series(order: int, modulus: int | None = None) -> Series:
    """sum a(n) q^n = (-q;q)^2 / (q;q)."""
    return eta_expand(A_SPEC, order, modulus)


@functools.lru_cache(maxsize=None)
def c54_series(order: int, modulus: int | None = None,
               route: str = "dissect") -> Series:
    """sum C(5n+4) q^n, two independent routes.

    route="dissect" slices the C series itself; route="product" uses the
    closed form 5 f1^2 f5 f10^2 / f2^4, whose equality with the dissect
    route is exactly the content of the thm1 check.
    """
    if route == "dissect":
        return c_series(5 * order + 4, modulus).dissect(5, 4)
    if route == "product":
        return eta_expand(C54_SPEC, order, modulus).scale(5)
    raise ValueError(f"unknown route {route!r}")


# shift kind -> (bilateral, exponent(k), {weight name: weight(k)})
SHIFT_KINDS = {
    "pentagonal": (True, lambda k: k * (3 * k - 1) // 2, {
        "unsigned": lambda k: 1,
        "alternating": lambda k: (-1) ** (k & 1),
        "one_minus_6k": lambda k: 1 - 6 * k,
    }),
    "triangular": (False, lambda k: k * (k + 1) // 2, {
        "unsigned": lambda k: 1,
        "jacobi": lambda k: (-1) ** (k & 1) * (2 * k + 1),
    }),
    "squares": (True, lambda k: k * k, {
        "unsigned": lambda k: 1,
        "alternating": lambda k: (-1) ** (k & 1),
    }),
    # exponents k(3k+2) with weights (-1)^k (3k+1), from the theta series
    # (q^2;q^2)^5/(q;q)^2
    "ramanujan_pent": (True, lambda k: k * (3 * k + 2), {
        "three_k_plus_one": lambda k: (-1) ** (k & 1) * (3 * k + 1),
    }),
}


@functools.lru_cache(maxsize=None)
def theta_weight_series(shifts: str, scale: int, weights: str, order: int,
                        modulus: int | None = None) -> Series:
    """Sparse series sum_k w(k) q^(scale * exponent(k))."""
    try:
        bilateral, exponent, table = SHIFT_KINDS[shifts]
        weight = table[weights]
    except KeyError:
        raise SeriesError(
            f"unknown shift/weight combination {shifts!r}/{weights!r}") from None
    if scale < 1:
        raise SeriesError(f"scale must be positive, got {scale}")
    build = _theta_bilateral if bilateral else _theta_onesided
    terms = build(order // scale, exponent, weight)
    return Series.from_terms({scale * e: c for e, c in terms.items()},
                             order, modulus)


def theta_convolution(base: Series, shifts: str, scale: int = 1,
                      weights: str = "unsigned",
                      custom: Series | None = None) -> Series:
    """Weighted shifted sum A(n) = sum_k w(k) base(n - scale*exponent(k)).

    Built as base times the sparse theta weight series; the explicit sum
    definition is :func:`theta_convolution_sum` and the two are checked
    against each other in the property suite.
    """
    if shifts == "custom":
        if custom is None:
            raise SeriesError("custom shifts require a weight series")
        w = custom
    else:
        w = theta_weight_series(shifts, scale, weights, base.order,
                                base.modulus)
    if w.modulus != base.modulus:
        if w.modulus is not None:
            raise SeriesError("incompatible moduli in theta convolution")
        w = w.reduce_mod(base.modulus)
    return base * w


def theta_convolution_sum(base: Series, shifts: str, scale: int = 1,
                          weights: str = "unsigned",
                          upto: int | None = None) -> list:
    """The literal double sum; oracle for :func:`theta_convolution`."""
    bilateral, exponent, table = SHIFT_KINDS[shifts]
    weight = table[weights]
    upto = base.order if upto is None else upto
    indices = [0]
    k = 1
    while True:
        alive = False
        for kk in ((k, -k) if bilateral else (k,)):
            if scale * exponent(kk) <= upto:
                indices.append(kk)
                alive = True
        if not alive:
            break
        k += 1
    m = base.modulus
    out = []
    for n in range(upto + 1):
        s = 0
        for kk in indices:
            shift = scale * exponent(kk)
            if shift <= n:
                s += weight(kk) * base.coeff_at(n - shift)
        out.append(s % m if m is not None else s)
    return out
