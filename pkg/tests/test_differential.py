"""Differential fuzz: random expression walks evaluated by the Series
engine and independently by sympy's rational-function arithmetic."""

import random

import pytest

sympy = pytest.importorskip("sympy")

from qcrank.series import Series

q = sympy.symbols("q")
ORDER = 24
WALKS = 40
STEPS = 4


def _sympy_coeffs(expr, order):
    """Taylor coefficients 0..order of a rational function via sympy."""
    ser = sympy.series(expr, q, 0, order + 1).removeO()
    poly = sympy.Poly(sympy.expand(ser), q)
    return [int(poly.coeff_monomial(q ** e)) for e in range(order + 1)]


def _random_unit_poly(rng, degree):
    coeffs = [rng.choice([1, -1])] + \
        [rng.randint(-3, 3) for _ in range(degree)]
    return coeffs


def _as_series(coeffs, order=ORDER):
    return Series(coeffs + [0] * (order + 1 - len(coeffs)), order=order)


def _walk(rng):
    coeffs = _random_unit_poly(rng, rng.randint(1, 6))
    series = _as_series(coeffs)
    expr = sum(c * q ** e for e, c in enumerate(coeffs))
    for _ in range(STEPS):
        op = rng.choice(["add", "mul", "pow", "invert", "subst"])
        if op == "add":
            other = _random_unit_poly(rng, rng.randint(0, 5))
            series = series + _as_series(other, series.order)
            expr = expr + sum(c * q ** e for e, c in enumerate(other))
        elif op == "mul":
            other = _random_unit_poly(rng, rng.randint(0, 5))
            series = series * _as_series(other, series.order)
            expr = expr * sum(c * q ** e for e, c in enumerate(other))
        elif op == "pow":
            k = rng.randint(2, 3)
            series = series ** k
            expr = expr ** k
        elif op == "invert":
            lead = series.coeff_at(0)
            if series.valuation != 0 or lead not in (1, -1):
                continue
            series = series.invert()
            expr = 1 / expr
        elif op == "subst":
            k = rng.randint(2, 3)
            series = series.subst_qk(k)
            expr = expr.subs(q, q ** k)
        if series.order > 4 * ORDER:
            series = series.truncate(4 * ORDER)
    return series, expr


@pytest.mark.parametrize("seed", range(WALKS))
def test_random_expression_matches_sympy(seed):
    rng = random.Random(987_000 + seed)
    series, expr = _walk(rng)
    upto = min(series.order, ORDER)
    got = series.coeffs_from(0, upto)
    want = _sympy_coeffs(expr, upto)
    assert got == want, f"diverged: seed {seed}"
