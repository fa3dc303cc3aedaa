"""The shared series builders and theta-weighted convolutions."""

import pytest

from qcrank.series import Series, SeriesError
from qcrank.products import EtaQuotientSpec, eta_expand, theta
from qcrank.verifier import (a_series, c_series, c54_series, p_series,
                             theta_convolution, theta_convolution_sum,
                             theta_weight_series)
from qcrank.verifier.sequences import SHIFT_KINDS


def test_c_series_first_values():
    assert c_series(8).coeffs_from(0, 4) == [1, -1, 2, -1, 5]


def test_c_series_correction_term():
    # without the +2q correction the q^1 coefficient would be -3
    tail = eta_expand(EtaQuotientSpec(((1, 3), (2, -2))), 4)
    assert tail.coeff_at(1) == -3
    assert c_series(4).coeff_at(1) == -1


def test_c_series_mod5_vanishes_on_progression():
    c5 = c_series(2000, 5)
    assert all(c5.coeff_at(n) == 0 for n in range(4, 2001, 5))


def test_a_series_values():
    assert list(a_series(5).coeffs) == [1, 3, 7, 16, 32, 61]
    assert a_series(3).coeff_at(3) == 16
    assert a_series(2).coeff_at(2) % 7 == 0


def test_p_series_values():
    assert p_series(9).coeffs_from(0, 9) == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30]


def test_c54_routes_agree():
    assert c54_series(150, route="dissect") == c54_series(150, route="product")
    assert c54_series(30).coeff_at(0) == 5  # C(4)
    with pytest.raises(ValueError):
        c54_series(30, route="nope")


def test_theta_weight_series_matches_products_theta():
    assert theta_weight_series("triangular", 1, "jacobi", 100) == theta("jacobi", 100)
    assert theta_weight_series("squares", 1, "alternating", 100) == \
        theta("gauss_squares", 100)
    assert theta_weight_series("pentagonal", 1, "one_minus_6k", 100) == \
        theta("weighted_pent", 100)
    assert theta_weight_series("ramanujan_pent", 1, "three_k_plus_one", 100) == \
        theta("ramanujan_3n2_2n", 100)


def test_theta_weight_series_scaling():
    w1 = theta_weight_series("triangular", 1, "unsigned", 40)
    w3 = theta_weight_series("triangular", 3, "unsigned", 120)
    assert w3 == w1.subst_qk(3)


def test_theta_convolution_on_one_returns_theta():
    one = Series.one(80)
    conv = theta_convolution(one, "squares", 1, "alternating")
    assert conv == theta("gauss_squares", 80)


def test_theta_convolution_jacobi_collapses_a_series():
    # a-series times (q;q)^3 cancels to (q^2;q^2)^2
    conv = theta_convolution(a_series(300), "triangular", 1, "jacobi")
    f2sq = eta_expand(EtaQuotientSpec(((2, 2),)), 300)
    assert conv == f2sq


def test_theta_convolution_modulus_handling():
    base = a_series(50, 5)
    conv = theta_convolution(base, "pentagonal", 1, "alternating")
    assert conv.modulus == 5
    with pytest.raises(SeriesError):
        theta_convolution(base, "custom", custom=Series.one(50, modulus=3))
    with pytest.raises(SeriesError):
        theta_convolution(base, "custom")
    with pytest.raises(SeriesError):
        theta_convolution(base, "pentagonal", weights="nope")


@pytest.mark.parametrize("shifts,weights", sorted(
    (s, w) for s, (_, _, table) in SHIFT_KINDS.items() for w in table))
def test_convolution_sum_vs_product_definition(shifts, weights):
    # mul-by-sparse-theta route against the literal double sum, order 500
    base = c_series(500, 97)
    conv = theta_convolution(base, shifts, 1, weights)
    assert list(conv.coeffs_from(0, 500)) == \
        theta_convolution_sum(base, shifts, 1, weights)


def test_convolution_sum_vs_product_exact_scaled():
    base = a_series(120)
    for scale in (2, 5):
        conv = theta_convolution(base, "pentagonal", scale, "alternating")
        assert list(conv.coeffs_from(0, 120)) == \
            theta_convolution_sum(base, "pentagonal", scale, "alternating")


def test_thm1_product_route_cross_validated_by_bruteforce():
    from qcrank.partitions import crank_tally
    rhs = c54_series(10, route="product")
    for n in range(9):  # 5n+4 <= 44
        assert rhs.coeff_at(n) == crank_tally(5 * n + 4).c_diff


def test_crank_even_count_is_nonnegative_integer():
    p = p_series(300)
    c = c_series(300)
    for n in range(301):
        total = p.coeff_at(n) + c.coeff_at(n)
        assert total % 2 == 0
        assert total // 2 >= 0


def test_theta_convolution_pentagonal_scale5_generating_function():
    # the alternating 25w_k shift of C(5n+4) is generated by
    # 5 f1^2 f5^2 f10^2 / f2^4
    conv = theta_convolution(c54_series(200), "pentagonal", 5, "alternating")
    gf = eta_expand(EtaQuotientSpec(((1, 2), (2, -4), (5, 2), (10, 2))), 200)
    assert conv.truncate(200) == gf.scale(5)


def test_convolution_sum_vs_product_scale10_mod25():
    base = c54_series(300, 25)
    conv = theta_convolution(base, "pentagonal", 10, "alternating")
    assert list(conv.coeffs_from(0, 300)) == \
        theta_convolution_sum(base, "pentagonal", 10, "alternating")
