"""Named products, theta expansions and the eta-quotient spec syntax."""

import pytest

from qcrank.series import Series, SeriesError
from qcrank.products import (EtaQuotientSpec, PENTAGONAL, TRIANGULAR,
                             PentTriIndex, eta_expand, euler_product,
                             euler_product_dense, pentagonal, pochhammer,
                             theta, triangular, triple_product, THETA_KINDS)


def eta(factors, order, modulus=None, shift=0):
    return eta_expand(EtaQuotientSpec(tuple(sorted(factors)), shift),
                      order, modulus)


# ----------------------------------------------------------------------
# pentagonal / triangular indexing


def test_pentagonal_first_values():
    assert [pentagonal(k) for k in range(9)] == [0, 1, 2, 5, 7, 12, 15, 22, 26]


def test_pentagonal_parity_split_difference():
    # w_2n - w_(2n-1) = n, tying the two closed forms together
    for n in range(1, 51):
        assert pentagonal(2 * n) - pentagonal(2 * n - 1) == n
        assert pentagonal(2 * n) == n * (3 * n + 1) // 2
        assert pentagonal(2 * n - 1) == n * (3 * n - 1) // 2


def test_pentagonal_ordering_pinned_by_euler_support():
    # the canonical interleaving is whatever the support of (q;q) dictates
    assert euler_product(1, 500).support() == PENTAGONAL.upto(500)
    assert PENTAGONAL.upto(30) == [0, 1, 2, 5, 7, 12, 15, 22, 26]


def test_pentagonal_strictly_increasing_after_zero():
    vals = PENTAGONAL.upto(2000)
    assert all(vals[i] < vals[i + 1] for i in range(1, len(vals) - 1))


def test_triangular_values_and_support():
    assert triangular(0) == 0
    assert triangular(3) == 6
    assert theta("triangular", 100).support() == TRIANGULAR.upto(100)
    assert eta(((2, 2), (1, -1)), 100) == theta("triangular", 100)


def test_index_tables():
    assert PENTAGONAL.contains(22) and not PENTAGONAL.contains(23)
    assert PENTAGONAL.index_of(26) == 8
    assert TRIANGULAR.index_of(10) == 4
    assert TRIANGULAR.index_of(11) is None
    with pytest.raises(ValueError):
        PentTriIndex("nope")
    with pytest.raises(ValueError):
        pentagonal(-1)


# ----------------------------------------------------------------------
# Euler products


def test_euler_product_order_12():
    assert euler_product(1, 12).nonzero_terms() == [
        (0, 1), (1, -1), (2, -1), (5, 1), (7, 1), (12, -1)]


def test_euler_subst_consistency():
    assert euler_product(2, 120) == euler_product(1, 60).subst_qk(2)


@pytest.mark.parametrize("delta", [1, 2, 5, 7, 10, 14])
def test_euler_sparse_equals_dense(delta):
    assert euler_product(delta, 200) == euler_product_dense(delta, 200)


def test_euler_rejects_bad_delta():
    with pytest.raises(SeriesError):
        euler_product(0, 10)


# ----------------------------------------------------------------------
# eta quotients


def test_eta_expand_a_generating_function():
    s = eta(((1, -3), (2, 2)), 5)
    assert list(s.coeffs) == [1, 3, 7, 16, 32, 61]


def test_eta_expand_single_factor_is_euler():
    assert eta(((1, 1),), 37) == euler_product(1, 37)


def _distinct_partition_count(n):
    # brute force: subsets of {1..n} summing to n
    counts = [1] + [0] * n
    for part in range(1, n + 1):
        for total in range(n, part - 1, -1):
            counts[total] += counts[total - part]
    return counts[n]


def test_eta_expand_distinct_parts():
    s = eta(((2, 1), (1, -1)), 7)
    assert list(s.coeffs) == [_distinct_partition_count(n) for n in range(8)]
    assert list(s.coeffs) == [1, 1, 1, 2, 2, 3, 4, 5]


def test_eta_expand_q_shift_valuation():
    s = eta(((1, 1),), 10, shift=-3)
    assert s.valuation == -3
    assert s.coeff_at(-3) == 1
    assert s.order == 7


def test_eta_expand_pow_mul_composition():
    f1 = euler_product(1, 80)
    f2 = euler_product(2, 80)
    assert eta(((1, -3), (2, 2)), 80) == (f1 ** -3) * (f2 ** 2)


def test_eta_expand_order_cap():
    with pytest.raises(SeriesError):
        eta_expand(EtaQuotientSpec(((1, 1),), 10 ** 8), 10)


# ----------------------------------------------------------------------
# theta kinds


def test_theta_gauss_first_terms():
    assert theta("gauss_squares", 10).nonzero_terms() == [
        (0, 1), (1, -2), (4, 2), (9, -2)]


def test_theta_jacobi_first_terms():
    assert theta("jacobi", 10).nonzero_terms() == [
        (0, 1), (1, -3), (3, 5), (6, -7), (10, 9)]


THETA_ETA_SIDES = {
    "gauss_squares": ((1, 2), (2, -1)),
    "triangular": ((1, -1), (2, 2)),
    "jacobi": ((1, 3),),
    "weighted_pent": ((1, 5), (2, -2)),
    "ramanujan_3n2_2n": ((1, -2), (2, 5)),
    "fine_32_6": ((1, 5), (2, -2)),
}


@pytest.mark.parametrize("kind", sorted(THETA_KINDS))
def test_theta_equals_eta_quotient(kind):
    assert theta(kind, 300) == eta(THETA_ETA_SIDES[kind], 300)


def test_gauss_rearrangement():
    # theta(gauss) * (-q;q) = (q;q)
    neg_poch = eta(((2, 1), (1, -1)), 200)
    assert theta("gauss_squares", 200) * neg_poch == euler_product(1, 200)


def test_fine_is_cube_over_squared_pochhammer():
    lhs = euler_product(1, 200) ** 3 * (eta(((2, 1), (1, -1)), 200) ** 2).invert()
    assert theta("fine_32_6", 200) == lhs


def test_theta_unknown_kind():
    with pytest.raises(SeriesError):
        theta("nope", 10)


# ----------------------------------------------------------------------
# triple products


def test_triple_product_constant_term():
    assert triple_product(1, 3, 30).coeff_at(0) == 1


def test_triple_product_halfway_case():
    m, a = 8, 4
    lhs = triple_product(a, m, 60)
    rhs = pochhammer(4, 8, 60) ** 2 * euler_product(8, 60)
    assert lhs == rhs


@pytest.mark.parametrize("a,m", [(1, 3), (2, 5), (15, 50), (10, 25), (3, 7)])
def test_triple_product_matches_bilateral_sum(a, m):
    # (q^a;q^m)(q^(m-a);q^m)(q^m;q^m) = sum_j (-1)^j q^(m j(j+1)/2 - a j)
    order = 150
    terms = {}
    j = 0
    while True:
        hit = False
        for jj in ((j, -j) if j else (0,)):
            e = m * jj * (jj + 1) // 2 - a * jj
            if 0 <= e <= order:
                terms[e] = terms.get(e, 0) + (-1) ** (jj & 1)
                hit = True
        if j and not hit:
            break
        j += 1
    assert triple_product(a, m, order) == Series.from_terms(terms, order)


def test_triple_product_rejects_out_of_range():
    with pytest.raises(SeriesError):
        triple_product(5, 5, 10)


# ----------------------------------------------------------------------
# spec text syntax


def test_parse_roundtrip():
    spec = EtaQuotientSpec.parse("1:-3,2:2")
    assert spec.factors == ((1, -3), (2, 2))
    assert spec.q_shift == 0
    assert str(spec) == "1:-3,2:2"


def test_parse_qshift():
    spec = EtaQuotientSpec.parse("2:1,7:7,1:-1,14:-7;qshift=-2")
    assert spec.q_shift == -2
    assert spec.factors[0] == (1, -1)
    assert str(EtaQuotientSpec.parse(str(spec))) == str(spec)


@pytest.mark.parametrize("bad", ["", "1:", "x:2", "1:2;qshift=x", "1:2;shift=3",
                                 "1:2,1:3", "0:2"])
def test_parse_errors(bad):
    with pytest.raises(SeriesError):
        EtaQuotientSpec.parse(bad)
