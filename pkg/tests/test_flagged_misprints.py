"""The statements the catalogue encodes in corrected form, with the first
counterexample to each printed form pinned down explicitly."""

from qcrank.series import Series
from qcrank.products import (EtaQuotientSpec, eta_expand, triple_product,
                             TRIANGULAR)
from qcrank.verifier import a_series, theta_convolution


def eta(factors, order):
    return eta_expand(EtaQuotientSpec(tuple(sorted(factors))), order)


def test_f2sq_over_f1sq_odd_part_sign():
    # printed: even part - 2q(...); the actual odd part is +2q(...):
    # (-q;q)^2 = 1 + 2q + 3q^2 + ... has a positive q coefficient
    lhs = eta(((2, 2), (1, -2)), 40)
    assert lhs.coeff_at(1) == 2
    odd_factor = eta(((4, 2), (16, 2), (2, -3), (8, -1)), 40)
    assert odd_factor.coeff_at(0) == 1
    printed = (eta(((8, 5), (2, -3), (16, -2)), 40)
               - odd_factor.scale(2).shift(1).truncate(40))
    assert printed.coeff_at(1) == -2 != lhs.coeff_at(1)


def test_f1sq_over_f2_quintisection_q4_sign():
    # the signed square theta sum_k (-1)^k q^(k^2) has +2 at q^4 (k = +-2),
    # so the q^4 triple-product term enters positively
    lhs = eta(((1, 2), (2, -1)), 40)
    assert lhs.coeff_at(4) == 2
    printed_q4_term = triple_product(5, 50, 40).scale(-2).shift(4)
    assert printed_q4_term.coeff_at(4) == -2


def test_cor3b_printed_condition_fails_at_zero():
    # printed: the sum over a(2n+1-2w_k) is even iff n is triangular;
    # at n = 0 (triangular) the sum is the single term a(1) = 3, odd
    conv = theta_convolution(a_series(41, 2), "pentagonal", 2, "unsigned")
    assert TRIANGULAR.contains(0)
    assert conv.dissect(2, 1).coeff_at(0) == 1  # odd: printed iff is false
    assert a_series(1).coeff_at(1) == 3


def test_cor4b_unsigned_reading_fails():
    # without the proofs' (-1)^k weights the mod-3 claim breaks at n = 1:
    # a(4) + a(2) + a(0) = 32 + 7 + 1 = 40, not divisible by 3
    a = a_series(4)
    unsigned = a.coeff_at(4) + a.coeff_at(2) + a.coeff_at(0)
    assert unsigned == 40 and unsigned % 3 != 0
    signed = a.coeff_at(4) - a.coeff_at(2) - a.coeff_at(0)
    assert signed % 3 == 0


def test_big_identity_q15_exponent_pattern():
    # denominator f2 exponents of the odd-power terms fall by 2 per step
    # (16, 14, ..., 4, 2); the printed 42 at q^15 breaks the progression
    from qcrank.verifier.catalogue import _BIG_10N9_TERMS
    odd_exponents = {}
    for _, factors, power in _BIG_10N9_TERMS:
        if power % 2:
            exps = dict(factors)
            odd_exponents[power] = -exps.get(2, 0)
    assert odd_exponents == {1: 16, 3: 14, 5: 12, 7: 10, 9: 8,
                             11: 6, 13: 4, 15: 2, 17: 0}


def test_fine_weight_sign_constant_term():
    # (q;q)^3/(-q;q)^2 has constant +1, matching weight (1-6n) at n=0;
    # the (6n-1) variant would start at -1
    lhs = eta(((1, 5), (2, -2)), 20)
    assert lhs.coeff_at(0) == 1
