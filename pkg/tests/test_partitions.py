"""Partition enumeration, crank tallies and the colored-counting oracles."""

import pytest

from qcrank.partitions import (Partition, a_oracle, a_oracle_literal, crank,
                               crank_tally, nu2, partitions,
                               A_INTERPRETATIONS)
from qcrank.series import Series
from qcrank.verifier import a_series, c_series, p_series


def test_partitions_of_zero():
    assert [p.parts for p in partitions(0)] == [()]


def test_partitions_of_four():
    assert [p.parts for p in partitions(4)] == [
        (4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]


def test_partition_counts_match_series():
    p = p_series(25)
    for n in range(26):
        assert sum(1 for _ in partitions(n)) == p.coeff_at(n)


def test_partitions_reverse_lexicographic():
    for n in (5, 8, 11):
        seq = [p.parts for p in partitions(n)]
        assert seq[0] == (n,)
        assert seq[-1] == (1,) * n
        assert all(seq[i] > seq[i + 1] for i in range(len(seq) - 1))
        assert all(sum(parts) == n for parts in seq)


def test_partitions_rejects_negative():
    with pytest.raises(ValueError):
        list(partitions(-1))


def test_partition_validation():
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, 0))
    assert Partition((3, 1)).n == 4


def test_crank_definition_branches():
    assert crank(Partition((4,))) == 4
    assert crank(Partition((2, 1))) == 0
    assert crank(Partition((1, 1, 1))) == -3
    assert crank(Partition(())) == 0  # convention pinned by C(0) = 1


def test_crank_tally_small():
    t3 = crank_tally(3)
    assert (t3.c_even, t3.c_odd, t3.c_diff) == (1, 2, -1)
    t4 = crank_tally(4)
    assert (t4.c_even, t4.c_odd, t4.c_diff) == (5, 0, 5)
    assert crank_tally(0).c_diff == 1


def test_crank_tally_matches_series():
    c = c_series(30)
    p = p_series(30)
    for n in range(31):
        t = crank_tally(n)
        assert t.c_diff == c.coeff_at(n)
        assert t.total == p.coeff_at(n)


def test_crank_tally_mod5_on_progression():
    for n in (4, 9, 14, 19, 24):
        t = crank_tally(n)
        assert t.c_even % 5 == 0 and t.c_odd % 5 == 0


def test_crank_multiset_symmetry():
    # cranks of partitions of n come in +-pairs for n >= 2
    for n in range(2, 21):
        cranks = sorted(crank(p) for p in partitions(n))
        assert cranks == sorted(-c for c in cranks)


def test_nu2():
    assert nu2(12) == 2
    assert nu2(1) == 0
    assert nu2(96) == 5
    with pytest.raises(ValueError):
        nu2(0)


def test_nu2_product_identity():
    # prod (1+q^n)^(nu2(2n)) = 1/(q;q) through order 60
    order = 60
    prod = Series.one(order)
    for n in range(1, order + 1):
        prod = prod * Series.from_terms({0: 1, n: 1}, order) ** nu2(2 * n)
    assert prod == p_series(order)


def test_a_oracle_known_values():
    for interp in A_INTERPRETATIONS:
        assert a_oracle(0, interp) == 1
        assert a_oracle(3, interp) == 16
        assert a_oracle(5, interp) == 61


def test_a_oracle_interpretations_agree_with_series():
    a = a_series(20)
    for n in range(21):
        values = {a_oracle(n, interp) for interp in A_INTERPRETATIONS}
        assert values == {a.coeff_at(n)}


def test_a_oracle_unknown_interpretation():
    with pytest.raises(ValueError):
        a_oracle(3, "nope")
    with pytest.raises(ValueError):
        a_oracle_literal(3, "nope")


def test_a_literal_generator_agrees():
    for interp in A_INTERPRETATIONS:
        for n in range(9):
            assert a_oracle_literal(n, interp) == a_oracle(n, interp)
