"""Tests for partition generation and statistics."""

import pytest

from qtsym.partitions import (
    add_row_vector,
    check_partition,
    compositions_bounded,
    conjugate,
    contains,
    decrement_part,
    dominance_leq,
    is_partition,
    multiplicities,
    pad,
    partitions_of,
    trim,
    vectors_with_sum_at_most,
    weight,
    z_factor,
)


def test_is_partition():
    assert is_partition((3, 1, 1))
    assert is_partition(())
    assert is_partition((2, 2, 0))
    assert not is_partition((1, 2))
    assert not is_partition((2, -1))


def test_trim_pad():
    assert trim((3, 1, 0, 0)) == (3, 1)
    assert pad((3, 1), 4) == (3, 1, 0, 0)
    with pytest.raises(ValueError):
        pad((3, 1, 1), 2)


def test_check_partition():
    assert check_partition([4, 2, 0]) == (4, 2)
    with pytest.raises(ValueError):
        check_partition((1, 3))


def test_conjugate_known():
    assert conjugate((4, 2, 1)) == (3, 2, 1, 1)
    assert conjugate((3, 3)) == (2, 2, 2)
    assert conjugate(()) == ()
    assert conjugate((5,)) == (1, 1, 1, 1, 1)


def test_conjugate_involution():
    for n in range(9):
        for lam in partitions_of(n):
            assert conjugate(conjugate(lam)) == lam
            assert weight(conjugate(lam)) == n


def test_conjugate_multiplicity_identity():
    # m_i of the conjugate equals the i-th descent lam_i - lam_(i+1)
    for lam in partitions_of(8):
        mu = conjugate(lam)
        mults = multiplicities(mu)
        padded = lam + (0,)
        for i in range(1, len(lam) + 1):
            assert mults.get(i, 0) == padded[i - 1] - padded[i]


def test_z_factor_known():
    assert z_factor(()) == 1
    assert z_factor((1,)) == 1
    assert z_factor((1, 1)) == 2
    assert z_factor((2,)) == 2
    assert z_factor((2, 1)) == 2
    assert z_factor((3, 1, 1)) == 6
    assert z_factor((2, 2, 1, 1)) == 16


def test_z_factor_sum_identity():
    # sum over partitions of n of 1/z equals 1 (class equation for S_n)
    from fractions import Fraction

    for n in range(1, 9):
        assert sum(Fraction(1, z_factor(lam)) for lam in partitions_of(n)) == 1


def test_partition_counts():
    expected = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30]
    for n, count in enumerate(expected):
        assert len(list(partitions_of(n))) == count


def test_partitions_lex_descending():
    for n in range(10):
        ps = list(partitions_of(n))
        assert ps == sorted(ps, reverse=True)
        assert len(set(ps)) == len(ps)


def test_partitions_max_length():
    assert list(partitions_of(4, max_length=2)) == [(4,), (3, 1), (2, 2)]
    assert list(partitions_of(3, max_length=1)) == [(3,)]
    assert list(partitions_of(0, max_length=0)) == [()]


def test_partitions_max_part():
    assert list(partitions_of(4, max_part=2)) == [(2, 2), (2, 1, 1), (1, 1, 1, 1)]


def test_lex_order_refines_dominance():
    for n in range(9):
        ps = list(partitions_of(n))
        index = {lam: i for i, lam in enumerate(ps)}
        for lam in ps:
            for mu in ps:
                if lam != mu and dominance_leq(lam, mu):
                    assert index[mu] < index[lam]


def test_dominance_known():
    assert dominance_leq((1, 1, 1), (3,))
    assert dominance_leq((2, 1), (3,))
    assert not dominance_leq((3,), (2, 1))
    assert not dominance_leq((2, 2), (3,))  # unequal weight
    assert dominance_leq((2, 2), (2, 2))
    assert not dominance_leq((3, 1), (2, 2))
    assert dominance_leq((2, 2), (3, 1))


def test_contains():
    assert contains((3, 2), (2, 2))
    assert contains((3, 2), ())
    assert not contains((3, 2), (1, 1, 1))
    assert not contains((3, 2), (4,))


def test_add_row_vector():
    assert add_row_vector((3, 1), (0, 2, 1)) == (3, 3, 1)
    assert add_row_vector((2,), ()) == (2,)


def test_decrement_part():
    assert decrement_part((3, 2), 2) == (3, 1)
    assert decrement_part((3, 2), 1) == (2, 2)
    with pytest.raises(ValueError):
        decrement_part((3, 2), 3)


def test_compositions_bounded():
    out = list(compositions_bounded((1, 2)))
    assert out == [(0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (1, 2)]
    assert list(compositions_bounded(())) == [()]


def test_vectors_with_sum_at_most():
    out = list(vectors_with_sum_at_most(2, 2))
    assert set(out) == {(0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (2, 0)}
    assert len(out) == 6
    assert list(vectors_with_sum_at_most(0, 3)) == [()]
