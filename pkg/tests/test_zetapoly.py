import pytest
from hypothesis import given, strategies as st

from hooklens.zetapoly import ZetaPoly

coeff_lists = st.lists(st.integers(-50, 50), max_size=8)


def test_trailing_zeros_are_stripped():
    assert ZetaPoly([1, 2, 0, 0]).coeffs == (1, 2)
    assert ZetaPoly([0, 0]).is_zero()
    assert ZetaPoly([]).degree == -1


def test_equality_with_integers():
    assert ZetaPoly([3]) == 3
    assert ZetaPoly([0]) == 0
    assert ZetaPoly([0, 1]) != 0


def test_evaluation_and_derivative():
    p = ZetaPoly([0, 2, 1])  # z^2 + 2z
    assert p(1) == 3
    assert p(-2) == 0
    assert p.derivative() == ZetaPoly([2, 2])


def test_residue_sum():
    p = ZetaPoly([1, 2, 3, 4, 5])
    assert p.residue_sum(2, 0) == 9
    assert p.residue_sum(2, 1) == 6
    assert p.residue_sum(3, 2) == 3


def test_repr_names_terms():
    assert "z^2" in repr(ZetaPoly([0, 2, 1]))


@given(coeff_lists, coeff_lists, st.integers(-5, 5))
def test_ring_operations_agree_with_evaluation(a, b, x):
    p, q = ZetaPoly(a), ZetaPoly(b)
    assert (p + q)(x) == p(x) + q(x)
    assert (p - q)(x) == p(x) - q(x)
    assert (p * q)(x) == p(x) * q(x)


@given(coeff_lists)
def test_hash_consistent_with_equality(a):
    assert hash(ZetaPoly(a)) == hash(ZetaPoly(list(a) + [0, 0]))


@given(coeff_lists, st.integers(2, 6))
def test_residue_sums_partition_the_value_at_one(a, b):
    p = ZetaPoly(a)
    assert sum(p.residue_sum(b, r) for r in range(b)) == p(1)
