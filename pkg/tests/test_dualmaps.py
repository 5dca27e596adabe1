from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from superdual.dualmaps import (
    ZERO, TailWeight, natural_map, natural_map_inverse, one_weight, theta_frobenius, theta_map,
    theta_map_inverse, truncate_weight,
)
from superdual.labels import Weight
from superdual.partitions import Partition, conjugate, from_frobenius, partitions_up_to

tails = st.lists(st.integers(0, 6), max_size=6).map(lambda xs: Partition(sorted(xs, reverse=True)))
heads = st.lists(st.integers(-3, 5), max_size=2).map(tuple)
levels = st.integers(-2, 2)


def y_weight(head, tail, level):
    return TailWeight.from_partition(head, Partition(tail), level, "Y")


def test_one_weight():
    assert one_weight(2, 1) == Weight.from_lists([1, 1], [-1])


def test_natural_map_examples():
    assert natural_map(y_weight((4,), (2, 1), 0)).tail_partition() == (2, 1)
    image = natural_map(y_weight((), (3,), 1))
    assert image.tail_partition() == (1, 1, 1)
    assert image.kind == "Ybar"
    assert [image.coefficient(Fraction(2 * i - 1, 2)) for i in range(1, 5)] == [0, 0, 0, -1]
    with pytest.raises(ValueError):
        natural_map(image)


def test_theta_map_examples():
    lam = y_weight((3, 1), conjugate((7, 5, 4, 3, 1)), 0)
    image = theta_map(lam)
    assert theta_frobenius(image) == ((7, 4, 2), (4, 2, 1))
    assert image.tail_prefix == (7, 4, 4, 2, 2, 1)
    empty = theta_map(y_weight((), (), 0))
    assert empty.tail_prefix == ()
    assert all(empty.coefficient(Fraction(k, 2)) == 0 for k in range(1, 10))
    shifted = theta_map(y_weight((), (), 2))
    assert [shifted.coefficient(Fraction(k, 2)) for k in range(1, 5)] == [-2, 2, -2, 2]


def test_tail_validation():
    with pytest.raises(ValueError):
        TailWeight((), (1, 3), 0, "Y")
    with pytest.raises(ValueError):
        TailWeight((), (0, 0), 1, "Y")
    with pytest.raises(ValueError):
        TailWeight((), (), 0, "Q")
    with pytest.raises(ValueError):
        # p = (1, 2) is not strictly decreasing
        TailWeight((), (1, 0, 2, 0), 0, "Ytilde")
    assert TailWeight((), (1, 5), 0, "Ytilde") == theta_map(y_weight((), (6,), 0))


@given(heads, tails, levels)
def test_round_trips(head, tail, level):
    lam = y_weight(head, tail, level)
    assert natural_map_inverse(natural_map(lam)) == lam
    assert theta_map_inverse(theta_map(lam)) == lam
    assert TailWeight.from_json(theta_map(lam).to_json()) == theta_map(lam)
    assert natural_map(lam).tail_partition().size == tail.size


@given(heads, tails, levels)
def test_compatibility_triangle(head, tail, level):
    lam = y_weight(head, tail, level)
    nat, th = natural_map(lam), theta_map(lam)
    assert nat.head == th.head == lam.head
    assert nat.tail_partition() == from_frobenius(theta_frobenius(th))
    p, q = theta_frobenius(th)
    assert sum(p) + sum(q) == tail.size


def test_theta_is_injective():
    images = {}
    for level in range(-2, 3):
        for tail in partitions_up_to(8):
            for head in [(), (2,), (1, -1)]:
                image = theta_map(y_weight(head, tail, level))
                assert image not in images
                images[image] = (head, tail, level)


def test_truncation_examples():
    lam = natural_map(y_weight((5,), (), 1))
    cut = truncate_weight(lam, 3)
    assert cut == Weight.from_lists([5], [-1, -1, -1])
    lam = natural_map(y_weight((2,), (1,), 0))
    assert truncate_weight(lam, 1) == Weight.from_lists([2], [1])
    lam = natural_map(y_weight((), (2,), 0))
    assert truncate_weight(lam, 1) is ZERO
    assert truncate_weight(lam, 2) == Weight.from_lists([], [1, 1])
    assert not ZERO and str(ZERO) == "ZERO"
    with pytest.raises(ValueError):
        truncate_weight(lam, 0)
    with pytest.raises(ValueError):
        truncate_weight(y_weight((), (), 0), 1)


@given(heads, tails, levels, st.integers(1, 8))
def test_truncation_case_split_and_monotonicity(head, tail, level, n):
    lam = natural_map(y_weight(head, tail, level))
    cut = truncate_weight(lam, n)
    assert (cut is not ZERO) == (lam.coefficient(Fraction(2 * n + 1, 2)) == -level)
    if cut is not ZERO:
        longer = truncate_weight(lam, n + 1)
        assert longer is not ZERO
        assert longer.epsilon_part(n) == cut.epsilon_part(n)
        assert len(longer.epsilon_part(n + 1)) == n + 1
