from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from superdual.polyring import (
    LaurentSeries, SpecializationError, VariableSet, evaluate_all, exact_divide, geometric_inverse,
    mul, power, specialize,
)

VS = VariableSet(("x", 2), ("y", 1), ("z", 1))
XY = VariableSet(("x", 1), ("y", 1))
YU = VariableSet(("y", 1), ("u", 1))


def var(vs, name, i=1, power=1):
    return LaurentSeries.variable(vs, name, i, power)


exponents = st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 2), st.integers(-2, 2))
coefficients = st.fractions(min_value=-5, max_value=5, max_denominator=4)
series = st.dictionaries(exponents, coefficients, max_size=8).map(lambda t: LaurentSeries(VS, t))


def test_basic_products():
    x1 = var(XY, "x")
    one = LaurentSeries.one(XY)
    assert (one + x1) * (one - x1) == one - x1 * x1
    assert x1 * one == x1
    yu = LaurentSeries.monomial(YU, {("y", 1): 1, ("u", 1): 1})
    square = mul(LaurentSeries.one(YU) + yu, LaurentSeries.one(YU) + yu, cutoff=2)
    assert square == LaurentSeries.one(YU) + yu * 2


def test_zero_coefficients_are_dropped():
    p = LaurentSeries(XY, {(1, 0): 1, (0, 1): 0})
    assert len(p) == 1
    assert (p - p).is_zero()


@settings(max_examples=60, deadline=None)
@given(series, series, series)
def test_ring_axioms(a, b, c):
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + (b - a) == b


@settings(max_examples=60, deadline=None)
@given(series, series, st.integers(0, 6))
def test_truncated_product_is_truncation_of_exact_product(a, b, cutoff):
    assert mul(a, b, cutoff) == (a * b).truncate(cutoff)


def test_geometric_inverse_examples():
    x1 = var(XY, "x")
    one = LaurentSeries.one(XY)
    assert geometric_inverse(one - x1, 3) == one + x1 + x1 ** 2 + x1 ** 3
    xy = LaurentSeries.monomial(XY, {("x", 1): 1, ("y", 1): 1})
    assert geometric_inverse(one - xy, 2) == one + xy
    assert geometric_inverse(one - x1, 0) == one


@settings(max_examples=40, deadline=None)
@given(st.dictionaries(exponents.filter(lambda e: e[0] + e[1] + e[2] > 0), coefficients, max_size=4),
       st.integers(0, 5))
def test_geometric_inverse_is_two_sided(m_terms, cutoff):
    factor = LaurentSeries.one(VS) - LaurentSeries(VS, m_terms)
    inv = geometric_inverse(factor, cutoff)
    one = LaurentSeries.one(VS)
    assert mul(inv, factor, cutoff) == one
    assert mul(factor, inv, cutoff) == one


def test_geometric_inverse_rejects_degree_zero():
    z = var(VS, "z")
    with pytest.raises(ValueError):
        geometric_inverse(LaurentSeries.one(VS) - z, 3)
    with pytest.raises(ValueError):
        geometric_inverse(LaurentSeries.constant(VS, 2) - var(VS, "x"), 3)


def test_ungraded_family_is_ignored_by_cutoff():
    p = LaurentSeries(VS, {(1, 0, 0, 5): 1, (2, 0, 0, -3): 1, (3, 0, 0, 0): 1}, cutoff=2)
    assert len(p) == 2


def test_specialize_examples():
    hs = LaurentSeries(XY, {(2, 0): 1, (1, 1): 1})
    assert evaluate_all(hs) == 2
    assert specialize(hs, {}) == hs
    assert specialize(hs, {"x1": "x1", "y1": "y1"}) == hs
    inv = var(XY, "x", power=-1)
    assert specialize(inv, {"x1": 2}).to_scalar() == Fraction(1, 2)
    with pytest.raises(SpecializationError):
        specialize(inv, {"x1": 0})


def test_specialize_swaps_simultaneously():
    p = LaurentSeries(VS, {(2, 1, 0, 0): 3})
    swapped = specialize(p, {"x1": "x2", "x2": "x1"})
    assert swapped == LaurentSeries(VS, {(1, 2, 0, 0): 3})


def test_exact_divide():
    x1, x2 = var(VS, "x", 1), var(VS, "x", 2)
    assert exact_divide(x1 ** 2 - x2 ** 2, x1 - x2) == x1 + x2
    with pytest.raises(ValueError):
        exact_divide(x1 ** 2 + x2, x1 - x2)


def test_shift_moves_cutoff():
    p = LaurentSeries(XY, {(0, 0): 1, (1, 1): 1}, cutoff=2)
    shifted = p.shift({("x", 1): -1, ("y", 1): 2})
    assert shifted.cutoff == 3
    assert shifted == LaurentSeries(XY, {(-1, 2): 1, (0, 3): 1})


def test_power():
    x1 = var(XY, "x")
    assert power(LaurentSeries.one(XY) + x1, 3, cutoff=2) == LaurentSeries(XY, {(0, 0): 1, (1, 0): 3, (2, 0): 3})


def test_text_rendering():
    p = LaurentSeries(VariableSet(("x", 2), ("y", 2), ("u", 1)),
                      {(2, 0, 0, 1, 0): 3, (0, 0, 0, 0, 1): Fraction(-1, 2)})
    assert str(p) == "3*x1^2*y2 - 1/2*u1"
    assert str(LaurentSeries(XY, {(2, 0): 1, (1, 1): 1})) == "x1^2 + x1*y1"
    assert str(LaurentSeries.zero(XY)) == "0"


@settings(max_examples=30, deadline=None)
@given(series)
def test_json_round_trip(p):
    assert LaurentSeries.from_json(p.to_json()) == p


def test_variable_set_validation():
    with pytest.raises(ValueError):
        VariableSet(("x", 1), ("x", 2))
    with pytest.raises(ValueError):
        VariableSet(("x", -1))
    with pytest.raises(ValueError):
        LaurentSeries.one(XY) + LaurentSeries.one(VS)
