from fractions import Fraction

import pytest

from superdual.partitions import conjugate, partitions_up_to
from superdual.polyring import LaurentSeries, VariableSet, evaluate_all, geometric_inverse, mul
from superdual.symfunc import (
    alternant_ratio, hook_schur, is_symmetric_in, monomial_symmetric, schur, skew_schur,
    symplectic_character,
)


def poly(vs, terms):
    return LaurentSeries(vs, terms)


def test_monomial_symmetric():
    vs = VariableSet(("x", 2))
    assert monomial_symmetric((1,), vs) == poly(vs, {(1, 0): 1, (0, 1): 1})
    assert monomial_symmetric((2, 1), vs) == poly(vs, {(2, 1): 1, (1, 2): 1})
    assert monomial_symmetric((), vs) == 1
    with pytest.raises(ValueError):
        monomial_symmetric((1, 1, 1), vs)


def test_schur_examples():
    assert schur((1, 1), 1).is_zero()
    vs = VariableSet(("x", 2))
    assert schur((2,), vs) == poly(vs, {(2, 0): 1, (1, 1): 1, (0, 2): 1})
    vs3 = VariableSet(("x", 3))
    assert schur((1, 1, 1), vs3) == poly(vs3, {(1, 1, 1): 1})


def test_skew_schur_examples():
    vs = VariableSet(("y", 1))
    assert skew_schur((2, 1), (2, 1), vs, "y") == 1
    assert skew_schur((1, 1), (1,), vs, "y") == poly(vs, {(1,): 1})
    vs3 = VariableSet(("x", 3))
    assert skew_schur((2, 1), (), vs3) == schur((2, 1), vs3)
    with pytest.raises(ValueError):
        skew_schur((1,), (2,), vs3)


def test_schur_agrees_with_bialternant():
    for k in range(1, 5):
        vs = VariableSet(("x", k))
        for lam in partitions_up_to(6):
            expected = alternant_ratio(lam, vs) if len(lam) <= k else LaurentSeries.zero(vs)
            assert schur(lam, vs) == expected, (lam, k)


def test_schur_polynomials_are_symmetric():
    vs = VariableSet(("x", 3), ("y", 2))
    for lam in partitions_up_to(5):
        hs = hook_schur(lam, vs)
        assert is_symmetric_in(hs, "x") and is_symmetric_in(hs, "y")


def test_hook_schur_examples():
    vs = VariableSet(("x", 1), ("y", 1))
    assert hook_schur((2,), vs) == poly(vs, {(2, 0): 1, (1, 1): 1})
    vs = VariableSet(("x", 2), ("y", 3))
    linear = sum((LaurentSeries.variable(vs, f, i) for f, k in (("x", 2), ("y", 3)) for i in range(1, k + 1)),
                 LaurentSeries.zero(vs))
    assert hook_schur((1,), vs) == linear


def test_hook_schur_flags_non_hook_shapes():
    hs = hook_schur((2, 2), (1, 1))
    assert hs.is_zero() and hs.structural_zero
    assert not hook_schur((2,), (1, 1)).structural_zero


def test_hook_schur_specializations_up_to_8():
    for k in range(4):
        only_x = VariableSet(("x", k), ("y", 0))
        only_y = VariableSet(("x", 0), ("y", k))
        for lam in partitions_up_to(8):
            assert hook_schur(lam, only_x) == schur(lam, only_x, "x")
            assert hook_schur(lam, only_y) == schur(conjugate(lam), only_y, "y")


def test_hook_schur_exchange_symmetry():
    for m in range(4):
        for n in range(4):
            vs = VariableSet(("x", m), ("y", n))
            for lam in partitions_up_to(6):
                assert hook_schur(lam, vs, x="y", y="x") == hook_schur(conjugate(lam), vs)


def test_truncated_cauchy_identity():
    cutoff = 6
    for m in range(1, 4):
        for d in range(1, 4):
            vs = VariableSet(("x", m), ("u", d, False))
            lhs = LaurentSeries.zero(vs, cutoff)
            for lam in partitions_up_to(cutoff):
                if len(lam) <= d:
                    lhs = lhs + mul(schur(lam, vs, "u"), schur(lam, vs, "x"), cutoff)
            rhs = LaurentSeries.one(vs, cutoff)
            for i in range(1, m + 1):
                for k in range(1, d + 1):
                    factor = LaurentSeries.one(vs) - LaurentSeries.monomial(vs, {("x", i): 1, ("u", k): 1})
                    rhs = mul(rhs, geometric_inverse(factor, cutoff), cutoff)
            assert lhs == rhs, (m, d)


def weyl_dimension_sp(lam, ell):
    """Weyl dimension formula for Sp(2 ell)."""
    rho = [ell - i for i in range(ell)]
    shifted = [(lam[i] if i < len(lam) else 0) + rho[i] for i in range(ell)]
    num = den = Fraction(1)
    for i in range(ell):
        num *= shifted[i]
        den *= rho[i]
        for j in range(i + 1, ell):
            num *= (shifted[i] - shifted[j]) * (shifted[i] + shifted[j])
            den *= (rho[i] - rho[j]) * (rho[i] + rho[j])
    return num / den


def test_symplectic_character_examples():
    vs = VariableSet(("z", 1))
    for k in range(5):
        assert symplectic_character((k,), vs) == poly(vs, {(e,): 1 for e in range(-k, k + 1, 2)})
    vs2 = VariableSet(("z", 2))
    assert symplectic_character((), vs2) == 1
    assert symplectic_character((1,), vs2) == poly(vs2, {(1, 0): 1, (-1, 0): 1, (0, 1): 1, (0, -1): 1})
    with pytest.raises(ValueError):
        symplectic_character((1, 1, 1), vs2)


def test_symplectic_character_dimension_and_symmetry():
    for ell in (1, 2, 3):
        vs = VariableSet(("z", ell))
        for lam in partitions_up_to(4):
            if len(lam) > ell:
                continue
            ch = symplectic_character(lam, vs)
            assert evaluate_all(ch) == weyl_dimension_sp(lam, ell)
            inverted = LaurentSeries(vs, {(-e[0],) + e[1:]: c for e, c in ch.terms.items()})
            assert inverted == ch
            assert is_symmetric_in(ch, "z")
