from fractions import Fraction

import pytest

from superdual.partitions import hook_partitions
from superdual.superweyl import (
    DiffOperator, Dims, SuperElement, apply, bracket_closure, diamond, diamond_kr, dual_pair_generators,
    eigenvalue, gen_eta, gen_x, gl_d_operator, gl_d_weight, highest_weight_vector, hwv_report,
    monomial_basis, raising_operators, supercommute_on_basis,
)


def x(dims, a, i):
    return SuperElement.x(dims, a, i)


def eta(dims, b, i):
    return SuperElement.eta(dims, b, i)


def derivation(dims, g):
    return DiffOperator(dims).add_term(1, (), (g,))


def test_eta_squares_to_zero_and_anticommutes():
    dims = Dims(0, 1, 2)
    a, b = eta(dims, 1, 1), eta(dims, 1, 2)
    assert (a * a).is_zero()
    assert a * b == -(b * a)
    assert str(x(Dims(1, 1, 2), 1, 1) * x(Dims(1, 1, 2), 1, 1) * eta(Dims(1, 1, 2), 1, 1)
               * eta(Dims(1, 1, 2), 1, 2)) == "x1_1^2*eta1_1*eta1_2"


def test_derivation_signs():
    dims = Dims(1, 1, 2)
    d11 = derivation(dims, gen_eta(1, 1))
    assert apply(d11, eta(dims, 1, 1)) == SuperElement.one(dims)
    assert apply(d11, eta(dims, 1, 1) * eta(dims, 1, 2)) == eta(dims, 1, 2)
    assert apply(d11, eta(dims, 1, 2) * eta(dims, 1, 1)) == -eta(dims, 1, 2)
    assert apply(gl_d_operator(dims, 1, 1), x(dims, 1, 1)) == x(dims, 1, 1)


def test_dimension_mismatch_rejected():
    with pytest.raises(ValueError):
        apply(derivation(Dims(1, 1, 2), gen_x(1, 1)), x(Dims(1, 1, 1), 1, 1))


def test_family_sizes():
    assert len(dual_pair_generators("gl_mn", (1, 1, 1))) == 4
    assert len(dual_pair_generators("gl_d", (2, 1, 3))) == 9
    names = sorted(op.name.split("_")[0] for op in dual_pair_generators("osp_extra", (1, 1, 2)))
    assert names == ["Dee", "Dxe", "Iee", "Ixe"]
    assert len(dual_pair_generators("osp_extra", (2, 1, 2))) == 2 * (1 + 2 + 1)
    with pytest.raises(ValueError):
        dual_pair_generators("sp_d", (1, 1, 3))
    with pytest.raises(ValueError):
        dual_pair_generators("osp_extra", (1, 1, 1))


def test_shifted_family_differs_by_half_d_on_diagonal():
    dims = Dims(1, 1, 2)
    plain = dual_pair_generators("gl_mn", dims)
    shifted = dual_pair_generators("gl_mn_shifted", dims)
    one = SuperElement.one(dims)
    # only the two diagonal operators move, by +d/2 and -d/2
    shifts = [eigenvalue(s, one) - eigenvalue(p, one) for p, s in zip(plain, shifted)]
    assert sorted(shifts) == [-1, 0, 0, 1]


def test_raising_operators():
    gl_d, gl_mn = raising_operators((2, 3, 4))
    assert len(gl_d) == 3 and len(gl_mn) == 4
    dims = Dims(1, 1, 1)
    odd = raising_operators(dims)[1][-1]
    assert apply(odd, eta(dims, 1, 1)) == x(dims, 1, 1)


def test_diamond():
    dims = Dims(2, 1, 3)
    assert diamond(1, dims) == x(dims, 1, 1)
    assert diamond(2, dims) == x(dims, 1, 1) * x(dims, 2, 2) - x(dims, 2, 1) * x(dims, 1, 2)
    assert gl_d_weight(diamond(2, dims)) == [1, 1, 0]
    with pytest.raises(ValueError):
        diamond(3, dims)


def test_diamond_with_eta_rows():
    dims = Dims(2, 1, 3)
    assert diamond_kr(1, 2, dims) == diamond(2, dims)
    pure = Dims(0, 2, 3)
    v = diamond_kr(2, 3, pure)
    product = eta(pure, 2, 1) * eta(pure, 2, 2) * eta(pure, 2, 3)
    (key,) = product.terms
    assert set(v.terms) == {key}
    assert not diamond_kr(1, 2, Dims(1, 1, 2)).is_zero()
    with pytest.raises(ValueError):
        diamond_kr(1, 1, Dims(2, 1, 3))


def test_highest_weight_vector_examples():
    dims = Dims(1, 1, 2)
    assert highest_weight_vector((1,), dims) == x(dims, 1, 1)
    assert highest_weight_vector((1, 1), dims) == diamond_kr(1, 2, dims)
    assert highest_weight_vector((2,), dims) == x(dims, 1, 1) * x(dims, 1, 1)
    with pytest.raises(ValueError):
        highest_weight_vector((1, 1, 1), dims)
    with pytest.raises(ValueError):
        highest_weight_vector((2, 2), Dims(1, 1, 2))


@pytest.mark.parametrize("dims", [(1, 1, 2), (2, 1, 2), (1, 2, 2)])
def test_gl_d_and_gl_mn_commute(dims):
    basis = monomial_basis(dims, 4)
    failure = supercommute_on_basis(dual_pair_generators("gl_d", dims), dual_pair_generators("gl_mn", dims), basis)
    assert failure is None


def test_sp_commutes_with_osp_family():
    dims = Dims(1, 1, 2)
    basis = monomial_basis(dims, 4)
    partner = dual_pair_generators("gl_mn_shifted", dims) + dual_pair_generators("osp_extra", dims)
    assert supercommute_on_basis(dual_pair_generators("sp_d", dims), partner, basis) is None


def test_osp_family_closes_under_brackets():
    dims = Dims(1, 1, 2)
    family = dual_pair_generators("gl_mn_shifted", dims) + dual_pair_generators("osp_extra", dims)
    assert bracket_closure(family, monomial_basis(dims, 3)) is None


def test_non_operator_family_is_not_closed():
    dims = Dims(1, 0, 2)
    single = [DiffOperator(dims, name="x2").add_term(1, (gen_x(1, 1), gen_x(1, 1)), ())]
    single.append(DiffOperator(dims, name="d2").add_term(1, (), (gen_x(1, 1), gen_x(1, 1))))
    assert bracket_closure(single, monomial_basis(dims, 3)) is not None


@pytest.mark.parametrize("dims", [(1, 1, 2), (2, 1, 3), (1, 2, 3)])
def test_highest_weight_vectors(dims):
    m, n, d = dims
    for lam in hook_partitions(4, m, n):
        if len(lam) > d:
            continue
        report = hwv_report(lam, dims)
        assert report["nonzero"] and report["killed_by_raising"] and report["weights"], report
        if d % 2 == 0:
            assert report["shifted_weights"], report
            if len(lam) <= d // 2:
                assert report["harmonic"], report
            else:
                assert report["harmonic"] is None


def test_harmonicity_fails_beyond_half_d():
    # (1,1) at d = 2 has two rows, more than d/2; the delta operators do not kill it
    dims = Dims(1, 1, 2)
    v = highest_weight_vector((1, 1), dims)
    deltas = [op for op in dual_pair_generators("osp_extra", dims) if op.name.startswith("D")]
    assert any(not apply(op, v).is_zero() for op in deltas)


def test_eigenvalue_of_non_eigenvector():
    dims = Dims(1, 0, 2)
    v = x(dims, 1, 1) + x(dims, 1, 2)
    assert eigenvalue(gl_d_operator(dims, 1, 1), v) is None
    assert eigenvalue(gl_d_operator(dims, 1, 1), x(dims, 1, 1)) == Fraction(1)
