from itertools import permutations, product

import pytest

from superdual.cinfty import (
    CWeight, RankError, SignedPermutation, cinf_character, coset_reps, osp_character, osp_variables,
    verify_dual_c, verify_sp_osp,
)
from superdual.partitions import Partition, conjugate, partitions_up_to
from superdual.polyring import LaurentSeries, VariableSet, geometric_inverse, mul
from superdual.symfunc import schur


def all_signed(rank):
    for perm in permutations(range(1, rank + 1)):
        for signs in product((1, -1), repeat=rank):
            yield SignedPermutation(tuple(p * s for p, s in zip(perm, signs)))


def reduced_word_lengths(rank):
    """Breadth-first distances from the identity in the Cayley graph."""
    gens = [SignedPermutation.simple(i, rank) for i in range(rank)]
    dist = {SignedPermutation.identity(rank): 0}
    frontier = list(dist)
    while frontier:
        nxt = []
        for w in frontier:
            for s in gens:
                ws = w * s
                if ws not in dist:
                    dist[ws] = dist[w] + 1
                    nxt.append(ws)
        frontier = nxt
    return dist


def test_signed_permutation_basics():
    s0 = SignedPermutation.simple(0, 3)
    assert s0.act((5, 6, 7)) == (-5, 6, 7)
    assert SignedPermutation.simple(1, 3).act((5, 6, 7)) == (6, 5, 7)
    assert s0 * s0 == SignedPermutation.identity(3)
    with pytest.raises(ValueError):
        SignedPermutation((1, 1))
    with pytest.raises(ValueError):
        SignedPermutation.simple(3, 3)


@pytest.mark.parametrize("rank", [1, 2, 3, 4])
def test_length_is_coxeter_length(rank):
    dist = reduced_word_lengths(rank)
    assert len(dist) == 2 ** rank * len(list(permutations(range(rank))))
    gens = [SignedPermutation.simple(i, rank) for i in range(rank)]
    for w in all_signed(rank):
        assert w.length() == dist[w]
        for s in gens:
            assert abs((w * s).length() - w.length()) == 1


def test_coset_rep_examples():
    assert coset_reps(0, 6, (), 2) == [(SignedPermutation.identity(6), Partition())]
    lam = Partition((2, 1))
    assert coset_reps(0, 6, lam, 4) == [(SignedPermutation.identity(6), conjugate(lam))]
    ((w, lam_w),) = coset_reps(1, 6, (), 2)
    assert w == SignedPermutation.simple(0, 6)
    assert lam_w == Partition((4,))


def test_negating_a_coordinate_costs_its_index():
    for rank in range(1, 5):
        for w in all_signed(rank):
            negated = [abs(v) for v in w.images if v < 0]
            flipped = [i + 1 for i, v in enumerate(w.images) if v < 0]
            if flipped:
                assert w.length() >= max(flipped)
            assert len(negated) == len(flipped)


@pytest.mark.parametrize("lam,d", [((), 2), ((1,), 2), ((2, 1), 4), ((1, 1), 4), ((3,), 2)])
def test_coset_reps_are_stable_in_rank(lam, d):
    for k in range(4):
        base = k + len(conjugate(lam)) + 2
        small = [lam_w for _, lam_w in coset_reps(k, base, lam, d)]
        large = [lam_w for _, lam_w in coset_reps(k, base + 1, lam, d)]
        assert small == large
        # distinct representatives give distinct partitions in every tested case
        assert len(set(small)) == len(small)


def test_coset_reps_detect_small_rank():
    with pytest.raises(RankError):
        coset_reps(1, 1, (), 2)


def test_dot_action_of_identity():
    weight = CWeight.of_partition((3, 1), 4)
    assert weight.dot(SignedPermutation.identity(5)).as_partition() == Partition((2, 1, 1))


def test_cinf_character_small_values():
    vs = VariableSet(("x", 1))
    assert cinf_character((), 2, 4, nvars=1) == LaurentSeries(vs, {(0,): 1, (2,): 1})
    assert cinf_character((1,), 2, 4, nvars=1) == LaurentSeries(vs, {(1,): 1})
    assert cinf_character((2,), 2, 4, nvars=1).is_zero()


def test_cinf_character_two_variables():
    vs = VariableSet(("x", 2))
    one = LaurentSeries.one(vs)
    prefactor = LaurentSeries.one(vs, 2)
    for i, j in [(1, 1), (1, 2), (2, 2)]:
        prefactor = mul(prefactor, geometric_inverse(one - LaurentSeries.monomial(vs, {("x", i): 1}) *
                                                     LaurentSeries.monomial(vs, {("x", j): 1}), 2), 2)
    # the first correction term has degree 4, so up to degree 2 only the prefactor survives
    assert cinf_character((), 2, 2, nvars=2) == prefactor


def test_cinf_character_leading_term_and_positivity():
    for ell in (1, 2):
        for lam in partitions_up_to(4):
            if len(lam) > ell:
                continue
            ch = cinf_character(lam, 2 * ell, 5, nvars=3)
            vs = ch.vars
            lowest = LaurentSeries(vs, {e: c for e, c in ch.terms.items() if sum(e) == lam.size})
            assert lowest == schur(conjugate(lam), vs)
            assert all(c > 0 and int(c) == c for c in ch.terms.values())


def test_cinf_character_checks_k_max_and_rank():
    with pytest.raises(RankError):
        cinf_character((), 2, 9, k_max=1)
    with pytest.raises(RankError):
        cinf_character((), 2, 9, rank=2)
    with pytest.raises(ValueError):
        cinf_character((), 3, 4)
    with pytest.raises(ValueError):
        cinf_character((1, 1), 2, 4)


@pytest.mark.parametrize("ell,cutoff", [(1, 0), (1, 3), (1, 5), (2, 4), (2, 5)])
def test_dual_c_identity(ell, cutoff):
    report = verify_dual_c(ell, cutoff)
    assert report, report.first_discrepancy
    assert report.to_json()["status"] is True


def test_osp_character_rejects_bad_input():
    with pytest.raises(ValueError):
        osp_character((), 0, 0, 1, 3)
    with pytest.raises(ValueError):
        osp_character((2, 2), 1, 1, 2, 3)
    with pytest.raises(ValueError):
        osp_character((1, 1), 1, 1, 1, 3)


def test_osp_character_leading_terms():
    m, n, ell = 1, 1, 1
    vs = osp_variables(m, n)
    ch = osp_character((1,), m, n, ell, 3)
    unshifted = ch.shift({("y", 1): -ell, ("x", 1): ell})
    lowest = LaurentSeries(vs, {e: c for e, c in unshifted.terms.items() if sum(e) == 1})
    assert lowest == LaurentSeries(vs, {(1, 0): 1, (0, 1): 1})
    assert ch.cutoff == 3


@pytest.mark.parametrize("dims,cutoff", [((1, 1, 1), 4), ((2, 1, 1), 3), ((2, 1, 1), 4), ((1, 2, 1), 4),
                                         ((1, 1, 1), 0), ((1, 1, 2), 4), ((0, 1, 1), 4), ((1, 0, 1), 4)])
def test_sp_osp_identity(dims, cutoff):
    report = verify_sp_osp(*dims, cutoff)
    assert report, report.first_discrepancy


def test_identity_report_shows_discrepancy():
    from superdual.cinfty import first_difference
    vs = VariableSet(("x", 1))
    diff = first_difference(LaurentSeries(vs, {(2,): 1}), LaurentSeries(vs, {(2,): 3, (1,): 1}))
    assert diff == {"monomial": "x1^2", "lhs": "1", "rhs": "3"}
