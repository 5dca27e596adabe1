"""Named verification suites.

Each suite takes optional dimension overrides and returns a report dict with
``suite``, ``status``, ``cases`` and, on failure, ``first_discrepancy``.
Without overrides the suites run the default desk-scale case lists.
"""

from __future__ import annotations

from math import comb

from . import cinfty, dualmaps, glroots, superweyl, tensor
from .partitions import (Partition, conjugate, from_frobenius, hook_partitions,
                         modified_frobenius, natural_weight, partitions_up_to, rectangle_atypicality)
from .polyring import LaurentSeries, VariableSet, geometric_inverse, mul
from .symfunc import hook_schur, schur
from .tableaux import character_via_tableaux


class Suite:
    """Collects case outcomes and remembers the first failure."""

    def __init__(self, name: str):
        self.name = name
        self.cases = 0
        self.failure = None
        self.extra: dict = {}

    def check(self, ok: bool, **case) -> bool:
        self.cases += 1
        if not ok and self.failure is None:
            self.failure = {k: (str(v) if not isinstance(v, (int, bool, list, dict, type(None))) else v)
                            for k, v in case.items()}
        return ok

    def report(self) -> dict:
        out = {"suite": self.name, "status": self.failure is None, "cases": self.cases}
        out.update(self.extra)
        if self.failure is not None:
            out["first_discrepancy"] = self.failure
        return out


def _pairs(m, n, default):
    if m is None and n is None:
        return default
    return [(m if m is not None else 1, n if n is not None else 1)]


SMALL_PAIRS = [(m, n) for m in range(4) for n in range(4)]


def hook_schur_suite(m=None, n=None, cutoff=None, **_):
    s = Suite("hook-schur")
    for mm, nn in _pairs(m, n, SMALL_PAIRS):
        for lam in hook_partitions(6 if cutoff is None else cutoff, mm, nn):
            s.check(character_via_tableaux(lam, mm, nn) == hook_schur(lam, (mm, nn)),
                    m=mm, n=nn, lam=lam)
    return s.report()


def exchange_suite(m=None, n=None, cutoff=None, **_):
    s = Suite("exchange")
    for mm, nn in _pairs(m, n, [(a, b) for a in range(1, 4) for b in range(1, 4)]):
        vs = VariableSet(("x", mm), ("y", nn))
        only_x = VariableSet(("x", mm), ("y", 0))
        only_y = VariableSet(("x", 0), ("y", nn))
        for lam in partitions_up_to(6 if cutoff is None else cutoff):
            s.check(hook_schur(lam, only_x) == schur(lam, only_x, "x"), m=mm, n=nn, lam=lam, check="y empty")
            s.check(hook_schur(lam, only_y) == schur(conjugate(lam), only_y, "y"), m=mm, n=nn, lam=lam, check="x empty")
            swapped = hook_schur(lam, vs, x="y", y="x")
            s.check(swapped == hook_schur(conjugate(lam), vs), m=mm, n=nn, lam=lam, check="exchange")
    return s.report()


SERGEEV_DIMS = [(1, 1, 2), (1, 1, 3), (2, 1, 3), (1, 2, 3), (2, 2, 4)]


def sergeev_suite(m=None, n=None, d=None, **_):
    s = Suite("sergeev")
    dims = SERGEEV_DIMS if m is None and n is None and d is None else [(m or 1, n or 1, d or 2)]
    for mm, nn, dd in dims:
        s.check(tensor.verify_commuting(mm, nn, dd), dims=[mm, nn, dd], check="commuting")
        report = tensor.decompose(mm, nn, dd)
        for name, ok in report["checks"].items():
            s.check(ok, dims=[mm, nn, dd], check=name)
    return s.report()


def typical_suite(m=None, n=None, cutoff=None, **_):
    s = Suite("typical")
    atypical_differ = 0
    for mm, nn in _pairs(m, n, [(a, b) for a in range(1, 4) for b in range(1, 4)]):
        for lam in hook_partitions(6 if cutoff is None else cutoff, mm, nn):
            hs = hook_schur(lam, (mm, nn))
            kac = glroots.kac_character(natural_weight(lam, mm, nn), mm, nn)
            if lam.part(mm) >= nn:
                s.check(kac == hs, m=mm, n=nn, lam=lam)
            elif kac != hs:
                atypical_differ += 1
    s.extra["atypical_differing"] = atypical_differ
    s.check(atypical_differ >= 3, check="at least three atypical characters differ")
    return s.report()


def atypicality_suite(m=None, n=None, cutoff=None, **_):
    s = Suite("atypicality")
    for mm, nn in _pairs(m, n, SMALL_PAIRS):
        for lam in hook_partitions(8 if cutoff is None else cutoff, mm, nn):
            typical, degree = glroots.typicality(natural_weight(lam, mm, nn), mm, nn)
            expected = rectangle_atypicality(lam, mm, nn)
            s.check(degree == expected and typical == (expected == 0), m=mm, n=nn, lam=lam,
                    brute_force=degree, rectangle=expected)
    return s.report()


def extremal_suite(m=None, n=None, cutoff=None, **_):
    s = Suite("extremal")
    size = 13 if cutoff is None else cutoff
    for mm, nn in _pairs(m, n, [(2, 2), (1, 2)]):
        for word in glroots.borel_words(mm, nn):
            paths = list(glroots.shuffle_paths(word, mm, nn))
            for lam in hook_partitions(size, mm, nn):
                expected = glroots.extremal_weight(lam, word)
                start = natural_weight(lam, mm, nn)
                for path in (paths if mm + nn <= 4 else paths[:1]):
                    folded = glroots.fold_odd_reflections(start, path, mm, nn)
                    s.check(folded == expected, word=word, lam=lam, path=list(path),
                            peeling=expected, reflections=folded)
    return s.report()


def frobenius_suite(**_):
    s = Suite("frobenius")
    coords = modified_frobenius(Partition((7, 5, 4, 3, 1)))
    s.check(coords == ((7, 4, 2), (4, 2, 1)), got=coords)
    for lam in partitions_up_to(10):
        s.check(from_frobenius(modified_frobenius(lam)) == lam, lam=lam, check="round trip")
    return s.report()


HWV_DIMS = [(1, 1, 2), (2, 1, 3), (1, 2, 3)]


def hwv_suite(m=None, n=None, d=None, cutoff=None, **_):
    s = Suite("hwv")
    dims = HWV_DIMS if m is None and n is None and d is None else [(m or 1, n or 1, d or 2)]
    for mm, nn, dd in dims:
        for lam in hook_partitions(4 if cutoff is None else cutoff, mm, nn):
            if len(lam) > dd:
                continue
            r = superweyl.hwv_report(lam, (mm, nn, dd))
            checks = [r["nonzero"], r["killed_by_raising"], r["weights"]]
            checks += [r[k] for k in ("shifted_weights", "harmonic") if r[k] is not None]
            s.check(all(checks), dims=[mm, nn, dd], lam=lam, report=r)
    return s.report()


def gl_howe_identity(m: int, n: int, d: int, cutoff: int) -> tuple[LaurentSeries, LaurentSeries]:
    """Both sides of sum_lam s_lam(u) hs_lam(x; y) = prod (1 + y_j u_k) / (1 - x_i u_k).

    Only x and y count towards the truncation degree.
    """
    vs = VariableSet(("x", m), ("y", n), ("u", d, False))
    one = LaurentSeries.one(vs)
    lhs = LaurentSeries.zero(vs, cutoff)
    for lam in hook_partitions(cutoff, m, n):
        if len(lam) <= d:
            lhs = lhs + mul(schur(lam, vs, "u"), hook_schur(lam, vs), cutoff)
    rhs = LaurentSeries.one(vs, cutoff)
    for k in range(1, d + 1):
        for i in range(1, m + 1):
            rhs = mul(rhs, geometric_inverse(one - LaurentSeries.monomial(vs, {("x", i): 1, ("u", k): 1}), cutoff), cutoff)
        for j in range(1, n + 1):
            rhs = mul(rhs, one + LaurentSeries.monomial(vs, {("y", j): 1, ("u", k): 1}), cutoff)
    return lhs, rhs


def gl_howe_suite(m=None, n=None, d=None, cutoff=None, **_):
    s = Suite("gl-howe")
    dims = [(2, 2, 2), (1, 1, 3)] if m is None and n is None and d is None else [(m or 1, n or 1, d or 2)]
    for mm, nn, dd in dims:
        lhs, rhs = gl_howe_identity(mm, nn, dd, 6 if cutoff is None else cutoff)
        s.check(lhs == rhs, dims=[mm, nn, dd], difference=cinfty.first_difference(lhs, rhs))
    return s.report()


def sp_osp_commute_suite(m=None, n=None, d=None, cutoff=None, **_):
    s = Suite("sp-osp-commute")
    dims = superweyl.Dims(m or 1, n or 1, d or 2)
    basis = superweyl.monomial_basis(dims, 4 if cutoff is None else cutoff)
    sp = superweyl.dual_pair_generators("sp_d", dims)
    partner = superweyl.dual_pair_generators("gl_mn_shifted", dims) + superweyl.dual_pair_generators("osp_extra", dims)
    failure = superweyl.supercommute_on_basis(sp, partner, basis)
    s.check(failure is None, dims=[dims.m, dims.n, dims.d], failure=failure)
    s.extra["operators"] = [len(sp), len(partner)]
    s.extra["basis_size"] = len(basis)
    return s.report()


def dual_c_suite(ell=None, cutoff=None, kmax=None, **_):
    s = Suite("dual-c")
    cases = [(e, c) for e in (1, 2) for c in range(6)] if ell is None and cutoff is None else [(ell or 1, 5 if cutoff is None else cutoff)]
    for e, c in cases:
        r = cinfty.verify_dual_c(e, c, kmax)
        s.check(r.status, ell=e, cutoff=c, difference=r.first_discrepancy)
    return s.report()


def sp_osp_suite(m=None, n=None, ell=None, cutoff=None, kmax=None, **_):
    s = Suite("sp-osp")
    if m is None and n is None and ell is None:
        dims = [(1, 1, 1), (2, 1, 1), (1, 2, 1)]
    else:
        dims = [(1 if m is None else m, 1 if n is None else n, ell or 1)]
    for mm, nn, e in dims:
        r = cinfty.verify_sp_osp(mm, nn, e, 4 if cutoff is None else cutoff, kmax)
        s.check(r.status, dims=[mm, nn, e], difference=r.first_discrepancy)
    return s.report()


def superdual_suite(m=None, cutoff=None, **_):
    s = Suite("superdual")
    seen = set()
    for heads in ([(), (1,), (3, -1)] if m is None else [tuple(range(m, 0, -1))]):
        for level in range(-2, 3):
            for tail in partitions_up_to(8 if cutoff is None else cutoff):
                lam = dualmaps.TailWeight.from_partition(heads, tail, level)
                nat = dualmaps.natural_map(lam)
                s.check(dualmaps.natural_map_inverse(nat) == lam and nat.tail_partition().size == tail.size,
                        lam=lam, check="natural round trip")
                th = dualmaps.theta_map(lam)
                s.check(th not in seen and dualmaps.theta_map_inverse(th) == lam, lam=lam, check="theta")
                seen.add(th)
                s.check(nat.head == th.head and nat.tail_partition() == from_frobenius(dualmaps.theta_frobenius(th)),
                        lam=lam, check="compatibility")
                for nn in range(1, 10):
                    cut = dualmaps.truncate_weight(nat, nn)
                    s.check((cut is not dualmaps.ZERO) == (nat.coefficient(nn + 0.5) == -level),
                            lam=lam, n=nn, check="truncation")
    return s.report()


def borel_suite(m=None, n=None, **_):
    s = Suite("borel")
    for mm, nn in _pairs(m, n, [(a, b) for a in range(4) for b in range(4) if a + b]):
        words = glroots.borel_words(mm, nn)
        s.check(len(set(words)) == comb(mm + nn, mm), m=mm, n=nn, words=len(words))
    if m is None and n is None:
        systems = glroots.reachable_simple_systems(1, 2)
        s.check(len(systems) == 6, check="gl(1|2) simple systems", found=len(systems))
    return s.report()


SUITES = {
    "hook-schur": hook_schur_suite,
    "exchange": exchange_suite,
    "sergeev": sergeev_suite,
    "typical": typical_suite,
    "atypicality": atypicality_suite,
    "extremal": extremal_suite,
    "frobenius": frobenius_suite,
    "hwv": hwv_suite,
    "gl-howe": gl_howe_suite,
    "sp-osp-commute": sp_osp_commute_suite,
    "dual-c": dual_c_suite,
    "sp-osp": sp_osp_suite,
    "superdual": superdual_suite,
    "borel": borel_suite,
}
