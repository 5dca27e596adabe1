"""Truncated type-C Weyl group combinatorics and the c-infinity / osp characters.

Weights of c-infinity are written as ``level * Lambda_0 + sum coords_j eps_j``.
The simple roots are ``-2 eps_1`` and ``eps_j - eps_{j+1}``; rho is taken as
``sum -j eps_j`` with level 0.  Shifting coordinates by the level,
``nu_j = coords_j - j - level``, turns the Weyl group action into the usual
action of signed permutations.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .partitions import Partition, as_partition, conjugate, is_hook, partitions_up_to
from .polyring import LaurentSeries, VariableSet, geometric_inverse, mul, render_text
from .symfunc import hook_schur, schur, symplectic_character


class RankError(ValueError):
    """Raised when a truncated Weyl group is too small for the requested terms."""


@dataclass(frozen=True, order=True)
class SignedPermutation:
    """One-line notation: ``images[i-1] = +-j`` means e_i is sent to +-e_j."""

    images: tuple

    def __post_init__(self):
        if sorted(abs(v) for v in self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"{self.images} is not a signed permutation")

    @property
    def rank(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, rank: int) -> "SignedPermutation":
        return cls(tuple(range(1, rank + 1)))

    @classmethod
    def simple(cls, i: int, rank: int) -> "SignedPermutation":
        """s_0 negates coordinate 1; s_i swaps coordinates i and i+1."""
        images = list(range(1, rank + 1))
        if i == 0:
            images[0] = -1
        elif 1 <= i < rank:
            images[i - 1], images[i] = i + 1, i
        else:
            raise ValueError(f"no simple reflection s_{i} in rank {rank}")
        return cls(tuple(images))

    def __mul__(self, other: "SignedPermutation") -> "SignedPermutation":
        if self.rank != other.rank:
            raise ValueError("rank mismatch")
        out = []
        for v in other.images:
            img = self.images[abs(v) - 1]
            out.append(img if v > 0 else -img)
        return SignedPermutation(tuple(out))

    def act(self, vec: Sequence) -> tuple:
        out = [0] * self.rank
        for i, v in enumerate(self.images):
            out[abs(v) - 1] = vec[i] if v > 0 else -vec[i]
        return tuple(out)

    def length(self) -> int:
        """Number of positive roots sent to negative ones (counted on a regular dominant vector)."""
        v = self.act([-(j + 1) for j in range(self.rank)])
        count = sum(1 for x in v if x > 0)
        for i in range(self.rank):
            for j in range(i + 1, self.rank):
                if v[i] < v[j]:
                    count += 1
                if v[i] + v[j] > 0:
                    count += 1
        return count

    def moves(self, index: int) -> bool:
        return self.images[index - 1] != index or any(abs(v) == index and v < 0 for v in self.images)

    def __str__(self):
        return "[" + ",".join(map(str, self.images)) + "]"


@dataclass(frozen=True)
class CWeight:
    level: Fraction
    coords: tuple

    @classmethod
    def of_partition(cls, lam, d: int) -> "CWeight":
        """The weight d/2 Lambda_0 + sum lam'_k eps_k."""
        return cls(Fraction(d, 2), tuple(conjugate(lam)))

    def shifted(self, rank: int) -> tuple:
        coords = tuple(self.coords) + (0,) * (rank - len(self.coords))
        return tuple(coords[j] - (j + 1) - self.level for j in range(rank))

    def dot(self, w: SignedPermutation) -> "CWeight":
        """w(self + rho) - rho."""
        v = w.act(self.shifted(w.rank))
        return CWeight(self.level, tuple(v[j] + self.level + j + 1 for j in range(w.rank)))

    def as_partition(self) -> Partition | None:
        coords = list(self.coords)
        if any(c != int(c) or c < 0 for c in coords):
            return None
        if any(coords[i] < coords[i + 1] for i in range(len(coords) - 1)):
            return None
        return Partition(int(c) for c in coords)


def _level(d: int) -> int:
    if d % 2:
        raise ValueError(f"d must be even, got {d}")
    return d // 2


def _check_label(lam, d):
    ell = _level(d)
    lam = as_partition(lam)
    if len(lam) > ell:
        raise ValueError(f"{lam} has more than d/2 = {ell} parts")
    return lam, ell


def _flip_element(nu: tuple, flipped) -> tuple[SignedPermutation, tuple]:
    vals = [(-x if (i + 1) in flipped else x) for i, x in enumerate(nu)]
    order = sorted(range(len(nu)), key=lambda i: -vals[i])
    images = [0] * len(nu)
    for pos, i in enumerate(order):
        images[i] = (pos + 1) if (i + 1) not in flipped else -(pos + 1)
    return SignedPermutation(tuple(images)), tuple(vals[i] for i in order)


def _parabolic_reps(lam, d: int, rank: int, max_index: int):
    """Elements of W^0 flipping only coordinates <= max_index, with their lambda_w.

    Such elements are determined by the set of negated coordinates, since
    w(Lambda + rho) must be strictly decreasing.
    """
    lam, ell = _check_label(lam, d)
    if len(conjugate(lam)) > rank:
        raise RankError(f"rank {rank} smaller than the length of {conjugate(lam)}")
    base = CWeight.of_partition(lam, d)
    nu = base.shifted(rank)
    out = []
    top = min(max_index, rank)
    for size in range(top + 1):
        for flipped in combinations(range(1, top + 1), size):
            w, v = _flip_element(nu, set(flipped))
            lam_w = base.dot(w).as_partition()
            assert lam_w is not None, "strictly decreasing image must give a partition"
            out.append((w, w.length(), lam_w, max(flipped, default=0)))
    return out


def coset_reps(k: int, rank: int, lam, d: int) -> list[tuple[SignedPermutation, Partition]]:
    """Minimal coset representatives of length k with their partitions lambda_w.

    An element negating coordinate j has length at least j, so only
    coordinates up to k need to be considered.
    """
    reps = [(w, lam_w) for w, length, lam_w, _ in _parabolic_reps(lam, d, rank, k) if length == k]
    for w, _ in reps:
        if w.moves(rank):
            raise RankError(f"rank {rank} too small: a length-{k} element moves index {rank}")
    return sorted(reps)


def default_rank(lam, cutoff: int, k_max: int) -> int:
    return k_max + max(len(conjugate(lam)), cutoff) + 2


def _alternating_terms(lam, d: int, cutoff: int, k_max: int | None, rank: int | None):
    """(sign, lambda_w) for every w in W^0 with |lambda_w| <= cutoff.

    Negating coordinate j forces |lambda_w| > j, so coordinates above the
    cutoff are never negated in a contributing term.
    """
    lam = as_partition(lam)
    if k_max is None:
        k_max = cutoff
    rank = rank or default_rank(lam, cutoff, k_max)
    terms = []
    for w, length, lam_w, top in _parabolic_reps(lam, d, rank, cutoff):
        if top and lam_w.size <= top:
            raise AssertionError("size bound for negated coordinates violated")
        if lam_w.size > cutoff:
            continue
        if length > k_max:
            raise RankError(f"k_max = {k_max} too small: a length-{length} term has |lambda_w| = {lam_w.size} <= cutoff")
        if w.moves(rank):
            raise RankError(f"rank {rank} too small for cutoff {cutoff}")
        terms.append((-1 if length % 2 else 1, lam_w, length))
    return terms, k_max, rank


def _inverse_product(vs: VariableSet, pairs, cutoff: int) -> LaurentSeries:
    result = LaurentSeries.one(vs, cutoff)
    for (fa, a), (fb, b) in pairs:
        factor = LaurentSeries.one(vs) - LaurentSeries.monomial(vs, {(fa, a): 1, (fb, b): 1} if (fa, a) != (fb, b) else {(fa, a): 2})
        result = mul(result, geometric_inverse(factor, cutoff), cutoff)
    return result


def cinf_character(lam, d: int, cutoff: int, k_max: int | None = None, nvars: int | None = None,
                   variables: VariableSet | None = None, family: str = "x", rank: int | None = None) -> LaurentSeries:
    """Character of the c-infinity module with highest weight d/2 Lambda_0 + sum lam'_k eps_k."""
    vs = variables or VariableSet((family, cutoff if nvars is None else nvars))
    k = vs.count(family)
    terms, _, _ = _alternating_terms(lam, d, cutoff, k_max, rank)
    alternating = LaurentSeries.zero(vs, cutoff)
    for sign, lam_w, _ in terms:
        alternating = alternating + schur(lam_w, vs, family) * sign
    pairs = [((family, i), (family, j)) for i in range(1, k + 1) for j in range(i, k + 1)]
    return mul(_inverse_product(vs, pairs, cutoff), alternating, cutoff)


def _osp_core(lam, m: int, n: int, ell: int, cutoff: int, k_max, vs: VariableSet, rank=None) -> LaurentSeries:
    """The osp character without the monomial prefactor (y/x)^ell."""
    terms, _, _ = _alternating_terms(lam, 2 * ell, cutoff, k_max, rank)
    alternating = LaurentSeries.zero(vs, cutoff)
    for sign, lam_w, _ in terms:
        alternating = alternating + hook_schur(lam_w, vs, x="x", y="y") * sign
    numerator = LaurentSeries.one(vs, cutoff)
    for i in range(1, m + 1):
        for s in range(1, n + 1):
            numerator = mul(numerator, LaurentSeries.one(vs) + LaurentSeries.monomial(vs, {("y", i): 1, ("x", s): 1}), cutoff)
    pairs = [(("y", i), ("y", j)) for i in range(1, m + 1) for j in range(i + 1, m + 1)]
    pairs += [(("x", s), ("x", t)) for s in range(1, n + 1) for t in range(s, n + 1)]
    return mul(mul(numerator, _inverse_product(vs, pairs, cutoff), cutoff), alternating, cutoff)


def osp_variables(m: int, n: int, ell: int = 0) -> VariableSet:
    fams = [("x", n), ("y", m)]
    if ell:
        fams.append(("z", ell, False))
    return VariableSet(*fams)


def osp_character(lam, m: int, n: int, ell: int, cutoff: int, k_max: int | None = None,
                  variables: VariableSet | None = None, rank: int | None = None) -> LaurentSeries:
    """osp(2m|2n) character for the label lam; y is the delta side, x the epsilon side.

    The sum is truncated at ``cutoff`` before multiplying by (y1..ym / x1..xn)^ell,
    so the returned cutoff is shifted by (m - n) * ell.
    """
    lam = as_partition(lam)
    if m == 0 and n == 0:
        raise ValueError("osp character needs at least one variable family")
    if not is_hook(lam, m, n):
        raise ValueError(f"{lam} is not a ({m}|{n})-hook partition")
    if len(lam) > ell:
        raise ValueError(f"{lam} has more than ell = {ell} parts")
    vs = variables or osp_variables(m, n)
    core = _osp_core(lam, m, n, ell, cutoff, k_max, vs, rank)
    powers = {("y", i): ell for i in range(1, m + 1)}
    powers.update({("x", s): -ell for s in range(1, n + 1)})
    return core.shift(powers)


# -- identity checks ----------------------------------------------------------

@dataclass
class IdentityReport:
    identity: str
    dims: dict
    cutoff: int
    k_max: int | None
    rank: int | None
    status: bool
    first_discrepancy: dict | None = None
    details: dict = field(default_factory=dict)

    def __bool__(self):
        return self.status

    def to_json(self) -> dict:
        out = {"identity": self.identity, "dims": self.dims, "cutoff": self.cutoff,
               "k_max": self.k_max, "rank": self.rank, "status": self.status}
        if self.first_discrepancy is not None:
            out["first_discrepancy"] = self.first_discrepancy
        out.update(self.details)
        return out


def first_difference(lhs: LaurentSeries, rhs: LaurentSeries) -> dict | None:
    diff = lhs - rhs
    if diff.is_zero():
        return None
    exps, _ = diff.sorted_terms()[0]
    mono = LaurentSeries(lhs.vars, {exps: 1})
    return {"monomial": render_text(mono), "lhs": str(lhs.coefficient(exps)), "rhs": str(rhs.coefficient(exps))}


def _pair_factor(vs, fam, i, z, k, sign, power_z):
    return LaurentSeries.one(vs) + LaurentSeries.monomial(vs, {(fam, i): 1, ("z", k): power_z}) * sign


def verify_dual_c(ell: int, cutoff: int, k_max: int | None = None) -> IdentityReport:
    """prod_{i<=ell, n<=cutoff} (1 + x_n z_i)(1 + x_n / z_i) = sum_lam sp_lam(z) * cinf_lam(x)."""
    vs = VariableSet(("x", cutoff), ("z", ell, False))
    lhs = LaurentSeries.one(vs, cutoff)
    for i in range(1, ell + 1):
        for nn in range(1, cutoff + 1):
            for pz in (1, -1):
                lhs = mul(lhs, _pair_factor(vs, "x", nn, "z", i, 1, pz), cutoff)
    rhs = LaurentSeries.zero(vs, cutoff)
    labels = [lam for lam in partitions_up_to(cutoff) if len(lam) <= ell]
    used_kmax = 0
    for lam in labels:
        terms, km, _ = _alternating_terms(lam, 2 * ell, cutoff, k_max, None)
        used_kmax = max(used_kmax, km)
        ch = cinf_character(lam, 2 * ell, cutoff, k_max, variables=vs)
        rhs = rhs + mul(symplectic_character(lam, vs), ch, cutoff)
    diff = first_difference(lhs, rhs)
    return IdentityReport("dual-c", {"ell": ell}, cutoff, used_kmax,
                          default_rank(Partition(), cutoff, used_kmax), diff is None, diff,
                          {"labels": [str(lam) for lam in labels]})


def verify_sp_osp(m: int, n: int, ell: int, cutoff: int, k_max: int | None = None) -> IdentityReport:
    """Total character of C[x, eta] under Sp(d) x osp(2m|2n), d = 2 ell, expanded two ways."""
    vs = osp_variables(m, n, ell)
    lhs = LaurentSeries.one(vs, cutoff)
    for k in range(1, ell + 1):
        for pz in (1, -1):
            for i in range(1, n + 1):
                lhs = mul(lhs, _pair_factor(vs, "x", i, "z", k, 1, pz), cutoff)
            for j in range(1, m + 1):
                lhs = mul(lhs, geometric_inverse(_pair_factor(vs, "y", j, "z", k, -1, pz), cutoff), cutoff)
    rhs = LaurentSeries.zero(vs, cutoff)
    labels = [lam for lam in partitions_up_to(cutoff) if len(lam) <= ell and is_hook(lam, m, n)]
    unshift = {("y", i): -ell for i in range(1, m + 1)}
    unshift.update({("x", s): ell for s in range(1, n + 1)})
    for lam in labels:
        ch = osp_character(lam, m, n, ell, cutoff, k_max, variables=vs).shift(unshift)
        rhs = rhs + mul(symplectic_character(lam, vs), ch, cutoff)
    diff = first_difference(lhs, rhs)
    return IdentityReport("sp-osp", {"m": m, "n": n, "ell": ell}, cutoff,
                          cutoff if k_max is None else k_max,
                          default_rank(Partition(), cutoff, cutoff if k_max is None else k_max),
                          diff is None, diff, {"labels": [str(lam) for lam in labels]})
