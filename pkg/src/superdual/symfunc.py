"""Symmetric polynomials in finitely many variables.

Schur and skew Schur polynomials are built from semistandard tableaux.  The
alternant ratio ``a_{mu+delta} / a_delta`` is available separately; it is
also what the Kac character uses for its even part.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations, product as cartesian

from .partitions import Partition, as_partition, conjugate, is_hook
from .polyring import LaurentSeries, VariableSet, exact_divide


class SymPolynomial(LaurentSeries):
    """A LaurentSeries that may be flagged as structurally zero.

    Arithmetic on a SymPolynomial returns a plain LaurentSeries.
    """

    __slots__ = ("structural_zero",)

    def __init__(self, variables, terms=None, cutoff=None, structural_zero=False):
        super().__init__(variables, terms, cutoff)
        self.structural_zero = structural_zero


def _family_vars(variables, family: str) -> VariableSet:
    if isinstance(variables, VariableSet):
        return variables
    return VariableSet((family, int(variables)))


def _embed_local(local: dict, vs: VariableSet, families, cls=SymPolynomial, **kw):
    positions = [p for fam in families for p in vs.positions(fam)]
    out = {}
    for exps, c in local.items():
        full = [0] * vs.size
        for p, e in zip(positions, exps):
            full[p] = e
        out[tuple(full)] = c
    return cls(vs, out, **kw)


# -- tableau enumeration ---------------------------------------------------

@lru_cache(maxsize=None)
def _skew_ssyt_weights(outer: tuple, inner: tuple, k: int) -> dict:
    """Content vectors (length k) of semistandard fillings of outer/inner, with multiplicity."""
    inner = inner + (0,) * (len(outer) - len(inner))
    cells = [(r, c) for r, row in enumerate(outer) for c in range(inner[r], row)]
    if not cells:
        return {(0,) * k: 1}
    if k == 0:
        return {}
    filling = {}
    counts = [0] * k
    out: dict = {}

    def rec(idx):
        if idx == len(cells):
            key = tuple(counts)
            out[key] = out.get(key, 0) + 1
            return
        r, c = cells[idx]
        low = 1
        if c > inner[r]:
            low = filling[(r, c - 1)]
        if r > 0 and c >= inner[r - 1]:
            low = max(low, filling[(r - 1, c)] + 1)
        for v in range(low, k + 1):
            filling[(r, c)] = v
            counts[v - 1] += 1
            rec(idx + 1)
            counts[v - 1] -= 1
        filling.pop((r, c), None)

    rec(0)
    return out


def _schur_local(lam: tuple, k: int) -> dict:
    return _skew_ssyt_weights(tuple(lam), (), k)


def subpartitions(lam):
    """All partitions contained in lam."""
    lam = tuple(lam)

    def rec(i, cap):
        if i == len(lam):
            yield ()
            return
        for v in range(min(cap, lam[i]), -1, -1):
            if v == 0:
                yield ()
                continue
            for rest in rec(i + 1, v):
                yield (v,) + rest

    for parts in rec(0, lam[0] if lam else 0):
        yield Partition(parts)


@lru_cache(maxsize=None)
def _hook_schur_local(lam: tuple, m: int, n: int) -> dict:
    lam_conj = tuple(conjugate(lam))
    out: dict = {}
    for mu in subpartitions(lam):
        if len(mu) > m:
            continue
        sx = _schur_local(tuple(mu), m)
        if not sx:
            continue
        sy = _skew_ssyt_weights(lam_conj, tuple(conjugate(mu)), n)
        for ex, cx in sx.items():
            for ey, cy in sy.items():
                key = ex + ey
                out[key] = out.get(key, 0) + cx * cy
    return out


# -- public constructors ----------------------------------------------------

def monomial_symmetric(nu, variables, family: str = "x") -> SymPolynomial:
    nu = as_partition(nu)
    vs = _family_vars(variables, family)
    k = vs.count(family)
    if len(nu) > k:
        raise ValueError(f"monomial symmetric m_{nu} needs at least {len(nu)} variables, got {k}")
    padded = tuple(nu) + (0,) * (k - len(nu))
    local = {perm: 1 for perm in set(permutations(padded))}
    return _embed_local(local, vs, [family])


def schur(lam, variables, family: str = "x") -> SymPolynomial:
    lam = as_partition(lam)
    vs = _family_vars(variables, family)
    return _embed_local(_schur_local(tuple(lam), vs.count(family)), vs, [family])


def skew_schur(lam, mu, variables, family: str = "x") -> SymPolynomial:
    lam, mu = as_partition(lam), as_partition(mu)
    if not lam.contains(mu):
        raise ValueError(f"{mu} is not contained in {lam}")
    vs = _family_vars(variables, family)
    return _embed_local(_skew_ssyt_weights(tuple(lam), tuple(mu), vs.count(family)), vs, [family])


def hook_schur(lam, variables, x: str = "x", y: str = "y") -> SymPolynomial:
    """hs_lam(x; y) = sum over mu in lam of s_mu(x) s_{lam'/mu'}(y).

    ``variables`` is a VariableSet containing families ``x`` and ``y`` or a
    pair ``(m, n)``.  Non-hook shapes give a zero flagged ``structural_zero``.
    """
    lam = as_partition(lam)
    if not isinstance(variables, VariableSet):
        m, n = variables
        variables = VariableSet((x, m), (y, n))
    m, n = variables.count(x), variables.count(y)
    if not is_hook(lam, m, n):
        return SymPolynomial(variables, {}, structural_zero=True)
    return _embed_local(_hook_schur_local(tuple(lam), m, n), variables, [x, y])


def alternant(exponents, variables, family: str = "x") -> LaurentSeries:
    """det(x_j^{exponents_i}) expanded as a signed sum over permutations."""
    vs = _family_vars(variables, family)
    k = vs.count(family)
    if len(exponents) != k:
        raise ValueError("need one exponent per variable")
    positions = list(vs.positions(family))
    out: dict = {}
    for perm in permutations(range(k)):
        exps = [0] * vs.size
        for i, j in enumerate(perm):
            exps[positions[j]] = exponents[i]
        key = tuple(exps)
        out[key] = out.get(key, 0) + permutation_sign(perm)
    return LaurentSeries(vs, out)


def alternant_ratio(weights, variables, family: str = "x") -> LaurentSeries:
    """a_{w + delta} / a_delta for a weakly decreasing integer sequence w.

    For a partition this is the Schur polynomial; negative entries are allowed.
    """
    vs = _family_vars(variables, family)
    k = vs.count(family)
    weights = list(weights) + [0] * (k - len(weights))
    if len(weights) != k:
        raise ValueError(f"weight {weights} longer than the {k} variables")
    if any(weights[i] < weights[i + 1] for i in range(k - 1)):
        raise ValueError(f"weight {weights} is not weakly decreasing")
    rho = [k - 1 - i for i in range(k)]
    num = alternant([w + r for w, r in zip(weights, rho)], vs, family)
    den = alternant(rho, vs, family)
    return exact_divide(num, den)


def permutation_sign(perm) -> int:
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


@lru_cache(maxsize=None)
def _symplectic_local(lam: tuple, ell: int) -> dict:
    vs = VariableSet(("z", ell, False))
    shifted = [lam[i] + ell - i if i < len(lam) else ell - i for i in range(ell)]
    rho = [ell - i for i in range(ell)]

    def weyl_alternant(vec):
        out: dict = {}
        for perm in permutations(range(ell)):
            psign = permutation_sign(perm)
            for signs in cartesian((1, -1), repeat=ell):
                exps = [0] * ell
                s = psign
                for i, j in enumerate(perm):
                    exps[j] = signs[i] * vec[i]
                    s *= signs[i]
                key = tuple(exps)
                out[key] = out.get(key, 0) + s
        return LaurentSeries(vs, out)

    return exact_divide(weyl_alternant(shifted), weyl_alternant(rho)).terms


def symplectic_character(lam, variables, family: str = "z") -> LaurentSeries:
    """Character of the irreducible Sp(2l)-module with highest weight lam."""
    lam = as_partition(lam)
    vs = _family_vars(variables, family)
    ell = vs.count(family)
    if len(lam) > ell:
        raise ValueError(f"{lam} has more than {ell} parts")
    if ell == 0:
        return LaurentSeries.one(vs)
    return _embed_local(_symplectic_local(tuple(lam), ell), vs, [family], cls=LaurentSeries)


def is_symmetric_in(p: LaurentSeries, family: str) -> bool:
    vs = p.vars
    for i in range(1, vs.count(family)):
        a, b = f"{family}{i}", f"{family}{i + 1}"
        if p.specialize({a: b, b: a}) != p:
            return False
    return True
