"""The polynomial superalgebra C[x, eta] and differential operators on it.

Even generators ``x_a^i`` and odd generators ``eta_b^i`` carry a lower index
(a <= m or b <= n, the gl(m|n) side) and an upper index i <= d (the gl(d)
side).  A monomial stores the x-exponents as a flat tuple and the eta
factors as a sorted tuple of (b, i); the sign from sorting is folded into
the coefficient.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement, combinations, permutations
from typing import Iterable

from .linalg import nullspace, solve
from .partitions import as_partition, conjugate, is_hook, natural_weight
from .symfunc import permutation_sign

X, ETA = 0, 1


def gen_x(a: int, i: int) -> tuple:
    return (X, a, i)


def gen_eta(b: int, i: int) -> tuple:
    return (ETA, b, i)


@dataclass(frozen=True)
class Dims:
    m: int
    n: int
    d: int

    def x_pos(self, a: int, i: int) -> int:
        if not (1 <= a <= self.m and 1 <= i <= self.d):
            raise IndexError(f"x_{a}^{i} outside dims {self}")
        return (a - 1) * self.d + (i - 1)

    def check_eta(self, b: int, i: int):
        if not (1 <= b <= self.n and 1 <= i <= self.d):
            raise IndexError(f"eta_{b}^{i} outside dims {self}")

    def generators(self) -> list[tuple]:
        return ([gen_x(a, i) for a in range(1, self.m + 1) for i in range(1, self.d + 1)]
                + [gen_eta(b, i) for b in range(1, self.n + 1) for i in range(1, self.d + 1)])


def _as_dims(dims) -> Dims:
    return dims if isinstance(dims, Dims) else Dims(*dims)


def _merge_eta(s1: tuple, s2: tuple):
    """Sorted union of two sorted eta tuples with its sign, or None if they overlap."""
    if set(s1) & set(s2):
        return None
    inversions = sum(1 for a in s1 for b in s2 if a > b)
    return tuple(sorted(s1 + s2)), (-1 if inversions % 2 else 1)


class SuperElement:
    __slots__ = ("dims", "terms")

    def __init__(self, dims, terms=None):
        self.dims = _as_dims(dims)
        self.terms = {k: v for k, v in (terms or {}).items() if v}

    @classmethod
    def zero(cls, dims):
        return cls(dims)

    @classmethod
    def one(cls, dims, c=1):
        dims = _as_dims(dims)
        return cls(dims, {((0,) * (dims.m * dims.d), ()): c})

    @classmethod
    def generator(cls, dims, g: tuple) -> "SuperElement":
        dims = _as_dims(dims)
        kind, a, i = g
        xexp = [0] * (dims.m * dims.d)
        if kind == X:
            xexp[dims.x_pos(a, i)] = 1
            return cls(dims, {(tuple(xexp), ()): 1})
        dims.check_eta(a, i)
        return cls(dims, {(tuple(xexp), ((a, i),)): 1})

    @classmethod
    def x(cls, dims, a, i):
        return cls.generator(dims, gen_x(a, i))

    @classmethod
    def eta(cls, dims, b, i):
        return cls.generator(dims, gen_eta(b, i))

    def _check(self, other):
        if self.dims != other.dims:
            raise ValueError(f"dimension mismatch: {self.dims} vs {other.dims}")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return SuperElement(self.dims, out)

    def __neg__(self):
        return SuperElement(self.dims, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return SuperElement(self.dims, {k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, SuperElement):
            return self.scale(other)
        self._check(other)
        out: dict = {}
        for (x1, s1), c1 in self.terms.items():
            for (x2, s2), c2 in other.terms.items():
                merged = _merge_eta(s1, s2)
                if merged is None:
                    continue
                s, sign = merged
                key = (tuple(a + b for a, b in zip(x1, x2)), s)
                out[key] = out.get(key, 0) + sign * c1 * c2
        return SuperElement(self.dims, out)

    def __rmul__(self, c):
        return self.scale(c)

    def __eq__(self, other):
        if not isinstance(other, SuperElement):
            return NotImplemented
        return self.dims == other.dims and self.terms == other.terms

    __hash__ = None

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def monomials(self) -> list["SuperElement"]:
        return [SuperElement(self.dims, {k: 1}) for k in self.terms]

    def degree(self) -> int:
        return max((sum(x) + len(s) for x, s in self.terms), default=0)

    def _monomial_text(self, key) -> str:
        xexp, etas = key
        d = self.dims.d
        parts = []
        for p, e in enumerate(xexp):
            if e:
                name = f"x{p // d + 1}_{p % d + 1}"
                parts.append(name if e == 1 else f"{name}^{e}")
        parts.extend(f"eta{b}_{i}" for b, i in etas)
        return "*".join(parts)

    def __str__(self):
        if not self.terms:
            return "0"
        keys = sorted(self.terms, key=lambda k: (-(sum(k[0]) + len(k[1])), tuple(-e for e in k[0]), k[1]))
        pieces = []
        for k in keys:
            c = self.terms[k]
            mono = self._monomial_text(k)
            mag = abs(c)
            body = str(mag) if not mono else (mono if mag == 1 else f"{mag}*{mono}")
            if not pieces:
                pieces.append(body if c > 0 else "-" + body)
            else:
                pieces.append(("+ " if c > 0 else "- ") + body)
        return " ".join(pieces)

    def __repr__(self):
        return f"SuperElement({self})"


def _derive(dims: Dims, key, g):
    """Left derivative of one monomial by a generator: (new_key, factor) or None."""
    xexp, etas = key
    kind, a, i = g
    if kind == X:
        p = dims.x_pos(a, i)
        e = xexp[p]
        if not e:
            return None
        new = list(xexp)
        new[p] -= 1
        return (tuple(new), etas), e
    if (a, i) not in etas:
        return None
    pos = etas.index((a, i))
    return (xexp, etas[:pos] + etas[pos + 1:]), (-1 if pos % 2 else 1)


def _left_multiply(dims: Dims, g, key):
    xexp, etas = key
    kind, a, i = g
    if kind == X:
        new = list(xexp)
        new[dims.x_pos(a, i)] += 1
        return (tuple(new), etas), 1
    if (a, i) in etas:
        return None
    pos = sum(1 for s in etas if s < (a, i))
    return (xexp, etas[:pos] + ((a, i),) + etas[pos:]), (-1 if pos % 2 else 1)


@dataclass
class DiffOperator:
    """Sum of terms c * g_1 ... g_p * d/dh_1 ... d/dh_q acting on C[x, eta].

    ``terms`` holds (coefficient, multipliers, derivations); the rightmost
    derivation acts first.
    """

    dims: Dims
    terms: list = field(default_factory=list)
    name: str = ""

    def __post_init__(self):
        self.dims = _as_dims(self.dims)

    @property
    def parity(self) -> int:
        parities = {sum(g[0] for g in mult + ders) % 2 for _, mult, ders in self.terms}
        if len(parities) > 1:
            raise ValueError(f"operator {self.name} is not homogeneous")
        return parities.pop() if parities else 0

    def add_term(self, coeff, mult=(), ders=()):
        self.terms.append((coeff, tuple(mult), tuple(ders)))
        return self

    def apply(self, v: SuperElement) -> SuperElement:
        return apply(self, v)

    def __str__(self):
        return self.name or f"DiffOperator({len(self.terms)} terms)"


def apply(op: DiffOperator, v: SuperElement) -> SuperElement:
    if op.dims != v.dims:
        raise ValueError(f"dimension mismatch: operator {op.dims} vs element {v.dims}")
    dims = v.dims
    out: dict = {}
    for key, c in v.terms.items():
        for coeff, mult, ders in op.terms:
            cur_key, cur = key, c * coeff
            ok = True
            for g in reversed(ders):
                res = _derive(dims, cur_key, g)
                if res is None:
                    ok = False
                    break
                cur_key, f = res
                cur *= f
            if not ok:
                continue
            for g in reversed(mult):
                res = _left_multiply(dims, g, cur_key)
                if res is None:
                    ok = False
                    break
                cur_key, f = res
                cur *= f
            if not ok:
                continue
            out[cur_key] = out.get(cur_key, 0) + cur
    return SuperElement(dims, out)


def supercommutator_apply(a: DiffOperator, b: DiffOperator, v: SuperElement) -> SuperElement:
    sign = -1 if (a.parity * b.parity) % 2 else 1
    return apply(a, apply(b, v)) - apply(b, apply(a, v)).scale(sign)


# -- operator families -----------------------------------------------------

def _first_order(dims, name, pairs, shift=0):
    op = DiffOperator(dims, name=name)
    for mult, der in pairs:
        op.add_term(1, (mult,), (der,))
    if shift:
        op.add_term(shift)
    return op


def gl_d_operator(dims, i, i2) -> DiffOperator:
    dims = _as_dims(dims)
    pairs = [(gen_x(j, i), gen_x(j, i2)) for j in range(1, dims.m + 1)]
    pairs += [(gen_eta(j, i), gen_eta(j, i2)) for j in range(1, dims.n + 1)]
    return _first_order(dims, f"E^{i}{i2}", pairs)


def _gl_mn_ops(dims: Dims, shifted: bool) -> list[DiffOperator]:
    m, n, d = dims.m, dims.n, dims.d
    half = Fraction(d, 2)
    ops = []
    for s in range(1, m + 1):
        for s2 in range(1, m + 1):
            pairs = [(gen_x(s, j), gen_x(s2, j)) for j in range(1, d + 1)]
            ops.append(_first_order(dims, f"Exx_{s}{s2}", pairs, half if shifted and s == s2 else 0))
    for k in range(1, n + 1):
        for k2 in range(1, n + 1):
            pairs = [(gen_eta(k, j), gen_eta(k2, j)) for j in range(1, d + 1)]
            ops.append(_first_order(dims, f"Eee_{k}{k2}", pairs, -half if shifted and k == k2 else 0))
    for s in range(1, m + 1):
        for k in range(1, n + 1):
            ops.append(_first_order(dims, f"Exe_{s}{k}", [(gen_x(s, j), gen_eta(k, j)) for j in range(1, d + 1)]))
    for k in range(1, n + 1):
        for s in range(1, m + 1):
            ops.append(_first_order(dims, f"Eex_{k}{s}", [(gen_eta(k, j), gen_x(s, j)) for j in range(1, d + 1)]))
    return ops


def _pairing_terms(d, make_a, make_b):
    """Terms of sum_{j <= d/2} (a^j b^{d+1-j} - a^{d+1-j} b^j)."""
    out = []
    for j in range(1, d // 2 + 1):
        out.append((1, make_a(j), make_b(d + 1 - j)))
        out.append((-1, make_a(d + 1 - j), make_b(j)))
    return out


def _osp_extra_ops(dims: Dims) -> list[DiffOperator]:
    m, n, d = dims.m, dims.n, dims.d
    ops = []

    def mult_op(name, make_a, make_b):
        op = DiffOperator(dims, name=name)
        for c, ga, gb in _pairing_terms(d, make_a, make_b):
            op.add_term(c, (ga, gb), ())
        return op

    def delta_op(name, make_a, make_b):
        op = DiffOperator(dims, name=name)
        for c, ga, gb in _pairing_terms(d, make_a, make_b):
            op.add_term(c, (), (ga, gb))
        return op

    for i in range(1, m + 1):
        for s in range(i + 1, m + 1):
            ops.append(mult_op(f"Ixx_{i}{s}", lambda j, i=i: gen_x(i, j), lambda j, s=s: gen_x(s, j)))
    for i in range(1, m + 1):
        for k in range(1, n + 1):
            ops.append(mult_op(f"Ixe_{i}{k}", lambda j, i=i: gen_x(i, j), lambda j, k=k: gen_eta(k, j)))
    for k in range(1, n + 1):
        for t in range(k, n + 1):
            ops.append(mult_op(f"Iee_{k}{t}", lambda j, k=k: gen_eta(k, j), lambda j, t=t: gen_eta(t, j)))
    for i in range(1, m + 1):
        for s in range(i + 1, m + 1):
            ops.append(delta_op(f"Dxx_{i}{s}", lambda j, i=i: gen_x(i, j), lambda j, s=s: gen_x(s, j)))
    for i in range(1, m + 1):
        for k in range(1, n + 1):
            ops.append(delta_op(f"Dxe_{i}{k}", lambda j, i=i: gen_x(i, j), lambda j, k=k: gen_eta(k, j)))
    for k in range(1, n + 1):
        for t in range(k, n + 1):
            ops.append(delta_op(f"Dee_{k}{t}", lambda j, k=k: gen_eta(k, j), lambda j, t=t: gen_eta(t, j)))
    return ops


def symplectic_matrix(d: int) -> list[list[int]]:
    """J with J[j][d-1-j] = +1 for j < d/2 and -1 otherwise (0-based)."""
    J = [[0] * d for _ in range(d)]
    for j in range(d):
        J[j][d - 1 - j] = 1 if j < d // 2 else -1
    return J


def sp_matrices(d: int) -> list[list[list[Fraction]]]:
    """Basis of the matrices M with M J + J M^T = 0."""
    J = symplectic_matrix(d)
    nvars = d * d
    rows = []
    for r in range(d):
        for c in range(d):
            # (M J + J M^T)[r][c] = sum_k M[r][k] J[k][c] + J[r][k] M[c][k]
            row = {}
            for k in range(d):
                if J[k][c]:
                    row[r * d + k] = row.get(r * d + k, 0) + J[k][c]
                if J[r][k]:
                    row[c * d + k] = row.get(c * d + k, 0) + J[r][k]
            rows.append(row)
    basis = nullspace(rows, nvars)
    return [[v[r * d:(r + 1) * d] for r in range(d)] for v in basis]


def dual_pair_generators(kind: str, dims) -> list[DiffOperator]:
    dims = _as_dims(dims)
    d = dims.d
    if kind in ("osp_extra", "sp_d") and d % 2:
        raise ValueError(f"{kind} needs even d, got d={d}")
    if kind == "gl_d":
        return [gl_d_operator(dims, i, i2) for i in range(1, d + 1) for i2 in range(1, d + 1)]
    if kind == "gl_mn":
        return _gl_mn_ops(dims, shifted=False)
    if kind == "gl_mn_shifted":
        return _gl_mn_ops(dims, shifted=True)
    if kind == "osp_extra":
        return _osp_extra_ops(dims)
    if kind == "sp_d":
        ops = []
        for t, M in enumerate(sp_matrices(d)):
            op = DiffOperator(dims, name=f"sp_{t}")
            for a in range(d):
                for b in range(d):
                    if M[a][b]:
                        for term in gl_d_operator(dims, a + 1, b + 1).terms:
                            op.add_term(M[a][b] * term[0], term[1], term[2])
            ops.append(op)
        return ops
    raise ValueError(f"unknown generator family {kind!r}")


def raising_operators(dims) -> tuple[list[DiffOperator], list[DiffOperator]]:
    dims = _as_dims(dims)
    m, n, d = dims.m, dims.n, dims.d
    gl_d = []
    for i in range(2, d + 1):
        pairs = [(gen_x(j, i - 1), gen_x(j, i)) for j in range(1, m + 1)]
        pairs += [(gen_eta(j, i - 1), gen_eta(j, i)) for j in range(1, n + 1)]
        gl_d.append(_first_order(dims, f"E^{i - 1}{i}", pairs))
    gl_mn = []
    for s in range(2, m + 1):
        gl_mn.append(_first_order(dims, f"Exx_{s - 1}{s}", [(gen_x(s - 1, j), gen_x(s, j)) for j in range(1, d + 1)]))
    for k in range(2, n + 1):
        gl_mn.append(_first_order(dims, f"Eee_{k - 1}{k}", [(gen_eta(k - 1, j), gen_eta(k, j)) for j in range(1, d + 1)]))
    if m and n:
        gl_mn.append(_first_order(dims, f"Exe_{m}1", [(gen_x(m, j), gen_eta(1, j)) for j in range(1, d + 1)]))
    return gl_d, gl_mn


# -- determinants and highest-weight vectors --------------------------------

def _row_determinant(dims: Dims, rows: list) -> SuperElement:
    """rdet: sum over sigma of sign * a_1^{sigma(1)} ... a_r^{sigma(r)}, rows given as generator makers."""
    r = len(rows)
    total = SuperElement.zero(dims)
    for perm in permutations(range(r)):
        term = SuperElement.one(dims, permutation_sign(perm))
        for row, col in zip(rows, perm):
            term = term * SuperElement.generator(dims, row(col + 1))
            if term.is_zero():
                break
        total = total + term
    return total


def diamond(r: int, dims) -> SuperElement:
    dims = _as_dims(dims)
    if not 1 <= r <= min(dims.m, dims.d):
        raise ValueError(f"diamond({r}) needs 1 <= r <= min(m, d) = {min(dims.m, dims.d)}")
    return _row_determinant(dims, [lambda j, a=a: gen_x(a, j) for a in range(1, r + 1)])


def diamond_kr(k: int, r: int, dims) -> SuperElement:
    dims = _as_dims(dims)
    if not (dims.m <= r <= dims.d and 1 <= k <= dims.n):
        raise ValueError(f"diamond_kr({k}, {r}) needs m <= r <= d and 1 <= k <= n for {dims}")
    rows = [lambda j, a=a: gen_x(a, j) for a in range(1, dims.m + 1)]
    rows += [lambda j: gen_eta(k, j)] * (r - dims.m)
    return _row_determinant(dims, rows)


def highest_weight_vector(lam, dims) -> SuperElement:
    dims = _as_dims(dims)
    lam = as_partition(lam)
    if len(lam) > dims.d:
        raise ValueError(f"{lam} has more than d = {dims.d} parts")
    if not is_hook(lam, dims.m, dims.n):
        raise ValueError(f"{lam} is not a ({dims.m}|{dims.n})-hook partition")
    cols = conjugate(lam)
    r = sum(1 for c in cols if c > dims.m)
    v = SuperElement.one(dims)
    for k in range(1, r + 1):
        v = v * diamond_kr(k, cols.part(k), dims)
    for j in range(r + 1, len(cols) + 1):
        v = v * diamond(cols.part(j), dims)
    return v


def eigenvalue(op: DiffOperator, v: SuperElement):
    """c with op(v) = c v, or None when v is not an eigenvector."""
    image = apply(op, v)
    if v.is_zero():
        raise ValueError("zero vector has no eigenvalue")
    key = next(iter(v.terms))
    c = Fraction(image.terms.get(key, 0)) / v.terms[key]
    return c if image == v.scale(c) else None


def gl_d_weight(v: SuperElement) -> list | None:
    d = v.dims.d
    values = [eigenvalue(gl_d_operator(v.dims, i, i), v) for i in range(1, d + 1)]
    return None if None in values else values


def gl_mn_weight(v: SuperElement, shifted: bool = False):
    """Diagonal eigenvalues as (delta coefficients, epsilon coefficients)."""
    ops = _gl_mn_ops(v.dims, shifted)
    m, n = v.dims.m, v.dims.n
    diag = [ops[s * m + s] for s in range(m)] + [ops[m * m + k * n + k] for k in range(n)]
    values = [eigenvalue(op, v) for op in diag]
    if None in values:
        return None
    return values[:m], values[m:]


# -- monomial bases and checks ----------------------------------------------

def monomial_basis(dims, max_degree: int) -> list[SuperElement]:
    dims = _as_dims(dims)
    gens = dims.generators()
    xs = [g for g in gens if g[0] == X]
    etas = [g for g in gens if g[0] == ETA]
    out = []
    for deg in range(max_degree + 1):
        for k in range(min(deg, len(etas)) + 1):
            for eta_part in combinations(etas, k):
                for x_part in combinations_with_replacement(xs, deg - k):
                    v = SuperElement.one(dims)
                    for g in x_part + eta_part:
                        v = v * SuperElement.generator(dims, g)
                    out.append(v.monomials()[0])
    return out


def supercommute_on_basis(fam_a: Iterable[DiffOperator], fam_b: Iterable[DiffOperator], basis) -> tuple | None:
    """First (a, b, monomial) with nonzero supercommutator, or None."""
    fam_b = list(fam_b)
    for a in fam_a:
        for b in fam_b:
            for f in basis:
                if not supercommutator_apply(a, b, f).is_zero():
                    return a.name, b.name, str(f)
    return None


def _flatten(images: list[SuperElement]) -> dict:
    out = {}
    for idx, img in enumerate(images):
        for key, c in img.terms.items():
            out[(idx, key)] = c
    return out


def bracket_closure(family: list[DiffOperator], basis) -> tuple | None:
    """First pair whose bracket is not in the span of ``family`` on ``basis``, or None."""
    columns = [_flatten([apply(g, f) for f in basis]) for g in family]
    for ia, a in enumerate(family):
        for b in family[ia:]:
            target = _flatten([supercommutator_apply(a, b, f) for f in basis])
            if target and solve(columns, target) is None:
                return a.name, b.name
    return None


def hwv_report(lam, dims) -> dict:
    """Annihilation, weight and harmonicity checks for one highest-weight vector."""
    dims = _as_dims(dims)
    lam = as_partition(lam)
    v = highest_weight_vector(lam, dims)
    gl_d_raise, gl_mn_raise = raising_operators(dims)
    killed = all(apply(op, v).is_zero() for op in gl_d_raise + gl_mn_raise)
    expected = natural_weight(lam, dims.m, dims.n)
    weights_ok = (gl_d_weight(v) == [lam.part(i) for i in range(1, dims.d + 1)]
                  and gl_mn_weight(v) == (expected.delta_part(dims.m), expected.epsilon_part(dims.n)))
    shifted_ok = None
    harmonic = None
    if dims.d % 2 == 0:
        half = Fraction(dims.d, 2)
        shifted_ok = gl_mn_weight(v, shifted=True) == (
            [c + half for c in expected.delta_part(dims.m)],
            [c - half for c in expected.epsilon_part(dims.n)])
        if len(lam) <= dims.d // 2:
            deltas = [op for op in _osp_extra_ops(dims) if op.name.startswith("D")]
            harmonic = all(apply(op, v).is_zero() for op in deltas)
    return {"lambda": str(lam), "vector": str(v), "nonzero": not v.is_zero(),
            "killed_by_raising": killed, "weights": weights_ok,
            "shifted_weights": shifted_ok, "harmonic": harmonic}
