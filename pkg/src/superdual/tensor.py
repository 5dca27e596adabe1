"""Commuting actions of gl(m|n) and the symmetric group on (C^{m|n})^{tensor d}.

Basis words are tuples of letters 0..m+n-1: letters below m are d1..dm (even),
the rest are e1..en (odd).
"""

from __future__ import annotations

from itertools import permutations, product as cartesian
from math import factorial

from .labels import SuperIndex, delta, epsilon
from .linalg import rank
from .partitions import Partition, conjugate, is_hook, partitions_of, specht_dimension
from .polyring import LaurentSeries, VariableSet, evaluate_all, power
from .symfunc import hook_schur

SIZE_CAP = 4096


def letter_of(idx: SuperIndex, m: int) -> int:
    return idx.index - 1 if idx.is_delta else m + idx.index - 1


def label_of(letter: int, m: int) -> SuperIndex:
    return delta(letter + 1) if letter < m else epsilon(letter - m + 1)


class TensorVector:
    __slots__ = ("m", "n", "d", "terms")

    def __init__(self, m: int, n: int, d: int, terms=None):
        self.m, self.n, self.d = m, n, d
        clean = {}
        for w, c in (terms or {}).items():
            w = tuple(w)
            if len(w) != d or any(not 0 <= t < m + n for t in w):
                raise ValueError(f"word {w} outside the basis of ({m}|{n})^{d}")
            if c:
                clean[w] = c
        self.terms = clean

    @classmethod
    def basis_vector(cls, m, n, word):
        return cls(m, n, len(word), {tuple(word): 1})

    def __add__(self, other):
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, 0) + c
        return TensorVector(self.m, self.n, self.d, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        return TensorVector(self.m, self.n, self.d, {w: v * c for w, v in self.terms.items()})

    def __eq__(self, other):
        return isinstance(other, TensorVector) and self.terms == other.terms

    __hash__ = None

    def is_zero(self):
        return not self.terms

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for w in sorted(self.terms):
            c = self.terms[w]
            body = "(x)".join(str(label_of(t, self.m)) for t in w)
            mag = abs(c)
            body = body if mag == 1 else f"{mag}*{body}"
            pieces.append(body if not pieces and c > 0 else ("-" + body if not pieces else ("+ " if c > 0 else "- ") + body))
        return " ".join(pieces)


def _parity(letter: int, m: int) -> int:
    return 1 if letter >= m else 0


def act_gl(a, b, v: TensorVector) -> TensorVector:
    """Apply the matrix unit E_{ab} (sending e_b to e_a) with the super sign rule."""
    m = v.m
    a = letter_of(a, m) if isinstance(a, SuperIndex) else a
    b = letter_of(b, m) if isinstance(b, SuperIndex) else b
    g_parity = (_parity(a, m) + _parity(b, m)) % 2
    out: dict = {}
    for w, c in v.terms.items():
        prefix = 0
        for t, letter in enumerate(w):
            if letter == b:
                sign = -1 if (g_parity and prefix % 2) else 1
                new = w[:t] + (a,) + w[t + 1:]
                out[new] = out.get(new, 0) + sign * c
            prefix += _parity(letter, m)
    return TensorVector(v.m, v.n, v.d, out)


def act_sym(i: int, v: TensorVector) -> TensorVector:
    """Adjacent transposition of slots i and i+1 (1-based)."""
    if not 1 <= i < v.d:
        raise ValueError(f"transposition ({i},{i + 1}) outside 1..{v.d}")
    m = v.m
    out: dict = {}
    for w, c in v.terms.items():
        p, q = w[i - 1], w[i]
        sign = -1 if _parity(p, m) and _parity(q, m) else 1
        new = w[:i - 1] + (q, p) + w[i + 1:]
        out[new] = out.get(new, 0) + sign * c
    return TensorVector(v.m, v.n, v.d, out)


def _check_size(m, n, d):
    if (m + n) ** d > SIZE_CAP:
        raise ValueError(f"(m+n)^d = {(m + n) ** d} exceeds the cap {SIZE_CAP}")


def basis_words(m, n, d):
    return list(cartesian(range(m + n), repeat=d))


def verify_commuting(m: int, n: int, d: int) -> bool:
    _check_size(m, n, d)
    for word in basis_words(m, n, d):
        v = TensorVector.basis_vector(m, n, word)
        for a in range(m + n):
            for b in range(m + n):
                for i in range(1, d):
                    if act_gl(a, b, act_sym(i, v)) != act_sym(i, act_gl(a, b, v)):
                        return False
    return True


def verify_symmetric_relations(m: int, n: int, d: int) -> bool:
    """s_i^2 = 1, braid relations and far commutation on every basis vector."""
    _check_size(m, n, d)
    for word in basis_words(m, n, d):
        v = TensorVector.basis_vector(m, n, word)
        for i in range(1, d):
            if act_sym(i, act_sym(i, v)) != v:
                return False
            if i + 1 < d:
                lhs = act_sym(i, act_sym(i + 1, act_sym(i, v)))
                rhs = act_sym(i + 1, act_sym(i, act_sym(i + 1, v)))
                if lhs != rhs:
                    return False
            for j in range(i + 2, d):
                if act_sym(i, act_sym(j, v)) != act_sym(j, act_sym(i, v)):
                    return False
    return True


def weight_space(m: int, n: int, content) -> list[tuple]:
    """Basis words with the given letter multiplicities, sorted."""
    letters = [t for t, k in enumerate(content) for _ in range(k)]
    return sorted(set(permutations(letters)))


def singular_dimension(m: int, n: int, lam) -> int:
    """Dimension of the weight-lam^natural vectors killed by E_{t,t+1} for all t."""
    lam = Partition(lam)
    d = lam.size
    nu = [lam.part(i) for i in range(1, m + 1)]
    mu = conjugate(Partition(lam[m:]))
    content = nu + [mu.part(j) for j in range(1, n + 1)]
    cols = weight_space(m, n, content)
    if not cols:
        return 0
    index = {w: k for k, w in enumerate(cols)}
    rows: dict = {}
    for t in range(m + n - 1):
        for w, k in index.items():
            image = act_gl(t, t + 1, TensorVector(m, n, d, {w: 1}))
            for target, c in image.terms.items():
                rows.setdefault((t, target), {})[k] = c
    return len(cols) - rank(list(rows.values()))


def weight_monomial(word, vs: VariableSet, m: int) -> tuple:
    exps = [0] * vs.size
    for t in word:
        exps[vs.position("x", t + 1) if t < m else vs.position("y", t - m + 1)] += 1
    return tuple(exps)


def decompose(m: int, n: int, d: int) -> dict:
    _check_size(m, n, d)
    vs = VariableSet(("x", m), ("y", n))
    entries = []
    total_dim = 0
    hs_sum = LaurentSeries.zero(vs)
    singular_ok = True
    for lam in partitions_of(d):
        hook = is_hook(lam, m, n)
        f = specht_dimension(lam)
        if hook:
            hs = hook_schur(lam, vs)
            hs_dim = int(evaluate_all(hs))
            sing = singular_dimension(m, n, lam)
            hs_sum = hs_sum + hs * f
        else:
            hs_dim, sing = 0, 0
        total_dim += hs_dim * f
        singular_ok &= (sing == f) if hook else True
        entries.append({"lambda": str(lam), "hook": hook, "hs_dim": hs_dim,
                        "specht_dim": f, "singular_dim": sing})
    word_char: dict = {}
    for word in basis_words(m, n, d):
        key = weight_monomial(word, vs, m)
        word_char[key] = word_char.get(key, 0) + 1
    word_char = LaurentSeries(vs, word_char)
    linear = LaurentSeries.zero(vs)
    for name in vs.names():
        linear = linear + LaurentSeries.variable(vs, name[0], int(name[1:]))
    power_sum = power(linear, d)
    weight_dims_ok = all(c == _multinomial(e) for e, c in word_char.terms.items())
    checks = {
        "dimension_identity": total_dim == (m + n) ** d,
        "singular_equals_specht": singular_ok,
        "character_identity": word_char == power_sum == hs_sum,
        "weight_space_dims": weight_dims_ok,
    }
    return {"dims": [m, n, d], "partitions": entries, "checks": checks,
            "status": all(checks.values())}


def _multinomial(exps) -> int:
    out = factorial(sum(exps))
    for e in exps:
        out //= factorial(e)
    return out
