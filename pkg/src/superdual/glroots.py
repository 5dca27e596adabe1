"""Root data of gl(m|n): the invariant form, rho, Borel words, odd reflections,
extremal weights, typicality and Kac characters.

Weights are ``labels.Weight`` objects.  A root ``Root(a, b)`` stands for
``eps_a - eps_b`` where a delta label ``d_i`` plays the role of ``eps_{i bar}``.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import comb
from typing import NamedTuple, Sequence

from .labels import SuperIndex, Weight, delta, epsilon, standard_indices
from .partitions import as_partition, conjugate, is_hook, natural_weight
from .polyring import LaurentSeries, VariableSet, mul
from .symfunc import alternant_ratio

TYPICALITY_SEARCH_LIMIT = 16
_HALF = Fraction(1, 2)


class Root(NamedTuple):
    a: SuperIndex
    b: SuperIndex

    @property
    def is_odd(self) -> bool:
        return self.a.kind != self.b.kind

    def weight(self) -> Weight:
        return Weight.basis(self.a) - Weight.basis(self.b)

    def __neg__(self) -> "Root":
        return Root(self.b, self.a)

    def __str__(self):
        return f"{self.a}-{self.b}"


def form(a: Weight, b: Weight):
    total = 0
    for key, c in a.items():
        sign = 1 if key.is_delta else -1
        total += sign * c * b[key]
    return total


def pairing(lam: Weight, alpha: Root):
    return form(lam, alpha.weight())


def even_positive_roots(m: int, n: int) -> list[Root]:
    roots = [Root(delta(i), delta(j)) for i in range(1, m + 1) for j in range(i + 1, m + 1)]
    roots += [Root(epsilon(i), epsilon(j)) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    return roots


def odd_positive_roots(m: int, n: int) -> list[Root]:
    return [Root(delta(i), epsilon(j)) for i in range(1, m + 1) for j in range(1, n + 1)]


def rho_triple(m: int, n: int) -> tuple[Weight, Weight, Weight]:
    rho0 = Weight()
    for r in even_positive_roots(m, n):
        rho0 = rho0 + r.weight()
    rho1 = Weight()
    for r in odd_positive_roots(m, n):
        rho1 = rho1 + r.weight()
    rho0, rho1 = rho0 * _HALF, rho1 * _HALF
    return rho0, rho1, rho0 - rho1


# -- Borel words and ordered bases ------------------------------------------

class BorelWord(str):
    """Word over {d, e} recording the types of an ordered basis."""

    def __new__(cls, text: str):
        text = text.strip()
        if any(ch not in "de" for ch in text):
            raise ValueError(f"Borel word must use only 'd' and 'e': {text!r}")
        return super().__new__(cls, text)

    @property
    def m(self) -> int:
        return self.count("d")

    @property
    def n(self) -> int:
        return self.count("e")

    @classmethod
    def standard(cls, m: int, n: int) -> "BorelWord":
        return cls("d" * m + "e" * n)

    @classmethod
    def of_basis(cls, basis: Sequence[SuperIndex]) -> "BorelWord":
        return cls("".join("d" if s.is_delta else "e" for s in basis))

    def basis(self) -> tuple:
        """Ordered basis with deltas and epsilons numbered in order of appearance."""
        di = ej = 0
        out = []
        for ch in self:
            if ch == "d":
                di += 1
                out.append(delta(di))
            else:
                ej += 1
                out.append(epsilon(ej))
        return tuple(out)


def borel_words(m: int, n: int) -> list[BorelWord]:
    words = []
    for pos in combinations(range(m + n), m):
        words.append(BorelWord("".join("d" if i in pos else "e" for i in range(m + n))))
    assert len(words) == comb(m + n, m)
    return words


def standard_basis(m: int, n: int) -> tuple:
    return tuple(standard_indices(m, n))


def simple_roots(basis: Sequence[SuperIndex]) -> list[Root]:
    return [Root(basis[i], basis[i + 1]) for i in range(len(basis) - 1)]


def odd_reflect_roots(simple: Sequence[Root], alpha: Root) -> list[Root]:
    """Simple system obtained by the odd reflection at ``alpha``; order is kept."""
    if alpha not in simple:
        raise ValueError(f"{alpha} is not in the simple system")
    if not alpha.is_odd:
        raise ValueError(f"{alpha} is not odd isotropic")
    aw = alpha.weight()
    out = []
    for beta in simple:
        if beta == alpha:
            out.append(-alpha)
        elif form(beta.weight(), aw) == 0:
            out.append(beta)
        else:
            out.append(_root_from_weight(beta.weight() + aw))
    return out


def even_reflect_roots(simple: Sequence[Root], alpha: Root) -> list[Root]:
    """Image of the simple system under the Weyl reflection at an even simple root."""
    if alpha not in simple or alpha.is_odd:
        raise ValueError(f"{alpha} is not an even simple root")
    swap = {alpha.a: alpha.b, alpha.b: alpha.a}
    return [Root(swap.get(b.a, b.a), swap.get(b.b, b.b)) for b in simple]


def _root_from_weight(w: Weight) -> Root:
    items = w.items()
    pos = [k for k, c in items if c == 1]
    neg = [k for k, c in items if c == -1]
    if len(items) != 2 or len(pos) != 1 or len(neg) != 1:
        raise ValueError(f"{w} is not a root")
    return Root(pos[0], neg[0])


def reachable_simple_systems(m: int, n: int) -> set[tuple]:
    """All simple systems reached from the standard one by odd and even reflections."""
    start = tuple(simple_roots(standard_basis(m, n)))
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for system in frontier:
            for alpha in system:
                new = tuple(odd_reflect_roots(system, alpha) if alpha.is_odd
                            else even_reflect_roots(system, alpha))
                if new not in seen:
                    seen.add(new)
                    nxt.append(new)
        frontier = nxt
    return seen


def odd_reflect_weight(lam: Weight, alpha: Root) -> Weight:
    if not alpha.is_odd:
        raise ValueError(f"{alpha} is not odd isotropic")
    if pairing(lam, alpha) == 0:
        return lam
    return lam - alpha.weight()


# -- extremal weights -----------------------------------------------------

def extremal_weight(lam, word, m: int | None = None, n: int | None = None) -> Weight:
    """Highest weight of L(lam^natural) for the Borel given by ``word``, by peeling."""
    word = BorelWord(word)
    m = word.m if m is None else m
    n = word.n if n is None else n
    if (word.m, word.n) != (m, n):
        raise ValueError(f"word {word} does not have {m} d's and {n} e's")
    lam = as_partition(lam)
    if not is_hook(lam, m, n):
        raise ValueError(f"{lam} is not a ({m}|{n})-hook partition")
    rows = list(lam)
    coeffs = {}
    for symbol in word.basis():
        if symbol.is_delta:
            value = rows.pop(0) if rows else 0
        else:
            value = len(rows)
            rows = [r - 1 for r in rows if r > 1]
        coeffs[symbol] = value
    if rows:
        raise ValueError(f"diagram not exhausted for {lam} and word {word}")
    return Weight(coeffs)


def extremal_weight_blocks(lam, word) -> Weight:
    """Same weight computed block by block: runs of equal letters peel rows or columns at once."""
    word = BorelWord(word)
    lam = as_partition(lam)
    coeffs = {}
    basis = word.basis()
    pos = 0
    rows = list(lam)
    while pos < len(word):
        end = pos
        while end < len(word) and word[end] == word[pos]:
            end += 1
        k = end - pos
        if word[pos] == "d":
            block = rows[:k] + [0] * (k - len(rows[:k]))
            rows = rows[k:]
        else:
            cols = list(conjugate(rows))
            block = cols[:k] + [0] * (k - len(cols[:k]))
            rows = list(conjugate(cols[k:]))
        for sym, v in zip(basis[pos:end], block):
            coeffs[sym] = v
        pos = end
    return Weight(coeffs)


def shuffle_paths(target: str, m: int, n: int):
    """All sequences of adjacent 'de' -> 'ed' swaps leading from the standard word to target."""
    target = BorelWord(target)

    def rec(word):
        if word == target:
            yield []
            return
        for i in range(len(word) - 1):
            if word[i] == "d" and word[i + 1] == "e":
                nxt = word[:i] + "ed" + word[i + 2:]
                if _dominates(nxt, target):
                    for rest in rec(nxt):
                        yield [i] + rest

    yield from rec("d" * m + "e" * n)


def _dominates(word: str, target: str) -> bool:
    # every d of `word` must still be able to move right to its target slot
    dw = [i for i, ch in enumerate(word) if ch == "d"]
    dt = [i for i, ch in enumerate(target) if ch == "d"]
    return all(a <= b for a, b in zip(dw, dt))


def fold_odd_reflections(lam_weight: Weight, path: Sequence[int], m: int, n: int) -> Weight:
    basis = list(standard_basis(m, n))
    weight = lam_weight
    for i in path:
        alpha = Root(basis[i], basis[i + 1])
        weight = odd_reflect_weight(weight, alpha)
        basis[i], basis[i + 1] = basis[i + 1], basis[i]
    return weight


def extremal_weight_by_reflections(lam, word, path=None) -> Weight:
    word = BorelWord(word)
    m, n = word.m, word.n
    if path is None:
        path = next(shuffle_paths(word, m, n))
    return fold_odd_reflections(natural_weight(lam, m, n), path, m, n)


# -- typicality -------------------------------------------------------------

def typicality(lam: Weight, m: int, n: int) -> tuple[bool, int]:
    if m * n > TYPICALITY_SEARCH_LIMIT:
        raise ValueError(f"mn = {m * n} exceeds the exhaustive search limit {TYPICALITY_SEARCH_LIMIT}")
    shifted = lam + rho_triple(m, n)[2]
    vanishing = [a for a in odd_positive_roots(m, n) if pairing(shifted, a) == 0]
    weights = [a.weight() for a in vanishing]
    k = len(vanishing)
    orth = [[form(weights[i], weights[j]) == 0 for j in range(k)] for i in range(k)]
    best = 0

    def search(start, chosen):
        nonlocal best
        best = max(best, len(chosen))
        if len(chosen) + (k - start) <= best:
            return
        for i in range(start, k):
            if all(orth[i][j] for j in chosen):
                chosen.append(i)
                search(i + 1, chosen)
                chosen.pop()

    search(0, [])
    return not vanishing, best


# -- characters -------------------------------------------------------------

def _dominant_integral(values) -> bool:
    return all(v.denominator == 1 for v in values) and all(
        values[i] >= values[i + 1] for i in range(len(values) - 1))


def kac_character(lam: Weight, m: int, n: int, x: str = "x", y: str = "y",
                  variables: VariableSet | None = None) -> LaurentSeries:
    """ch L0(lam) times the product over odd positive roots of (1 + e^{-alpha})."""
    dpart, epart = lam.delta_part(m), lam.epsilon_part(n)
    extra = [k for k in lam.support() if (k.is_delta and k.index > m) or (not k.is_delta and k.index > n)]
    if extra or not (_dominant_integral(dpart) and _dominant_integral(epart)):
        raise ValueError(f"{lam} is not dominant integral for gl({m}) + gl({n})")
    vs = variables or VariableSet((x, m), (y, n))
    even = mul(alternant_ratio([int(v) for v in dpart], vs, x),
               alternant_ratio([int(v) for v in epart], vs, y))
    odd = LaurentSeries.one(vs)
    for i in range(1, m + 1):
        for j in range(1, n + 1):
            factor = LaurentSeries.one(vs) + LaurentSeries.monomial(vs, {(x, i): -1, (y, j): 1})
            odd = mul(odd, factor)
    return mul(even, odd)
