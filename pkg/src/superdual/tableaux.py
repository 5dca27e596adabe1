"""(m|n)-hook semistandard tableaux.

Entries are SuperIndex labels ordered d1 < ... < dm < e1 < ... < en.  A hook
tableau is weakly increasing along rows and columns, strictly increasing
down columns on delta entries and strictly increasing along rows on epsilon
entries.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .labels import SuperIndex, delta, epsilon, standard_indices
from .partitions import Partition, as_partition, conjugate, is_hook, partitions_of
from .polyring import VariableSet
from .symfunc import SymPolynomial, monomial_symmetric

SIZE_LIMIT = 12


@dataclass(frozen=True)
class HookTableau:
    shape: Partition
    rows: tuple  # tuple of tuples of SuperIndex

    def content(self, m: int, n: int) -> tuple[tuple, tuple]:
        nu, mu = [0] * m, [0] * n
        for row in self.rows:
            for e in row:
                if e.is_delta:
                    nu[e.index - 1] += 1
                else:
                    mu[e.index - 1] += 1
        return tuple(nu), tuple(mu)

    def is_valid(self) -> bool:
        for r, row in enumerate(self.rows):
            for c, e in enumerate(row):
                if c > 0:
                    left = row[c - 1]
                    if e < left or (not e.is_delta and e == left):
                        return False
                if r > 0:
                    up = self.rows[r - 1][c]
                    if e < up or (e.is_delta and e == up):
                        return False
        return True

    def to_json(self) -> dict:
        return {"shape": list(self.shape), "rows": [[str(e) for e in row] for row in self.rows]}

    @classmethod
    def from_json(cls, data) -> "HookTableau":
        rows = tuple(tuple(SuperIndex.parse(e) for e in row) for row in data["rows"])
        return cls(Partition(data["shape"]), rows)

    def __str__(self):
        return "\n".join(" ".join(str(e) for e in row) for row in self.rows)


def enumerate_tableaux(lam, m: int, n: int, limit: int = SIZE_LIMIT) -> Iterator[HookTableau]:
    """All hook tableaux of shape lam, filled column by column."""
    lam = as_partition(lam)
    if lam.size > limit:
        raise ValueError(f"|lambda| = {lam.size} exceeds the enumeration limit {limit}")
    alphabet = standard_indices(m, n)
    cells = [(r, c) for c, height in enumerate(conjugate(lam)) for r in range(height)]
    grid = {}

    def rec(idx):
        if idx == len(cells):
            yield HookTableau(lam, tuple(tuple(grid[(r, c)] for c in range(lam[r])) for r in range(len(lam))))
            return
        r, c = cells[idx]
        left = grid.get((r, c - 1))
        up = grid.get((r - 1, c))
        for e in alphabet:
            if left is not None and (e < left or (not e.is_delta and e == left)):
                continue
            if up is not None and (e < up or (e.is_delta and e == up)):
                continue
            grid[(r, c)] = e
            yield from rec(idx + 1)
        grid.pop((r, c), None)

    yield from rec(0)


def count_content(lam, nu, mu, m: int, n: int) -> int:
    """K_{lam, nu|mu}: number of hook tableaux of shape lam with the given content."""
    lam = as_partition(lam)
    nu = tuple(nu) + (0,) * (m - len(nu))
    mu = tuple(mu) + (0,) * (n - len(mu))
    if len(nu) > m or len(mu) > n:
        raise ValueError("content longer than the index ranges")
    if sum(nu) + sum(mu) != lam.size:
        raise ValueError(f"content size {sum(nu) + sum(mu)} differs from |lambda| = {lam.size}")
    return sum(1 for t in enumerate_tableaux(lam, m, n) if t.content(m, n) == (nu, mu))


def content_counts(lam, m: int, n: int) -> dict:
    counts: dict = {}
    for t in enumerate_tableaux(lam, m, n):
        key = t.content(m, n)
        counts[key] = counts.get(key, 0) + 1
    return counts


def distinguished_tableau(lam, m: int, n: int) -> HookTableau:
    lam = as_partition(lam)
    if not is_hook(lam, m, n):
        raise ValueError(f"{lam} is not a ({m}|{n})-hook partition")
    rows = [[delta(r + 1)] * lam[r] for r in range(min(m, len(lam)))]
    rest = [[None] * row for row in lam[m:]]
    for c in range(lam.part(m + 1)):
        for r in range(len(rest)):
            if c < len(rest[r]):
                rest[r][c] = epsilon(c + 1)
    rows.extend(rest)
    return HookTableau(lam, tuple(tuple(row) for row in rows))


def _is_partition(seq) -> bool:
    return all(seq[i] >= seq[i + 1] for i in range(len(seq) - 1))


def character_via_tableaux(lam, m: int, n: int, variables: VariableSet | None = None,
                           x: str = "x", y: str = "y") -> SymPolynomial:
    """sum over partition contents nu|mu of K_{lam,nu|mu} m_nu(x) m_mu(y)."""
    lam = as_partition(lam)
    if not is_hook(lam, m, n):
        raise ValueError(f"{lam} is not a ({m}|{n})-hook partition")
    vs = variables or VariableSet((x, m), (y, n))
    total = SymPolynomial(vs)
    for (nu, mu), k in sorted(content_counts(lam, m, n).items()):
        if not (_is_partition(nu) and _is_partition(mu)):
            continue
        total = total + monomial_symmetric(nu, vs, x) * monomial_symmetric(mu, vs, y) * k
    return SymPolynomial(vs, total.terms)


def kostka_recursive(lam, nu) -> int:
    """Classical Kostka number by removing horizontal strips of the largest letter."""
    lam = as_partition(lam)
    nu = [v for v in nu]
    if sum(nu) != lam.size:
        return 0
    while nu and nu[-1] == 0:
        nu.pop()
    if not nu:
        return 1 if lam.size == 0 else 0
    last = nu[-1]
    total = 0
    for inner in _horizontal_strip_removals(lam, last):
        total += kostka_recursive(inner, nu[:-1])
    return total


def _horizontal_strip_removals(lam, k):
    lam = list(lam)

    def rec(i, remaining, acc):
        if i == len(lam):
            if remaining == 0:
                yield Partition(acc)
            return
        below = lam[i + 1] if i + 1 < len(lam) else 0
        for take in range(0, min(remaining, lam[i] - below) + 1):
            yield from rec(i + 1, remaining - take, acc + [lam[i] - take])

    yield from rec(0, k, [])


def hook_tableau_count(lam, m: int, n: int) -> int:
    return sum(1 for _ in enumerate_tableaux(lam, m, n))


def all_hook_shapes(d: int, m: int, n: int):
    return [lam for lam in partitions_of(d) if is_hook(lam, m, n)]
