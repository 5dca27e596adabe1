"""Partitions and the statistics attached to them.

Parts are 0-indexed as a tuple (``lam[0]`` is the first row); ``lam.part(i)``
gives the 1-indexed part and returns 0 past the end.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial
from typing import Iterator, NamedTuple

from .labels import Weight, delta, epsilon


class Partition(tuple):
    def __new__(cls, parts=()):
        parts = [int(p) for p in parts]
        if any(p < 0 for p in parts):
            raise ValueError(f"negative part in {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts not weakly decreasing: {parts}")
        while parts and parts[-1] == 0:
            parts.pop()
        return super().__new__(cls, parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        text = text.strip()
        if text in ("", "0"):
            return cls()
        try:
            return cls(int(t) for t in text.split(","))
        except ValueError as exc:
            raise ValueError(f"bad partition {text!r}: {exc}") from None

    def part(self, i: int) -> int:
        """1-indexed part, 0 beyond the length."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    @property
    def size(self) -> int:
        return sum(self)

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def contains(self, other) -> bool:
        return len(other) <= len(self) and all(a >= b for a, b in zip(self, other))

    def cells(self):
        for r, row in enumerate(self):
            for c in range(row):
                yield r, c

    def __str__(self):
        return ",".join(map(str, self)) if self else "0"

    def __repr__(self):
        return f"Partition({tuple(self)})"


class FrobeniusCoordinates(NamedTuple):
    p: tuple
    q: tuple

    def __str__(self):
        return f"p={','.join(map(str, self.p))} q={','.join(map(str, self.q))}"


@dataclass(frozen=True)
class HookContext:
    m: int
    n: int

    def __post_init__(self):
        if self.m < 0 or self.n < 0:
            raise ValueError("m and n must be nonnegative")


def as_partition(lam) -> Partition:
    return lam if isinstance(lam, Partition) else Partition(lam)


def conjugate(lam) -> Partition:
    lam = as_partition(lam)
    if not lam:
        return lam
    return Partition(sum(1 for row in lam if row >= j) for j in range(1, lam[0] + 1))


def is_hook(lam, m: int, n: int) -> bool:
    return as_partition(lam).part(m + 1) <= n


def modified_frobenius(lam) -> FrobeniusCoordinates:
    lam = as_partition(lam)
    conj = conjugate(lam)
    p, q = [], []
    i = 1
    while lam.part(i) - i + 1 > 0:
        p.append(lam.part(i) - i + 1)
        q.append(max(conj.part(i) - i, 0))
        i += 1
    return FrobeniusCoordinates(tuple(p), tuple(q))


def from_frobenius(coords) -> Partition:
    """Inverse of ``modified_frobenius``."""
    p, q = tuple(coords[0]), tuple(coords[1])
    if len(p) != len(q):
        raise ValueError("p and q must have equal length")
    if any(x <= 0 for x in p) or any(p[i] <= p[i + 1] for i in range(len(p) - 1)):
        raise ValueError(f"p must be strictly decreasing and positive: {p}")
    if any(x < 0 for x in q) or any(q[i] <= q[i + 1] for i in range(len(q) - 1) if q[i + 1] > 0):
        raise ValueError(f"q must be strictly decreasing on its positive entries: {q}")
    r = len(p)
    # row i (1-based, i <= r) has p_i + i - 1 boxes; rows below the
    # diagonal block are read off from the column lengths q_j + j.
    rows = [p[i] + i for i in range(r)]
    col_len = [q[j] + j + 1 for j in range(r)]
    below = []
    for i in range(r + 1, (max(col_len) if col_len else 0) + 1):
        below.append(sum(1 for c in col_len if c >= i))
    lam = Partition(rows + below) if _decreasing(rows + below) else None
    if lam is None or modified_frobenius(lam) != FrobeniusCoordinates(p, q):
        raise ValueError(f"({p}|{q}) are not modified Frobenius coordinates")
    return lam


def _decreasing(seq) -> bool:
    return all(seq[i] >= seq[i + 1] for i in range(len(seq) - 1))


def rectangle_atypicality(lam, m: int, n: int) -> int:
    """Smallest i such that lam contains the rectangle of m-i rows of length n-i.

    0 means the associated gl(m|n) weight is typical.
    """
    lam = as_partition(lam)
    if not is_hook(lam, m, n):
        raise ValueError(f"{lam} is not a ({m}|{n})-hook partition")
    for i in range(min(m, n) + 1):
        rows, length = m - i, n - i
        if rows == 0 or length == 0 or lam.part(rows) >= length:
            return i
    raise AssertionError("unreachable")


def natural_weight(lam, m: int, n: int) -> Weight:
    """The gl(m|n) highest weight attached to a hook partition."""
    return osp_labels(lam, m, n)[0]


def osp_labels(mu, m: int, n: int) -> tuple[Weight, Weight]:
    mu = as_partition(mu)
    if not is_hook(mu, m, n):
        raise ValueError(f"{mu} is not a ({m}|{n})-hook partition")
    nu = conjugate(Partition(mu[m:]))
    coeffs = {delta(i): mu.part(i) for i in range(1, m + 1)}
    coeffs.update({epsilon(j): nu.part(j) for j in range(1, n + 1)})
    plus = Weight(coeffs)
    if n:
        coeffs[epsilon(n)] = -nu.part(n)
    return plus, Weight(coeffs)


def hook_lengths(lam) -> list[int]:
    lam = as_partition(lam)
    conj = conjugate(lam)
    return [lam[r] - c - 1 + conj[c] - r for r, c in lam.cells()]


def specht_dimension(lam) -> int:
    lam = as_partition(lam)
    prod = 1
    for h in hook_lengths(lam):
        prod *= h
    return factorial(lam.size) // prod


def partitions_of(d: int, max_part: int | None = None, max_length: int | None = None) -> Iterator[Partition]:
    """Partitions of d in reverse lexicographic order."""
    if max_part is None:
        max_part = d
    if max_length is None:
        max_length = d

    def rec(remaining, cap, slots):
        if remaining == 0:
            yield ()
            return
        if slots == 0:
            return
        for first in range(min(remaining, cap), 0, -1):
            for rest in rec(remaining - first, first, slots - 1):
                yield (first,) + rest

    for parts in rec(d, max_part, max_length):
        yield Partition(parts)


def partitions_up_to(size: int, **bounds) -> Iterator[Partition]:
    for d in range(size + 1):
        yield from partitions_of(d, **bounds)


def hook_partitions(size: int, m: int, n: int, exact: bool = False) -> Iterator[Partition]:
    source = partitions_of(size) if exact else partitions_up_to(size)
    return (lam for lam in source if is_hook(lam, m, n))
