"""Index labels and weights shared by the combinatorial modules.

An index of the super vector space is either of delta type (the even part,
``d1 .. dm``) or of epsilon type (the odd part, ``e1 .. en``).  Delta indices
sort before epsilon indices.
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple

DELTA = 0
EPSILON = 1


class SuperIndex(NamedTuple):
    kind: int
    index: int

    @property
    def is_delta(self) -> bool:
        return self.kind == DELTA

    @property
    def parity(self) -> int:
        return self.kind

    def __str__(self):
        return ("d" if self.kind == DELTA else "e") + str(self.index)

    @classmethod
    def parse(cls, text: str) -> "SuperIndex":
        text = text.strip()
        if len(text) < 2 or text[0] not in "de" or not text[1:].isdigit():
            raise ValueError(f"bad index label {text!r}")
        return cls(DELTA if text[0] == "d" else EPSILON, int(text[1:]))


def delta(i: int) -> SuperIndex:
    return SuperIndex(DELTA, i)


def epsilon(j: int) -> SuperIndex:
    return SuperIndex(EPSILON, j)


def standard_indices(m: int, n: int) -> list[SuperIndex]:
    return [delta(i) for i in range(1, m + 1)] + [epsilon(j) for j in range(1, n + 1)]


def _frac(c):
    c = Fraction(c)
    return c


class Weight:
    """Finitely supported rational combination of the delta_i and epsilon_j."""

    __slots__ = ("_coeffs", "_hash")

    def __init__(self, coeffs=None):
        clean = {}
        for key, c in (coeffs or {}).items():
            if not isinstance(key, SuperIndex):
                key = SuperIndex(*key)
            c = _frac(c)
            if c:
                clean[key] = c
        self._coeffs = clean
        self._hash = None

    @classmethod
    def from_lists(cls, delta_coeffs=(), epsilon_coeffs=()) -> "Weight":
        coeffs = {delta(i + 1): c for i, c in enumerate(delta_coeffs)}
        coeffs.update({epsilon(j + 1): c for j, c in enumerate(epsilon_coeffs)})
        return cls(coeffs)

    @classmethod
    def basis(cls, idx: SuperIndex) -> "Weight":
        return cls({idx: 1})

    def __getitem__(self, key) -> Fraction:
        if not isinstance(key, SuperIndex):
            key = SuperIndex(*key)
        return self._coeffs.get(key, Fraction(0))

    def items(self):
        return sorted(self._coeffs.items())

    def support(self):
        return sorted(self._coeffs)

    def delta_part(self, m: int) -> list[Fraction]:
        return [self[delta(i)] for i in range(1, m + 1)]

    def epsilon_part(self, n: int) -> list[Fraction]:
        return [self[epsilon(j)] for j in range(1, n + 1)]

    def __add__(self, other: "Weight") -> "Weight":
        out = dict(self._coeffs)
        for k, c in other._coeffs.items():
            out[k] = out.get(k, 0) + c
        return Weight(out)

    def __neg__(self) -> "Weight":
        return Weight({k: -c for k, c in self._coeffs.items()})

    def __sub__(self, other: "Weight") -> "Weight":
        return self + (-other)

    def __mul__(self, scalar) -> "Weight":
        return Weight({k: c * scalar for k, c in self._coeffs.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, Weight):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._coeffs.items()))
        return self._hash

    def __bool__(self):
        return bool(self._coeffs)

    def __str__(self):
        if not self._coeffs:
            return "0"
        pieces = []
        for k, c in self.items():
            mag = abs(c)
            body = str(k) if mag == 1 else f"{mag}*{k}"
            if not pieces:
                pieces.append(body if c > 0 else "-" + body)
            else:
                pieces.append(("+ " if c > 0 else "- ") + body)
        return " ".join(pieces)

    def __repr__(self):
        return f"Weight({self})"

    def to_json(self, m: int, n: int) -> dict:
        extra = [k for k in self._coeffs
                 if (k.is_delta and k.index > m) or (not k.is_delta and k.index > n)]
        if extra:
            raise ValueError(f"weight has support outside ({m}|{n}): {extra}")
        return {"delta": [_json_number(c) for c in self.delta_part(m)],
                "epsilon": [_json_number(c) for c in self.epsilon_part(n)]}

    @classmethod
    def from_json(cls, data: dict) -> "Weight":
        return cls.from_lists([Fraction(c) for c in data.get("delta", [])],
                              [Fraction(c) for c in data.get("epsilon", [])])


def _json_number(c: Fraction):
    if c.denominator == 1:
        return c.numerator
    return str(c)
