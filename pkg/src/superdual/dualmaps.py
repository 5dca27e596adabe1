"""Weight-level super duality: tail weights and the bijections between their lattices.

A tail weight has a finite head (coefficients on delta_1..delta_m) followed by
an eventually constant tail.  Three tail shapes occur:

* ``Y``: indices 1, 2, 3, ...; eventually equal to the level d.
* ``Ybar``: indices 1/2, 3/2, ...; eventually equal to -d.
* ``Ytilde``: indices 1/2, 1, 3/2, 2, ...; eventually -d on half-integers
  and +d on integers.

Indices are stored doubled, so slot k of the tail prefix sits at index
``first + k * step`` (in doubled units).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .labels import Weight, delta, epsilon
from .partitions import Partition, conjugate, from_frobenius, modified_frobenius

KINDS = ("Y", "Ybar", "Ytilde")
_INDEX_BASE = {"Y": "1", "Ybar": "1/2", "Ytilde": "1/2"}
# (first doubled index, doubled step)
_SLOTS = {"Y": (2, 2), "Ybar": (1, 2), "Ytilde": (1, 1)}


def _eventual(kind: str, level: int, doubled: int) -> int:
    if kind == "Y":
        return level
    if kind == "Ybar":
        return -level
    return -level if doubled % 2 else level


class Zero:
    """Marker for a truncation that kills the module."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "ZERO"

    __str__ = __repr__

    def __bool__(self):
        return False


ZERO = Zero()


@dataclass(frozen=True)
class TailWeight:
    head: tuple
    tail_prefix: tuple
    level: int
    kind: str

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown tail kind {self.kind!r}; expected one of {KINDS}")
        object.__setattr__(self, "head", tuple(int(h) for h in self.head))
        prefix = [int(t) for t in self.tail_prefix]
        while prefix and prefix[-1] == _eventual(self.kind, self.level, self._doubled(len(prefix) - 1)):
            prefix.pop()
        object.__setattr__(self, "tail_prefix", tuple(prefix))
        if self.kind in ("Y", "Ybar"):
            shift = -self.level if self.kind == "Y" else self.level
            parts = [t + shift for t in self.tail_prefix]
            if any(p < 0 for p in parts) or any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
                raise ValueError(f"tail {self.tail_prefix} does not shift to a partition at level {self.level}")
        else:
            # membership is extrinsic: the weight must come from theta_map
            _theta_frobenius(self)

    def _doubled(self, slot: int) -> int:
        first, step = _SLOTS[self.kind]
        return first + slot * step

    @property
    def m(self) -> int:
        return len(self.head)

    def coefficient(self, index) -> int:
        """Tail coefficient at a (possibly half-integer) index."""
        doubled = Fraction(index) * 2
        first, step = _SLOTS[self.kind]
        if doubled.denominator != 1 or doubled < first or (doubled - first) % step:
            raise ValueError(f"index {index} is not a tail index for kind {self.kind}")
        slot = int((doubled - first) // step)
        if slot < len(self.tail_prefix):
            return self.tail_prefix[slot]
        return _eventual(self.kind, self.level, int(doubled))

    def tail_partition(self) -> Partition:
        """lambda^+ for kinds Y and Ybar."""
        if self.kind == "Ytilde":
            raise ValueError("Ytilde weights carry Frobenius data, not a tail partition")
        shift = -self.level if self.kind == "Y" else self.level
        return Partition(t + shift for t in self.tail_prefix)

    @classmethod
    def from_partition(cls, head, tail: Partition, level: int, kind: str = "Y") -> "TailWeight":
        if kind == "Y":
            return cls(tuple(head), tuple(p + level for p in tail), level, "Y")
        if kind == "Ybar":
            return cls(tuple(head), tuple(p - level for p in tail), level, "Ybar")
        raise ValueError("use theta_map to build Ytilde weights")

    def to_json(self) -> dict:
        return {"head": list(self.head), "tail_prefix": list(self.tail_prefix),
                "tail_constant": self.level, "kind": self.kind,
                "index_base": _INDEX_BASE[self.kind]}

    @classmethod
    def from_json(cls, data: dict) -> "TailWeight":
        return cls(tuple(data["head"]), tuple(data["tail_prefix"]), data["tail_constant"], data["kind"])

    def __str__(self):
        first, step = _SLOTS[self.kind]
        shown = []
        for k, t in enumerate(self.tail_prefix):
            d2 = first + k * step
            label = str(d2 // 2) if d2 % 2 == 0 else f"{d2}/2"
            shown.append(f"{label}:{t}")
        head = ",".join(map(str, self.head))
        return f"{self.kind}[head=({head}) tail=({' '.join(shown)}) level={self.level}]"


def _require(lam: TailWeight, kind: str):
    if not isinstance(lam, TailWeight) or lam.kind != kind:
        raise ValueError(f"expected a tail weight of kind {kind}, got {getattr(lam, 'kind', type(lam).__name__)}")


def one_weight(m: int, n: int) -> Weight:
    """sum delta_i - sum eps_j."""
    return Weight.from_lists([1] * m, [-1] * n)


def natural_map(lam: TailWeight) -> TailWeight:
    """Y -> Ybar: keep the head, conjugate the tail partition."""
    _require(lam, "Y")
    return TailWeight.from_partition(lam.head, conjugate(lam.tail_partition()), lam.level, "Ybar")


def natural_map_inverse(lam: TailWeight) -> TailWeight:
    _require(lam, "Ybar")
    return TailWeight.from_partition(lam.head, conjugate(lam.tail_partition()), lam.level, "Y")


def theta_map(lam: TailWeight) -> TailWeight:
    """Y -> Ytilde: interleave p_i - d (at i - 1/2) and q_i + d (at i).

    (p|q) are the modified Frobenius coordinates of the conjugate tail partition.
    """
    _require(lam, "Y")
    p, q = modified_frobenius(conjugate(lam.tail_partition()))
    d = lam.level
    prefix = []
    for pi, qi in zip(p, q):
        prefix += [pi - d, qi + d]
    return TailWeight(lam.head, tuple(prefix), d, "Ytilde")


def _theta_frobenius(lam: TailWeight):
    d = lam.level
    prefix = list(lam.tail_prefix)
    if len(prefix) % 2:
        prefix.append(_eventual("Ytilde", d, 2 * (len(prefix) // 2 + 1)))
    p = [prefix[k] + d for k in range(0, len(prefix), 2)]
    q = [prefix[k] - d for k in range(1, len(prefix), 2)]
    while p and p[-1] == 0 and q[-1] == 0:
        p.pop()
        q.pop()
    try:
        return from_frobenius((tuple(p), tuple(q)))
    except ValueError as exc:
        raise ValueError(f"tail {lam.tail_prefix} at level {d} is not in the image of theta") from exc


def theta_frobenius(lam: TailWeight):
    """Frobenius data (p, q) read off a Ytilde weight."""
    _require(lam, "Ytilde")
    return modified_frobenius(_theta_frobenius(lam))


def theta_map_inverse(lam: TailWeight) -> TailWeight:
    _require(lam, "Ytilde")
    return TailWeight.from_partition(lam.head, conjugate(_theta_frobenius(lam)), lam.level, "Y")


def truncate_weight(lam: TailWeight, n: int):
    """Finite gl(m|n) weight keeping tail indices 1/2 .. n - 1/2, or ZERO.

    Nonzero exactly when the coefficient at n + 1/2 equals -d.  The tail
    coefficient at i - 1/2 is reported on eps_i.
    """
    _require(lam, "Ybar")
    if n < 1:
        raise ValueError("n must be at least 1")
    if lam.coefficient(Fraction(2 * n + 1, 2)) != -lam.level:
        return ZERO
    coeffs = {delta(i + 1): h for i, h in enumerate(lam.head)}
    coeffs.update({epsilon(j): lam.coefficient(Fraction(2 * j - 1, 2)) for j in range(1, n + 1)})
    return Weight(coeffs)
