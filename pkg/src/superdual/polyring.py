"""Sparse multivariate Laurent polynomials with exact rational coefficients.

Variables come in named families (``x1..xm``, ``y1..yn``, ...).  A family is
either *graded*, meaning its exponents count towards the truncation degree,
or not (the ``z`` family of symplectic characters).  A series may carry a
cutoff: every stored monomial then has graded degree at most the cutoff.
"""

from __future__ import annotations

import json
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping


class VariableSet:
    """Ordered families of variables, e.g. ``VariableSet(("x", 2), ("y", 1))``.

    A family spec is ``(name, count)`` or ``(name, count, graded)``.  Families
    named ``z`` default to ungraded.
    """

    __slots__ = ("families", "_offsets", "_graded_positions", "size")

    def __init__(self, *families):
        specs = []
        for fam in families:
            if isinstance(fam, str):
                raise TypeError("family spec must be a (name, count[, graded]) tuple")
            name, count, *rest = fam
            graded = rest[0] if rest else name != "z"
            if count < 0:
                raise ValueError(f"family {name} has negative count")
            specs.append((str(name), int(count), bool(graded)))
        names = [s[0] for s in specs]
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate family names: {names}")
        self.families = tuple(specs)
        offsets, pos, graded_pos = {}, 0, []
        for name, count, graded in specs:
            offsets[name] = pos
            if graded:
                graded_pos.extend(range(pos, pos + count))
            pos += count
        self._offsets = offsets
        self._graded_positions = tuple(graded_pos)
        self.size = pos

    def __eq__(self, other):
        return isinstance(other, VariableSet) and self.families == other.families

    def __hash__(self):
        return hash(self.families)

    def __repr__(self):
        return "VariableSet(" + ", ".join(f"{n}({c})" for n, c, _ in self.families) + ")"

    def count(self, family: str) -> int:
        for name, count, _ in self.families:
            if name == family:
                return count
        raise KeyError(f"no family {family!r} in {self}")

    def has(self, family: str) -> bool:
        return family in self._offsets

    def position(self, family: str, index: int) -> int:
        if not 1 <= index <= self.count(family):
            raise IndexError(f"{family}{index} outside {self}")
        return self._offsets[family] + index - 1

    def positions(self, family: str) -> range:
        start = self._offsets[family]
        return range(start, start + self.count(family))

    def names(self) -> list[str]:
        return [f"{name}{i}" for name, count, _ in self.families for i in range(1, count + 1)]

    def graded_degree(self, exps) -> int:
        return sum(exps[p] for p in self._graded_positions)

    def to_json(self):
        return [[n, c, g] for n, c, g in self.families]

    @classmethod
    def from_json(cls, data):
        return cls(*(tuple(f) for f in data))

    def parse_variable(self, label: str) -> int:
        for name, count, _ in self.families:
            if label.startswith(name) and label[len(name):].isdigit():
                return self.position(name, int(label[len(name):]))
        raise KeyError(f"unknown variable {label!r} for {self}")


def _norm(c):
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, int):
        return c
    if isinstance(c, Rational):
        return _norm(Fraction(c))
    raise TypeError(f"coefficients must be exact rationals, got {type(c).__name__}")


class LaurentSeries:
    __slots__ = ("vars", "terms", "cutoff")

    def __init__(self, variables: VariableSet, terms: Mapping | None = None, cutoff: int | None = None):
        self.vars = variables
        self.cutoff = cutoff
        clean = {}
        for exps, c in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != variables.size:
                raise ValueError(f"exponent vector {exps} does not match {variables}")
            if c == 0:
                continue
            if cutoff is not None and variables.graded_degree(exps) > cutoff:
                continue
            clean[exps] = _norm(c)
        self.terms = clean

    # -- constructors -------------------------------------------------
    @classmethod
    def zero(cls, variables, cutoff=None):
        return cls(variables, {}, cutoff)

    @classmethod
    def constant(cls, variables, c, cutoff=None):
        return cls(variables, {(0,) * variables.size: c}, cutoff)

    @classmethod
    def one(cls, variables, cutoff=None):
        return cls.constant(variables, 1, cutoff)

    @classmethod
    def variable(cls, variables, family: str, index: int, power: int = 1, cutoff=None):
        exps = [0] * variables.size
        exps[variables.position(family, index)] = power
        return cls(variables, {tuple(exps): 1}, cutoff)

    @classmethod
    def monomial(cls, variables, powers: Mapping[tuple, int], coeff=1, cutoff=None):
        """``powers`` maps (family, index) to an exponent."""
        exps = [0] * variables.size
        for (family, index), e in powers.items():
            exps[variables.position(family, index)] += e
        return cls(variables, {tuple(exps): coeff}, cutoff)

    # -- queries --------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def coefficient(self, exps) -> Fraction | int:
        return self.terms.get(tuple(exps), 0)

    def constant_term(self):
        return self.coefficient((0,) * self.vars.size)

    def to_scalar(self):
        """Value of a series with only a constant term."""
        if any(any(e) for e in self.terms):
            raise ValueError("series is not constant")
        return self.constant_term()

    def max_degree(self) -> int | None:
        if not self.terms:
            return None
        return max(self.vars.graded_degree(e) for e in self.terms)

    def min_degree(self) -> int | None:
        if not self.terms:
            return None
        return min(self.vars.graded_degree(e) for e in self.terms)

    # -- arithmetic ---------------------------------------------------
    def _check(self, other):
        if not isinstance(other, LaurentSeries):
            raise TypeError(f"cannot combine LaurentSeries with {type(other).__name__}")
        if self.vars != other.vars:
            raise ValueError(f"variable-set mismatch: {self.vars} vs {other.vars}")

    def _joint_cutoff(self, other, cutoff=None):
        bounds = [c for c in (self.cutoff, other.cutoff, cutoff) if c is not None]
        return min(bounds) if bounds else None

    def _coerce(self, other):
        if isinstance(other, LaurentSeries):
            return other
        return LaurentSeries.constant(self.vars, _norm(other))

    def __add__(self, other):
        other = self._coerce(other)
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentSeries(self.vars, out, self._joint_cutoff(other))

    __radd__ = __add__

    def __neg__(self):
        return LaurentSeries(self.vars, {e: -c for e, c in self.terms.items()}, self.cutoff)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, LaurentSeries):
            return mul(self, other)
        c = _norm(other)
        return LaurentSeries(self.vars, {e: v * c for e, v in self.terms.items()}, self.cutoff)

    def __rmul__(self, other):
        return self * other

    def __pow__(self, k: int):
        return power(self, k)

    def __eq__(self, other):
        if isinstance(other, LaurentSeries):
            return self.vars == other.vars and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == LaurentSeries.constant(self.vars, other).terms
        return NotImplemented

    __hash__ = None

    def truncate(self, cutoff: int | None) -> "LaurentSeries":
        if cutoff is None:
            return LaurentSeries(self.vars, self.terms, self.cutoff)
        if self.cutoff is not None:
            cutoff = min(cutoff, self.cutoff)
        return LaurentSeries(self.vars, self.terms, cutoff)

    def without_cutoff(self) -> "LaurentSeries":
        return LaurentSeries(self.vars, self.terms, None)

    def shift(self, powers: Mapping[tuple, int]) -> "LaurentSeries":
        """Multiply by a monomial, moving the cutoff along with its graded degree."""
        mono = LaurentSeries.monomial(self.vars, powers)
        (exps,) = mono.terms
        cutoff = None if self.cutoff is None else self.cutoff + self.vars.graded_degree(exps)
        return LaurentSeries(self.vars, {tuple(a + b for a, b in zip(e, exps)): c
                                         for e, c in self.terms.items()}, cutoff)

    def embed(self, target: VariableSet) -> "LaurentSeries":
        """Re-express in a larger variable set that contains every family used."""
        moves = []
        for name, count, _ in self.vars.families:
            if count and not target.has(name):
                raise ValueError(f"family {name} missing from {target}")
            if count > (target.count(name) if target.has(name) else 0):
                raise ValueError(f"family {name} too small in {target}")
            for i in range(1, count + 1):
                moves.append((self.vars.position(name, i), target.position(name, i)))
        out = {}
        for e, c in self.terms.items():
            new = [0] * target.size
            for src, dst in moves:
                new[dst] = e[src]
            out[tuple(new)] = c
        return LaurentSeries(target, out, self.cutoff)

    def specialize(self, assignment: Mapping[str, object]) -> "LaurentSeries":
        return specialize(self, assignment)

    # -- rendering ----------------------------------------------------
    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: (-sum(t[0]), tuple(-x for x in t[0])))

    def __str__(self):
        return render_text(self)

    def __repr__(self):
        return f"LaurentSeries({render_text(self)!r})"

    def to_json(self) -> dict:
        return {
            "variables": self.vars.to_json(),
            "cutoff": self.cutoff,
            "terms": [{"exponents": list(e),
                       "numerator": Fraction(c).numerator,
                       "denominator": Fraction(c).denominator} for e, c in self.sorted_terms()],
        }

    @classmethod
    def from_json(cls, data) -> "LaurentSeries":
        if isinstance(data, str):
            data = json.loads(data)
        vs = VariableSet.from_json(data["variables"])
        terms = {tuple(t["exponents"]): Fraction(t["numerator"], t["denominator"]) for t in data["terms"]}
        return cls(vs, terms, data.get("cutoff"))


def _monomial_text(vs: VariableSet, exps) -> str:
    names = vs.names()
    factors = []
    for name, e in zip(names, exps):
        if e == 1:
            factors.append(name)
        elif e:
            factors.append(f"{name}^{e}")
    return "*".join(factors)


def render_text(p: LaurentSeries) -> str:
    if not p.terms:
        return "0"
    pieces = []
    for exps, c in p.sorted_terms():
        mono = _monomial_text(p.vars, exps)
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not pieces:
            pieces.append(body if c > 0 else "-" + body)
        else:
            pieces.append(("+ " if c > 0 else "- ") + body)
    return " ".join(pieces)


def mul(a: LaurentSeries, b: LaurentSeries, cutoff: int | None = None) -> LaurentSeries:
    a._check(b)
    bound = a._joint_cutoff(b, cutoff)
    vs = a.vars
    out: dict = {}
    if bound is None:
        for ea, ca in a.terms.items():
            for eb, cb in b.terms.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                out[e] = out.get(e, 0) + ca * cb
    else:
        bs = [(eb, cb, vs.graded_degree(eb)) for eb, cb in b.terms.items()]
        for ea, ca in a.terms.items():
            da = vs.graded_degree(ea)
            for eb, cb, db in bs:
                if da + db > bound:
                    continue
                e = tuple(x + y for x, y in zip(ea, eb))
                out[e] = out.get(e, 0) + ca * cb
    return LaurentSeries(vs, out, bound)


def power(a: LaurentSeries, k: int, cutoff: int | None = None) -> LaurentSeries:
    if k < 0:
        raise ValueError("use geometric_inverse or exact_divide for negative powers")
    result = LaurentSeries.one(a.vars, cutoff)
    base = a
    while k:
        if k & 1:
            result = mul(result, base, cutoff)
        k >>= 1
        if k:
            base = mul(base, base, cutoff)
    return result


def product(factors: Iterable[LaurentSeries], variables: VariableSet, cutoff: int | None = None) -> LaurentSeries:
    result = LaurentSeries.one(variables, cutoff)
    for f in factors:
        result = mul(result, f, cutoff)
    return result


def geometric_inverse(factor: LaurentSeries, cutoff: int) -> LaurentSeries:
    """Inverse of ``1 - M`` as the truncated series ``sum M^k``."""
    vs = factor.vars
    zero = (0,) * vs.size
    if factor.terms.get(zero) != 1:
        raise ValueError("factor must have constant term exactly 1")
    m_terms = {e: -c for e, c in factor.terms.items() if e != zero}
    for e in m_terms:
        if vs.graded_degree(e) <= 0:
            raise ValueError(f"non-constant part has a monomial of degree <= 0: {_monomial_text(vs, e)}")
    m = LaurentSeries(vs, m_terms, cutoff)
    result = LaurentSeries.one(vs, cutoff)
    term = result
    while True:
        term = mul(term, m, cutoff)
        if term.is_zero():
            return result
        result = result + term


def _lex_leading(p: LaurentSeries):
    return max(p.terms)


def exact_divide(a: LaurentSeries, b: LaurentSeries) -> LaurentSeries:
    """Quotient a/b, raising ValueError when b does not divide a exactly."""
    a._check(b)
    if b.is_zero():
        raise ZeroDivisionError("division by the zero series")
    vs = a.vars
    lead_b = _lex_leading(b)
    cb = b.terms[lead_b]
    if a.is_zero():
        return LaurentSeries.zero(vs)
    # the quotient's exponents lie in the box [min a - min b, max a - max b]
    lo = [min(e[i] for e in a.terms) - min(e[i] for e in b.terms) for i in range(vs.size)]
    hi = [max(e[i] for e in a.terms) - max(e[i] for e in b.terms) for i in range(vs.size)]
    remainder = dict(a.terms)
    quotient = {}
    while remainder:
        lead = max(remainder)
        q_exp = tuple(x - y for x, y in zip(lead, lead_b))
        if any(q < l or q > h for q, l, h in zip(q_exp, lo, hi)):
            raise ValueError("divisor does not divide dividend exactly")
        q_coeff = Fraction(remainder[lead]) / cb
        quotient[q_exp] = q_coeff
        for eb, c in b.terms.items():
            e = tuple(x + y for x, y in zip(q_exp, eb))
            v = remainder.get(e, 0) - q_coeff * c
            if v:
                remainder[e] = v
            else:
                remainder.pop(e, None)
    return LaurentSeries(vs, quotient)


class SpecializationError(ValueError):
    pass


def specialize(p: LaurentSeries, assignment: Mapping[str, object]) -> LaurentSeries:
    """Substitute rationals or other variables, e.g. ``{"x1": 1, "y1": "x2"}``.

    Variables not mentioned are left alone.  The result lives in the same
    variable set; substituted variables simply disappear from the exponents.
    """
    vs = p.vars
    values = {}
    renames = {}
    for label, value in assignment.items():
        pos = vs.parse_variable(label)
        if isinstance(value, str):
            renames[pos] = vs.parse_variable(value)
        else:
            values[pos] = Fraction(_norm(value))
    out: dict = {}
    for exps, c in p.terms.items():
        e = list(exps)
        coeff = Fraction(c)
        for pos, val in values.items():
            k = e[pos]
            if k:
                if val == 0:
                    if k < 0:
                        raise SpecializationError(f"zero substituted into negative exponent of {vs.names()[pos]}")
                    coeff = Fraction(0)
                else:
                    coeff *= val ** k
                e[pos] = 0
        if coeff == 0:
            continue
        moved = list(e)
        for src in renames:
            moved[src] = 0
        for src, dst in renames.items():
            moved[dst] += e[src]
        key = tuple(moved)
        out[key] = out.get(key, 0) + coeff
    cutoff = p.cutoff if not values and not renames else None
    return LaurentSeries(vs, out, cutoff)


def evaluate_all(p: LaurentSeries, value=1):
    """Set every variable to ``value`` and return the resulting rational."""
    return specialize(p, {name: value for name in p.vars.names()}).to_scalar()
