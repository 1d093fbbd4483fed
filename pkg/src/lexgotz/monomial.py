"""Monomials, lex order, lexsegments and shadows.

A monomial in ``n`` variables is stored as its exponent vector. Because the
lex order with ``x_1 > ... > x_n`` compares exponents at the first differing
index, tuple comparison of two equal-degree monomials *is* the lex order, and
everything below leans on that.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass
from functools import lru_cache
from math import comb

from lexgotz.macaulay import MacaulayExpansion

__all__ = [
    "EnumerationCapError",
    "Monomial",
    "LexSegment",
    "enum_cap",
    "lex_compare",
    "enumerate_Md",
    "rank_after",
    "rank_after_expansion",
    "lexsegment_set",
    "shadow",
    "is_completely_lexsegment",
    "parse_monomial",
    "restrict_leading",
    "normalize_segment",
    "linear_resolution_shape",
]

DEFAULT_ENUM_CAP = 10**6


class EnumerationCapError(ValueError):
    """Raised when a requested enumeration of M_d exceeds the configured cap."""


def enum_cap() -> int:
    raw = os.environ.get("LEXGOTZ_ENUM_CAP")
    return int(raw) if raw else DEFAULT_ENUM_CAP


class Monomial(tuple):
    """Exponent vector ``(nu_1, ..., nu_n)`` of ``x_1^nu_1 * ... * x_n^nu_n``."""

    __slots__ = ()

    def __new__(cls, exponents):
        exps = tuple(int(e) for e in exponents)
        if not exps:
            raise ValueError("a monomial needs at least one variable")
        if any(e < 0 for e in exps):
            raise ValueError(f"negative exponent in {exps}")
        return super().__new__(cls, exps)

    @classmethod
    def variable(cls, i: int, n: int) -> Monomial:
        """The variable ``x_i`` (1-indexed) in ``n`` variables."""
        if not 1 <= i <= n:
            raise ValueError(f"variable index {i} outside 1..{n}")
        return cls(1 if k == i - 1 else 0 for k in range(n))

    @classmethod
    def power(cls, i: int, e: int, n: int) -> Monomial:
        return cls(e if k == i - 1 else 0 for k in range(n))

    @property
    def n(self) -> int:
        return len(self)

    @property
    def degree(self) -> int:
        return sum(self)

    def nu(self, i: int) -> int:
        """Exponent of ``x_i`` (1-indexed)."""
        return self[i - 1]

    @property
    def max_index(self) -> int:
        """``m(u)``: the largest ``i`` with ``x_i | u``; 0 for the unit monomial."""
        for i in range(len(self), 0, -1):
            if self[i - 1]:
                return i
        return 0

    @property
    def min_index(self) -> int:
        """Smallest ``i`` with ``x_i | u``; 0 for the unit monomial."""
        for i, e in enumerate(self, 1):
            if e:
                return i
        return 0

    @property
    def support(self) -> frozenset[int]:
        return frozenset(i for i, e in enumerate(self, 1) if e)

    def __mul__(self, other):
        if not isinstance(other, Monomial):
            return NotImplemented
        _check_same_n(self, other)
        return Monomial(a + b for a, b in zip(self, other))

    def times_var(self, i: int) -> Monomial:
        exps = list(self)
        exps[i - 1] += 1
        return Monomial(exps)

    def divides(self, other: Monomial) -> bool:
        return all(a <= b for a, b in zip(self, other))

    def __truediv__(self, other):
        if not isinstance(other, Monomial):
            return NotImplemented
        if not other.divides(self):
            raise ValueError(f"{other} does not divide {self}")
        return Monomial(a - b for a, b in zip(self, other))

    def gcd(self, other: Monomial) -> Monomial:
        return Monomial(min(a, b) for a, b in zip(self, other))

    def lcm(self, other: Monomial) -> Monomial:
        return Monomial(max(a, b) for a, b in zip(self, other))

    # tuple's rich comparisons stay in place: they are the lex order
    def __repr__(self):
        return f"Monomial({str(self)!r})"

    def __str__(self):
        parts = []
        for i, e in enumerate(self, 1):
            if e == 1:
                parts.append(f"x{i}")
            elif e > 1:
                parts.append(f"x{i}^{e}")
        return "*".join(parts) if parts else "1"

    def __reduce__(self):
        return (Monomial, (tuple(self),))


def _check_same_n(m1: Monomial, m2: Monomial) -> None:
    if len(m1) != len(m2):
        raise ValueError(f"variable counts differ: {len(m1)} vs {len(m2)}")


_FACTOR = re.compile(r"^x(\d+)(?:\^(\d+))?$")


def parse_monomial(text: str, n: int | None = None) -> Monomial:
    """Parse ``[2,0,1]`` or ``x1^2*x3`` (variables 1-indexed).

    The product form needs ``n``; for the vector form ``n`` is optional and
    checked when given.
    """
    s = text.strip()
    if s.startswith("["):
        if not s.endswith("]"):
            raise ValueError(f"unterminated exponent vector: {text!r}")
        body = s[1:-1].strip()
        try:
            exps = [int(p) for p in body.split(",")] if body else []
        except ValueError:
            raise ValueError(f"bad exponent vector: {text!r}") from None
        if n is not None and len(exps) != n:
            raise ValueError(f"expected {n} exponents, got {len(exps)} in {text!r}")
        return Monomial(exps)
    if n is None:
        raise ValueError("the product grammar needs the variable count n")
    exps = [0] * n
    if s == "1":
        return Monomial(exps)
    for factor in s.replace(" ", "").split("*"):
        m = _FACTOR.match(factor)
        if not m:
            raise ValueError(f"bad factor {factor!r} in {text!r}")
        i = int(m.group(1))
        if not 1 <= i <= n:
            raise ValueError(f"variable x{i} outside x1..x{n}")
        exps[i - 1] += int(m.group(2)) if m.group(2) is not None else 1
    return Monomial(exps)


def lex_compare(m1: Monomial, m2: Monomial) -> int:
    """Return 1, 0 or -1 as ``m1`` is lex-greater, equal or smaller than ``m2``."""
    _check_same_n(m1, m2)
    if m1.degree != m2.degree:
        raise ValueError(f"degrees differ: {m1} has {m1.degree}, {m2} has {m2.degree}")
    return (m1 > m2) - (m1 < m2)


def _size_Md(n: int, d: int) -> int:
    return comb(n + d - 1, d)


@lru_cache(maxsize=256)
def _enumerate(n: int, d: int) -> tuple[Monomial, ...]:
    out = []

    def rec(prefix, left, slots):
        if slots == 1:
            out.append(Monomial(prefix + [left]))
            return
        for e in range(left, -1, -1):
            rec(prefix + [e], left - e, slots - 1)

    rec([], d, n)
    return tuple(out)


@lru_cache(maxsize=256)
def _positions(n: int, d: int) -> dict[Monomial, int]:
    return {m: k for k, m in enumerate(_enumerate(n, d))}


def enumerate_Md(n: int, d: int) -> tuple[Monomial, ...]:
    """All degree-``d`` monomials in ``n`` variables, in descending lex order."""
    if n < 1 or d < 0:
        raise ValueError(f"need n >= 1 and d >= 0, got n={n}, d={d}")
    size = _size_Md(n, d)
    if size > enum_cap():
        raise EnumerationCapError(
            f"|M_{d}| = {size} in {n} variables exceeds the cap {enum_cap()} "
            "(set LEXGOTZ_ENUM_CAP to raise it)"
        )
    return _enumerate(n, d)


def position(m: Monomial) -> int:
    """0-based index of ``m`` in ``enumerate_Md`` (number of monomials above it)."""
    enumerate_Md(m.n, m.degree)
    return _positions(m.n, m.degree)[m]


def rank_after_expansion(v: Monomial) -> MacaulayExpansion:
    """Macaulay expansion of the number of monomials lex-below ``v``.

    Writing ``v = x_{l_1} ... x_{l_{d-j}} x_n^j`` with ``l_1 <= ... <= l_{d-j} < n``,
    the count is ``sum_k C(n - l_k + d - k, d - k + 1)``, already in
    expansion form.
    """
    n, d = v.n, v.degree
    if d < 1:
        raise ValueError("rank_after needs a monomial of degree >= 1")
    ls = [i for i in range(1, n) for _ in range(v[i - 1])]
    terms = tuple((n - l + d - k, d - k + 1) for k, l in enumerate(ls, 1))
    return MacaulayExpansion(d, terms)


def rank_after(v: Monomial) -> int:
    """``|M_d \\ L^i(v)|``: how many degree-``d`` monomials lie strictly below ``v``."""
    return rank_after_expansion(v).value


@dataclass(frozen=True)
class LexSegment:
    """The lexsegment ``L(u, v) = {w in M_d : u >= w >= v}``."""

    u: Monomial
    v: Monomial

    def __post_init__(self):
        u, v = Monomial(self.u), Monomial(self.v)
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "v", v)
        if lex_compare(u, v) < 0:
            raise ValueError(f"lexsegment needs u >= v, got u={u} < v={v}")
        if u.degree < 1:
            raise ValueError("lexsegment degree must be >= 1")

    @property
    def n(self) -> int:
        return self.u.n

    @property
    def d(self) -> int:
        return self.u.degree

    @property
    def is_initial(self) -> bool:
        return self.u.nu(1) == self.d

    @property
    def is_principal(self) -> bool:
        return self.u == self.v

    def __len__(self):
        return rank_after(self.u) - rank_after(self.v) + 1

    def shifted(self, k: int = 1) -> LexSegment:
        """``L(x_1^k u, v x_n^k)``, the candidate segment ``k`` degrees up."""
        n = self.n
        return LexSegment(self.u * Monomial.power(1, k, n), self.v * Monomial.power(n, k, n))

    def __str__(self):
        return f"L({self.u}, {self.v})"


def lexsegment_set(seg: LexSegment) -> tuple[Monomial, ...]:
    """The monomials of ``seg`` in descending lex order."""
    allm = enumerate_Md(seg.n, seg.d)
    pos = _positions(seg.n, seg.d)
    return allm[pos[seg.u] : pos[seg.v] + 1]


def shadow(gens, d: int | None = None) -> tuple[Monomial, ...]:
    """Degree ``d + 1`` monomials ``w * x_i`` for ``w`` in ``gens``, descending lex."""
    gens = list(gens)
    if not gens:
        return ()
    degs = {g.degree for g in gens}
    ns = {g.n for g in gens}
    if len(degs) != 1 or (d is not None and degs != {d}):
        raise ValueError(f"shadow needs monomials of one degree, got degrees {sorted(degs)}")
    if len(ns) != 1:
        raise ValueError("shadow needs monomials in one ring")
    n = ns.pop()
    out = {g.times_var(i) for g in gens for i in range(1, n + 1)}
    return tuple(sorted(out, reverse=True))


def is_completely_lexsegment(seg: LexSegment) -> bool:
    """Single-shadow test: ``shadow(L(u, v)) == L(x_1 u, v x_n)``.

    The shadow is always contained in that interval and contains both of its
    ends, so equality reduces to a size comparison.
    """
    return len(shadow(lexsegment_set(seg))) == len(seg.shifted())


def restrict_leading(seg: LexSegment) -> tuple[LexSegment, int]:
    """Drop the leading variables ``x_1, ..., x_{t-1}`` that divide no element.

    Returns the segment in ``n - t + 1`` variables and the number ``t - 1`` of
    dropped variables. Every ``w`` in ``L(u, v)`` satisfies ``w <= u``, so a
    variable absent from ``u`` and preceding its first variable is absent from
    the whole segment.
    """
    drop = seg.u.min_index - 1
    if drop == 0:
        return seg, 0
    return LexSegment(Monomial(seg.u[drop:]), Monomial(seg.v[drop:])), drop


def normalize_segment(seg: LexSegment) -> LexSegment:
    """Strip what every element of ``seg`` shares at the front of the variable list.

    Alternately drops unused leading variables and divides by
    ``x_1^{nu_1(v)}`` (``v`` being lex-smallest, that power divides every
    element) until ``x_1 | u`` and ``x_1`` does not divide ``v``. A single
    monomial is returned unchanged apart from variable restriction.
    """
    while True:
        seg, _ = restrict_leading(seg)
        common = seg.v.nu(1)
        if common == 0 or seg.is_principal:
            return seg
        p = Monomial.power(1, common, seg.n)
        seg = LexSegment(seg.u / p, seg.v / p)


def linear_resolution_shape(seg: LexSegment) -> bool:
    """Does ``seg`` read ``u = x_1 x_{l+1}^{a_{l+1}}...x_n^{a_n}``, ``v = x_l x_n^{d-1}``, ``2 <= l < n``?"""
    u, v, n, d = seg.u, seg.v, seg.n, seg.d
    l = v.min_index
    if not 2 <= l < n:
        return False
    if v != Monomial.variable(l, n) * Monomial.power(n, d - 1, n):
        return False
    return u.nu(1) == 1 and all(u.nu(k) == 0 for k in range(2, l + 1))
