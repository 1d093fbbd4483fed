"""Binomial coefficients and Macaulay (binomial) expansions.

For ``d >= 1`` every ``a >= 0`` has a unique expansion

    a = C(a_d, d) + C(a_{d-1}, d-1) + ... + C(a_j, j),  a_d > ... > a_j >= j >= 1

and two operators are read off it::

    a^<d> = sum C(a_i + 1, i + 1)      (upper_shift)
    a^(d) = sum C(a_i, i + 1)          (derivative)

so that ``a^<d> = a + a^(d)``. Everything here is exact Python ``int``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

__all__ = [
    "MacaulayExpansion",
    "binomial",
    "macaulay_expand",
    "upper_shift",
    "derivative",
    "lemma31_predicate",
    "lemma32_predicate",
]


def binomial(n: int, k: int) -> int:
    """Exact C(n, k), with C(n, k) = 0 for k > n."""
    if n < 0 or k < 0:
        raise ValueError(f"binomial needs non-negative arguments, got ({n}, {k})")
    return comb(n, k)


@dataclass(frozen=True)
class MacaulayExpansion:
    """The expansion of ``value`` with respect to ``d`` as ``(top, bottom)`` pairs."""

    d: int
    terms: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.d < 1:
            raise ValueError("expansion degree must be >= 1")
        bottoms = [b for _, b in self.terms]
        if bottoms != list(range(self.d, self.d - len(bottoms), -1)):
            raise ValueError(f"bottoms must be d, d-1, ..., got {bottoms}")
        tops = [t for t, _ in self.terms]
        if any(t1 <= t2 for t1, t2 in zip(tops, tops[1:])):
            raise ValueError(f"tops must strictly decrease, got {tops}")
        if any(t < b or b < 1 for t, b in self.terms):
            raise ValueError("every term needs top >= bottom >= 1")

    @property
    def value(self) -> int:
        return sum(comb(t, b) for t, b in self.terms)

    @property
    def lowest(self) -> int | None:
        """Smallest bottom index ``j``; ``None`` for the empty expansion."""
        return self.terms[-1][1] if self.terms else None

    def upper_shift(self) -> int:
        return sum(comb(t + 1, b + 1) for t, b in self.terms)

    def derivative(self) -> int:
        return sum(comb(t, b + 1) for t, b in self.terms)

    def __str__(self):
        if not self.terms:
            return "(empty)"
        return "+".join(f"C({t},{b})" for t, b in self.terms)


def _largest_top(a: int, k: int) -> int:
    # largest t with C(t, k) <= a, for a >= 1; C(t, k) is increasing in t >= k
    lo = k
    hi = k
    while comb(hi, k) <= a:
        lo = hi
        hi = 2 * hi + 1
    # invariant: C(lo, k) <= a < C(hi, k)
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if comb(mid, k) <= a:
            lo = mid
        else:
            hi = mid
    return lo


@lru_cache(maxsize=1 << 18)
def macaulay_expand(a: int, d: int) -> MacaulayExpansion:
    """Greedy expansion of ``a`` with respect to ``d``.

    >>> macaulay_expand(7, 3).terms
    ((4, 3), (3, 2))
    """
    if d < 1:
        raise ValueError("d must be >= 1")
    if a < 0:
        raise ValueError("a must be non-negative")
    terms = []
    k = d
    rest = a
    while rest > 0:
        # k reaches 1 only with C(rest, 1) = rest, which zeroes the remainder
        top = _largest_top(rest, k)
        terms.append((top, k))
        rest -= comb(top, k)
        k -= 1
    return MacaulayExpansion(d, tuple(terms))


def upper_shift(a: int, d: int) -> int:
    """Return a^<d>; 0^<d> = 0."""
    return macaulay_expand(a, d).upper_shift()


def derivative(a: int, d: int) -> int:
    """Return a^(d) = a^<d> - a."""
    return macaulay_expand(a, d).derivative()


def lemma31_predicate(b: int, c: int, d: int) -> bool:
    """Closed-form test for ``b^(d) == c^(d)`` when ``c > b > 0``.

    True iff the lowest bottom index ``j`` of the expansion of ``b`` is at
    least 2 and ``c - b <= j - 1``.
    """
    if not c > b > 0:
        raise ValueError(f"need c > b > 0, got b={b}, c={c}")
    j = macaulay_expand(b, d).lowest
    return j >= 2 and c - b <= j - 1


def lemma32_predicate(c: int, d: int) -> bool:
    """Closed-form test for ``c^(d) == 0`` when ``c > 0``: simply ``c <= d``."""
    if c <= 0:
        raise ValueError(f"need c > 0, got {c}")
    return c <= d
