"""Closed-form classification of lexsegment ideals.

Gotzmann verdicts come from two criteria:

* completely lexsegment with ``x_1 | u``, not initial: Gotzmann iff
  ``a >= C(n+d-1, d) - (j + 1)`` where ``a`` counts monomials below ``u`` and
  ``j`` is the exponent of ``x_n`` in ``v``;
* otherwise: Gotzmann iff the segment is ``m * (x_l, x_{l+1}, ..., x_{l+p})``
  for a monomial ``m`` and ``p >= 1``.

Initial segments and single monomials are Gotzmann outright. Linear
quotients and Taylor minimality are decided combinatorially on the
generators.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from enum import Enum
from functools import reduce
from math import comb
from typing import NamedTuple

from lexgotz.ideal import (
    MonomialIdeal,
    NotEquigeneratedError,
    is_componentwise_lexsegment,
    is_gotzmann_oracle,
)
from lexgotz.monomial import (
    LexSegment,
    Monomial,
    enumerate_Md,
    is_completely_lexsegment,
    lexsegment_set,
    normalize_segment,
    rank_after,
)

__all__ = [
    "Route",
    "ClassificationReport",
    "LinearQuotients",
    "Thm42Triple",
    "NotCompletelyError",
    "InitialSegmentError",
    "LeadingVariableError",
    "PrincipalSegmentError",
    "SearchCapError",
    "thm34_gotzmann",
    "thm43_gotzmann",
    "colon_generators",
    "has_linear_quotients",
    "taylor_is_minimal",
    "taylor_shape_criterion",
    "multiple_of_variables",
    "colon_ranks",
    "thm42_consistency",
    "gotzmann_route",
    "classify",
]

LQ_SEARCH_CAP = 9


class NotCompletelyError(ValueError):
    pass


class InitialSegmentError(ValueError):
    pass


class LeadingVariableError(ValueError):
    pass


class PrincipalSegmentError(ValueError):
    pass


class SearchCapError(ValueError):
    pass


class Route(str, Enum):
    INITIAL = "initial-shortcut"
    PRINCIPAL = "principal-shortcut"
    THM34 = "thm34"
    THM43 = "thm43"


def thm34_gotzmann(seg: LexSegment, *, check: bool = True) -> bool:
    """Gotzmann test for a completely, non-initial segment with ``x_1 | u``."""
    if check:
        if seg.u.nu(1) == 0:
            raise LeadingVariableError(f"x1 does not divide u = {seg.u}")
        if seg.is_initial:
            raise InitialSegmentError(f"{seg} is an initial lexsegment")
        if not is_completely_lexsegment(seg):
            raise NotCompletelyError(f"{seg} is not completely lexsegment")
    a = rank_after(seg.u)
    j = seg.v.nu(seg.n)
    return a >= comb(seg.n + seg.d - 1, seg.d) - (j + 1)


def multiple_of_variables(gens) -> tuple[Monomial, list[int]] | None:
    """Write ``gens`` as ``m * {x_i : i in idx}`` if possible.

    Returns ``(m, sorted indices)`` with ``m`` the gcd, or ``None``.
    """
    gens = list(gens)
    if not gens:
        return None
    g = reduce(Monomial.gcd, gens)
    idx = []
    for w in gens:
        q = w / g
        if q.degree != 1:
            return None
        idx.append(q.min_index)
    if len(set(idx)) != len(idx):
        return None
    return g, sorted(idx)


def thm43_gotzmann(seg: LexSegment) -> bool:
    """Gotzmann test ``L(u, v) = m * (x_l, ..., x_{l+p})`` with ``p >= 1``."""
    if seg.is_principal:
        raise PrincipalSegmentError(f"{seg} has a single monomial")
    shape = multiple_of_variables(lexsegment_set(seg))
    if shape is None:
        return False
    _, idx = shape
    return idx == list(range(idx[0], idx[0] + len(idx)))


def colon_generators(previous, u: Monomial) -> list[Monomial]:
    """Generators ``w / gcd(w, u)`` of ``(previous) : u`` (not minimalized)."""
    return [w / w.gcd(u) for w in previous]


def _colon_is_linear(previous, u: Monomial) -> bool:
    quots = colon_generators(previous, u)
    linear = {q.min_index for q in quots if q.degree == 1}
    return all(linear & q.support for q in quots)


class LinearQuotients(NamedTuple):
    holds: bool
    order: tuple[Monomial, ...] | None
    definitive: bool
    strategy: str

    @property
    def inconclusive(self) -> bool:
        return not self.holds and not self.definitive


def _order_works(order) -> bool:
    return all(_colon_is_linear(order[:i], order[i]) for i in range(1, len(order)))


def _exhaustive_order(gens) -> tuple[Monomial, ...] | None:
    # the colon at step i depends only on the *set* of earlier generators,
    # so searching subsets (with memo of dead ends) covers every permutation
    r = len(gens)
    full = (1 << r) - 1
    dead: set[int] = set()

    def extend(mask, order):
        if mask == full:
            return order
        if mask in dead:
            return None
        prev = [gens[k] for k in range(r) if mask >> k & 1]
        for k in range(r):
            if mask >> k & 1:
                continue
            if mask == 0 or _colon_is_linear(prev, gens[k]):
                found = extend(mask | 1 << k, order + (gens[k],))
                if found is not None:
                    return found
        dead.add(mask)
        return None

    return extend(0, ())


def has_linear_quotients(
    ideal: MonomialIdeal, strategy: str = "auto", cap: int = LQ_SEARCH_CAP
) -> LinearQuotients:
    """Look for an order ``u_1, ..., u_r`` with every ``(u_1..u_{i-1}) : u_i`` linear.

    ``strategy`` is ``"desc-lex"``, ``"asc-lex"``, ``"exhaustive"`` or
    ``"auto"`` (both lex orders, then exhaustive search if ``r <= cap``).
    A failed exhaustive search is definitive; failure of the lex orders alone
    is not.
    """
    if not ideal.is_equigenerated:
        raise NotEquigeneratedError("linear quotients are checked for equigenerated ideals")
    desc = tuple(sorted(ideal.generators, reverse=True))
    r = len(desc)
    if strategy == "exhaustive" and r > cap:
        raise SearchCapError(f"{r} generators exceed the exhaustive search cap {cap}")
    if r <= 1:
        return LinearQuotients(True, desc, True, "trivial")
    if strategy in ("desc-lex", "auto") and _order_works(desc):
        return LinearQuotients(True, desc, True, "desc-lex")
    if strategy in ("asc-lex", "auto") and _order_works(desc[::-1]):
        return LinearQuotients(True, desc[::-1], True, "asc-lex")
    if strategy == "exhaustive" or (strategy == "auto" and r <= cap):
        order = _exhaustive_order(desc)
        return LinearQuotients(order is not None, order, True, "exhaustive")
    if strategy not in ("desc-lex", "asc-lex", "auto"):
        raise ValueError(f"unknown strategy {strategy!r}")
    return LinearQuotients(False, None, False, strategy)


def taylor_is_minimal(ideal: MonomialIdeal) -> bool:
    """True iff no Taylor differential coefficient ``lcm(T) / lcm(T - s)`` is 1.

    A unit coefficient for some ``T`` means ``u_s | lcm(T - s)``, which then
    also holds for ``T = G(I)``; so only the leave-one-out lcms are checked.
    """
    gens = ideal.generators
    if len(gens) < 2:
        return True
    for k, u in enumerate(gens):
        rest = reduce(Monomial.lcm, gens[:k] + gens[k + 1 :])
        if u.divides(rest):
            return False
    return True


def taylor_shape_criterion(ideal: MonomialIdeal) -> bool:
    """True iff ``G(I) = {m x_{i_1}, ..., m x_{i_l}}`` (indices need not be consecutive)."""
    if len(ideal.generators) == 1:
        return True
    return multiple_of_variables(ideal.generators) is not None


class Thm42Triple(NamedTuple):
    taylor_minimal: bool
    max_index_equals_size: bool
    gotzmann_small: bool

    @property
    def all_equal(self) -> bool:
        return len(set(self)) == 1


def colon_ranks(order) -> list[int]:
    """Number of variables generating ``(u_1..u_{i-1}) : u_i`` along ``order``."""
    out = [0]
    for i in range(1, len(order)):
        quots = colon_generators(order[:i], order[i])
        out.append(len({q.min_index for q in quots if q.degree == 1}))
    return out


def thm42_consistency(
    ideal: MonomialIdeal, lq: LinearQuotients | None = None
) -> Thm42Triple:
    """Evaluate the three conditions that must agree for a linear-quotients ideal.

    1. the Taylor resolution is minimal;
    2. ``max_i (1 + #variables generating (u_1..u_{i-1}) : u_i) = |G(I)|``;
       along the descending lex order of a stable ideal the inner count is
       ``m(u_i) - 1``, so this is ``max m(u) = |G(I)|`` there, and in general
       it says the projective dimension of ``I`` is ``|G(I)| - 1``;
    3. ``I`` is Gotzmann and ``|G(I)| <= n``.
    """
    if lq is None:
        lq = has_linear_quotients(ideal)
    if not lq.holds:
        raise ValueError(f"{ideal} has no known linear quotients order")
    r = len(ideal.generators)
    return Thm42Triple(
        taylor_is_minimal(ideal),
        max(colon_ranks(lq.order)) + 1 == r,
        is_gotzmann_oracle(ideal) and r <= ideal.n,
    )


@dataclass(frozen=True)
class ClassificationReport:
    """Everything :func:`classify` knows about one lexsegment ideal.

    ``segment`` lives in the ambient ring; ``normalized`` is the same segment
    with shared leading factors stripped, which is where the linear-resolution
    shape of non-completely segments is read.
    """

    segment: LexSegment
    normalized: LexSegment
    is_initial: bool
    is_principal: bool
    is_completely: bool
    is_gotzmann: bool
    route: Route
    linear_quotients: LinearQuotients
    componentwise_lexsegment: bool
    taylor_minimal: bool
    a: int
    b: int
    c: int
    j: int
    w: Monomial = field(repr=False)

    @property
    def n(self) -> int:
        return self.segment.n

    @property
    def d(self) -> int:
        return self.segment.d

    def to_json(self) -> dict:
        lq = self.linear_quotients
        return {
            "n": self.n,
            "d": self.d,
            "u": str(self.segment.u),
            "v": str(self.segment.v),
            "initial": self.is_initial,
            "completely": self.is_completely,
            "gotzmann": self.is_gotzmann,
            "route": self.route.value,
            "linear_quotients": None if lq.inconclusive else lq.holds,
            "componentwise_lexsegment": self.componentwise_lexsegment,
            "taylor_minimal": self.taylor_minimal,
            "a": self.a,
            "b": self.b,
            "c": self.c,
            "j": self.j,
        }


def gotzmann_route(seg: LexSegment, completely: bool | None = None) -> Route:
    if seg.is_initial:
        return Route.INITIAL
    if seg.is_principal:
        return Route.PRINCIPAL
    if completely is None:
        completely = is_completely_lexsegment(seg)
    if completely and seg.u.nu(1) > 0:
        return Route.THM34
    return Route.THM43


def classify(seg: LexSegment, lq_cap: int = LQ_SEARCH_CAP) -> ClassificationReport:
    """Classify the ideal generated by ``seg`` in its own ring of ``seg.n`` variables.

    Gotzmann is not stable under adding variables (``(x_2, x_3)^2`` is
    Gotzmann in two variables but not in three), so the verdict is never
    taken from a restricted ring. A segment without ``x_1`` in ``u`` goes to
    the shape criterion, which covers it whether or not it is completely.
    """
    completely = is_completely_lexsegment(seg)
    route = gotzmann_route(seg, completely)
    if route in (Route.INITIAL, Route.PRINCIPAL):
        gotzmann = True
    elif route is Route.THM34:
        gotzmann = thm34_gotzmann(seg, check=False)
    else:
        gotzmann = thm43_gotzmann(seg)

    ideal = MonomialIdeal.from_segment(seg)
    size = len(seg)
    total = comb(seg.n + seg.d - 1, seg.d)
    return ClassificationReport(
        segment=seg,
        normalized=normalize_segment(seg),
        is_initial=seg.is_initial,
        is_principal=seg.is_principal,
        is_completely=completely,
        is_gotzmann=gotzmann,
        route=route,
        linear_quotients=has_linear_quotients(ideal, cap=lq_cap),
        componentwise_lexsegment=is_componentwise_lexsegment(ideal).holds,
        taylor_minimal=taylor_is_minimal(ideal),
        a=rank_after(seg.u),
        b=rank_after(seg.v),
        c=total - size,
        j=seg.v.nu(seg.n),
        w=enumerate_Md(seg.n, seg.d)[size - 1],
    )
