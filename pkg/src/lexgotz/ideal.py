"""Monomial ideals: graded pieces, Hilbert functions, lexification, Gotzmann test.

Graded components are obtained by filtering ``M_q`` for divisibility by a
generator, never by polynomial arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import NamedTuple

from lexgotz.macaulay import upper_shift
from lexgotz.monomial import (
    LexSegment,
    Monomial,
    enumerate_Md,
    is_completely_lexsegment,
    lexsegment_set,
    parse_monomial,
    shadow,
)

__all__ = [
    "MonomialIdeal",
    "ComponentwiseResult",
    "NotEquigeneratedError",
    "minimalize",
    "graded_component",
    "hilbert",
    "quotient_hilbert",
    "hilbert_table",
    "lexify",
    "is_gotzmann_oracle",
    "is_gotzmann_by_generators",
    "is_componentwise_lexsegment",
    "ideal_from_json",
    "ideal_to_json",
]


class NotEquigeneratedError(ValueError):
    pass


@dataclass(frozen=True)
class MonomialIdeal:
    """Ideal given by its minimal monomial generators ``G(I)``.

    Generators are kept sorted by degree, then descending lex. Build through
    :func:`minimalize` unless the list is known to be minimal.
    """

    n: int
    generators: tuple[Monomial, ...]

    def __post_init__(self):
        gens = tuple(sorted((Monomial(g) for g in self.generators), key=_gen_key))
        if any(g.n != self.n for g in gens):
            raise ValueError(f"all generators must live in {self.n} variables")
        for a in gens:
            for b in gens:
                if a != b and a.divides(b):
                    raise ValueError(f"generators not minimal: {a} divides {b}")
        object.__setattr__(self, "generators", gens)

    @classmethod
    def from_segment(cls, seg: LexSegment) -> MonomialIdeal:
        return cls(seg.n, lexsegment_set(seg))

    def __len__(self):
        return len(self.generators)

    @property
    def degrees(self) -> list[int]:
        return sorted({g.degree for g in self.generators})

    @property
    def min_degree(self) -> int:
        return min(g.degree for g in self.generators)

    @property
    def max_degree(self) -> int:
        return max(g.degree for g in self.generators)

    @property
    def is_equigenerated(self) -> bool:
        return len(self.degrees) == 1

    def contains(self, m: Monomial) -> bool:
        return any(g.divides(m) for g in self.generators)

    def __str__(self):
        return "(" + ", ".join(str(g) for g in self.generators) + ")"


def _gen_key(g: Monomial):
    return (g.degree, tuple(-e for e in g))


def minimalize(gens, n: int | None = None) -> MonomialIdeal:
    """Drop every monomial divisible by another one in ``gens``."""
    gens = [Monomial(g) for g in gens]
    if n is None:
        if not gens:
            raise ValueError("the zero ideal needs an explicit n")
        n = gens[0].n
    kept: list[Monomial] = []
    # processing by degree means a later monomial never divides an earlier one
    for g in sorted(set(gens), key=_gen_key):
        if not any(k.divides(g) for k in kept):
            kept.append(g)
    return MonomialIdeal(n, tuple(kept))


def graded_component(ideal: MonomialIdeal, q: int) -> tuple[Monomial, ...]:
    """Degree-``q`` monomials of ``ideal``, descending lex."""
    if q < 0:
        raise ValueError("degree must be non-negative")
    gens = [g for g in ideal.generators if g.degree <= q]
    if not gens:
        return ()
    return tuple(w for w in enumerate_Md(ideal.n, q) if any(g.divides(w) for g in gens))


def hilbert(ideal: MonomialIdeal, q: int) -> int:
    """``H(I, q)``, the number of degree-``q`` monomials in ``I``."""
    return len(graded_component(ideal, q))


def quotient_hilbert(ideal: MonomialIdeal, q: int) -> int:
    """``H(S/I, q) = C(n+q-1, q) - H(I, q)``."""
    return comb(ideal.n + q - 1, q) - hilbert(ideal, q)


def hilbert_table(ideal: MonomialIdeal, up_to: int, start: int = 0) -> dict[int, int]:
    return {q: hilbert(ideal, q) for q in range(start, up_to + 1)}


def lexify(ideal: MonomialIdeal, up_to: int) -> MonomialIdeal:
    """Lex ideal with the same Hilbert function as ``ideal`` in degrees ``<= up_to``.

    Degree ``q`` of the result is the initial lexsegment of size ``H(I, q)``.
    """
    if ideal.generators and up_to < ideal.max_degree:
        raise ValueError(f"up_to={up_to} is below the top generator degree {ideal.max_degree}")
    gens: list[Monomial] = []
    prev: tuple[Monomial, ...] = ()
    for q in range(up_to + 1):
        piece = enumerate_Md(ideal.n, q)[: hilbert(ideal, q)]
        grown = set(shadow(prev)) if prev else set()
        if not grown <= set(piece):
            raise AssertionError(
                f"lex pieces do not form an ideal at degree {q}; Macaulay bound violated"
            )
        gens.extend(w for w in piece if w not in grown)
        prev = piece
    return MonomialIdeal(ideal.n, tuple(gens))


def _require_equigenerated(ideal: MonomialIdeal) -> int:
    if not ideal.generators:
        raise NotEquigeneratedError("the zero ideal has no generating degree")
    if not ideal.is_equigenerated:
        raise NotEquigeneratedError(f"generators have several degrees {ideal.degrees}")
    return ideal.min_degree


def is_gotzmann_oracle(ideal: MonomialIdeal) -> bool:
    """Gotzmann test by Hilbert-function growth from degree ``d`` to ``d + 1``.

    With ``c = H(S/I, d)`` the ideal is Gotzmann iff ``H(S/I, d+1) = c^<d>``;
    persistence makes one step enough.
    """
    d = _require_equigenerated(ideal)
    c = comb(ideal.n + d - 1, d) - hilbert(ideal, d)
    return hilbert(ideal, d + 1) == comb(ideal.n + d, d + 1) - upper_shift(c, d)


def is_gotzmann_by_generators(ideal: MonomialIdeal) -> bool:
    """Gotzmann test by counting generators of ``m I`` against ``m I^lex``.

    For equigenerated ``I`` both counts are shadow sizes; the lex side uses the
    initial segment with ``|G(I)|`` elements. No Macaulay arithmetic involved.
    """
    d = _require_equigenerated(ideal)
    lex_part = enumerate_Md(ideal.n, d)[: len(ideal.generators)]
    return len(shadow(ideal.generators)) == len(shadow(lex_part))


class ComponentwiseResult(NamedTuple):
    holds: bool
    u: Monomial | None = None
    v: Monomial | None = None
    checked_up_to: int | None = None
    reason: str = ""


def is_componentwise_lexsegment(ideal: MonomialIdeal) -> ComponentwiseResult:
    """Check that every ``I_j`` (``j >= d``) is spanned by ``L(x_1^{j-d} u, v x_n^{j-d})``.

    Degrees ``d .. J`` with ``J = max generator degree + 1`` are compared
    directly; the tail ``j > J`` follows from the degree-``J`` segment being
    completely lexsegment, since no generators enter above ``J``.
    """
    if not ideal.generators:
        raise ValueError("the zero ideal has no lowest degree")
    d = ideal.min_degree
    bottom = graded_component(ideal, d)
    u, v = bottom[0], bottom[-1]
    seg = LexSegment(u, v)
    if tuple(lexsegment_set(seg)) != bottom:
        return ComponentwiseResult(False, reason=f"degree {d} component is not a lexsegment")
    top = ideal.max_degree + 1
    for j in range(d + 1, top + 1):
        want = seg.shifted(j - d)
        if graded_component(ideal, j) != lexsegment_set(want):
            return ComponentwiseResult(False, u, v, j, f"degree {j} component differs from {want}")
    if not is_completely_lexsegment(seg.shifted(top - d)):
        return ComponentwiseResult(
            False, u, v, top, f"degree {top} segment is not completely lexsegment"
        )
    return ComponentwiseResult(True, u, v, top)


def ideal_from_json(obj) -> MonomialIdeal:
    """Build an ideal from ``{"n": 3, "generators": [[1,0,2], "x2^3", ...]}``."""
    if not isinstance(obj, dict) or "n" not in obj or "generators" not in obj:
        raise ValueError('ideal JSON needs keys "n" and "generators"')
    n = obj["n"]
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")
    gens = []
    for g in obj["generators"]:
        if isinstance(g, str):
            gens.append(parse_monomial(g, n))
        elif isinstance(g, list):
            if len(g) != n:
                raise ValueError(f"generator {g} does not have {n} exponents")
            gens.append(Monomial(g))
        else:
            raise ValueError(f"cannot read generator {g!r}")
    return minimalize(gens, n)


def ideal_to_json(ideal: MonomialIdeal) -> dict:
    return {"n": ideal.n, "generators": [list(g) for g in ideal.generators]}
