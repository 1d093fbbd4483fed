"""Brute-force reference implementations used only by the tests.

None of these share code paths with the library beyond the Monomial type.
"""

import itertools
from functools import reduce

from lexgotz.monomial import Monomial


def pascal_binomial(n, k):
    row = [1]
    for _ in range(n):
        row = [1] + [a + b for a, b in zip(row, row[1:])] + [1]
    return row[k] if k <= n else 0


def all_monomials(n, d):
    """Degree-d exponent vectors via itertools, sorted descending (lex)."""
    out = [Monomial(c) for c in itertools.product(range(d + 1), repeat=n) if sum(c) == d]
    return sorted(out, reverse=True)


def count_below(v):
    return sum(1 for w in all_monomials(v.n, v.degree) if w < v)


def derivative_by_definition(a, d):
    """a^(d) from an expansion found by exhaustive search (no greedy step)."""
    from math import comb

    def search(rest, k, bound):
        if rest == 0:
            return []
        if k < 1:
            return None
        for t in range(min(bound - 1, rest + k), k - 1, -1):
            c = comb(t, k)
            if c <= rest:
                tail = search(rest - c, k - 1, t)
                if tail is not None:
                    return [(t, k)] + tail
        return None

    terms = search(a, d, a + d + 2)
    return sum(comb(t, k + 1) for t, k in terms)


def taylor_minimal_by_subsets(gens):
    gens = list(gens)
    for size in range(2, len(gens) + 1):
        for subset in itertools.combinations(gens, size):
            full = reduce(Monomial.lcm, subset)
            for s in range(size):
                rest = subset[:s] + subset[s + 1 :]
                if reduce(Monomial.lcm, rest) == full:
                    return False
    return True


def colon_is_linear(previous, u):
    """(previous) : u generated by variables, via minimal generators of the colon."""
    quots = {w.lcm(u) / u for w in previous}
    minimal = [q for q in quots if not any(p != q and p.divides(q) for p in quots)]
    return all(q.degree == 1 for q in minimal)


def linear_quotients_by_permutations(gens):
    for perm in itertools.permutations(gens):
        if all(colon_is_linear(perm[:i], perm[i]) for i in range(1, len(perm))):
            return True
    return False
