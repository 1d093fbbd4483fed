"""Exhaustive verification suites: closed forms against brute-force oracles.

Each suite walks a finite box of cases and stops at the first disagreement,
which it returns serialized. Segment sweeps visit ``(n, d)`` blocks in
increasing order and, inside a block, ``u`` then ``v`` in descending lex, so
the first counterexample is the same whether or not the sweep runs on
several processes.
"""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import comb
from typing import Callable, Iterator

from lexgotz.classify import (
    Route,
    classify,
    has_linear_quotients,
    taylor_is_minimal,
    taylor_shape_criterion,
    thm34_gotzmann,
    thm42_consistency,
    thm43_gotzmann,
)
from lexgotz.ideal import MonomialIdeal, is_gotzmann_by_generators, is_gotzmann_oracle
from lexgotz.macaulay import (
    binomial,
    derivative,
    lemma31_predicate,
    lemma32_predicate,
    macaulay_expand,
    upper_shift,
)
from lexgotz.monomial import (
    EnumerationCapError,
    LexSegment,
    enum_cap,
    enumerate_Md,
    is_completely_lexsegment,
    lexsegment_set,
    linear_resolution_shape,
    normalize_segment,
    rank_after,
    shadow,
)

__all__ = ["SuiteResult", "SUITES", "run_suite", "iter_segments", "check_bounds"]


@dataclass
class SuiteResult:
    name: str
    cases: int = 0
    counterexample: dict | None = None
    tally: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.counterexample is None

    def to_json(self) -> dict:
        return {
            "suite": self.name,
            "passed": self.passed,
            "cases": self.cases,
            "tally": dict(sorted(self.tally.items())),
            "counterexample": self.counterexample,
        }


def check_bounds(n_max: int, d_max: int) -> None:
    """Reject segment sweeps whose degree ``d_max + 3`` enumeration breaks the cap."""
    if n_max < 1 or d_max < 1:
        raise ValueError("bounds must be >= 1")
    # propagation checks reach degree d + 3
    if comb(n_max + d_max + 2, d_max + 3) > enum_cap():
        raise EnumerationCapError(f"n <= {n_max}, d <= {d_max} exceeds the enumeration cap")


def iter_segments(n: int, d: int) -> Iterator[LexSegment]:
    monos = enumerate_Md(n, d)
    for i, u in enumerate(monos):
        for v in monos[i:]:
            yield LexSegment(u, v)


def _seg_json(seg: LexSegment) -> dict:
    return {"n": seg.n, "d": seg.d, "u": str(seg.u), "v": str(seg.v)}


# --- per-segment checks -----------------------------------------------------
# Each returns None (not in scope), a tally key (agreement), or a dict
# (counterexample). They are module-level so worker processes can pickle them.


def _check_thm34(seg):
    if seg.u.nu(1) == 0 or seg.is_initial or not is_completely_lexsegment(seg):
        return None
    got = thm34_gotzmann(seg)
    want = is_gotzmann_oracle(MonomialIdeal.from_segment(seg))
    if got != want:
        return {**_seg_json(seg), "thm34": got, "oracle": want}
    return f"gotzmann={want}"


def _check_thm43(seg):
    if seg.is_principal or is_completely_lexsegment(seg):
        return None
    got = thm43_gotzmann(seg)
    want = is_gotzmann_oracle(MonomialIdeal.from_segment(seg))
    if got != want:
        return {**_seg_json(seg), "thm43": got, "oracle": want}
    return f"gotzmann={want}"


def _check_thm42(seg):
    ideal = MonomialIdeal.from_segment(seg)
    lq = has_linear_quotients(ideal)
    if not lq.holds:
        return None
    triple = thm42_consistency(ideal, lq)
    if not triple.all_equal:
        return {**_seg_json(seg), "triple": list(triple)}
    return f"all={triple[0]}"


def _check_thm41(seg):
    ideal = MonomialIdeal.from_segment(seg)
    if not has_linear_quotients(ideal).holds:
        return None
    minimal = taylor_is_minimal(ideal)
    shape = taylor_shape_criterion(ideal)
    if minimal != shape:
        return {**_seg_json(seg), "taylor_minimal": minimal, "shape": shape}
    return f"minimal={minimal}"


def _check_classify(seg):
    report = classify(seg)
    ideal = MonomialIdeal.from_segment(seg)
    want = is_gotzmann_oracle(ideal)
    problems = {}
    if report.is_gotzmann != want:
        problems["oracle"] = want
    if is_gotzmann_by_generators(ideal) != want:
        problems["generator_count_oracle"] = not want
    if report.route is Route.THM34 and not (
        report.is_completely and not report.is_initial and seg.u.nu(1) >= 1
    ):
        problems["route"] = "thm34 outside its hypotheses"
    size = len(lexsegment_set(seg))
    total = comb(seg.n + seg.d - 1, seg.d)
    if report.c != total - size or report.c != total - (report.a + 1) + report.b:
        problems["formula1"] = [report.a, report.b, report.c]
    if problems:
        return {**_seg_json(seg), "report": report.to_json(), **problems}
    return report.route.value


def _check_initial(seg):
    if not seg.is_initial:
        return None
    if not is_gotzmann_oracle(MonomialIdeal.from_segment(seg)):
        return _seg_json(seg)
    return "initial"


def _check_shape(seg):
    if seg.is_principal or is_completely_lexsegment(seg):
        return None
    norm = normalize_segment(seg)
    if norm.is_principal or is_completely_lexsegment(norm):
        return "completely-after-normalization"
    lq = has_linear_quotients(MonomialIdeal.from_segment(seg))
    if not lq.holds:
        return "no-linear-quotients" if lq.definitive else "linear-quotients-inconclusive"
    if not linear_resolution_shape(norm):
        return {**_seg_json(seg), "normalized": _seg_json(norm)}
    return "shape"


def _check_propagation(seg, steps=3):
    if not is_completely_lexsegment(seg):
        return None
    cur = seg
    for _ in range(steps):
        nxt = cur.shifted()
        if shadow(lexsegment_set(cur)) != lexsegment_set(nxt):
            return {**_seg_json(seg), "fails_at_degree": nxt.d}
        cur = nxt
    return "completely"


def _check_oracles(seg):
    ideal = MonomialIdeal.from_segment(seg)
    a, b = is_gotzmann_oracle(ideal), is_gotzmann_by_generators(ideal)
    if a != b:
        return {**_seg_json(seg), "hilbert_growth": a, "generator_count": b}
    return f"gotzmann={a}"


SEGMENT_CHECKS: dict[str, Callable] = {
    "thm34": _check_thm34,
    "thm43": _check_thm43,
    "thm42": _check_thm42,
    "thm41": _check_thm41,
    "classify": _check_classify,
    "initial": _check_initial,
    "lq-shape": _check_shape,
    "propagation": _check_propagation,
    "oracles": _check_oracles,
}


def _run_block(args):
    name, n, d = args
    check = SEGMENT_CHECKS[name]
    cases = 0
    tally = Counter()
    for seg in iter_segments(n, d):
        out = check(seg)
        if out is None:
            continue
        cases += 1
        if isinstance(out, dict):
            return cases, dict(tally), out
        tally[out] += 1
    return cases, dict(tally), None


def segment_suite(
    name: str,
    n_max: int = 4,
    d_max: int = 4,
    jobs: int = 1,
    progress: Callable[[str], None] | None = None,
) -> SuiteResult:
    check_bounds(n_max, d_max)
    blocks = [(name, n, d) for n in range(1, n_max + 1) for d in range(1, d_max + 1)]
    result = SuiteResult(name)
    tally = Counter()
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            outcomes = list(pool.map(_run_block, blocks))
    else:
        outcomes = map(_run_block, blocks)
    for (_, n, d), (cases, part, bad) in zip(blocks, outcomes):
        result.cases += cases
        tally.update(part)
        if progress:
            progress(f"{name}: n={n} d={d} cases={cases}")
        if bad is not None:
            result.counterexample = bad
            break
    result.tally = dict(tally)
    return result


# --- integer suites -----------------------------------------------------------


def _all_expansions(limit: int, d: int) -> Counter:
    """Count every term list obeying the expansion rules whose value is <= limit.

    Searches tops freely instead of greedily, so it checks uniqueness rather
    than assuming it.
    """
    seen = Counter({0: 1})

    def rec(total, k, top_bound):
        # next term C(t, k) with k <= t < top_bound
        if k < 1:
            return
        for t in range(k, top_bound):
            val = total + binomial(t, k)
            if val > limit:
                break
            seen[val] += 1
            rec(val, k - 1, t)

    top = d
    while binomial(top, d) <= limit:
        top += 1
    rec(0, d, top)
    return seen


def macaulay_suite(a_max: int = 10**4, d_max: int = 10, progress=None) -> SuiteResult:
    result = SuiteResult("macaulay")
    for d in range(1, d_max + 1):
        counts = _all_expansions(a_max, d)
        prev_shift = -1
        for a in range(a_max + 1):
            result.cases += 1
            exp = macaulay_expand(a, d)
            problem = None
            if exp.value != a:
                problem = "reconstruction"
            elif counts[a] != 1:
                problem = f"{counts[a]} expansions"
            elif exp.upper_shift() != a + exp.derivative():
                problem = "identity"
            elif exp.upper_shift() <= prev_shift:
                problem = "monotonicity"
            if problem:
                result.counterexample = {"a": a, "d": d, "problem": problem, "terms": exp.terms}
                return result
            prev_shift = exp.upper_shift()
        if progress:
            progress(f"macaulay: d={d} done")
    return result


def lemma31_suite(c_max: int = 2000, d_max: int = 8, progress=None) -> SuiteResult:
    result = SuiteResult("lemma31")
    tally = Counter()
    for d in range(1, d_max + 1):
        der = [derivative(c, d) for c in range(c_max + 1)]
        for b in range(1, c_max):
            db = der[b]
            for c in range(b + 1, c_max + 1):
                pred = lemma31_predicate(b, c, d)
                if pred != (db == der[c]):
                    result.cases += 1
                    result.counterexample = {"b": b, "c": c, "d": d, "predicate": pred}
                    return result
                tally[pred] += 1
        result.cases = sum(tally.values())
        if progress:
            progress(f"lemma31: d={d} cases={result.cases}")
    result.tally = {"equal": tally[True], "different": tally[False]}
    return result


def lemma32_suite(c_max: int = 2000, d_max: int = 12, progress=None) -> SuiteResult:
    result = SuiteResult("lemma32")
    for d in range(1, d_max + 1):
        for c in range(1, c_max + 1):
            result.cases += 1
            if lemma32_predicate(c, d) != (derivative(c, d) == 0):
                result.counterexample = {"c": c, "d": d}
                return result
    return result


def shadow_law_suite(n_max: int = 5, d_max: int = 5, progress=None) -> SuiteResult:
    """``|M_{d+1}| - |shadow(L^i(v))| = r^<d>`` with ``r`` counted by enumeration."""
    check_bounds(n_max, max(d_max - 2, 1))
    result = SuiteResult("shadow-law")
    for n in range(1, n_max + 1):
        for d in range(1, d_max + 1):
            monos = enumerate_Md(n, d)
            top = len(enumerate_Md(n, d + 1))
            for k, v in enumerate(monos):
                result.cases += 1
                r = len(monos) - k - 1
                lhs = top - len(shadow(monos[: k + 1]))
                if lhs != upper_shift(r, d) or rank_after(v) != r:
                    result.counterexample = {
                        "n": n, "d": d, "v": str(v), "r": r, "complement": lhs,
                        "upper_shift": upper_shift(r, d), "rank_after": rank_after(v),
                    }
                    return result
            if progress:
                progress(f"shadow-law: n={n} d={d} cases={result.cases}")
    return result


SUITES = [
    "macaulay", "lemma31", "lemma32", "shadow-law", "thm34", "thm43", "thm42",
    "thm41", "classify", "initial", "lq-shape", "propagation", "oracles",
]


def run_suite(
    name: str,
    *,
    n_max: int = 4,
    d_max: int | None = None,
    a_max: int = 10**4,
    c_max: int = 2000,
    jobs: int = 1,
    progress=None,
) -> SuiteResult:
    """Run one named suite; ``d_max=None`` picks the suite's default."""
    if name == "macaulay":
        return macaulay_suite(a_max, d_max or 10, progress)
    if name == "lemma31":
        return lemma31_suite(c_max, d_max or 8, progress)
    if name == "lemma32":
        return lemma32_suite(c_max, d_max or 12, progress)
    if name == "shadow-law":
        return shadow_law_suite(n_max, d_max or 5, progress)
    if name in SEGMENT_CHECKS:
        return segment_suite(name, n_max, d_max or 4, jobs, progress)
    raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
