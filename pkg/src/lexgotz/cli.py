"""Command-line front end.

Exit codes: 0 success, 2 usage or input error, 3 a verification found a
counterexample (or ``segment --oracle`` disagreed with the oracle).
"""

from __future__ import annotations

import argparse
import json
import sys

from lexgotz.classify import classify
from lexgotz.ideal import (
    MonomialIdeal,
    NotEquigeneratedError,
    hilbert,
    ideal_from_json,
    ideal_to_json,
    is_componentwise_lexsegment,
    is_gotzmann_oracle,
    lexify,
    quotient_hilbert,
)
from lexgotz.macaulay import macaulay_expand
from lexgotz.monomial import (
    EnumerationCapError,
    LexSegment,
    enumerate_Md,
    lexsegment_set,
    parse_monomial,
    rank_after,
)
from lexgotz.verify import SUITES, run_suite

EXIT_USAGE = 2
EXIT_COUNTEREXAMPLE = 3

LEMMA31_C_CAP = 5000
LEMMA32_C_CAP = 10**5
MACAULAY_A_CAP = 10**6


class UsageError(Exception):
    pass


def _emit(obj, as_json: bool, text: str) -> None:
    if as_json:
        print(json.dumps(obj))
    else:
        print(text)


def _nonneg(raw: str, what: str) -> int:
    try:
        val = int(raw)
    except ValueError:
        raise UsageError(f"{what} must be an integer, got {raw!r}") from None
    if val < 0:
        raise UsageError(f"{what} must be non-negative, got {val}")
    return val


def cmd_expand(args) -> int:
    a = _nonneg(args.a, "a")
    d = _nonneg(args.d, "d")
    if d < 1:
        raise UsageError("d must be >= 1")
    exp = macaulay_expand(a, d)
    up, der = exp.upper_shift(), exp.derivative()
    _emit(
        {"a": a, "d": d, "terms": [list(t) for t in exp.terms], "upper_shift": up, "derivative": der},
        args.json,
        f"{a} = {exp}; {a}^<{d}> = {up}; {a}^({d}) = {der}",
    )
    return 0


def cmd_shift(args) -> int:
    a = _nonneg(args.a, "a")
    d = _nonneg(args.d, "d")
    if d < 1:
        raise UsageError("d must be >= 1")
    exp = macaulay_expand(a, d)
    _emit(
        {"a": a, "d": d, "upper_shift": exp.upper_shift(), "derivative": exp.derivative()},
        args.json,
        f"{exp.upper_shift()} {exp.derivative()}",
    )
    return 0


def _segment(args) -> LexSegment:
    if args.n < 1:
        raise UsageError("n must be >= 1")
    try:
        u = parse_monomial(args.u, args.n)
        v = parse_monomial(args.v, args.n)
        return LexSegment(u, v)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_segment(args) -> int:
    seg = _segment(args)
    report = classify(seg)
    out = report.to_json()
    disagree = False
    if args.oracle:
        oracle = is_gotzmann_oracle(MonomialIdeal.from_segment(seg))
        out["oracle"] = oracle
        disagree = oracle != report.is_gotzmann
    lines = [f"segment: {seg} in {seg.n} variables, degree {seg.d}"]
    lines += [f"{k}: {json.dumps(val)}" for k, val in out.items() if k not in ("n", "d", "u", "v")]
    if not report.linear_quotients.inconclusive and report.linear_quotients.order:
        order = ", ".join(str(m) for m in report.linear_quotients.order)
        lines.append(f"linear_quotients_order: {order}")
    _emit(out, args.json, "\n".join(lines))
    if disagree:
        print("oracle disagrees with the closed-form verdict", file=sys.stderr)
        return EXIT_COUNTEREXAMPLE
    return 0


def _read_ideal(path: str):
    try:
        if path == "-":
            raw = sys.stdin.read()
        else:
            with open(path) as fh:
                raw = fh.read()
        return ideal_from_json(json.loads(raw))
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None
    except (json.JSONDecodeError, ValueError) as exc:
        raise UsageError(f"bad ideal JSON: {exc}") from None


def cmd_ideal(args) -> int:
    ideal = _read_ideal(args.file)
    if args.action in ("hilbert", "lexify") and args.to is None:
        raise UsageError(f"ideal {args.action} needs --to Q")
    if args.action == "hilbert":
        qs = range(args.to + 1)
        table = {q: hilbert(ideal, q) for q in qs}
        quot = {q: quotient_hilbert(ideal, q) for q in qs}
        _emit(
            {"hilbert": {str(q): h for q, h in table.items()},
             "quotient": {str(q): h for q, h in quot.items()}},
            args.json,
            "\n".join(["q H(I,q) H(S/I,q)"] + [f"{q} {table[q]} {quot[q]}" for q in qs]),
        )
    elif args.action == "lexify":
        if ideal.generators and args.to < ideal.max_degree:
            raise UsageError(f"--to must be at least the top generator degree {ideal.max_degree}")
        lex = lexify(ideal, args.to)
        _emit(ideal_to_json(lex), args.json, str(lex))
    elif args.action == "gotzmann":
        try:
            verdict = is_gotzmann_oracle(ideal)
        except NotEquigeneratedError as exc:
            raise UsageError(f"gotzmann needs generators of a single degree: {exc}") from None
        _emit({"gotzmann": verdict}, args.json, f"gotzmann: {json.dumps(verdict)}")
    else:
        if not ideal.generators:
            raise UsageError("the zero ideal has no componentwise structure")
        res = is_componentwise_lexsegment(ideal)
        obj = {
            "componentwise_lexsegment": res.holds,
            "u": str(res.u) if res.u is not None else None,
            "v": str(res.v) if res.v is not None else None,
            "checked_up_to": res.checked_up_to,
        }
        text = f"componentwise_lexsegment: {json.dumps(res.holds)}"
        if res.u is not None:
            text += f"\nwitness: L({res.u}, {res.v})"
        if res.reason:
            obj["reason"] = res.reason
            text += f"\nreason: {res.reason}"
        _emit(obj, args.json, text)
    return 0


def cmd_enumerate(args) -> int:
    if args.n < 1 or args.d < 0:
        raise UsageError("need n >= 1 and d >= 0")
    if args.u or args.v:
        if not (args.u and args.v):
            raise UsageError("--from and --to go together")
        args_seg = argparse.Namespace(n=args.n, u=args.u, v=args.v)
        seg = _segment(args_seg)
        if seg.d != args.d:
            raise UsageError(f"segment degree {seg.d} differs from -d {args.d}")
        monos = lexsegment_set(seg)
    else:
        monos = enumerate_Md(args.n, args.d)
    if args.d == 0:
        ranks = [0 for _ in monos]
    else:
        ranks = [rank_after(m) for m in monos]
    _emit(
        {"n": args.n, "d": args.d, "monomials": [str(m) for m in monos], "rank_after": ranks},
        args.json,
        "\n".join(f"{m} {r}" for m, r in zip(monos, ranks)),
    )
    return 0


def _progress(msg: str) -> None:
    print(msg, file=sys.stderr, flush=True)


def cmd_verify(args) -> int:
    names = SUITES if args.suite == "all" else [args.suite]
    if args.c is not None:
        cap = LEMMA31_C_CAP if args.suite == "lemma31" else LEMMA32_C_CAP
        if args.c > cap:
            raise UsageError(f"--c {args.c} exceeds the cap {cap}")
    if args.a is not None and args.a > MACAULAY_A_CAP:
        raise UsageError(f"--a {args.a} exceeds the cap {MACAULAY_A_CAP}")
    kwargs = {"jobs": args.jobs, "progress": None if args.quiet else _progress}
    for key, val in (("n_max", args.n), ("d_max", args.d), ("a_max", args.a), ("c_max", args.c)):
        if val is not None:
            if val < 1:
                raise UsageError("bounds must be positive")
            kwargs[key] = val
    status = 0
    for name in names:
        try:
            res = run_suite(name, **kwargs)
        except EnumerationCapError as exc:
            raise UsageError(str(exc)) from None
        if args.json:
            print(json.dumps(res.to_json()))
        else:
            verdict = "PASS" if res.passed else "FAIL"
            tally = ", ".join(f"{k}={v}" for k, v in sorted(res.tally.items()))
            print(f"{verdict} {name}: {res.cases} cases" + (f" ({tally})" if tally else ""))
            if not res.passed:
                print(f"counterexample: {json.dumps(res.counterexample)}")
        if not res.passed:
            status = EXIT_COUNTEREXAMPLE
            break
    return status


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lexgotz",
        description="Classify lexsegment monomial ideals and check the closed forms against oracles.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def add(name, func, help):
        p = sub.add_parser(name, help=help)
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.set_defaults(func=func)
        return p

    p = add("expand", cmd_expand, "Macaulay expansion of a with respect to d")
    p.add_argument("a")
    p.add_argument("d")

    p = add("shift", cmd_shift, "print a^<d> and a^(d)")
    p.add_argument("a")
    p.add_argument("d")

    p = add("segment", cmd_segment, "classify the ideal generated by L(u, v)")
    p.add_argument("-n", type=int, required=True, help="number of variables")
    p.add_argument("-u", required=True, help="upper end, e.g. x1*x3^2 or [1,0,2]")
    p.add_argument("-v", required=True, help="lower end")
    p.add_argument("--oracle", action="store_true", help="cross-check against the Hilbert-function oracle")

    p = add("ideal", cmd_ideal, "Hilbert table, lexification, Gotzmann or componentwise check")
    p.add_argument("action", choices=["hilbert", "lexify", "gotzmann", "componentwise"])
    p.add_argument("-f", "--file", default="-", help="ideal JSON file (default: stdin)")
    p.add_argument("--to", type=int, help="top degree for hilbert/lexify")

    p = add("enumerate", cmd_enumerate, "list M_d (or a lexsegment) with ranks")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-d", type=int, required=True)
    p.add_argument("--from", dest="u", help="upper end of a lexsegment")
    p.add_argument("--to", dest="v", help="lower end of a lexsegment")

    p = add("verify", cmd_verify, "run an exhaustive verification suite")
    p.add_argument("suite", choices=SUITES + ["all"])
    p.add_argument("--n", type=int, help="max number of variables (segment suites)")
    p.add_argument("--d", type=int, help="max degree")
    p.add_argument("--a", type=int, help="max a (macaulay)")
    p.add_argument("--c", type=int, help="max c (lemma31, lemma32)")
    p.add_argument("--jobs", type=int, default=1, help="worker processes for segment sweeps")
    p.add_argument("--quiet", action="store_true", help="no progress on stderr")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, EnumerationCapError) as exc:
        print(f"lexgotz: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
