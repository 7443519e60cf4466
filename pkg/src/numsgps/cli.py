"""Command-line front end: invariant queries, identity verification sweeps,
quasipolynomial fitting, and a modular-inequality helper.

Exit codes follow one contract everywhere: 0 means every check passed,
1 means at least one identity mismatch (the offending records are in the
output), 2 means a usage or precondition problem.  ``--format json``
emits one object per line; parsing a line and re-serializing it with
sorted keys reproduces the bytes exactly.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from fractions import Fraction

from .core import (
    NumericalSemigroup,
    PrecisionLossError,
    PreconditionError,
    ResourceLimitError,
    TheoremViolationError,
    apery_set,
    from_gaps,
    from_generators,
    invariants_from_apery,
    is_d_symmetric,
)
from .progressions import (
    Ap3Spec,
    FullApSpec,
    ap3_even_d_invariants,
    ap3_odd_a_invariants,
    ap3_quotient_generators,
    full_ap_d_divides_k,
    full_ap_divisor_identity,
    full_ap_quotient,
    open_problem_sweep,
)
from .quotient import frobenius_quotient_dsymmetric, quotient
from .roots import (
    _genus_via_roots_residual,
    DEFAULT_TOLERANCE,
    fit_quasipolynomial,
    genus_quotient_ed2_closed_form,
)
from .verify import (
    MATCH,
    MISMATCH,
    SweepConfig,
    THEOREM_IDS,
    run_sweep,
    summarize,
)

RECORD_COLUMNS = ("theorem", "params", "formula", "oracle", "status", "residual")


def _gens_type(text: str) -> tuple[int, ...]:
    try:
        gens = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected comma-separated integers, got {text!r}"
        )
    if not gens:
        raise argparse.ArgumentTypeError("generator list is empty")
    return gens


def _range_type(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    if not sep:
        raise argparse.ArgumentTypeError(
            f"expected a range like 3..41, got {text!r}"
        )
    try:
        return int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"range endpoints must be integers: {text!r}")


def _k_list_type(text: str) -> tuple[int, ...]:
    try:
        values = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected comma-separated integers, got {text!r}"
        )
    return values


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _default_parallel() -> int:
    raw = os.environ.get("NSG_PARALLEL", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=("table", "json", "csv"),
        default="table",
        help="output format (default: table)",
    )
    common.add_argument("--seed", type=int, default=0, help="PRNG seed for sweeps")
    common.add_argument(
        "--tolerance",
        type=float,
        default=None,
        help="override the floating-point tolerance where one applies",
    )
    common.add_argument(
        "--parallel",
        type=_positive_int,
        default=_default_parallel(),
        help="worker processes for sweeps (default: NSG_PARALLEL or 1)",
    )
    common.add_argument(
        "--out", default=None, metavar="PATH", help="write records to a file"
    )

    parser = argparse.ArgumentParser(
        prog="numsgps",
        description="Numerical semigroup invariants, quotients, and identity checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser(
        "invariants", parents=[common], help="invariants of a numerical semigroup"
    )
    p.add_argument("--gens", type=_gens_type, required=True)
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser(
        "quotient",
        parents=[common],
        help="quotient S/d with every applicable closed form checked",
    )
    p.add_argument("--gens", type=_gens_type, required=True)
    p.add_argument("--d", type=_positive_int, required=True)
    p.set_defaults(func=cmd_quotient)

    p = sub.add_parser(
        "apery", parents=[common], help="Apery set of S at a member n"
    )
    p.add_argument("--gens", type=_gens_type, required=True)
    p.add_argument(
        "--n", type=_positive_int, default=None, help="member to reduce by (default: multiplicity)"
    )
    p.set_defaults(func=cmd_apery)

    p = sub.add_parser(
        "verify",
        parents=[common],
        help="sweep one identity over a grid against brute force",
    )
    p.add_argument("theorem", choices=THEOREM_IDS)
    p.add_argument("--cases", type=_positive_int, default=None)
    p.add_argument("--max-gen", type=_positive_int, default=None)
    p.add_argument("--max", dest="max_value", type=_positive_int, default=None)
    p.add_argument("--d-max", type=_positive_int, default=None)
    p.add_argument("--a-max", type=_positive_int, default=None)
    p.add_argument("--k-max", type=_positive_int, default=None)
    p.add_argument("--samples", type=_positive_int, default=None)
    p.add_argument("--k-list", type=_k_list_type, default=None)
    p.add_argument(
        "--inject-offby1",
        action="store_true",
        default=False,
        help=argparse.SUPPRESS,
    )
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser(
        "fit",
        parents=[common],
        help="fit the per-residue-class quadratic for g(<a, a+k>/d)",
    )
    p.add_argument("--k", type=_positive_int, required=True)
    p.add_argument("--d", type=_positive_int, required=True)
    p.add_argument("--a", type=_range_type, required=True, metavar="MIN..MAX")
    p.set_defaults(func=cmd_fit)

    p = sub.add_parser(
        "pmd",
        parents=[common],
        help="solution semigroup of a x (mod b) <= c x",
    )
    p.add_argument("a", type=_positive_int)
    p.add_argument("b", type=_positive_int)
    p.add_argument("c", type=_positive_int)
    p.set_defaults(func=cmd_pmd)

    p = sub.add_parser(
        "sweep-open-problem",
        parents=[common],
        help="brute-force quotient invariants of a truncated progression",
    )
    p.add_argument("--a", type=_positive_int, required=True)
    p.add_argument("--k", type=_positive_int, required=True)
    p.add_argument("--ell", type=_positive_int, required=True)
    p.add_argument("--d", type=_range_type, required=True, metavar="MIN..MAX")
    p.set_defaults(func=cmd_sweep_open_problem)

    return parser


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True)


def _cell(value) -> str:
    if isinstance(value, (dict, list)):
        text = _dump(value)
    elif value is None:
        text = ""
    else:
        text = str(value)
    if "," in text or '"' in text:
        text = '"' + text.replace('"', '""') + '"'
    return text


def _flat(value) -> str:
    """Compact single-line rendering for table cells."""
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, dict):
        return " ".join(f"{k}={_flat(v)}" for k, v in value.items())
    if isinstance(value, (list, tuple)):
        return ",".join(_flat(v) for v in value)
    return str(value)


class _Output:
    """Routes rendered text to stdout or --out, keeping headers visible.

    The seed header goes to stdout for tables but to stderr for json/csv
    so that machine-readable streams stay pure.
    """

    def __init__(self, args):
        self.format = args.format
        self.path = args.out
        self.handle = open(self.path, "w") if self.path else sys.stdout

    def header(self, seed: int) -> None:
        line = f"# seed {seed}"
        if self.format == "table" and self.path is None:
            print(line, file=self.handle)
        else:
            print(line, file=sys.stderr)

    def line(self, text: str) -> None:
        print(text, file=self.handle)

    def close(self) -> None:
        if self.path:
            self.handle.close()


def _emit_report(report: dict, args) -> None:
    out = _Output(args)
    out.header(args.seed)
    if args.format == "json":
        out.line(_dump(report))
    elif args.format == "csv":
        out.line("key,value")
        for key in sorted(report):
            out.line(f"{key},{_cell(report[key])}")
    else:
        for key in sorted(report):
            out.line(f"{key}: {_flat(report[key])}")
    out.close()


def _emit_records(records: list[dict], args, summary_line: str | None = None) -> None:
    out = _Output(args)
    out.header(args.seed)
    if args.format == "json":
        for record in records:
            out.line(_dump(record))
    elif args.format == "csv":
        out.line(",".join(RECORD_COLUMNS))
        for record in records:
            out.line(",".join(_cell(record[column]) for column in RECORD_COLUMNS))
    else:
        for record in records:
            out.line(
                f"{record['theorem']}  {_flat(record['params'])}  "
                f"formula={_flat(record['formula'])}  oracle={_flat(record['oracle'])}  "
                f"{record['status']}"
            )
    out.close()
    if summary_line is not None:
        target = sys.stdout if args.format == "table" and args.out is None else sys.stderr
        print(summary_line, file=target)


def cmd_invariants(args) -> int:
    S = from_generators(args.gens)
    ap = apery_set(S, S.multiplicity)
    report = {
        "generators": list(S.minimal_generators),
        "multiplicity": S.multiplicity,
        "embedding_dimension": S.embedding_dimension,
        "frobenius": S.frobenius,
        "genus": S.genus,
        "conductor": S.conductor,
        "gaps": list(S.gaps),
        "apery_at_multiplicity": list(ap.elements),
        "symmetric": is_d_symmetric(S, 1),
        "d_symmetric": {str(d): is_d_symmetric(S, d) for d in range(2, 11)},
    }
    _emit_report(report, args)
    return 0


def _ap3_pattern(S: NumericalSemigroup) -> tuple[int, int] | None:
    gens = S.minimal_generators
    if len(gens) != 3:
        return None
    a, mid, top = gens
    k = mid - a
    if k >= 1 and top == a + 2 * k and math.gcd(a, k) == 1:
        return a, k
    return None


def _full_ap_pattern(S: NumericalSemigroup) -> tuple[int, int] | None:
    gens = S.minimal_generators
    a = gens[0]
    if len(gens) != a or a < 2:
        return None
    k = gens[1] - gens[0]
    if k < 1 or math.gcd(a, k) != 1:
        return None
    if all(gens[i] == a + i * k for i in range(a)):
        return a, k
    return None


def _quotient_formulas(
    S: NumericalSemigroup, d: int, tolerance: float
) -> dict[str, dict]:
    """Every closed form whose hypotheses S and d satisfy, evaluated and
    compared against the brute-force quotient."""
    Q = quotient(S, d)
    formulas: dict[str, dict] = {}

    def add(name: str, formula, oracle) -> None:
        formulas[name] = {
            "formula": formula,
            "oracle": oracle,
            "match": formula == oracle,
        }

    value, residual = _genus_via_roots_residual(S, d)
    formulas["genus-via-roots"] = {
        "formula": value,
        "oracle": Q.genus,
        "match": value == Q.genus and residual <= tolerance,
        "residual": residual,
    }

    gens = S.minimal_generators
    if len(gens) == 2 and d >= 2 and math.gcd(gens[0], d) == 1 and math.gcd(gens[1], d) == 1:
        add("ed2-genus", genus_quotient_ed2_closed_form(*gens, d), Q.genus)

    if d >= 2 and S.frobenius >= 0 and is_d_symmetric(S, d):
        add("dsymmetric-frobenius", frobenius_quotient_dsymmetric(S, d), Q.frobenius)

    ap3 = _ap3_pattern(S)
    if ap3 is not None:
        a, k = ap3
        if a % d == 0 and d >= 3 and (d % 2 == 0 or a % 2 == 0):
            spec = Ap3Spec(a, k, d)
            add(
                "ap3-quotient-generators",
                list(ap3_quotient_generators(spec).minimal_generators),
                list(Q.minimal_generators),
            )
            if d % 2 == 0 and d >= 4:
                f, g = ap3_even_d_invariants(spec)
                add("ap3-even-divisor-invariants", [f, g], [Q.frobenius, Q.genus])
        if a % d == 0 and a % 2 == 1:
            f, g = ap3_odd_a_invariants(Ap3Spec(a, k, d))
            add("ap3-odd-a-invariants", [f, g], [Q.frobenius, Q.genus])

    full = _full_ap_pattern(S)
    if full is not None:
        a, k = full
        spec = FullApSpec(a, k)
        if a % d == 0 and a // d >= 2:
            f, g = full_ap_divisor_identity(spec, d)
            add(
                "full-ap-generators",
                list(full_ap_quotient(spec, d).minimal_generators),
                list(Q.minimal_generators),
            )
            add("full-ap-invariants", [f, g], [Q.frobenius, Q.genus])
        if k % d == 0:
            f, g = full_ap_d_divides_k(spec, d)
            add("full-ap-dk-invariants", [f, g], [Q.frobenius, Q.genus])
    return formulas


def cmd_quotient(args) -> int:
    S = from_generators(args.gens)
    d = args.d
    tolerance = args.tolerance if args.tolerance is not None else DEFAULT_TOLERANCE
    Q = quotient(S, d)
    formulas = _quotient_formulas(S, d, tolerance)
    report = {
        "base_generators": list(S.minimal_generators),
        "d": d,
        "generators": list(Q.minimal_generators),
        "frobenius": Q.frobenius,
        "genus": Q.genus,
        "gaps": list(Q.gaps),
        "formulas": formulas,
    }
    _emit_report(report, args)
    mismatched = [name for name, entry in formulas.items() if not entry["match"]]
    if mismatched:
        print(f"formula mismatch: {', '.join(sorted(mismatched))}", file=sys.stderr)
        return 1
    return 0


def cmd_apery(args) -> int:
    S = from_generators(args.gens)
    n = args.n if args.n is not None else S.multiplicity
    ap = apery_set(S, n)
    frobenius, genus = invariants_from_apery(ap)
    report = {
        "generators": list(S.minimal_generators),
        "n": n,
        "apery": list(ap.elements),
        "frobenius": frobenius,
        "genus": genus,
    }
    _emit_report(report, args)
    return 0


def cmd_verify(args) -> int:
    config = SweepConfig(
        theorem=args.theorem,
        seed=args.seed,
        cases=args.cases,
        max_gen=args.max_gen,
        max_value=args.max_value,
        d_max=args.d_max,
        a_max=args.a_max,
        k_max=args.k_max,
        k_list=args.k_list,
        samples=args.samples,
        tolerance=args.tolerance,
        format=args.format,
        parallel=args.parallel,
        inject_offby1=args.inject_offby1,
    )
    records = run_sweep(config)
    counts = summarize(records)
    summary = (
        f"{args.theorem}: {counts[MATCH]} match, {counts[MISMATCH]} mismatch, "
        f"{counts['skipped-precondition']} skipped"
    )
    _emit_records(records, args, summary)
    return 1 if counts[MISMATCH] else 0


def cmd_fit(args) -> int:
    fit = fit_quasipolynomial(args.k, args.d, args.a)
    classes = {}
    for residue in sorted(fit.per_class):
        c2, c1, c0 = fit.per_class[residue]
        classes[str(residue)] = {
            "c2": _frac_str(c2),
            "c1": _frac_str(c1),
            "c0": _frac_str(c0),
        }
    constants = {
        f"{ra},{rb}": _frac_str(value)
        for (ra, rb), value in sorted(fit.cabd_constant.items())
    }
    report = {
        "k": args.k,
        "d": args.d,
        "a_min": args.a[0],
        "a_max": args.a[1],
        "classes": classes,
        "genus_minus_sylvester_constants": constants,
        "leading_coefficient": _frac_str(Fraction(1, 2 * args.d)),
    }
    _emit_report(report, args)
    return 0


def _frac_str(value: Fraction) -> int | str:
    if value.denominator == 1:
        return int(value)
    return f"{value.numerator}/{value.denominator}"


def _pmd_solution(a: int, b: int, c: int) -> NumericalSemigroup:
    """Brute-force the solution set of a x (mod b) <= c x.

    Membership is periodic in x modulo b once c x clears b, so a run of b
    consecutive solutions proves every larger x is a solution; the scan
    is bounded because every x >= b/c satisfies the inequality.
    """
    cap = (b + c - 1) // c + 2 * b + 2
    member = lambda x: (a * x) % b <= c * x
    run_start = None
    run = 0
    for x in range(cap + 1):
        if member(x):
            run += 1
            if run == b:
                run_start = x - b + 1
                break
        else:
            run = 0
    if run_start is None:
        raise PreconditionError(
            f"solution set of {a} x (mod {b}) <= {c} x did not stabilize below "
            f"{cap}; rerun with a larger bound"
        )
    gaps = [x for x in range(1, run_start) if not member(x)]
    return from_gaps(gaps)


def cmd_pmd(args) -> int:
    S = _pmd_solution(args.a, args.b, args.c)
    report = {
        "a": args.a,
        "b": args.b,
        "c": args.c,
        "generators": list(S.minimal_generators),
        "multiplicity": S.multiplicity,
        "frobenius": S.frobenius,
        "genus": S.genus,
        "gaps": list(S.gaps),
    }
    _emit_report(report, args)
    return 0


def cmd_sweep_open_problem(args) -> int:
    lo, hi = args.d
    if lo < 1 or hi < lo:
        raise PreconditionError(f"empty divisor range {lo}..{hi}")
    rows = open_problem_sweep(args.a, args.k, args.ell, range(lo, hi + 1))
    records = [
        {
            "theorem": "open-problem",
            "params": {"a": args.a, "k": args.k, "ell": args.ell, "d": d},
            "formula": None,
            "oracle": {"frobenius": f, "genus": g, "two_g_minus_f": t},
            "status": "observed",
            "residual": None,
        }
        for d, f, g, t in rows
    ]
    _emit_records(records, args)
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else 2
    try:
        return args.func(args)
    except (TheoremViolationError, PrecisionLossError) as exc:
        print(f"identity failure: {exc}", file=sys.stderr)
        return 1
    except (PreconditionError, ResourceLimitError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entry()
