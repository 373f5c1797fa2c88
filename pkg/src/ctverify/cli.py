"""Command-line front end for the identity verifiers.

Commands:

    verify-cry          kernel vs Catalan-product value, per n
    verify-morris       kernel vs exact product formula, per (n, a, b, m)
    verify-conjecture2  per-k family values plus the checked sum row
    ratio-table         consecutive product-formula ratios next to catalan(n)
    duplication-table   both sides of the duplication formula per half-integer
    ct-eval             evaluate one coefficient-extraction problem directly

All values in structured reports are exact decimal strings (big integers do
not fit in 64-bit consumers, and nothing here is ever a float).  Exit codes:
0 all comparisons matched, 1 some comparison failed, 2 bad usage or input,
3 internal inconsistency (kernel/oracle disagreement or a nonzero residual
pi-power).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from typing import Any, Callable

from .combinat import catalan
from .gammaprod import (
    HalfInteger,
    PiCancellationError,
    PiPower,
    legendre_duplication_sides,
    morris_ratio,
)
from .identities import (
    MorrisParams,
    OracleMismatchError,
    VerificationReport,
    build_conjecture2_terms,
    conjecture2_sum_check,
    eval_ct,
    verify_cry,
    verify_morris,
)
from .series import CTProblem, GeometricFactor

ROW_FIELDS = [
    "identity",
    "n",
    "a",
    "b",
    "m",
    "k",
    "z",
    "lhs",
    "rhs",
    "match",
    "method",
    "elapsed_ms",
]

Row = dict[str, Any]


def format_exact(value: int | Fraction | PiPower) -> str:
    """Serialize an exact value as a decimal string; see parse_exact."""
    if isinstance(value, PiPower):
        return str(value)
    if isinstance(value, Fraction) and value.denominator == 1:
        return str(value.numerator)
    return str(value)


def parse_exact(s: str) -> int | Fraction | PiPower:
    """Inverse of format_exact: "7", "3/4", or "3/4*pi^(1/2)"."""
    if "*pi^(" in s:
        r_part, p_part = s.split("*pi^(")
        if not p_part.endswith("/2)"):
            raise ValueError(f"malformed pi-power string: {s!r}")
        return PiPower(Fraction(r_part), int(p_part[:-3]))
    if "/" in s:
        return Fraction(s)
    return int(s)


def _row(
    identity: str,
    *,
    n: int | None = None,
    params: MorrisParams | None = None,
    k: int | None = None,
    z: str | None = None,
    lhs: int | Fraction | PiPower | None = None,
    rhs: int | Fraction | PiPower | None = None,
    match: bool | None = None,
    method: str | None = None,
    elapsed: float | None = None,
    timing: bool = False,
) -> Row:
    return {
        "identity": identity,
        "n": n,
        "a": params.a if params else None,
        "b": params.b if params else None,
        "m": params.m if params else None,
        "k": k,
        "z": z,
        "lhs": None if lhs is None else format_exact(lhs),
        "rhs": None if rhs is None else format_exact(rhs),
        "match": match,
        "method": method,
        "elapsed_ms": int(round(elapsed * 1000)) if timing and elapsed is not None else None,
    }


def _report_row(rep: VerificationReport, timing: bool) -> Row:
    return _row(
        rep.identity,
        n=rep.n,
        params=rep.params,
        k=rep.k,
        lhs=rep.lhs,
        rhs=rep.rhs,
        match=rep.match,
        method=rep.method,
        elapsed=rep.elapsed,
        timing=timing,
    )


# ---------------------------------------------------------------------------
# per-command case builders; each case is a callable returning a list of rows


def _cases_verify_cry(args) -> list[Callable[[], list[Row]]]:
    def case(n: int) -> Callable[[], list[Row]]:
        return lambda: [_report_row(verify_cry(n, args.oracle), args.timing)]

    return [case(n) for n in _n_range(args)]


def _cases_verify_morris(args) -> list[Callable[[], list[Row]]]:
    params = MorrisParams(args.a, args.b, args.m)

    def case(n: int) -> Callable[[], list[Row]]:
        return lambda: [_report_row(verify_morris(n, params, args.oracle), args.timing)]

    return [case(n) for n in _n_range(args)]


def _cases_verify_conjecture2(args) -> list[Callable[[], list[Row]]]:
    def case(n: int) -> Callable[[], list[Row]]:
        def run() -> list[Row]:
            rows = []
            for k in range(n + 1):
                start = time.perf_counter()
                value = sum(
                    eval_ct(p, args.oracle) for p in build_conjecture2_terms(n, k)
                )
                rows.append(
                    _row(
                        "conjecture2-term",
                        n=n,
                        k=k,
                        lhs=value,
                        method="both" if args.oracle else "kernel",
                        elapsed=time.perf_counter() - start,
                        timing=args.timing,
                    )
                )
            rows.append(_report_row(conjecture2_sum_check(n, args.oracle), args.timing))
            return rows

        return run

    return [case(n) for n in _n_range(args)]


def _cases_ratio_table(args) -> list[Callable[[], list[Row]]]:
    params = MorrisParams(args.a, args.b, args.m)

    def case(n: int) -> Callable[[], list[Row]]:
        def run() -> list[Row]:
            start = time.perf_counter()
            lhs = morris_ratio(n, params)
            rhs = catalan(n)
            return [
                _row(
                    "ratio",
                    n=n,
                    params=params,
                    lhs=lhs,
                    rhs=rhs,
                    match=lhs == rhs,
                    method="gamma",
                    elapsed=time.perf_counter() - start,
                    timing=args.timing,
                )
            ]

        return run

    return [case(n) for n in _n_range(args)]


def _cases_duplication_table(args) -> list[Callable[[], list[Row]]]:
    z_max = Fraction(args.z_max)
    twice_max = 2 * z_max
    if twice_max.denominator != 1 or twice_max < 1:
        raise ValueError(f"--z-max must be a positive half-integer, got {args.z_max}")

    def case(twice: int) -> Callable[[], list[Row]]:
        def run() -> list[Row]:
            start = time.perf_counter()
            z = HalfInteger(twice)
            lhs, rhs = legendre_duplication_sides(z)
            return [
                _row(
                    "legendre-duplication",
                    z=str(z),
                    lhs=lhs,
                    rhs=rhs,
                    match=lhs == rhs,
                    method="gamma",
                    elapsed=time.perf_counter() - start,
                    timing=args.timing,
                )
            ]

        return run

    return [case(twice) for twice in range(1, int(twice_max) + 1)]


def _parse_factor(text: str) -> tuple[tuple[int, ...], int]:
    try:
        base_part, mult_part = text.split(":")
        base = tuple(int(x) for x in base_part.split(","))
        return base, int(mult_part)
    except ValueError:
        raise ValueError(
            f"factor must look like 'b1,...,bn:mult', got {text!r}"
        ) from None


def _cases_ct_eval(args) -> list[Callable[[], list[Row]]]:
    target = tuple(int(x) for x in args.target.split(","))
    factors = tuple(
        GeometricFactor(base, mult)
        for base, mult in (_parse_factor(s) for s in args.factor or [])
    )
    problem = CTProblem(len(target), target, factors)

    def run() -> list[Row]:
        start = time.perf_counter()
        value = eval_ct(problem, args.oracle)
        return [
            _row(
                "ct-eval",
                n=problem.num_vars,
                lhs=value,
                method="both" if args.oracle else "kernel",
                elapsed=time.perf_counter() - start,
                timing=args.timing,
            )
        ]

    return [run]


# ---------------------------------------------------------------------------
# range handling, execution, output


def _n_range(args) -> list[int]:
    if args.n is not None:
        if args.n_max is not None or args.n_min != 1:
            raise ValueError("give either --n or an --n-min/--n-max range, not both")
        return [args.n]
    if args.n_max is None:
        raise ValueError("one of --n or --n-max is required")
    if args.n_min < 1 or args.n_max < args.n_min:
        raise ValueError(f"bad range [{args.n_min}, {args.n_max}]")
    return list(range(args.n_min, args.n_max + 1))


def _run_cases(cases: list[Callable[[], list[Row]]], threads: int) -> list[Row]:
    # Aggregation is by case index, so output order never depends on the
    # worker schedule.
    if threads <= 1:
        results = [case() for case in cases]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            futures = [pool.submit(case) for case in cases]
            results = [f.result() for f in futures]
    return [row for rows in results for row in rows]


def _to_json(rows: list[Row]) -> str:
    return json.dumps(rows, indent=2) + "\n"


def _to_csv(rows: list[Row]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(ROW_FIELDS)
    for row in rows:
        writer.writerow(
            [
                ""
                if row[f] is None
                else ("true" if row[f] is True else "false" if row[f] is False else row[f])
                for f in ROW_FIELDS
            ]
        )
    return buf.getvalue()


def _to_text(rows: list[Row]) -> str:
    columns = [f for f in ROW_FIELDS if any(row[f] is not None for row in rows)]
    if not columns:
        return "no cases\n"

    def cell(row: Row, f: str) -> str:
        v = row[f]
        if v is None:
            return "-"
        if v is True:
            return "yes"
        if v is False:
            return "NO"
        return str(v)

    table = [[cell(row, f) for f in columns] for row in rows]
    widths = [max(len(f), *(len(t[i]) for t in table)) for i, f in enumerate(columns)]
    lines = ["  ".join(f.ljust(w) for f, w in zip(columns, widths)).rstrip()]
    for t in table:
        lines.append("  ".join(c.ljust(w) for c, w in zip(t, widths)).rstrip())
    mismatches = sum(1 for row in rows if row["match"] is False)
    lines.append(f"{len(rows)} rows, {mismatches} mismatches")
    return "\n".join(lines) + "\n"


def _add_common(sub: argparse.ArgumentParser, oracle: bool = True) -> None:
    sub.add_argument("--output", choices=("text", "json", "csv"), default="text")
    sub.add_argument("--report", metavar="PATH", help="write the structured report here")
    sub.add_argument("--threads", type=int, default=1)
    sub.add_argument(
        "--timing",
        action="store_true",
        help="fill elapsed_ms (off by default so reports are run-independent)",
    )
    if oracle:
        sub.add_argument(
            "--oracle",
            action="store_true",
            help="crosscheck the kernel against brute-force enumeration",
        )


def _add_n_args(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--n", type=int)
    sub.add_argument("--n-min", type=int, default=1)
    sub.add_argument("--n-max", type=int)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ctverify",
        description="Exact verification of Morris-type constant term identities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify-cry", help="kernel vs Catalan products")
    _add_n_args(p)
    _add_common(p)
    p.set_defaults(cases=_cases_verify_cry)

    p = sub.add_parser("verify-morris", help="kernel vs exact product formula")
    _add_n_args(p)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--m", type=int, required=True, help="twice the Vandermonde half-exponent")
    _add_common(p)
    p.set_defaults(cases=_cases_verify_morris)

    p = sub.add_parser("verify-conjecture2", help="per-k family values and the sum check")
    _add_n_args(p)
    _add_common(p)
    p.set_defaults(cases=_cases_verify_conjecture2)

    p = sub.add_parser("ratio-table", help="consecutive formula ratios next to catalan(n)")
    _add_n_args(p)
    p.add_argument("--a", type=int, default=2)
    p.add_argument("--b", type=int, default=0)
    p.add_argument("--m", type=int, default=1)
    _add_common(p, oracle=False)
    p.set_defaults(cases=_cases_ratio_table)

    p = sub.add_parser("duplication-table", help="duplication formula, z = 1/2 .. z-max")
    p.add_argument("--z-max", default="10", help="largest half-integer z (e.g. 10 or 21/2)")
    _add_common(p, oracle=False)
    p.set_defaults(cases=_cases_duplication_table)

    p = sub.add_parser("ct-eval", help="evaluate one coefficient extraction")
    p.add_argument("--target", required=True, help="comma-separated exponents, e.g. 0,1,3")
    p.add_argument(
        "--factor",
        action="append",
        metavar="B1,...,BN:MULT",
        help="geometric factor base and multiplicity; repeatable",
    )
    _add_common(p)
    p.set_defaults(cases=_cases_ct_eval)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2

    try:
        rows = _run_cases(args.cases(args), args.threads)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (OracleMismatchError, PiCancellationError) as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return 3

    structured = _to_csv(rows) if args.output == "csv" else _to_json(rows)
    if args.output == "text":
        sys.stdout.write(_to_text(rows))
    else:
        sys.stdout.write(structured)
    if args.report:
        with open(args.report, "w") as fh:
            fh.write(structured)

    return 1 if any(row["match"] is False for row in rows) else 0


def main_entry() -> None:
    raise SystemExit(main())
