"""Command-line interface.

    palcount count --family fib --n 29
    palcount table --family trib --lo 8 --hi 14 --format json
    palcount verify --family fib --n-max 10000 --suite oracle-equivalence
    palcount bench --family fib --sizes 1000 1000000 1000000000000
    palcount structure --family fib --m 4 --p 1 --format json

Exit status: 0 on success, 1 when a verification suite fails, 2 on usage
errors. Integers are read and written as decimal strings.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from dataclasses import asdict, dataclass

from palcount import checks, fib_count, trib_count
from palcount.oracle import PalTree
from palcount.sequences import FAMILIES, FIB, prefix
from palcount.structures import export_edges, export_json, interval

DEFAULT_ORACLE_MAX = 10 ** 6
TABLE_MAX = 10 ** 6

METHOD_LABEL = {"closed": "closed-form", "recursion": "recursion", "oracle": "oracle"}


class UsageError(Exception):
    pass


@dataclass
class OutputRecord:
    query: str
    family: str
    n: str
    result: str
    elapsed: float
    method: str


def decimal(text: str) -> int:
    """Parse a non-negative decimal integer of any size."""
    text = text.strip()
    if not text.isdigit():
        raise argparse.ArgumentTypeError(f"not a decimal integer: {text!r}")
    return int(text)


def positive(text: str) -> int:
    value = decimal(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def render(rows: list[dict], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(rows, indent=2) + "\n"
    buf = io.StringIO()
    if rows:
        writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
    return buf.getvalue()


# ---------------------------------------------------------------------------
# count
# ---------------------------------------------------------------------------

def count(family: str, n: int, method: str = "auto", oracle_max: int = DEFAULT_ORACLE_MAX,
          cutoff: int = fib_count.DEFAULT_CUTOFF) -> OutputRecord:
    """A(n) or B(n) with the requested evaluation path."""
    if n < 1:
        raise UsageError("n must be >= 1")
    if method == "auto":
        method = "recursion" if n < cutoff else "closed"
    if method in ("recursion", "oracle") and n > oracle_max:
        raise UsageError(f"method {method!r} needs n <= --oracle-max ({oracle_max})")
    big = fib_count.big_a if family == FIB else trib_count.big_b
    start = time.perf_counter()
    if method == "closed":
        result = big(n, method="closed")
    elif method == "recursion":
        result = big(n, method="blocks")
    elif method == "oracle":
        result = sum(PalTree(prefix(family, n)).suffix_counts())
    else:
        raise UsageError(f"unknown method {method!r}")
    elapsed = time.perf_counter() - start
    query = "A" if family == FIB else "B"
    return OutputRecord(query, family, str(n), str(result), elapsed, METHOD_LABEL[method])


def table_rows(family: str, lo: int, hi: int) -> list[dict]:
    if lo < 1 or hi < lo:
        raise UsageError("need 1 <= lo <= hi")
    if hi - lo >= TABLE_MAX:
        raise UsageError(f"at most {TABLE_MAX} rows per table")
    if family == FIB:
        point, big, names = fib_count.a, fib_count.big_a, ("a", "A")
    else:
        point, big, names = trib_count.b, trib_count.big_b, ("b", "B")
    running = big(lo - 1) if lo > 1 else 0
    rows = []
    for n in range(lo, hi + 1):
        value = point(n)
        running += value
        rows.append({"n": str(n), names[0]: str(value), names[1]: str(running)})
    return rows


def verify(family: str, n_max: int, p_max: int, suites: list[str]) -> tuple[bool, list[dict]]:
    ok = True
    report = []
    for name in suites:
        start = time.perf_counter()
        fails = checks.SUITES[name](family, n_max, p_max)
        elapsed = time.perf_counter() - start
        status = "skip" if fails is None else ("pass" if not fails else "fail")
        ok &= status != "fail"
        report.append({"suite": name, "family": family, "status": status,
                       "seconds": f"{elapsed:.3f}", "detail": "; ".join(fails or [])})
    return ok, report


def bench(family: str, sizes: list[int], oracle_max: int, repeat: int = 3) -> list[dict]:
    """Best-of-``repeat`` wall clock for each evaluation path and size."""
    big = fib_count.big_a if family == FIB else trib_count.big_b
    materialize = fib_count.materialize if family == FIB else trib_count.materialize
    paths = {
        "closed-form": lambda n: big(n, method="closed"),
        "recursion": lambda n: sum(materialize(n)),
        "oracle": lambda n: sum(PalTree(prefix(family, n)).suffix_counts()),
    }
    rows = []
    for n in sizes:
        for name, fn in paths.items():
            if name != "closed-form" and n > oracle_max:
                continue
            best = float("inf")
            for _ in range(repeat):
                start = time.perf_counter()
                result = fn(n)
                best = min(best, time.perf_counter() - start)
            rows.append({"family": family, "n": str(n), "method": name,
                         "result": str(result), "seconds": f"{best:.6f}"})
    return rows


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="palcount",
        description="Repeated palindrome counts in Fibonacci and Tribonacci prefixes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, fmt=True):
        p.add_argument("--family", choices=FAMILIES, default=FIB)
        if fmt:
            p.add_argument("--format", choices=("csv", "json"), default="csv")

    p = sub.add_parser("count", help="A(n) or B(n)")
    common(p)
    p.add_argument("--n", type=positive, required=True)
    p.add_argument("--method", choices=("auto", "closed", "recursion", "oracle"), default="auto")
    p.add_argument("--oracle-max", type=positive, default=DEFAULT_ORACLE_MAX)
    p.add_argument("--cutoff", type=positive, default=fib_count.DEFAULT_CUTOFF,
                   help="below this n, auto sums materialized blocks")

    p = sub.add_parser("table", help="per-position and cumulative counts")
    common(p)
    p.add_argument("--lo", type=positive, required=True)
    p.add_argument("--hi", type=positive, required=True)

    p = sub.add_parser("verify", help="run invariant suites")
    common(p)
    p.add_argument("--n-max", type=positive, default=10_000)
    p.add_argument("--p-max", type=positive, default=10_000)
    p.add_argument("--suite", action="append", choices=sorted(checks.SUITES),
                   help="repeatable; default runs every suite")

    p = sub.add_parser("bench", help="time closed-form, block recursion and oracle paths")
    common(p)
    p.add_argument("--sizes", type=positive, nargs="+", default=[10 ** 3, 10 ** 6, 10 ** 12])
    p.add_argument("--oracle-max", type=positive, default=DEFAULT_ORACLE_MAX)
    p.add_argument("--repeat", type=positive, default=3)

    p = sub.add_parser("structure", help="export the recursive structure below <K_m,p>")
    common(p, fmt=False)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--p", type=positive, default=1)
    p.add_argument("--depth", type=int, default=None)
    p.add_argument("--format", choices=("edges", "json"), default="edges")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = sys.stdout
    try:
        if args.command == "count":
            rec = count(args.family, args.n, args.method, args.oracle_max, args.cutoff)
            row = asdict(rec)
            row["elapsed"] = f"{rec.elapsed:.6f}"
            out.write(render([row], args.format))
        elif args.command == "table":
            out.write(render(table_rows(args.family, args.lo, args.hi), args.format))
        elif args.command == "verify":
            ok, report = verify(args.family, args.n_max, args.p_max,
                                args.suite or list(checks.SUITES))
            out.write(render(report, args.format))
            return 0 if ok else 1
        elif args.command == "bench":
            out.write(render(bench(args.family, args.sizes, args.oracle_max, args.repeat), args.format))
        elif args.command == "structure":
            try:
                root = interval(args.family, args.m, args.p)
            except ValueError as exc:
                raise UsageError(str(exc)) from exc
            text = export_json(root, args.depth) + "\n" if args.format == "json" else export_edges(root, args.depth)
            out.write(text)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"palcount: error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
