"""Command-line entry point.

Exit codes: 0 success, 1 the cover failed verification (or a bench count
was off), 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import sys

from . import bench as bench_mod
from .decompose import decompose
from .formats import FORMATS, CoverParseError, parse_cover, serialize
from .params import ParamRow, param_table
from .verify import verify_cover

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

TABLE_HEADER = f"{'n':>4} {'m':>6} {'sigma':>6} {'alpha':>6} {'tau':>6}"


def _trivial_note(n: int) -> str:
    if n == 2:
        answer = "K_2 is a single edge, i.e. one tree"
    elif n == 1:
        answer = "K_1 has no edges, so no trees are needed"
    else:
        answer = f"n={n} is not a valid order"
    return f"n={n}: trivial case ({answer}); decompose requires n >= 3"


def format_rows(rows: list[ParamRow]) -> list[str]:
    return [TABLE_HEADER] + [f"{r.n:>4} {r.m:>6} {r.sigma:>6} {r.alpha:>6} {r.tau:>6}" for r in rows]


def render_params(n_max: int, split_parity: bool = False) -> str:
    rows = param_table(n_max)
    if not split_parity:
        return "\n".join(format_rows(rows)) + "\n"
    even = [r for r in rows if r.n % 2 == 0]
    odd = [r for r in rows if r.n % 2 == 1]
    lines = ["# even order"] + format_rows(even) + ["", "# odd order"] + format_rows(odd)
    return "\n".join(lines) + "\n"


def _write(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def cmd_decompose(args) -> int:
    if args.n < 3:
        print(_trivial_note(args.n), file=sys.stderr)
        return EXIT_USAGE
    cover, _ = decompose(args.n)
    _write(serialize(cover, args.format), args.output)
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        if args.path == "-":
            text = sys.stdin.read()
        else:
            with open(args.path) as fh:
                text = fh.read()
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        cover = parse_cover(text)
    except CoverParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    report = verify_cover(cover)
    print(f"K_{cover.n}: {cover.tau} trees, sizes {cover.sizes}")
    print(report.summary())
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_params(args) -> int:
    if args.n_max < 3:
        print(f"--n-max must be >= 3, got {args.n_max}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(render_params(args.n_max, args.split_parity))
    return EXIT_OK


def cmd_bench(args) -> int:
    if args.trials < bench_mod.MIN_TRIALS:
        print(f"--trials must be >= {bench_mod.MIN_TRIALS}, got {args.trials}", file=sys.stderr)
        return EXIT_USAGE
    if any(n < 3 for n in args.n):
        print("every n must be >= 3", file=sys.stderr)
        return EXIT_USAGE
    records = bench_mod.run_bench(args.n, args.trials)
    print(f"{'n':>6} {'m':>9} {'emitted':>9} {'distinct':>9} {'min_ns':>12} {'ns/edge':>8}")
    for r in records:
        print(f"{r.n:>6} {r.m:>9} {r.emitted_edges:>9} {r.distinct_edges:>9} {r.wall_time:>12} {r.wall_time / r.m:>8.1f}")
    status = EXIT_OK
    bad = [r.n for r in records if not r.exact]
    if bad:
        print(f"FAIL: emitted edge count differs from m for n in {bad}")
        status = EXIT_FAIL
    if len(records) >= 2:
        slope = bench_mod.loglog_slope(records)
        lo, hi = bench_mod.SLOPE_RANGE
        verdict = "within" if lo <= slope <= hi else "outside"
        print(f"log-log slope of time vs m: {slope:.3f} ({verdict} advisory range [{lo}, {hi}])")
    return status


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="treecover", description="Minimum edge-disjoint tree decompositions of K_n")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decompose", help="decompose K_n and print the cover")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--format", choices=FORMATS, default="edgelist")
    p.add_argument("-o", "--output", help="output path (default: standard output)")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("verify", help="verify a cover file (JSON or edge list, '-' for stdin)")
    p.add_argument("path")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("params", help="print n, m, sigma, alpha, tau for n = 3..n_max")
    p.add_argument("--n-max", type=int, default=20)
    p.add_argument("--split-parity", action="store_true", help="even table, then odd table")
    p.set_defaults(func=cmd_params)

    p = sub.add_parser("bench", help="time decompose and check the emitted edge count")
    p.add_argument("-n", type=int, nargs="+", default=[256, 512, 1024, 2048])
    p.add_argument("--trials", type=int, default=5)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
