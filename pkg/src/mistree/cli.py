"""Command-line entry point.

Exit status: 0 on success, 1 when a verification fails, 2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path
from typing import Sequence, TextIO

from . import formulas, harness, treegen
from .miscount import count_mis
from .treekit import Tree, graph6_decode, graph6_encode, tree_from_edge_list

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(message)


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid integer {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _nonnegative(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid integer {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    # Global flags are accepted before or after the subcommand; SUPPRESS keeps
    # the subparser from clobbering a value given before it.
    common = _Parser(add_help=False, argument_default=argparse.SUPPRESS)
    common.add_argument("--cache-dir", help="tree cache directory (default ./cache)")
    common.add_argument("--jobs", type=_positive, help="worker processes (default: all CPUs)")
    common.add_argument("--format", choices=("csv", "json"), help="report format (default csv)")
    common.add_argument(
        "--cap",
        type=_positive,
        help=f"largest tree order allowed (default {treegen.DEFAULT_CAP}, at most {treegen.HARD_CAP})",
    )

    parser = _Parser(prog="mistree", description=__doc__, parents=[common])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("psi", parents=[common], help="path m.i.s. count psi(N)")
    p.add_argument("n", type=_nonnegative)

    p = sub.add_parser("m", parents=[common], help="upper bound M(N, D)")
    p.add_argument("n", type=_positive)
    p.add_argument("d", type=_positive)

    p = sub.add_parser("count", parents=[common], help="count m.i.s. of trees")
    p.add_argument("source", help="graph6 string, graph6 or edge-list file, or - for stdin")

    p = sub.add_parser("enumerate", parents=[common], help="list free trees as graph6")
    p.add_argument("n", type=_positive)
    p.add_argument("--diameter", type=_nonnegative)

    p = sub.add_parser("construct-b", parents=[common], help="double broom B(D, P, Q)")
    p.add_argument("d", type=int)
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)

    p = sub.add_parser("scan", parents=[common], help="extremal record for (N, D)")
    p.add_argument("n", type=_positive)
    p.add_argument("d", type=_positive)

    p = sub.add_parser("verify-min", parents=[common], help="check the lower bound")
    p.add_argument("--nmax", type=_positive, default=13)

    p = sub.add_parser("verify-max", parents=[common], help="check the upper bound")
    p.add_argument("--nmax", type=_positive, default=13)

    p = sub.add_parser("verify-lemmas", parents=[common], help="check the M(n, d) lemmas")
    p.add_argument("--nlimit", type=_positive, default=80)

    p = sub.add_parser("export", parents=[common], help="write extremal trees as graph6")
    p.add_argument("n", type=_positive)
    p.add_argument("d", type=_positive)
    p.add_argument("--which", choices=("min", "max"), required=True)
    p.add_argument("--out", required=True)
    return parser


def _global_defaults() -> dict[str, object]:
    return {
        "cache_dir": "./cache",
        "jobs": os.cpu_count() or 1,
        "format": "csv",
        "cap": treegen.DEFAULT_CAP,
    }


def _read_trees(source: str, stdin: TextIO) -> list[Tree]:
    if source == "-":
        lines = stdin.read().splitlines()
    elif Path(source).is_file():
        lines = Path(source).read_text().splitlines()
    else:
        return [graph6_decode(source)]
    lines = [ln.strip() for ln in lines if ln.strip() and not ln.lstrip().startswith("#")]
    if source != "-" and lines and all(len(ln.split()) == 2 for ln in lines):
        edges = [tuple(int(x) for x in ln.split()) for ln in lines]
        n = 1 + max(max(e) for e in edges)
        return [tree_from_edge_list(n, edges)]
    return [graph6_decode(ln) for ln in lines]


def _check_order(n: int, cap: int) -> None:
    if n > cap:
        raise UsageError(f"order {n} exceeds the cap {cap} (raise it with --cap)")


def _dispatch(args: argparse.Namespace, out: TextIO, stdin: TextIO) -> int:
    cmd = args.command
    if args.cap > treegen.HARD_CAP:
        raise UsageError(f"argument --cap: at most {treegen.HARD_CAP}, got {args.cap}")
    cache = args.cache_dir

    if cmd == "psi":
        print(formulas.psi(args.n), file=out)
    elif cmd == "m":
        print(formulas.big_m(args.n, args.d), file=out)
    elif cmd == "count":
        for t in _read_trees(args.source, stdin):
            print(count_mis(t), file=out)
    elif cmd == "enumerate":
        _check_order(args.n, args.cap)
        if args.diameter is None:
            trees = treegen.free_trees(args.n, cap=args.cap)
        else:
            trees = treegen.trees_with_diameter(args.n, args.diameter, cap=args.cap)
        for t in trees:
            print(graph6_encode(t), file=out)
    elif cmd == "construct-b":
        t = formulas.construct_b(formulas.BParams(args.d, args.p, args.q))
        print(graph6_encode(t), file=out)
    elif cmd == "scan":
        _check_order(args.n, args.cap)
        rec = harness.extremal_scan(args.n, args.d, cap=args.cap, cache_dir=cache)
        _print_record(rec, args.format, out)
    elif cmd in ("verify-min", "verify-max"):
        _check_order(args.nmax, args.cap)
        run = harness.verify_min_theorem if cmd == "verify-min" else harness.verify_max_theorem
        report = run(args.nmax, cap=args.cap, jobs=args.jobs, cache_dir=cache)
        return _emit(report, args.format, out)
    elif cmd == "verify-lemmas":
        return _emit(harness.verify_m_lemmas(args.nlimit), args.format, out)
    elif cmd == "export":
        _check_order(args.n, args.cap)
        written = harness.export_extremal(
            args.n, args.d, args.which, args.out, cap=args.cap, cache_dir=cache
        )
        print(written, file=out)
    return EXIT_OK


def _print_record(rec: harness.ExtremalRecord, fmt: str, out: TextIO) -> None:
    row = {
        "n": rec.n,
        "d": rec.d,
        "tree_count": rec.tree_count,
        "min_mis": rec.min_count,
        "max_mis": rec.max_count,
        "argmin": [graph6_encode(t) for t in rec.argmin.values()],
        "argmax": [graph6_encode(t) for t in rec.argmax.values()],
    }
    if fmt == "json":
        print(json.dumps(row, indent=2), file=out)
        return
    print("n,d,tree_count,min_mis,max_mis,argmin_count,argmax_count", file=out)
    print(
        f"{rec.n},{rec.d},{rec.tree_count},{rec.min_count},{rec.max_count},"
        f"{len(rec.argmin)},{len(rec.argmax)}",
        file=out,
    )


def _emit(report: harness.VerificationReport, fmt: str, out: TextIO) -> int:
    out.write(report.to_json() if fmt == "json" else report.to_csv())
    print(report.summary(), file=sys.stderr)
    return EXIT_OK if report.passed else EXIT_FAIL


def run(
    argv: Sequence[str] | None = None, out: TextIO | None = None, stdin: TextIO | None = None
) -> int:
    out = out or sys.stdout
    stdin = stdin or sys.stdin
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        for name, value in _global_defaults().items():
            if not hasattr(args, name):
                setattr(args, name, value)
        return _dispatch(args, out, stdin)
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    except UsageError as exc:
        print(f"mistree: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, OSError) as exc:
        print(f"mistree: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
