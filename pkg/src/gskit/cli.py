"""Command-line interface.

Subcommands: verify, table, construct, decompose, search, cnf.  Exit
codes are uniform across commands: 0 means ok (property verified,
witness found), 1 means a definite negative answer (violation found,
infeasible order, structural mismatch), 2 means a usage or input error,
and 3 means a budget ran out before the answer was conclusive.

Partition inputs are a file path, `-` for stdin, or an inline compact
string; file content may be a digit string or the explicit
`gspartition v1` form, whose declared kind is used when --kind is not
given.  All JSON output has a fixed field order.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .core import (
    Coloring,
    Kind,
    ParseError,
    canonicalize,
    check_partition,
    parse_coloring_with_kind,
    to_file_form,
)
from .construct import (
    BASE_CATALOGUE,
    PatternError,
    apply_mappings,
    base_by_name,
    five_fold,
    gs_number,
    inverse_five_fold,
    inverse_two_fold,
    maximal_partition,
    two_fold,
)
from .structure import decompose_full
from .search import (
    PartialResultError,
    SearchConfig,
    SearchMode,
    exists_partition,
    max_order,
    report_json,
    run_search,
)
from .satgen import decode, encode, parse_model, to_dimacs


class UsageError(Exception):
    pass


def _err(message: str):
    print(message, file=sys.stderr)


def _read_partition_text(arg: str) -> str:
    # Existing files and "-" are read; anything else is handed to the
    # parser as inline text so errors name the offending position.
    if arg == "-":
        return sys.stdin.read()
    path = Path(arg)
    if path.is_file():
        return path.read_text()
    if "/" in arg or arg.endswith(".txt"):
        raise UsageError(f"no such file: {arg!r}")
    return arg


def _read_text_file(arg: str) -> str:
    if arg == "-":
        return sys.stdin.read()
    path = Path(arg)
    if path.is_file():
        return path.read_text()
    raise UsageError(f"no such file: {arg}")


def _resolve_kind(flag: str | None, declared: Kind | None) -> Kind:
    if flag is not None:
        return Kind.from_name(flag)
    if declared is not None:
        return declared
    return Kind.STRONG


def _default_workers() -> int:
    raw = os.environ.get("GSKIT_WORKERS")
    if raw is None:
        return 1
    try:
        workers = int(raw)
    except ValueError:
        raise UsageError(f"GSKIT_WORKERS must be an integer, got {raw!r}") from None
    if workers < 1:
        raise UsageError("GSKIT_WORKERS must be positive")
    return workers


def _print_coloring(c: Coloring, kind: Kind):
    """Compact digit string when possible, explicit file form otherwise."""
    if c.r <= 9:
        print(c.compact())
    else:
        sys.stdout.write(to_file_form(c, kind))


def cmd_verify(args) -> int:
    coloring, declared = parse_coloring_with_kind(_read_partition_text(args.input))
    kind = _resolve_kind(args.kind, declared)
    verdict = check_partition(coloring, kind, exhaustive=args.all_witnesses)
    if args.json:
        doc = {
            "kind": kind.value,
            "r": coloring.r,
            "n": coloring.n,
            "ok": verdict.ok,
            "violations": [
                {
                    "category": v.category.value,
                    "triple": list(v.triple) if v.triple is not None else None,
                    "color": v.color,
                    "message": v.describe(),
                }
                for v in verdict.violations
            ],
        }
        print(json.dumps(doc))
    elif verdict.ok:
        print("ok")
    else:
        for v in verdict.violations:
            print(v.describe())
    return 0 if verdict.ok else 1


def cmd_table(args) -> int:
    if args.max_r < 1:
        raise UsageError("--max-r must be at least 1")
    kind = Kind.from_name(args.kind)
    rows = [gs_number(r, kind) for r in range(1, args.max_r + 1)]
    if args.json:
        doc = {
            "kind": kind.value,
            "rows": [{"r": row.r, "value": row.value} for row in rows],
        }
        print(json.dumps(doc))
    else:
        for row in rows:
            print(f"{row.r}\t{row.value}")
    return 0


_APPLY_STEPS = {
    "2": two_fold,
    "5": five_fold,
    "i2": inverse_two_fold,
    "i5": inverse_five_fold,
}


def cmd_construct(args) -> int:
    if args.maximal is not None:
        kind = Kind.from_name(args.kind) if args.kind else Kind.STRONG
        current = maximal_partition(args.maximal, kind)
    elif args.base is not None:
        kind, current = base_by_name(args.base)
        if args.kind is not None and Kind.from_name(args.kind) is not kind:
            raise UsageError(
                f"base {args.base} belongs to the {kind.value} catalogue"
            )
    else:
        current, declared = parse_coloring_with_kind(
            _read_partition_text(args.from_input)
        )
        kind = _resolve_kind(args.kind, declared)

    for step in args.apply or []:
        current = _APPLY_STEPS[step](current)

    if args.json:
        doc = {
            "kind": kind.value,
            "r": current.r,
            "n": current.n,
            "coloring": str(current),
        }
        print(json.dumps(doc))
    else:
        _print_coloring(current, kind)
    return 0


def cmd_decompose(args) -> int:
    coloring, _ = parse_coloring_with_kind(_read_partition_text(args.input))
    canon = canonicalize(coloring)
    if canon != coloring:
        _err("note: input canonicalized before decomposition")
    dec = decompose_full(canon)
    if args.json:
        doc = {
            "base": str(dec.base),
            "tags": [t.value for t in dec.tags],
            "original_order": dec.original_order,
        }
        print(json.dumps(doc))
    else:
        print(f"base={dec.base} tags={','.join(t.value for t in dec.tags)}")
    return 0


def cmd_search(args) -> int:
    if args.r < 1:
        raise UsageError("--r must be at least 1")
    kind = Kind.from_name(args.kind)
    workers = args.workers if args.workers is not None else _default_workers()
    if args.max_order and (args.n is not None or args.enumerate):
        raise UsageError("--max-order excludes --n and --enumerate")
    if not args.max_order and not args.enumerate and args.n is None:
        raise UsageError("one of --n, --max-order, --enumerate is required")

    limit = args.limit
    if limit is None:
        limit = gs_number(args.r, kind).value - 1 + args.streak

    if args.max_order:
        m_max, confirmed = max_order(
            kind,
            args.r,
            limit,
            streak=args.streak,
            node_budget=args.budget,
            wall_budget=args.wall,
        )
        if args.json:
            doc = {
                "kind": kind.value,
                "r": args.r,
                "limit": limit,
                "streak": args.streak,
                "m_max": m_max,
                "confirmed": confirmed,
            }
            print(json.dumps(doc))
        else:
            state = "confirmed" if confirmed else "unconfirmed"
            print(f"m_max {m_max} {state} (streak {args.streak})")
        return 0 if confirmed else 3

    confirmed = True
    if args.enumerate and args.n is None:
        m_max, confirmed = max_order(
            kind,
            args.r,
            limit,
            streak=args.streak,
            node_budget=args.budget,
            wall_budget=args.wall,
        )
        if m_max == 0:
            _err(f"no feasible order up to {limit}")
            return 1 if confirmed else 3
        n = m_max
    else:
        n = args.n
    if n < 1:
        raise UsageError("--n must be at least 1")

    mode = SearchMode.ENUMERATE_ALL if args.enumerate else SearchMode.FIRST_WITNESS
    cfg = SearchConfig(
        kind=kind,
        r=args.r,
        n=n,
        mode=mode,
        streak=args.streak,
        node_budget=args.budget,
        wall_budget=args.wall,
    )
    report = run_search(cfg, workers=workers, split_depth=args.split_depth)
    if args.json:
        print(report_json(cfg, report))
    else:
        for w in report.witnesses:
            print(str(w))
        if not report.witnesses:
            print("infeasible" if report.exhausted else "inconclusive (budget exhausted)")
    if not confirmed or (not report.exhausted and mode is SearchMode.ENUMERATE_ALL):
        return 3
    if report.witnesses:
        return 0
    return 1 if report.exhausted else 3


def cmd_cnf(args) -> int:
    if args.n < 1 or args.r < 1:
        raise UsageError("--n and --r must be at least 1")
    kind = Kind.from_name(args.kind)
    if args.action == "encode":
        sys.stdout.write(to_dimacs(encode(args.n, args.r, kind, symmetry=args.symmetry)))
        return 0
    model = parse_model(_read_text_file(args.model))
    coloring = decode(model, args.n, args.r)
    _print_coloring(coloring, kind)
    verdict = check_partition(coloring, kind)
    if not verdict.ok:
        for v in verdict.violations:
            _err(v.describe())
        return 1
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gskit",
        description="Verify, construct, decompose, search, and encode "
        "sum-avoiding rainbow-free partitions of [1, n].",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="check a partition against the constraints")
    p.add_argument("input", help="file, '-', or inline digit string")
    p.add_argument("--kind", choices=["strong", "weak"], default=None)
    p.add_argument("--all-witnesses", action="store_true",
                   help="report every violation, not just the first")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", help="print the closed-form maximal-order table")
    p.add_argument("--kind", choices=["strong", "weak"], default="strong")
    p.add_argument("--max-r", type=int, default=6)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("construct", help="build partitions from bases and mappings")
    start = p.add_mutually_exclusive_group(required=True)
    start.add_argument("--base", choices=sorted(BASE_CATALOGUE),
                       help="catalogue base to start from")
    start.add_argument("--maximal", type=int, metavar="R",
                       help="maximal partition for R colors")
    start.add_argument("--from", dest="from_input", metavar="INPUT",
                       help="partition to start from (file, '-', or digits)")
    p.add_argument("--apply", action="append", choices=sorted(_APPLY_STEPS),
                   help="mapping chain, applied left to right; i2/i5 invert")
    p.add_argument("--kind", choices=["strong", "weak"], default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("decompose", help="peel a partition down to a base")
    p.add_argument("input", help="file, '-', or inline digit string")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("search", help="exhaustive backtracking search")
    p.add_argument("--kind", choices=["strong", "weak"], default="strong")
    p.add_argument("--r", type=int, required=True, help="number of colors")
    p.add_argument("--n", type=int, default=None, help="order to search")
    p.add_argument("--max-order", action="store_true",
                   help="scan upward for the largest feasible order")
    p.add_argument("--enumerate", action="store_true",
                   help="all canonical witnesses (at --n, or at the maximal order)")
    p.add_argument("--limit", type=int, default=None,
                   help="scan ceiling for --max-order/--enumerate")
    p.add_argument("--streak", type=int, default=5,
                   help="consecutive infeasible orders required to confirm")
    p.add_argument("--workers", type=int, default=None,
                   help="worker processes (default: GSKIT_WORKERS or 1)")
    p.add_argument("--split-depth", type=int, default=None,
                   help="prefix depth for parallel task splitting")
    p.add_argument("--budget", type=int, default=None, help="node budget")
    p.add_argument("--wall", type=float, default=None, help="wall-clock budget, seconds")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("cnf", help="DIMACS CNF encoding and model decoding")
    p.add_argument("action", choices=["encode", "decode"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--kind", choices=["strong", "weak"], default="strong")
    p.add_argument("--symmetry", action="store_true",
                   help="add canonical-order symmetry-breaking clauses")
    p.add_argument("model", nargs="?", default="-",
                   help="solver output to decode (file or '-')")
    p.set_defaults(func=cmd_cnf)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as e:
        _err(f"error: {e}")
        return 2
    except ParseError as e:
        _err(f"input error: {e}")
        return 2
    except PatternError as e:
        _err(f"structure error: {e}")
        return 1
    except PartialResultError as e:
        for w in e.witnesses:
            print(str(w))
        _err(f"inconclusive: {e}")
        return 3
    except ValueError as e:
        _err(f"error: {e}")
        return 2
    except OSError as e:
        _err(f"error: {e}")
        return 2


if __name__ == "__main__":
    sys.exit(main())
