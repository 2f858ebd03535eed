"""Command-line front end: ``compute``, ``verify`` and ``table``."""

from __future__ import annotations

import argparse
import csv
import sys
from typing import Sequence

from .cover import CoverDatum, grid_data
from .groups import AbGroup, abelian_groups_up_to, cached_split, normalize_group
from .report import build_report, frac, to_json, to_text
from .symprod import poincare_sym
from .verify import run_grid

EXIT_USAGE = 2


class UsageError(Exception):
    pass


def parse_group(text: str) -> list[int]:
    try:
        factors = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"--group expects a comma-separated list of integers, got {text!r}")
    if not factors:
        raise UsageError("--group needs at least one factor")
    bad = [f for f in factors if f < 2]
    if bad:
        raise UsageError(f"group factors must be >= 2, got {bad}")
    return factors


def check_genus(g: int) -> None:
    if g < 2:
        raise UsageError(
            f"base genus must satisfy g(C') >= 2, got {g}; the construction needs a curve of genus at least 2"
        )


def cmd_compute(args, out) -> int:
    factors = parse_group(args.group)
    check_genus(args.genus)
    rep = build_report(factors, args.genus)
    out.write(to_json(rep) if args.format == "json" else to_text(rep))
    return 0


def cmd_verify(args, out) -> int:
    if args.max_order < 2 or args.max_genus < 2:
        raise UsageError("the grid needs --max-order >= 2 and --max-genus >= 2")
    summary = run_grid(args.max_order, args.max_genus, jobs=args.jobs, mutate=args.mutate)
    for r in summary.failures:
        out.write(r.line() + "\n")
    if summary.ok:
        out.write(f"PASS: {len(summary)} properties checked, 0 failures\n")
        return 0
    out.write(f"FAIL: {len(summary.failures)} of {len(summary)} properties failed\n")
    return 1


def _groups_for_table(args) -> list[AbGroup]:
    if args.group:
        return [normalize_group(parse_group(args.group))]
    return abelian_groups_up_to(args.max_order)


def cmd_table(args, out) -> int:
    w = csv.writer(out, lineterminator="\r\n")
    if args.kind == "betti":
        if args.genus < 0 or args.max_degree < 0:
            raise UsageError("--genus and --max-degree must be >= 0")
        w.writerow(["g", "d"] + [f"b{n}" for n in range(2 * args.max_degree + 1)])
        for d in range(args.max_degree + 1):
            P = poincare_sym(d, args.genus)
            w.writerow([args.genus, d] + [P.betti(n) for n in range(2 * args.max_degree + 1)])
    elif args.kind == "dims":
        if args.max_genus < 2:
            raise UsageError("--max-genus must be >= 2")
        w.writerow(["group", "order", "base_genus", "total_genus", "prym_dim", "dim_U"])
        for G in _groups_for_table(args):
            for g in range(2, args.max_genus + 1):
                row = grid_data(CoverDatum(G, g))
                w.writerow([str(G), row["order"], g, row["total_genus"], row["prym_dim"], row["dim_U"]])
    elif args.kind == "idempotents":
        G = normalize_group(parse_group(args.group)) if args.group else normalize_group([4])
        w.writerow(["group", "representative", "field_conductor"] + ["e[" + ",".join(map(str, x)) + "]" for x in G.elements])
        for O in cached_split(G).factors:
            rep = "(" + ",".join(map(str, O.representative.coords)) + ")"
            w.writerow([str(G), rep, O.field_conductor] + [frac(c) for c in O.idempotent])
    else:  # pragma: no cover - argparse restricts choices
        raise UsageError(f"unknown table kind {args.kind!r}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="prymweil", description="Exact Weil-class bookkeeping for abelian covers of curves.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", help="full report for one cover datum (G, g')")
    c.add_argument("--group", required=True, help="comma-separated factors, e.g. 2,2 for Z/2 x Z/2")
    c.add_argument("--genus", type=int, required=True, help="genus g' of the base curve (>= 2)")
    c.add_argument("--format", choices=("json", "text"), default="json")
    c.set_defaults(func=cmd_compute)

    v = sub.add_parser("verify", help="run every property suite over a grid")
    v.add_argument("--max-order", type=int, default=12)
    v.add_argument("--max-genus", type=int, default=5)
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--mutate", action="store_true", help="unbalance one Hodge multiplicity in every cell")
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("table", help="CSV tables")
    t.add_argument("--kind", required=True, help="betti, dims or idempotents")
    t.add_argument("--genus", type=int, default=2, help="curve genus for the betti table")
    t.add_argument("--max-degree", type=int, default=4, help="largest d for the betti table")
    t.add_argument("--max-order", type=int, default=8)
    t.add_argument("--max-genus", type=int, default=2)
    t.add_argument("--group", help="restrict to one group (dims) or pick the group (idempotents; default 4)")
    t.set_defaults(func=cmd_table)
    return p


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "table" and args.kind not in ("betti", "dims", "idempotents"):
        sys.stderr.write(f"prymweil table: unknown kind {args.kind!r} (choose betti, dims or idempotents)\n")
        return EXIT_USAGE
    try:
        return args.func(args, out)
    except UsageError as exc:
        sys.stderr.write(f"prymweil {args.command}: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())


def main_entry() -> None:
    sys.exit(main())
