"""Command-line surface for the census toolkit.

Subcommands:

  count         count a family by (size, free variables), CSV or JSON
  list          list the terms, or exchange-class groups, of one cell
  crosscheck    run all producer agreement and reference checks
  series-table  print one family's exact coefficient table
  maps-census   count rooted maps with a given number of edges

`count --closed` and `series-table --closed` print one number per line so
the output diffs directly against published sequence prefixes.  Exit status
is 1 when a crosscheck diverges, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import crosscheck as crosscheck_mod
from . import enumeration, exchange, maps, series, terms
from .enumeration import Family
from .maps import Variant
from .series import FamilyName

_TERM_FAMILIES = {f.value: f for f in Family}
_CLASS_FAMILIES = {
    "classes-neutral": Family.NEUTRAL,
    "classes-normal": Family.NORMAL,
}
_SERIES_FOR_FAMILY = {
    "linear": FamilyName.L,
    "neutral": FamilyName.LB,
    "normal": FamilyName.LR,
    "planar-neutral": FamilyName.PB,
    "planar-normal": FamilyName.PR,
    "classes-neutral": FamilyName.QB,
    "classes-normal": FamilyName.QR,
}
_MAP_VARIANTS = {
    "all": Variant.ALL_GENERA,
    "planar": Variant.PLANAR_ONLY,
    "trivalent": Variant.TRIVALENT,
}


def _emit_sequence(values: list[int], as_json: bool) -> None:
    if as_json:
        print(json.dumps(values))
    else:
        for v in values:
            print(v)


def _count_table(args: argparse.Namespace) -> enumeration.CountTable:
    name = args.family
    if args.producer == "series":
        which = _SERIES_FOR_FAMILY[name]
        sol = series.solve(which, args.max_n).series
        table = enumeration.CountTable(max_n=args.max_n, provenance=f"series:{which.value}")
        for n in range(args.max_n + 1):
            for k in range(n + 2):
                c = sol.coeff(n, k)
                if c:
                    table.entries[(n, k)] = c
        return table
    if args.producer == "maps":
        if name != "classes-neutral":
            raise SystemExit(
                "the maps producer only counts classes-neutral (edges, vertices)"
            )
        table = enumeration.CountTable(max_n=args.max_n, provenance="maps:all-genera")
        for n in range(1, args.max_n + 1):
            cens = maps.census(n, Variant.ALL_GENERA, cap_override=args.cap_override)
            for (edges, vertices), c in cens.entries.items():
                table.entries[(edges, vertices)] = c
        return table
    if name in _CLASS_FAMILIES:
        counts = exchange.count_classes(_CLASS_FAMILIES[name], args.max_n)
        return counts.labeled if args.labeled else counts.unlabeled
    return enumeration.count_family(_TERM_FAMILIES[name], args.max_n)


def cmd_count(args: argparse.Namespace) -> int:
    table = _count_table(args)
    if args.closed:
        _emit_sequence(table.closed_sequence(1, args.max_n), args.json)
    elif args.json:
        sys.stdout.write(table.to_json())
    else:
        sys.stdout.write(table.to_csv())
    return 0


def cmd_list(args: argparse.Namespace) -> int:
    k = 0 if args.closed else args.k
    show = terms.to_ascii if args.ascii else (
        lambda t: terms.render(t, terms.default_context(k))
    )
    if args.family in _CLASS_FAMILIES:
        groups = exchange.class_groups(_CLASS_FAMILIES[args.family], args.n, k)
        if args.json:
            sys.stdout.write(exchange.groups_to_json(groups, show))
        else:
            sys.stdout.write(exchange.groups_to_text(groups, show))
        return 0
    family = _TERM_FAMILIES[args.family]
    listed = [show(t) for t in enumeration.enum_family(family, args.n, k)]
    if args.json:
        print(json.dumps(listed))
    else:
        for line in listed:
            print(line)
    return 0


def cmd_crosscheck(args: argparse.Namespace) -> int:
    kwargs = {}
    if args.cap_override is not None:
        kwargs["enum_cap"] = args.cap_override
        kwargs["maps_cap"] = args.cap_override
    report = crosscheck_mod.run_crosscheck(args.max_n, **kwargs)
    sys.stdout.write(report.to_json() if args.json else report.to_text())
    return 0 if report.ok else 1


def cmd_series_table(args: argparse.Namespace) -> int:
    sol = series.solve(FamilyName(args.family), args.max_n)
    if args.closed:
        _emit_sequence(sol.series.closed_sequence(1, args.max_n), args.json)
    elif args.json:
        sys.stdout.write(series.solution_to_json(sol))
    else:
        sys.stdout.write(series.solution_to_csv(sol))
    return 0


def cmd_maps_census(args: argparse.Namespace) -> int:
    variant = _MAP_VARIANTS[args.variant]
    if args.list:
        reps = maps.census_maps(args.edges, variant, cap_override=args.cap_override)
        for m in reps:
            print(m.to_text())
        return 0
    cens = maps.census(args.edges, variant, cap_override=args.cap_override)
    sys.stdout.write(cens.to_json() if args.json else cens.to_csv())
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="linlam",
        description="Exact censuses of linear lambda terms, exchange classes, and rooted maps.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    all_families = sorted(_TERM_FAMILIES) + sorted(_CLASS_FAMILIES)

    p = sub.add_parser("count", help="count a family by size and free variables")
    p.add_argument("--family", required=True, choices=all_families)
    p.add_argument("--max-n", type=int, default=5)
    p.add_argument("--closed", action="store_true", help="print only the k=0 column")
    p.add_argument("--producer", choices=("enum", "series", "maps"), default="enum")
    p.add_argument("--labeled", action="store_true",
                   help="for class families, count labeled contexts (default unlabeled)")
    p.add_argument("--cap-override", type=int, default=None)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("list", help="list the terms or class groups of one cell")
    p.add_argument("--family", required=True, choices=all_families)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--closed", action="store_true", help="same as --k 0")
    p.add_argument("--ascii", action="store_true",
                   help="print the canonical prefix serialization instead of named syntax")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("crosscheck", help="run all agreement and reference checks")
    p.add_argument("--max-n", type=int, default=5)
    p.add_argument("--cap-override", type=int, default=None,
                   help="raise the enumeration and map-census caps (defaults 5 and 4)")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("series-table", help="print one family's coefficient table")
    p.add_argument("--family", required=True, choices=[f.value for f in FamilyName])
    p.add_argument("--max-n", type=int, default=12)
    p.add_argument("--closed", action="store_true")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("maps-census", help="count rooted maps with a given edge count")
    p.add_argument("--edges", type=int, required=True)
    p.add_argument("--variant", choices=sorted(_MAP_VARIANTS), default="all")
    p.add_argument("--cap-override", type=int, default=None)
    p.add_argument("--list", action="store_true", help="print one map per line instead")
    p.add_argument("--json", action="store_true")

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    if args.command == "count":
        return cmd_count(args)
    if args.command == "list":
        return cmd_list(args)
    if args.command == "crosscheck":
        return cmd_crosscheck(args)
    if args.command == "series-table":
        return cmd_series_table(args)
    return cmd_maps_census(args)


if __name__ == "__main__":
    sys.exit(main())
