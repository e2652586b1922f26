"""Command line front end: ``count``, ``table`` and ``verify``.

Exit codes: 0 success, 1 verify found discrepancies, 2 usage error,
3 resource limit or unbounded query.
"""
from __future__ import annotations

import argparse
import csv
import json
import sys
from typing import Optional

from . import closed_forms as cf
from .census import census_rows
from .errors import FrobeniusDivisible, KunzCountError, ResourceLimit, Unbounded
from .oracle import DEFAULT_MAX_GENUS, Oracle
from .polytope import (
    add_frobenius_cut,
    add_genus_cut,
    count_lattice_points,
    enumerate_lattice_points,
    kunz_system,
    med_system,
)
from .semigroup import KunzCoords, kunz_from_semigroup, semigroup_from_kunz
from .verify import run_verify

EXIT_OK, EXIT_DISCREPANCY, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _formula(m: int, g: Optional[int], F: Optional[int], med: bool) -> Optional[int]:
    """Closed-form count for the query, or None when no formula covers it."""
    if m == 3:
        if g is not None and F is not None:
            pt = cf.unique_m3_kunz(g, F)
            if pt is None:
                return 0
            return int(not med or semigroup_from_kunz(pt).is_med)
        if g is not None and g >= 2:
            return cf.count_m3_med_genus(g) if med else cf.count_m3_genus(g)
        if F is not None and F >= 1:
            return cf.count_m3_med_frobenius(F) if med else cf.count_m3_frobenius(F)
    if m == 4:
        if g is not None and F is not None and g >= 3 and F >= 3:
            if not g <= F <= 2 * g - 1:
                return 0
            if med:
                return cf.count_m4_med_genus_frobenius(g, F)
            return cf.count_m4_genus_frobenius(g, F)
        if med:
            return None
        if g is not None and g >= 3:
            return cf.count_m4_genus(g)
        if F is not None and F >= 1:
            return cf.count_m4_frobenius(F)
    return None


def _system(m: int, g: Optional[int], F: Optional[int], med: bool):
    sys_ = med_system(m) if med else kunz_system(m)
    if g is not None:
        sys_ = add_genus_cut(sys_, g)
    if F is not None:
        sys_ = add_frobenius_cut(sys_, F)
    return sys_


def _oracle_semigroups(m: int, g: Optional[int], F: Optional[int], med: bool, oracle: Oracle):
    # a semigroup with Frobenius number F has genus between (F+1)/2 and F
    genera = [g] if g is not None else range((F + 1) // 2, F + 1)
    found = []
    for h in genera:
        found.extend(oracle.semigroups(h, multiplicity=m, frobenius=F, med=True if med else None))
    return found


def _resolve_count(args) -> tuple[int, str, list[tuple[int, ...]]]:
    m, g, F, med = args.multiplicity, args.genus, args.frobenius, args.med
    if F is not None and F % m == 0:
        return 0, "polytope" if args.source == "auto" else args.source, []
    source = args.source
    if source == "auto":
        source = "formula" if _formula(m, g, F, med) is not None else "polytope"

    points: list[tuple[int, ...]] = []
    if source == "formula":
        count = _formula(m, g, F, med)
        if count is None:
            raise UsageError(f"no closed form covers m={m} with the given cuts")
    elif source == "oracle":
        found = _oracle_semigroups(m, g, F, med, Oracle())
        count = len(found)
        if args.list:
            points = sorted(kunz_from_semigroup(s).k for s in found)
    else:
        count = count_lattice_points(_system(m, g, F, med))
    if args.list and source != "oracle":
        points = list(enumerate_lattice_points(_system(m, g, F, med)))
    return count, source, points


def cmd_count(args, out) -> int:
    if args.multiplicity < 2:
        raise UsageError("multiplicity must be at least 2")
    if args.genus is None and args.frobenius is None:
        raise UsageError("give a genus (-g) and/or a Frobenius number (-f)")
    if (args.genus is not None and args.genus < 0) or (args.frobenius is not None and args.frobenius < 1):
        raise UsageError("genus must be non-negative and the Frobenius number positive")
    count, source, points = _resolve_count(args)
    gens = [semigroup_from_kunz(KunzCoords(args.multiplicity, p)) for p in points]
    if args.format == "json":
        doc = {
            "query": {"multiplicity": args.multiplicity, "genus": args.genus,
                      "frobenius": args.frobenius, "med": args.med},
            "count": count,
            "source": source,
            "points": [list(p) for p in points],
        }
        if args.list:
            doc["generators"] = [list(s.generators) for s in gens]
        out.write(json.dumps(doc) + "\n")
        return EXIT_OK
    out.write(f"{count}\n")
    for p, s in zip(points, gens):
        out.write(f"{' '.join(map(str, p))}\t{s}\n")
    return EXIT_OK


def cmd_table(args, out) -> int:
    if args.max_genus < 1:
        raise UsageError("--max-genus must be at least 1")
    rows = census_rows(args.max_genus, med=args.med)
    width = args.max_genus + 1
    if args.format == "json":
        doc = [{"g": r["g"], "counts": {f"m{m}": c for m, c in enumerate(r["counts"], 2)},
                "total": r["total"]} for r in rows]
        out.write(json.dumps(doc) + "\n")
        return EXIT_OK
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["g"] + [f"m{m}" for m in range(2, width + 1)] + ["total"])
    for r in rows:
        cells = r["counts"] + [""] * (width - 1 - len(r["counts"]))
        w.writerow([r["g"]] + cells + [r["total"]])
    return EXIT_OK


def cmd_verify(args, out) -> int:
    if args.oracle_depth > DEFAULT_MAX_GENUS:
        raise ResourceLimit(f"--oracle-depth is capped at {DEFAULT_MAX_GENUS}")
    progress = (lambda msg: print(f"checking {msg}", file=sys.stderr)) if args.progress else None
    report = run_verify(max_genus=args.max_genus, max_frobenius=args.max_frobenius,
                        grid_genus=args.grid_genus, unique_genus=min(100, args.max_genus),
                        oracle_depth=args.oracle_depth, progress=progress)
    if args.json:
        out.write(json.dumps(report.as_dict()) + "\n")
    else:
        out.write(report.to_text() + "\n")
    return EXIT_DISCREPANCY if report.failures(strict=args.strict) else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="kunzcount",
                                description="Count numerical semigroups by multiplicity, genus and Frobenius number.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("count", help="count semigroups for one query")
    c.add_argument("-m", "--multiplicity", type=int, required=True)
    c.add_argument("-g", "--genus", type=int)
    c.add_argument("-f", "--frobenius", type=int)
    c.add_argument("--med", action="store_true", help="only maximal embedding dimension semigroups")
    c.add_argument("--list", action="store_true", help="also print Kunz points and generators")
    c.add_argument("--source", choices=("auto", "polytope", "formula", "oracle"), default="auto")
    c.add_argument("--format", choices=("text", "json"), default="text")
    c.set_defaults(func=cmd_count)

    t = sub.add_parser("table", help="census by genus and multiplicity")
    t.add_argument("--max-genus", type=int, required=True)
    t.add_argument("--med", action="store_true")
    t.add_argument("--format", choices=("csv", "json"), default="csv")
    t.set_defaults(func=cmd_table)

    v = sub.add_parser("verify", help="check closed forms and tables against enumeration")
    v.add_argument("--max-genus", type=int, default=200)
    v.add_argument("--max-frobenius", type=int, default=400)
    v.add_argument("--grid-genus", type=int, default=60, help="genus bound of the (g, F) grids")
    v.add_argument("--oracle-depth", type=int, default=15)
    v.add_argument("--json", action="store_true")
    v.add_argument("--strict", action="store_true",
                   help="also fail on documented misprints and printed-formula errors")
    v.add_argument("--progress", action="store_true")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args, out)
    except (Unbounded, ResourceLimit, OverflowError, MemoryError) as exc:
        print(f"kunzcount: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (UsageError, FrobeniusDivisible, KunzCountError) as exc:
        print(f"kunzcount: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
