"""Adjudicate every closed form against lattice enumeration and the semigroup tree."""
from __future__ import annotations

from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Optional

from . import closed_forms as cf
from .census import (
    KNOWN_MISPRINTS,
    PUBLISHED_GENUS_TABLE,
    PUBLISHED_GENUS_TOTALS,
    PUBLISHED_MED_TABLE,
    PUBLISHED_MED_TOTALS,
)
from .errors import FrobeniusDivisible
from .oracle import Oracle
from .polytope import (
    add_frobenius_cut,
    add_genus_cut,
    count_lattice_points,
    enumerate_lattice_points,
    frobenius_system,
    genus_system,
    kunz_system,
    med_system,
)
from .semigroup import KunzCoords, semigroup_from_kunz

OK = "OK"
FORMULA_DISCREPANCY = "FORMULA_DISCREPANCY"
ORACLE_DISCREPANCY = "ORACLE_DISCREPANCY"


def _jsonable(v):
    if isinstance(v, Fraction):
        return str(v)
    return v


@dataclass
class VerifyRow:
    check: str
    query: str
    formula_value: object
    polytope_count: object
    oracle_count: Optional[int] = None
    variant: str = "corrected"
    branch: str = ""
    relation: str = "=="
    note: str = ""
    documented: bool = False
    status: str = ""

    def __post_init__(self):
        if not self.status:
            self.status = self._judge()

    def _judge(self) -> str:
        if self.formula_value is not None and self.polytope_count is not None:
            if self.relation == ">=":
                agree = self.formula_value >= self.polytope_count
            else:
                agree = self.formula_value == self.polytope_count
            if not agree:
                return FORMULA_DISCREPANCY
        if self.oracle_count is not None and self.polytope_count is not None:
            if self.oracle_count != self.polytope_count:
                return ORACLE_DISCREPANCY
        return OK

    @property
    def ok(self) -> bool:
        return self.status == OK

    def as_dict(self) -> dict:
        return {k: _jsonable(v) for k, v in asdict(self).items()}


@dataclass
class VerifyReport:
    rows: list[VerifyRow] = field(default_factory=list)

    def add(self, row: VerifyRow) -> VerifyRow:
        self.rows.append(row)
        return row

    def failures(self, strict: bool = False) -> list[VerifyRow]:
        """Non-OK rows; documented printed-formula and misprint rows count only when ``strict``."""
        return [r for r in self.rows if not r.ok and (strict or not r.documented)]

    def summary(self) -> dict[str, dict[str, int]]:
        out: dict[str, dict[str, int]] = {}
        for r in self.rows:
            key = r.check if r.variant == "corrected" else f"{r.check} [{r.variant}]"
            s = out.setdefault(key, {"rows": 0, OK: 0, FORMULA_DISCREPANCY: 0,
                                     ORACLE_DISCREPANCY: 0, "documented": 0})
            s["rows"] += 1
            s[r.status] += 1
            if not r.ok and r.documented:
                s["documented"] += 1
        return out

    def as_dict(self) -> dict:
        return {
            "summary": self.summary(),
            "failures": len(self.failures()),
            "rows": [r.as_dict() for r in self.rows],
        }

    def to_text(self, max_listed: int = 10) -> str:
        lines = []
        width = max((len(k) for k in self.summary()), default=10)
        lines.append(f"{'check':<{width}}  rows    ok  formula  oracle  documented")
        for key, s in self.summary().items():
            lines.append(f"{key:<{width}}  {s['rows']:>4}  {s[OK]:>4}  {s[FORMULA_DISCREPANCY]:>7}"
                         f"  {s[ORACLE_DISCREPANCY]:>6}  {s['documented']:>10}")
        bad = [r for r in self.rows if not r.ok]
        if bad:
            lines.append("")
            lines.append("discrepancies:")
            shown: dict[str, int] = {}
            for r in bad:
                key = f"{r.check}/{r.variant}"
                shown[key] = shown.get(key, 0) + 1
                if shown[key] > max_listed:
                    continue
                tag = "documented" if r.documented else "UNEXPECTED"
                where = f" branch {r.branch}" if r.branch else ""
                extra = f" ({r.note})" if r.note else ""
                lines.append(f"  {r.status} [{tag}] {r.check} {r.variant}{where}: {r.query}: "
                             f"formula={_jsonable(r.formula_value)} enumeration={r.polytope_count}"
                             + (f" oracle={r.oracle_count}" if r.oracle_count is not None else "")
                             + extra)
            for key, n in shown.items():
                if n > max_listed:
                    lines.append(f"  ... {n - max_listed} more in {key}")
        lines.append("")
        n_fail = len(self.failures())
        lines.append("RESULT: " + ("OK" if n_fail == 0 else f"{n_fail} unexpected discrepancies"))
        return "\n".join(lines)


def _count(sys) -> int:
    return count_lattice_points(sys)


def _frob_count(base, F: int) -> int:
    try:
        return _count(add_frobenius_cut(base, F))
    except FrobeniusDivisible:
        return 0


def _formula_rows(report: VerifyReport, check: str, query: str, truth: int,
                  corrected, printed=None, branch: str = "", printed_branch: Optional[str] = None,
                  formula_name: Optional[str] = None) -> None:
    report.add(VerifyRow(check, query, corrected, truth, branch=branch))
    if printed is not None and printed != corrected:
        pb = branch if printed_branch is None else printed_branch
        row = VerifyRow(check, query, printed, truth, variant="printed", branch=pb)
        row.documented = not row.ok and cf.is_documented(formula_name or check, pb)
        report.add(row)


def check_m3(report: VerifyReport, max_genus: int, max_frobenius: int, unique_genus: int) -> None:
    for g in range(2, max_genus + 1):
        report.add(VerifyRow("m3_genus", f"g={g}", cf.count_m3_genus(g), _count(genus_system(3, g))))
        report.add(VerifyRow("m3_med_genus", f"g={g}", cf.count_m3_med_genus(g),
                             _count(add_genus_cut(med_system(3), g))))
    for F in range(1, max_frobenius + 1):
        if F % 3 == 0:
            continue
        truth = _count(frobenius_system(3, F))
        _formula_rows(report, "m3_frobenius", f"F={F}", truth, cf.count_m3_frobenius(F),
                      cf.count_m3_frobenius(F, "printed"), branch="main")
        report.add(VerifyRow("m3_med_frobenius", f"F={F}", cf.count_m3_med_frobenius(F),
                             _count(add_frobenius_cut(med_system(3), F))))
    for g in range(2, unique_genus + 1):
        for F in range(g, 2 * g):
            if F % 3 == 0:
                continue
            points = list(enumerate_lattice_points(add_frobenius_cut(genus_system(3, g), F)))
            coords = cf.unique_m3_kunz(g, F)
            predicted = [] if coords is None else [coords.k]
            row = VerifyRow("m3_unique", f"g={g} F={F}", len(predicted), len(points))
            if row.ok and predicted != points:
                row.status = FORMULA_DISCREPANCY
                row.note = f"point {predicted} vs enumerated {points}"
            elif len(points) > 1:
                row.status = FORMULA_DISCREPANCY
                row.note = "more than one point"
            report.add(row)


def box_grid_rows(report: VerifyReport, steps: int, denom: int = 8,
                  variants: Iterable[str] = ("corrected", "printed")) -> None:
    """All boxes [a,b]x[c,d] with endpoints in (1/denom)*[0..steps], against a point scan."""
    ends = [Fraction(k, denom) for k in range(steps + 1)]
    xs = range(0, steps // denom + 2)
    intervals = [(a, b) for i, a in enumerate(ends) for b in ends[i:]]
    # the points of a box are pairs of points of its sides, so scan each side once
    scan_1d = {iv: sum(1 for x in xs if iv[0] <= x <= iv[1]) for iv in intervals}
    for variant in variants:
        agree = total = 0
        first_bad = None
        for ab in intervals:
            for cd in intervals:
                scanned = scan_1d[ab] * scan_1d[cd]
                got = cf.box_count(ab[0], ab[1], cd[0], cd[1], variant)
                total += 1
                if got == scanned:
                    agree += 1
                elif first_bad is None:
                    first_bad = (ab, cd, got, scanned)
        note = ""
        if first_bad:
            (a, b), (c, d), got, scanned = first_bad
            note = f"first mismatch [{a},{b}]x[{c},{d}]: formula {got}, scan {scanned}"
        row = VerifyRow("box_count", f"{total} boxes, endpoints (1/{denom})*[0..{steps}]",
                        agree, total, variant=variant, branch="product", note=note)
        row.documented = variant == "printed" and not row.ok and cf.is_documented("box_count", "product")
        report.add(row)


def check_m4(report: VerifyReport, max_genus: int, max_frobenius: int, grid_genus: int) -> None:
    for g in range(3, max_genus + 1):
        truth = _count(genus_system(4, g))
        _formula_rows(report, "m4_genus", f"g={g}", truth, cf.count_m4_genus(g),
                      cf.count_m4_genus(g, "printed"), branch="main")
    for g in range(9, max_genus + 1):
        truth = _count(genus_system(4, g))
        closed = cf.region_counts_m4(g)
        scanned = cf.region_scan_m4(g)
        report.add(VerifyRow("m4_regions", f"g={g}", closed.total, truth))
        for name in closed._fields:
            report.add(VerifyRow("m4_region_scan", f"{name} g={g}", getattr(closed, name),
                                 getattr(scanned, name)))
    kunz4 = kunz_system(4)
    for F in range(1, max_frobenius + 1):
        truth = _frob_count(kunz4, F)
        _formula_rows(report, "m4_frobenius", f"F={F}", truth, cf.count_m4_frobenius(F),
                      cf.count_m4_frobenius(F, "printed"), branch=cf.m4_frobenius_branch(F))
    med4 = med_system(4)
    for g in range(3, grid_genus + 1):
        plain = genus_system(4, g)
        med = add_genus_cut(med4, g)
        for F in range(g, 2 * g):
            q = f"g={g} F={F}"
            truth = _frob_count(plain, F)
            _formula_rows(report, "m4_genus_frobenius", q, truth,
                          cf.count_m4_genus_frobenius(g, F), cf.count_m4_genus_frobenius(g, F, "printed"),
                          branch=cf.M4_GENUS_FROBENIUS.branch(g, F),
                          printed_branch=cf.M4_GENUS_FROBENIUS_PRINTED.branch(g, F))
            med_truth = _frob_count(med, F)
            _formula_rows(report, "m4_med_genus_frobenius", q, med_truth,
                          cf.count_m4_med_genus_frobenius(g, F),
                          cf.count_m4_med_genus_frobenius(g, F, "printed"),
                          branch=cf.M4_MED_GENUS_FROBENIUS.branch(g, F),
                          printed_branch=cf.M4_MED_GENUS_FROBENIUS_PRINTED.branch(g, F))
            bound = cf.med4_pair_upper_bound(g, F)
            report.add(VerifyRow("med4_pair_count", q, bound, med4_pair_solutions(g, F),
                                 branch=cf.med4_pair_branch(g, F)))
            report.add(VerifyRow("med4_pair_dominance", q, bound, med_truth, relation=">=",
                                 branch=cf.med4_pair_branch(g, F)))


def med4_pair_solutions(g: int, F: int) -> int:
    """Direct count of n2 + n3 = 4g - F + 2 with 4 < n2 < n3 < F + 4."""
    total = 4 * g - F + 2
    return sum(1 for n2 in range(5, F + 4) if n2 < total - n2 < F + 4)


def check_tables(report: VerifyReport, oracle: Optional[Oracle], oracle_depth: int) -> None:
    for med, table, totals, name in (
        (False, PUBLISHED_GENUS_TABLE, PUBLISHED_GENUS_TOTALS, "table_genus"),
        (True, PUBLISHED_MED_TABLE, PUBLISHED_MED_TOTALS, "table_med"),
    ):
        kind = "med" if med else "genus"
        for g, row in table.items():
            counted = []
            for m in range(2, g + 2):
                sys = add_genus_cut(med_system(m), g) if med else genus_system(m, g)
                c = _count(sys)
                counted.append(c)
                orc = None
                if oracle is not None and g <= oracle_depth:
                    orc = oracle.count(g, m, med=True if med else None)
                r = VerifyRow(name, f"g={g} m={m}", row[m - 2], c, orc, variant="published")
                r.documented = not r.ok and (kind, g, m) in KNOWN_MISPRINTS
                report.add(r)
            orc_total = None
            if oracle is not None and g <= oracle_depth:
                orc_total = oracle.count(g, med=True if med else None)
            r = VerifyRow(name, f"g={g} total", totals[g], sum(counted), orc_total, variant="published",
                          note=f"printed row sums to {sum(row)}" if sum(row) != totals[g] else "")
            r.documented = not r.ok and (kind, g, "total") in KNOWN_MISPRINTS
            report.add(r)


def check_oracle_bijection(report: VerifyReport, oracle: Oracle, depth: int) -> None:
    for g in range(1, depth + 1):
        total = 0
        for m in range(2, g + 2):
            mapped = {semigroup_from_kunz(KunzCoords(m, p)).generators
                      for p in enumerate_lattice_points(genus_system(m, g))}
            truth = {s.generators for s in oracle.semigroups(g, multiplicity=m)}
            total += len(truth)
            row = VerifyRow("oracle_bijection", f"g={g} m={m}", None, len(mapped), len(truth))
            if row.ok and mapped != truth:
                row.status = ORACLE_DISCREPANCY
                row.note = "same size, different semigroups"
            report.add(row)
        report.add(VerifyRow("oracle_level_size", f"g={g}", None, total, len(oracle.level(g))))


def check_partitions(report: VerifyReport, max_m: int = 5, max_genus: int = 12,
                     max_frobenius: int = 30) -> None:
    for m in range(2, max_m + 1):
        for g in range(1, max_genus + 1):
            base = genus_system(m, g)
            parts = sum(_frob_count(base, F) for F in range(g, 2 * g))
            report.add(VerifyRow("partition_by_frobenius", f"m={m} g={g}", parts, _count(base)))
        kunz = kunz_system(m)
        for F in range(1, max_frobenius + 1):
            if F % m == 0:
                continue
            base = add_frobenius_cut(kunz, F)
            parts = sum(_count(add_genus_cut(base, g)) for g in range((F + 1) // 2, F + 1))
            report.add(VerifyRow("partition_by_genus", f"m={m} F={F}", parts, _count(base)))


def run_verify(max_genus: int = 200, max_frobenius: int = 400, grid_genus: int = 60,
               unique_genus: int = 100, oracle_depth: int = 15, box_steps: int = 24,
               oracle: Optional[Oracle] = None,
               progress: Optional[Callable[[str], None]] = None) -> VerifyReport:
    report = VerifyReport()
    say = progress or (lambda _msg: None)
    oracle = oracle or (Oracle(max_genus=max(oracle_depth, 1)) if oracle_depth > 0 else None)
    say("multiplicity 3")
    check_m3(report, max_genus, max_frobenius, min(unique_genus, max_genus))
    say("boxes")
    box_grid_rows(report, box_steps)
    say("multiplicity 4")
    check_m4(report, max_genus, max_frobenius, min(grid_genus, max_genus))
    say("census tables")
    check_tables(report, oracle, oracle_depth)
    if oracle is not None:
        say("oracle bijection")
        check_oracle_bijection(report, oracle, min(oracle_depth, 12))
    say("partitions")
    check_partitions(report)
    return report
