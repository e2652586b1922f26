"""Closed-form counts for multiplicities 3 and 4.

Formulas are transcribed as published.  Where a printed formula disagrees
with lattice enumeration, the published text stays available as
``variant="printed"`` and the confirmed fix is the default
``variant="corrected"``; :data:`CORRECTIONS` lists each fix and the branches
it touches.  All arithmetic is exact (``Fraction``), with mathematical
floor/ceiling on negative arguments.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, NamedTuple, Optional, Union

from .errors import DomainError, FrobeniusDivisible
from .semigroup import KunzCoords, SemigroupDescriptor, is_valid_kunz, semigroup_from_kunz

Number = Union[int, Fraction]
VARIANTS = ("printed", "corrected")


def _ratio(num, den) -> Fraction:
    if den == 1:
        return num if isinstance(num, Fraction) else Fraction(num)
    return Fraction(num) / den


def fl(num, den=1) -> int:
    """Mathematical floor of num/den (never truncation)."""
    if isinstance(num, int) and isinstance(den, int):
        return num // den
    q = _ratio(num, den)
    return q.numerator // q.denominator


def ce(num, den=1) -> int:
    if isinstance(num, int) and isinstance(den, int):
        return -((-num) // den)
    q = _ratio(num, den)
    return -((-q.numerator) // q.denominator)


def _exact(v) -> Number:
    v = Fraction(v)
    return int(v) if v.denominator == 1 else v


def _check_variant(variant: str) -> None:
    if variant not in VARIANTS:
        raise ValueError(f"variant must be one of {VARIANTS}, got {variant!r}")


@dataclass(frozen=True)
class Correction:
    formula: str
    branches: tuple[str, ...]
    printed: str
    corrected: str
    reason: str


CORRECTIONS = (
    Correction(
        "m3_frobenius", ("main",),
        "floor((F+1)/3) - ceil((F-1)/6) + 1 for every F not divisible by 3",
        "same expression for F >= 2; 0 at F = 1",
        "at F = 1 the bound x_2 >= 1 overrides x_2 >= (F-1)/6 and the printed value is 1, "
        "but no multiplicity-3 semigroup has Frobenius number 1",
    ),
    Correction(
        "box_count", ("product",),
        "(1 + floor(b) + ceil(a)) * (1 + floor(d) + ceil(b))",
        "(floor(b) - ceil(a) + 1) * (floor(d) - ceil(c) + 1), clamped at 0",
        "sign and index slips; the printed form fails even on the unit box",
    ),
    Correction(
        "m4_genus", ("main",),
        "... + 5/2 floor(g/4) + + floor(g/2) + ...",
        "... + 5/2 floor(g/4) + floor(g/2) + ...",
        "the doubled plus is a single term; reading it as 2*floor(g/2) breaks every g",
    ),
    Correction(
        "m4_frobenius", ("F=1 mod 4, F>=21",),
        "... + 5F/6 - 11/32 + F^2/32",
        "... + 5F/16 - 11/32 + F^2/32",
        "5F/6 gives non-integers; 5F/16 matches enumeration for every F >= 21",
    ),
    Correction(
        "m4_frobenius", ("F=2 mod 4",),
        "product formula for every F = 2 mod 4",
        "product formula for F >= 6; 0 at F = 2",
        "at F = 2 the product evaluates to 1 but no multiplicity-4 semigroup has F = 2",
    ),
    Correction(
        "m4_genus_frobenius", ("otherwise",),
        "11 branches, 0 otherwise",
        "extra branch (g, F) = (3, 3) -> 1",
        "<4,5,6,7> has g = F = 3 and falls outside every printed guard",
    ),
    Correction(
        "m4_med_genus_frobenius", ("*",),
        "8 printed branches, including a literal 2 at F = 5, g = 7",
        "interval count of the pinned two-variable slice, one branch per F mod 4",
        "printed guards miss or mis-assign many feasible (g, F); F = 5, g = 7 is infeasible "
        "since F >= g always",
    ),
)


def corrections_for(formula: str) -> list[Correction]:
    return [c for c in CORRECTIONS if c.formula == formula]


def is_documented(formula: str, branch: str) -> bool:
    """True if a printed-variant failure in ``branch`` is covered by :data:`CORRECTIONS`."""
    return any(c.formula == formula and ("*" in c.branches or branch in c.branches)
               for c in CORRECTIONS)


@dataclass(frozen=True)
class Piece:
    name: str
    guard: Callable[[int, int], bool]
    value: Callable[[int, int], Number]
    text: str = ""


@dataclass(frozen=True)
class PiecewiseCount:
    """Guarded branches over (g, F); evaluation takes the first matching guard."""

    name: str
    pieces: tuple[Piece, ...]
    default: Number = 0

    def matching(self, g: int, F: int) -> list[str]:
        return [p.name for p in self.pieces if p.guard(g, F)]

    def branch(self, g: int, F: int) -> str:
        for p in self.pieces:
            if p.guard(g, F):
                return p.name
        return "otherwise"

    def __call__(self, g: int, F: int) -> Number:
        for p in self.pieces:
            if p.guard(g, F):
                return _exact(p.value(g, F))
        return self.default


# ---------------------------------------------------------------- m = 3

def count_m3_genus(g: int) -> int:
    if g < 2:
        raise DomainError(f"genus must be at least 2, got {g}")
    return ce(g + 1, 3)


def count_m3_med_genus(g: int) -> int:
    if g < 2:
        raise DomainError(f"genus must be at least 2, got {g}")
    return ce(g - 1, 3)


def _check_m3_frobenius(F: int) -> None:
    if F % 3 == 0:
        raise FrobeniusDivisible(f"F={F} is a multiple of 3")
    if F < 1:
        raise DomainError(f"Frobenius number must be positive, got {F}")


def count_m3_frobenius(F: int, variant: str = "corrected") -> int:
    _check_m3_frobenius(F)
    _check_variant(variant)
    if variant == "corrected" and F == 1:
        return 0
    return fl(F + 1, 3) - ce(F - 1, 6) + 1


def count_m3_med_frobenius(F: int) -> int:
    _check_m3_frobenius(F)
    return fl(F + 1, 3) - ce(F + 2, 6) + 1


def unique_m3_kunz(g: int, F: int) -> Optional[KunzCoords]:
    if F % 3 == 0:
        raise FrobeniusDivisible(f"F={F} is a multiple of 3")
    if F % 3 == 1:
        k = ((F + 2) // 3, (3 * g - F - 2) // 3)
    else:
        k = ((3 * g - F - 1) // 3, (F + 1) // 3)
    if not is_valid_kunz(3, k):
        return None
    coords = KunzCoords(3, k)
    if coords.genus != g or coords.frobenius != F:
        return None
    return coords


def unique_m3_semigroup(g: int, F: int) -> Optional[SemigroupDescriptor]:
    """The only multiplicity-3 semigroup with genus g and Frobenius number F, i.e. <3, F+3, 3g-F>."""
    coords = unique_m3_kunz(g, F)
    return None if coords is None else semigroup_from_kunz(coords)


# ---------------------------------------------------------------- boxes and regions

def box_count(a, b, c, d, variant: str = "corrected") -> int:
    """Integer points of the box [a, b] x [c, d] (rational endpoints)."""
    _check_variant(variant)
    if variant == "printed":
        return (1 + fl(b) + ce(a)) * (1 + fl(d) + ce(b))
    nx = fl(b) - ce(a) + 1
    ny = fl(d) - ce(c) + 1
    if nx <= 0 or ny <= 0:
        return 0
    return nx * ny


class RegionCounts(NamedTuple):
    t_a: int
    t_b: int
    r: int
    t_c: int

    @property
    def total(self) -> int:
        return self.t_a + self.t_b + self.r - self.t_c


def region_counts_m4(g: int) -> RegionCounts:
    """Closed-form point counts of the triangles T_A, T_B, T_C and rectangle R (g >= 9)."""
    if g < 9:
        raise DomainError(f"region decomposition needs g >= 9, got {g}")
    t_a = Fraction(1, 2) * (fl(g + 5, 6) - fl(g, 4) - 1) * (
        2 * g - 3 * fl(g, 4) - 2 * fl(g, 2) - 2 - 3 * fl(g + 5, 6))
    t_b = Fraction(1, 2) * (fl(g + 2, 6) - fl(g + 2, 4)) * (
        -3 * fl(g + 2, 4) + 2 * fl(g, 2) - 3 * fl(g + 2, 6) - 1)
    r = box_count(Fraction(2 * g + 1, 8), Fraction(g + 1, 2), Fraction(2 * g - 3, 8), Fraction(g, 2))
    return RegionCounts(_exact(t_a), _exact(t_b), r, 1)


def region_scan_m4(g: int) -> RegionCounts:
    """Brute-force 2-D scan of the four regions, straight from their inequalities."""
    span = range(-2, g + 3)

    def scan(pred):
        return sum(1 for x in span for y in span if pred(x, y))

    return RegionCounts(
        scan(lambda x, y: 3 * x + y >= g and 8 * x <= 2 * g + 1 and 2 * y <= g),
        scan(lambda x, y: x + 3 * y >= g - 1 and 2 * x <= g + 1 and 8 * y <= 2 * g - 3),
        scan(lambda x, y: 2 * g + 1 <= 8 * x and 2 * x <= g + 1 and 2 * g - 3 <= 8 * y and 2 * y <= g),
        scan(lambda x, y: x + y >= g and 2 * x <= g + 1 and 2 * y <= g),
    )


# ---------------------------------------------------------------- m = 4

def _m4_genus_expr(g: int, half_term: int = 1) -> Fraction:
    q4, q2 = fl(g, 4), fl(g, 2)
    p6, r6 = fl(g + 5, 6), fl(g + 2, 6)
    s4, h2 = fl(g + 2, 4), fl(g + 1, 2)
    c3, c7 = ce(2 * g - 3, 8), ce(2 * g - 7, 8)
    half = Fraction(1, 2)
    return (-g + Fraction(5, 2) * q4 + half_term * q2 + half * p6 + p6 * g - p6 * q2
            - Fraction(3, 2) * p6 ** 2 - q4 * g + Fraction(3, 2) * q4 ** 2 + q4 * q2
            - half * r6 + r6 * q2 - Fraction(3, 2) * r6 ** 2 + half * s4
            + Fraction(3, 2) * s4 ** 2 - s4 * q2 + h2 * q2 - h2 * c3 + h2
            - c7 * q2 + c7 * c3 - c7)


def count_m4_genus(g: int, variant: str = "corrected") -> Number:
    """Multiplicity-4 semigroups of genus g.

    ``variant="printed"`` reads the doubled plus as two copies of floor(g/2).
    """
    if g < 3:
        raise DomainError(f"genus must be at least 3, got {g}")
    _check_variant(variant)
    if g == 3:
        return 1
    return _exact(_m4_genus_expr(g, 2 if variant == "printed" else 1))


def count_m4_frobenius(F: int, variant: str = "corrected") -> Number:
    _check_variant(variant)
    return _exact(_m4_frobenius_value(F, variant)[1])


def m4_frobenius_branch(F: int) -> str:
    return _m4_frobenius_value(F, "printed")[0]


def _m4_frobenius_value(F: int, variant: str) -> tuple[str, Fraction]:
    r = F % 4
    if r == 1:
        if 5 <= F <= 9:
            return "F=1 mod 4, 5<=F<=9", Fraction(F - 1, 4) ** 2
        if 13 <= F <= 17:
            return "F=1 mod 4, 13<=F<=17", Fraction(F * F - 14 * F + 141, 16)
        if F >= 21:
            a, b = fl(F + 1, 12), fl(F + 5, 8)
            lin = Fraction(5 * F, 6) if variant == "printed" else Fraction(5 * F, 16)
            return "F=1 mod 4, F>=21", (
                Fraction(-3, 2) * a * a + Fraction(1, 4) * a * F - Fraction(3, 4) * a
                + b * b - Fraction(1, 4) * b * F + Fraction(1, 4) * b
                + lin - Fraction(11, 32) + Fraction(F * F, 32))
        return "otherwise", Fraction(0)
    if r == 2:
        if variant == "corrected" and F < 6:
            return "F=2 mod 4", Fraction(0)
        return "F=2 mod 4", (
            (Fraction(F, 4) - fl(F + 1, 8) + Fraction(1, 2))
            * (Fraction(F, 4) - fl(F + 5, 8) + Fraction(1, 2)))
    if r == 3:
        a, b = fl(F + 1, 8), fl(F, 12)
        return "F=3 mod 4", (
            Fraction(F * F, 32) + Fraction(7 * F, 16) - Fraction(19, 32) + Fraction(3, 4) * a
            + a * a + Fraction(1, 4) * b * F - Fraction(9, 4) * b - Fraction(3, 2) * b * b
            - Fraction(1, 4) * a * F)
    return "otherwise", Fraction(0)


def _gf_pieces() -> tuple[Piece, ...]:
    F1 = lambda F: F % 4 == 1  # noqa: E731
    F2 = lambda F: F % 4 == 2  # noqa: E731
    F3 = lambda F: F % 4 == 3  # noqa: E731
    return (
        Piece("1a", lambda g, F: F1(F) and 5 * F - 8 * g >= 5 and 2 * g - F >= 5,
              lambda g, F: Fraction(F + 3, 2) - fl(2 * g + F + 5, 6),
              "F=1 mod 4, 5F-8g>=5, 2g-F>=5"),
        Piece("1b", lambda g, F: F1(F) and 4 * g - F >= 23 and 1 <= 2 * g - F <= 3,
              lambda g, F: g - fl(2 * g + F + 5, 6),
              "F=1 mod 4, 4g-F>=23, 1<=2g-F<=3"),
        Piece("1c", lambda g, F: F1(F) and 5 * F - 8 * g <= 1 and 4 * g - 3 * F <= 1 and 2 * g - F >= 5,
              lambda g, F: Fraction(3 * F - 4 * g + 5, 4),
              "F=1 mod 4, 5F-8g<=1, 4g-3F<=1, 2g-F>=5"),
        Piece("1d", lambda g, F: F1(F) and 11 <= 4 * g - F <= 19 and 1 <= 2 * g - F <= 3,
              lambda g, F: Fraction(4 * g - F - 7, 4),
              "F=1 mod 4, 11<=4g-F<=19, 1<=2g-F<=3"),
        Piece("2a", lambda g, F: F2(F) and 8 * g - 5 * F <= 2 and F >= 14 and 2 * g - F >= 2,
              lambda g, F: Fraction(2 * g - F, 2),
              "F=2 mod 4, 8g-5F<=2, F>=14, 2g-F>=2"),
        Piece("2b", lambda g, F: F2(F) and 8 * g - 5 * F >= 6 and 4 * g - 3 * F <= 2 and 2 * g - F >= 6,
              lambda g, F: Fraction(3 * F - 4 * g + 6, 4),
              "F=2 mod 4, 8g-5F>=6, 4g-3F<=2, 2g-F>=6"),
        Piece("2c", lambda g, F: F2(F) and 8 * g - 5 * F >= 6 and F >= 6 and 2 * g - F <= 4,
              lambda g, F: Fraction(F - 2, 4),
              "F=2 mod 4, 8g-5F>=6, F>=6, 2g-F<=4"),
        Piece("2d", lambda g, F: F2(F) and 8 * g - 5 * F <= 2 and F <= 10 and 2 * g - F >= 2,
              lambda g, F: Fraction(4 * g - F - 2, 4) - fl(F + 6, 8),
              "F=2 mod 4, 8g-5F<=2, F<=10, 2g-F>=2"),
        Piece("3a", lambda g, F: F3(F) and 8 * g - 5 * F >= 9 and 4 * g - 3 * F <= 3 and 2 * g - F >= 5,
              lambda g, F: Fraction(3 * F - 4 * g + 7, 4),
              "F=3 mod 4, 8g-5F>=9, 4g-3F<=3, 2g-F>=5"),
        Piece("3b", lambda g, F: F3(F) and 8 * g - 5 * F <= 5 and 2 * g - F >= 5,
              lambda g, F: Fraction(F + 3, 2) - fl(2 * g + F + 5, 6),
              "F=3 mod 4, 8g-5F<=5, 2g-F>=5"),
        Piece("3c", lambda g, F: F3(F) and 8 * g - 5 * F <= 5 and 4 * g - F >= 9 and 1 <= 2 * g - F <= 3,
              lambda g, F: g - fl(2 * g + F + 5, 6),
              "F=3 mod 4, 8g-5F<=5, 4g-F>=9, 1<=2g-F<=3"),
    )


M4_GENUS_FROBENIUS_PRINTED = PiecewiseCount("m4_genus_frobenius", _gf_pieces())
M4_GENUS_FROBENIUS = PiecewiseCount(
    "m4_genus_frobenius",
    _gf_pieces() + (Piece("g=F=3", lambda g, F: g == 3 and F == 3, lambda g, F: 1, "g=3, F=3"),),
)


def count_m4_genus_frobenius(g: int, F: int, variant: str = "corrected") -> Number:
    _check_variant(variant)
    table = M4_GENUS_FROBENIUS if variant == "corrected" else M4_GENUS_FROBENIUS_PRINTED
    return table(g, F)


def med4_pair_upper_bound(g: int, F: int) -> int:
    """Solutions of n2 + n3 = 4g - F + 2 with 4 < n2 < n3 < F + 4 (no coprimality filter)."""
    if 2 * g - F <= 2 and 4 * g - F >= 9:
        return 2 * g - fl(F, 2) - 4
    if 2 * g - F >= 3 and 4 * g - 3 * F <= 3:
        return 2 * F - 2 * g - fl(F, 2) + 2
    return 0


def med4_pair_branch(g: int, F: int) -> str:
    if 2 * g - F <= 2 and 4 * g - F >= 9:
        return "2g-F<=2, 4g-F>=9"
    if 2 * g - F >= 3 and 4 * g - 3 * F <= 3:
        return "2g-F>=3, 4g-3F<=3"
    return "otherwise"


def _med_printed_pieces() -> tuple[Piece, ...]:
    return (
        Piece("1a", lambda g, F: F % 4 == 1 and -8 * g + 5 * F >= 1 and 2 * g - F <= 3,
              lambda g, F: Fraction(F + 1, 2) - fl(2 * g + F + 1, 6),
              "F=1 mod 4, 5F-8g>=1, 2g-F<=3"),
        Piece("1b", lambda g, F: F % 4 == 1 and 8 * g - 5 * F >= 3 and 4 * g - F >= 15 and 4 * g - 3 * F <= 1,
              lambda g, F: Fraction(3 * F + 5, 4) - g,
              "F=1 mod 4, 8g-5F>=3, 4g-F>=15, 4g-3F<=1"),
        Piece("2a", lambda g, F: F % 4 == 2 and 8 * g - 5 * F <= 6 and 2 * g - F >= 2 and 4 * g - F >= 14,
              lambda g, F: Fraction(F, 2) - fl(2 * g + F, 6),
              "F=2 mod 4, 8g-5F<=6, 2g-F>=2, 4g-F>=14"),
        Piece("2b", lambda g, F: F % 4 == 2 and 8 * g - 5 * F >= 10 and 4 * g - 3 * F <= 2,
              lambda g, F: Fraction(3 * F + 6, 4) - g,
              "F=2 mod 4, 8g-5F>=10, 4g-3F<=2"),
        Piece("3a", lambda g, F: F % 4 == 3 and 8 * g - 5 * F <= 1 and 2 * g - F >= 5,
              lambda g, F: Fraction(F + 3, 2) - fl(2 * g + F + 5, 6),
              "F=3 mod 4, 8g-5F<=1, 2g-F>=5"),
        Piece("3b", lambda g, F: F % 4 == 3 and 8 * g - 5 * F <= 1 and 4 * g - F >= 13 and 1 <= 2 * g - F <= 3,
              lambda g, F: g - fl(2 * g + F + 5, 6),
              "F=3 mod 4, 8g-5F<=1, 4g-F>=13, 1<=2g-F<=3"),
        Piece("3c", lambda g, F: F % 4 == 3 and 8 * g - 5 * F >= 5 and 4 * g - 3 * F <= 3 and 2 * g - F >= 5,
              lambda g, F: Fraction(3 * F + 7, 4) - g,
              "F=3 mod 4, 8g-5F>=5, 4g-3F<=3, 2g-F>=5"),
        Piece("F=5,g=7", lambda g, F: F == 5 and g == 7, lambda g, F: 2, "F=5, g=7"),
    )


def _interval(lo: int, hi: int) -> int:
    return max(0, hi - lo + 1)


# Fixing F pins the Kunz coordinate x_t (t = F mod 4) at (F + 4 - t)/4; the
# genus cut leaves a segment a + b = s in the other two coordinates, and the
# MED rows plus Frobenius bounds cut it to an interval in a.

def _med_slice_f1(g: int, F: int) -> int:
    t = (F + 3) // 4
    s = g - t
    if s < t:
        return 0
    return _interval(max(1, ce(s + 1 - t, 2), s - t + 1), min(s - 1, t - 1, fl(2 * s, 3)))


def _med_slice_f2(g: int, F: int) -> int:
    t = (F + 2) // 4
    s = g - t
    return _interval(max(1, ce(t + 1, 2), ce(s + 1 - t, 2), s - t + 1),
                     min(s - 1, fl(s + t, 2), fl(2 * s - t, 2), t))


def _med_slice_f3(g: int, F: int) -> int:
    t = (F + 1) // 4
    s = g - t
    if s < t + 1:
        return 0
    return _interval(max(1, ce(s + 1, 3), s - t), min(s - 1, fl(s + t, 2), t))


M4_MED_GENUS_FROBENIUS_PRINTED = PiecewiseCount("m4_med_genus_frobenius", _med_printed_pieces())
M4_MED_GENUS_FROBENIUS = PiecewiseCount("m4_med_genus_frobenius", (
    Piece("F=1 mod 4", lambda g, F: F % 4 == 1, _med_slice_f1, "x_1 = (F+3)/4"),
    Piece("F=2 mod 4", lambda g, F: F % 4 == 2, _med_slice_f2, "x_2 = (F+2)/4"),
    Piece("F=3 mod 4", lambda g, F: F % 4 == 3, _med_slice_f3, "x_3 = (F+1)/4"),
))


def count_m4_med_genus_frobenius(g: int, F: int, variant: str = "corrected") -> Number:
    _check_variant(variant)
    table = M4_MED_GENUS_FROBENIUS if variant == "corrected" else M4_MED_GENUS_FROBENIUS_PRINTED
    return table(g, F)
