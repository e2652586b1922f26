from fractions import Fraction

import pytest

from kunzcount import closed_forms as cf
from kunzcount.errors import DomainError, FrobeniusDivisible
from kunzcount.polytope import add_frobenius_cut, count_lattice_points, genus_system, med_system, add_genus_cut


def test_floor_ceil_are_mathematical():
    assert cf.fl(-3, 2) == -2 and cf.ce(-3, 2) == -1
    assert cf.fl(Fraction(-3, 2)) == -2 and cf.ce(Fraction(7, 2)) == 4
    assert cf.fl(Fraction(5, 4), 2) == 0 and cf.ce(Fraction(-1, 3)) == 0


@pytest.mark.parametrize("g,expected", [(2, 1), (6, 3), (15, 6)])
def test_m3_genus(g, expected):
    assert cf.count_m3_genus(g) == expected


@pytest.mark.parametrize("g,expected", [(5, 2), (8, 3), (2, 1)])
def test_m3_med_genus(g, expected):
    assert cf.count_m3_med_genus(g) == expected


@pytest.mark.parametrize("F,plain,med", [(4, 1, 1), (5, 2, 1), (7, 2, 1)])
def test_m3_frobenius(F, plain, med):
    assert cf.count_m3_frobenius(F) == plain
    assert cf.count_m3_med_frobenius(F) == med


def test_m3_frobenius_one():
    assert cf.count_m3_frobenius(1) == 0
    assert cf.count_m3_frobenius(1, "printed") == 1
    with pytest.raises(FrobeniusDivisible):
        cf.count_m3_frobenius(6)
    with pytest.raises(DomainError):
        cf.count_m3_genus(1)


def test_unique_m3():
    s = cf.unique_m3_semigroup(3, 5)
    assert s.generators == (3, 4) and cf.unique_m3_kunz(3, 5).k == (1, 2)
    assert cf.unique_m3_semigroup(4, 7).generators == (3, 5)
    assert cf.unique_m3_semigroup(2, 7) is None
    for g in range(2, 30):
        for F in range(g, 2 * g):
            if F % 3:
                s = cf.unique_m3_semigroup(g, F)
                feasible = count_lattice_points(add_frobenius_cut(genus_system(3, g), F))
                assert feasible == (s is not None)
                if s is not None:
                    assert (s.genus, s.frobenius) == (g, F)
                    assert set(s.generators) <= {3, F + 3, 3 * g - F}


def test_box_count_examples():
    assert cf.box_count(0, 2, 0, 3) == 12
    assert cf.box_count(Fraction(1, 2), Fraction(5, 2), Fraction(1, 2), Fraction(1, 2)) == 0
    assert cf.box_count(Fraction(21, 8), Fraction(11, 2), Fraction(17, 8), 5) == 9
    assert cf.box_count(0, 0, 0, 0, "printed") != 1 or cf.box_count(0, 1, 0, 1, "printed") != 4


def test_box_count_small_grid_against_scan():
    ends = [Fraction(k, 4) for k in range(-8, 13)]
    for a in ends:
        for b in ends:
            for c in ends[::3]:
                for d in ends[::2]:
                    scan = sum(1 for x in range(-3, 5) for y in range(-3, 5) if a <= x <= b and c <= y <= d)
                    assert cf.box_count(a, b, c, d) == scan


@pytest.mark.parametrize("g,expected", [(3, 1), (4, 3), (8, 9), (14, 23)])
def test_m4_genus(g, expected):
    assert cf.count_m4_genus(g) == expected


def test_m4_genus_printed_reading_differs():
    assert cf.count_m4_genus(4, "printed") != 3
    with pytest.raises(DomainError):
        cf.count_m4_genus(2)


def test_regions():
    for g in (9, 10, 23, 48, 101):
        closed = cf.region_counts_m4(g)
        assert closed == cf.region_scan_m4(g)
        assert closed.total == count_lattice_points(genus_system(4, g))
        assert closed.t_c == 1
    with pytest.raises(DomainError):
        cf.region_counts_m4(8)


@pytest.mark.parametrize("F,expected", [(3, 1), (5, 1), (6, 2), (8, 0), (1, 0), (2, 0)])
def test_m4_frobenius(F, expected):
    assert cf.count_m4_frobenius(F) == expected


def test_m4_frobenius_printed_coefficient():
    assert cf.count_m4_frobenius(21, "printed") == Fraction(447, 16)
    assert cf.count_m4_frobenius(21) == 17
    assert cf.m4_frobenius_branch(21) == "F=1 mod 4, F>=21"


def test_m4_genus_frobenius_examples():
    assert cf.count_m4_genus_frobenius(4, 5) == 1
    assert cf.count_m4_genus_frobenius(4, 7) == 1
    assert sum(cf.count_m4_genus_frobenius(9, F) for F in range(9, 18)) == 11
    assert cf.count_m4_genus_frobenius(3, 3) == 1
    assert cf.count_m4_genus_frobenius(3, 3, "printed") == 0


def test_med4_pair_bound_examples():
    assert cf.med4_pair_upper_bound(7, 9) == 2
    assert cf.med4_pair_upper_bound(5, 7) == 3


def test_med4_exact():
    assert cf.count_m4_med_genus_frobenius(7, 5, "printed") == 2
    assert cf.count_m4_med_genus_frobenius(7, 5) == 0
    assert sum(cf.count_m4_med_genus_frobenius(8, F) for F in range(8, 16)) == 5
    truth = count_lattice_points(add_frobenius_cut(add_genus_cut(med_system(4), 5), 6))
    assert cf.count_m4_med_genus_frobenius(5, 6) == truth


def test_med4_sandwich():
    for g in range(3, 13):
        for F in range(g, 2 * g):
            assert cf.count_m4_med_genus_frobenius(g, F) <= cf.med4_pair_upper_bound(g, F)


def _guard_overlaps(pw):
    bad = []
    for g in range(1, 201):
        for F in range(1, 201):
            hits = pw.matching(g, F)
            if len(hits) > 1:
                bad.append((g, F, hits))
    return bad


@pytest.mark.parametrize("pw", [cf.M4_GENUS_FROBENIUS, cf.M4_GENUS_FROBENIUS_PRINTED,
                                cf.M4_MED_GENUS_FROBENIUS], ids=lambda p: p.name)
def test_guards_disjoint(pw):
    assert _guard_overlaps(pw) == []


def test_corrections_table():
    names = {c.formula for c in cf.CORRECTIONS}
    assert {"box_count", "m4_genus", "m4_frobenius", "m3_frobenius"} <= names
    assert cf.is_documented("m4_frobenius", "F=1 mod 4, F>=21")
    assert not cf.is_documented("m4_frobenius", "F=3 mod 4")
    assert cf.is_documented("m4_med_genus_frobenius", "anything")
    with pytest.raises(ValueError):
        cf.count_m4_genus(5, "verbatim")
