import pytest

from kunzcount.errors import BadMultiplicity, DimensionMismatch, DuplicateCut, FrobeniusDivisible, Unbounded
from kunzcount.polytope import (
    LinearConstraint,
    LinearSystem,
    add_frobenius_cut,
    add_genus_cut,
    count_lattice_points,
    enumerate_lattice_points,
    frobenius_system,
    genus_system,
    kunz_system,
    med_system,
    variable_bounds,
)


def _rowset(sys):
    return {(c.coeffs, c.relation, c.rhs) for c in sys.constraints}


def test_genus_system_m3_rows():
    assert _rowset(genus_system(3, 7)) == {
        ((1, 0), ">=", 1), ((0, 1), ">=", 1),
        ((2, -1), ">=", 0), ((-1, 2), ">=", -1),
        ((1, 1), "=", 7),
    }


def test_genus_system_m4_rows():
    rows = _rowset(genus_system(4, 9))
    for expected in [((2, -1, 0), ">=", 0), ((1, 1, -1), ">=", 0), ((-1, 1, 1), ">=", -1),
                     ((0, -1, 2), ">=", -1), ((1, 1, 1), "=", 9)]:
        assert expected in rows
    # (1,3) and (2,2) sum to m and contribute no row; (3,3) gives x3+x3-x2 >= -1
    assert ((0, -1, 2), ">=", -1) in rows
    assert len(rows) == 3 + 4 + 1


def test_genus_system_m2():
    assert _rowset(genus_system(2, 5)) == {((1,), ">=", 1), ((1,), "=", 5)}
    assert all(count_lattice_points(genus_system(2, g)) == 1 for g in range(1, 30))


def test_med_system_rows():
    assert _rowset(med_system(3)) == {((1, 0), ">=", 1), ((0, 1), ">=", 1), ((2, -1), ">=", 1), ((-1, 2), ">=", 0)}
    assert _rowset(med_system(2)) == {((1,), ">=", 1)}
    with pytest.raises(BadMultiplicity):
        med_system(1)
    with pytest.raises(BadMultiplicity):
        genus_system(1, 3)


def test_frobenius_system():
    sys = frobenius_system(3, 7)
    assert ((3, 0), "=", 9) in _rowset(sys)
    assert variable_bounds(sys) == [(3, 3), (1, 2)]
    assert ((0, 4, 0), "=", 8) in _rowset(frobenius_system(4, 6))
    with pytest.raises(FrobeniusDivisible):
        frobenius_system(3, 6)


def test_cuts_compose_and_refuse_duplicates():
    a = add_frobenius_cut(genus_system(3, 3), 5)
    b = add_genus_cut(frobenius_system(3, 5), 3)
    assert list(enumerate_lattice_points(a)) == list(enumerate_lattice_points(b)) == [(1, 2)]
    with pytest.raises(DuplicateCut):
        add_genus_cut(a, 4)
    with pytest.raises(DuplicateCut):
        add_frobenius_cut(a, 7)
    assert count_lattice_points(add_genus_cut(med_system(3), 5)) == 2


def test_bounds():
    assert variable_bounds(genus_system(4, 9)) == [(1, 7)] * 3
    with pytest.raises(Unbounded):
        variable_bounds(med_system(3))
    with pytest.raises(Unbounded):
        count_lattice_points(kunz_system(4))


def test_enumeration_examples():
    assert list(enumerate_lattice_points(genus_system(3, 4))) == [(2, 2), (3, 1)]
    assert list(enumerate_lattice_points(genus_system(4, 3))) == [(1, 1, 1)]


@pytest.mark.parametrize("m,g,expected", [(9, 12, 116), (6, 15, 133), (4, 9, 11), (3, 15, 6)])
def test_counts(m, g, expected):
    assert count_lattice_points(genus_system(m, g)) == expected


def test_med_count():
    assert count_lattice_points(add_genus_cut(med_system(6), 14)) == 35


def test_column_identities():
    for g in range(1, 12):
        assert count_lattice_points(genus_system(g + 1, g)) == 1
        assert count_lattice_points(genus_system(g + 2, g)) == 0


def test_infeasible_is_zero():
    assert count_lattice_points(add_frobenius_cut(genus_system(3, 2), 7)) == 0
    assert list(enumerate_lattice_points(add_frobenius_cut(genus_system(3, 2), 7))) == []


def test_count_matches_enumeration_and_membership():
    for m in range(2, 7):
        for g in range(1, 9):
            sys = genus_system(m, g)
            pts = list(enumerate_lattice_points(sys))
            assert len(pts) == count_lattice_points(sys)
            assert pts == sorted(set(pts))
            assert all(sys.contains(p) for p in pts)


def test_med_subset_of_plain():
    for m in range(3, 7):
        for g in range(1, 11):
            med = set(enumerate_lattice_points(add_genus_cut(med_system(m), g)))
            plain = set(enumerate_lattice_points(genus_system(m, g)))
            assert med <= plain


def test_workers_split():
    sys = genus_system(7, 14)
    assert count_lattice_points(sys, workers=2) == count_lattice_points(sys) == 148


def test_text_round_trip():
    sys = add_frobenius_cut(genus_system(4, 8), 11)
    text = sys.to_text()
    assert text.startswith("# kunz m=4 | genus=8 | frobenius=11\n")
    assert "1 1 1 = 8" in text.splitlines()
    back = LinearSystem.from_text(text)
    assert back.constraints == sys.constraints and back.label == sys.label
    assert count_lattice_points(back) == count_lattice_points(sys)


def test_constraint_validation():
    with pytest.raises(ValueError):
        LinearConstraint((0, 0), 1)
    with pytest.raises(ValueError):
        LinearConstraint((1, 0), 1, ">")
    with pytest.raises(DimensionMismatch):
        LinearSystem(3, (LinearConstraint((1, 0), 1),))


def test_overflow_guard():
    sys = LinearSystem(1, (LinearConstraint((1,), 1), LinearConstraint((1,), 2**62, "<=")))
    with pytest.raises(OverflowError):
        count_lattice_points(sys)
    with pytest.raises(OverflowError):
        genus_system(3, 2**63)
