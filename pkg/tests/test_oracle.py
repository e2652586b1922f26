import pytest

from kunzcount.errors import ResourceLimit
from kunzcount.oracle import Oracle, children, count_filtered, enumerate_by_genus, iter_levels, load_level, save_level
from kunzcount.polytope import add_genus_cut, count_lattice_points, genus_system, med_system
from kunzcount.semigroup import from_generators


def _gens(level):
    return {s.generators for s in level}


def test_children_examples():
    assert _gens(children(from_generators([1]))) == {(2, 3)}
    assert _gens(children(from_generators([2, 3]))) == {(3, 4, 5), (2, 5)}
    assert _gens(children(from_generators([3, 4, 5]))) == {(4, 5, 6, 7), (3, 5, 7), (3, 4)}


def test_children_are_correct_semigroups():
    for s in enumerate_by_genus(8)[8].semigroups:
        for child in children(s):
            assert child == from_generators(child.generators)
            assert child.genus == s.genus + 1
            assert set(child.gaps()) == set(s.gaps()) | {child.frobenius}


def test_level_sizes():
    levels = enumerate_by_genus(7)
    assert [len(levels[g]) for g in range(8)] == [1, 1, 2, 4, 7, 12, 23, 39]
    assert _gens(levels[2].semigroups) == {(3, 4, 5), (2, 5)}
    assert _gens(levels[0].semigroups) == {(1,)}


def test_levels_unique_and_exact_genus():
    for level in iter_levels(11):
        assert all(s.genus == level.g for s in level.semigroups)
        assert len(_gens(level.semigroups)) == len(level)


def test_filters(oracle):
    assert oracle.count(12, multiplicity=9) == 116
    assert oracle.count(10, multiplicity=5, med=True) == 8
    level5 = oracle.level(5)
    assert oracle.count(5, frobenius=9) == sum(1 for s in level5.semigroups if s.frobenius == 9)
    assert count_filtered(level5) == len(level5)
    assert sum(oracle.count(7, multiplicity=m) for m in range(2, 9)) == len(oracle.level(7))


def test_agreement_with_polytope(oracle):
    for g in range(1, 13):
        for m in range(2, g + 2):
            assert oracle.count(g, multiplicity=m) == count_lattice_points(genus_system(m, g))


def test_med_agreement(oracle):
    for g in range(1, 13):
        for m in range(2, min(6, g + 1) + 1):
            assert oracle.count(g, multiplicity=m, med=True) == count_lattice_points(add_genus_cut(med_system(m), g))


def test_resource_limits():
    with pytest.raises(ResourceLimit):
        list(iter_levels(19))
    with pytest.raises(ResourceLimit):
        list(iter_levels(9, max_level_size=50))
    with pytest.raises(ValueError):
        list(iter_levels(-1))


def test_persistence(tmp_path):
    level = enumerate_by_genus(6)[6]
    path = tmp_path / "level.txt"
    save_level(level, path)
    first = path.read_text().splitlines()[0].split()
    assert len(first) == 4
    back = load_level(path)
    assert back.g == 6 and back.semigroups == level.semigroups


def test_cache_dir(tmp_path, monkeypatch):
    monkeypatch.setenv("KUNZCOUNT_CACHE", str(tmp_path))
    o = Oracle(max_genus=10)
    assert o.cache_dir == tmp_path
    assert len(o.level(6)) == 23
    assert (tmp_path / "genus_06.txt").exists()
    assert len(Oracle(max_genus=10).level(6)) == 23


def test_bad_cache_file(tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("4 3 7 3,5\n5 3 7 3,5\n")
    with pytest.raises(ValueError):
        load_level(path)
