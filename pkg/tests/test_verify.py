from kunzcount.verify import (
    FORMULA_DISCREPANCY,
    OK,
    ORACLE_DISCREPANCY,
    VerifyReport,
    VerifyRow,
    box_grid_rows,
    med4_pair_solutions,
)


def test_row_status():
    assert VerifyRow("x", "q", 3, 3).status == OK
    assert VerifyRow("x", "q", 3, 4).status == FORMULA_DISCREPANCY
    assert VerifyRow("x", "q", 3, 3, 4).status == ORACLE_DISCREPANCY
    assert VerifyRow("x", "q", None, 3, 3).status == OK
    assert VerifyRow("x", "q", 5, 3, relation=">=").status == OK
    assert VerifyRow("x", "q", 2, 3, relation=">=").status == FORMULA_DISCREPANCY


def test_report_failures_respect_documentation():
    r = VerifyReport()
    r.add(VerifyRow("a", "q", 1, 1))
    bad = r.add(VerifyRow("a", "q", 1, 2, variant="printed"))
    bad.documented = True
    assert r.failures() == []
    assert r.failures(strict=True) == [bad]
    r.add(VerifyRow("b", "q", 1, 2))
    assert len(r.failures()) == 1
    assert r.summary()["a [printed]"]["documented"] == 1
    assert "RESULT: 1 unexpected" in r.to_text()


def test_box_rows():
    r = VerifyReport()
    box_grid_rows(r, 8)
    corrected, printed = r.rows
    assert corrected.ok
    assert printed.status == FORMULA_DISCREPANCY and printed.documented


def test_pair_solutions():
    assert med4_pair_solutions(7, 9) == 2
    assert med4_pair_solutions(5, 7) == 3
