import io
import json
import subprocess
import sys

import pytest

from kunzcount.cli import main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


@pytest.mark.parametrize("argv,expected", [
    (["-m", "4", "-g", "9"], "11"),
    (["-m", "4", "-g", "8", "--med"], "5"),
    (["-m", "9", "-g", "12"], "116"),
    (["-m", "4", "-f", "12"], "0"),
    (["-m", "5", "-g", "7", "-f", "11"], None),
])
def test_count(argv, expected):
    code, text = run("count", *argv)
    assert code == 0
    if expected is not None:
        assert text.strip() == expected


def test_count_list():
    code, text = run("count", "-m", "3", "-f", "7", "--list")
    assert code == 0
    lines = text.splitlines()
    assert lines[0] == "2"
    assert lines[1:] == ["3 1\t<3, 5>", "3 2\t<3, 8, 10>"]


@pytest.mark.parametrize("source", ["polytope", "formula", "oracle", "auto"])
def test_sources_agree(source):
    for argv in (["-m", "3", "-f", "7"], ["-m", "4", "-g", "9"], ["-m", "4", "-g", "6", "-f", "9", "--med"]):
        code, text = run("count", *argv, "--source", source, "--format", "json")
        assert code == 0
        doc = json.loads(text)
        assert set(doc) == {"query", "count", "source", "points"}
        assert doc["source"] == source or source == "auto"
    assert json.loads(run("count", "-m", "4", "-g", "9", "--source", source, "--format", "json")[1])["count"] == 11


def test_json_points():
    code, text = run("count", "-m", "3", "-f", "7", "--list", "--format", "json", "--source", "oracle")
    doc = json.loads(text)
    assert doc["points"] == [[3, 1], [3, 2]]
    assert doc["generators"] == [[3, 5], [3, 8, 10]]


def test_usage_errors():
    assert run("count", "-m", "4")[0] == 2
    assert run("count", "-m", "1", "-g", "3")[0] == 2
    assert run("count", "-m", "6", "-g", "8", "--source", "formula")[0] == 2
    assert run("count")[0] == 2
    assert run("frobnicate")[0] == 2


def test_resource_errors():
    assert run("count", "-m", "4", "-g", "30", "--source", "oracle")[0] == 3
    assert run("verify", "--oracle-depth", "30")[0] == 3


def test_table_csv():
    code, text = run("table", "--max-genus", "3")
    assert code == 0
    assert text.splitlines() == ["g,m2,m3,m4,total", "1,1,,,1", "2,1,1,,2", "3,1,2,1,4"]
    code, text = run("table", "--max-genus", "15")
    assert text.splitlines()[-1] == "15,1,6,26,51,133,191,325,409,492,486,409,234,79,14,1,2857"
    code, text = run("table", "--max-genus", "13", "--med")
    assert text.splitlines()[-1].split(",")[-1] == "119"


def test_table_json_deterministic():
    a = run("table", "--max-genus", "8", "--format", "json")[1]
    b = run("table", "--max-genus", "8", "--format", "json")[1]
    assert a == b
    rows = json.loads(a)
    assert rows[5]["total"] == 23 and rows[5]["counts"]["m2"] == 1


def test_verify_small():
    code, text = run("verify", "--max-genus", "20", "--max-frobenius", "40", "--grid-genus", "12",
                     "--oracle-depth", "8")
    assert code == 0
    assert "RESULT: OK" in text
    assert "g=6 total: formula=33 enumeration=23 oracle=23" in text
    code, _ = run("verify", "--max-genus", "20", "--max-frobenius", "40", "--grid-genus", "12",
                  "--oracle-depth", "8", "--strict")
    assert code == 1


def test_verify_json():
    code, text = run("verify", "--max-genus", "12", "--max-frobenius", "20", "--grid-genus", "8",
                     "--oracle-depth", "6", "--json")
    doc = json.loads(text)
    assert code == 0 and doc["failures"] == 0
    assert doc["summary"]["box_count [printed]"]["FORMULA_DISCREPANCY"] == 1


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "kunzcount", "count", "-m", "4", "-g", "9"],
                         capture_output=True, text=True)
    assert out.returncode == 0 and out.stdout.strip() == "11"
