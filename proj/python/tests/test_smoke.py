import pytest

import realblocks

D24 = "D24 | 12 | (1,2,3,4,5,6,7,8,9,10,11,12);(2,12)(3,11)(4,10)(5,9)(6,8) | 2,3\n"


def test_d24_table():
    t = realblocks.table_summary(["(1,2,3,4,5,6,7,8,9,10,11,12)", "(2,12)(3,11)(4,10)(5,9)(6,8)"], 12)
    assert t["order"] == 24
    assert t["classes"] == 9
    assert sorted(t["degrees"]) == [1, 1, 1, 1, 2, 2, 2, 2, 2]
    assert t["indicators"] == [1] * 9


def test_d24_blocks():
    gens = ["(1,2,3,4,5,6,7,8,9,10,11,12)", "(2,12)(3,11)(4,10)(5,9)(6,8)"]
    assert sorted(len(b) for b in realblocks.blocks(gens, 12, 2)) == [4, 5]
    assert len(realblocks.blocks(gens, 12, 3)) == 3


def test_report():
    report = realblocks.analyze(D24, checks="A,podd")
    assert report["schema"] == "realblocks-report"
    assert report["summary"]["entry_errors"] == 0
    statements = report["summary"]["statements"]
    assert set(statements) <= {"thmA", "podd"}
    assert all(v["fail"] == 0 for v in statements.values())
    assert realblocks.analyze(D24) == realblocks.analyze(D24, jobs=2)


def test_construct_entry():
    line = realblocks.construct_entry(["(1,2,3,4)", "(1,3)"], ["(1,2,3,4)"], 4, name="C3xD8")
    assert line.startswith("C3xD8 | 24 |")
    report = realblocks.analyze(line + "\n", primes=[2], checks="B,C")
    counts = report["summary"]["statements"]
    assert counts["conjB"]["pass"] == 1
    assert counts["conjC"]["pass"] == 1


def test_errors():
    with pytest.raises(ValueError):
        realblocks.analyze("bad | 3 | (1,2 | 2\n")
    with pytest.raises(ValueError):
        realblocks.construct_entry(["(1,2,3,4)"], [], 4)
