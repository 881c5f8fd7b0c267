import json

import pytest

import linecong


def test_version():
    assert linecong.__version__.count(".") == 2
    assert linecong.DEFAULT_SEED == 1729


@pytest.mark.parametrize("n", [3, 4, 7, 12])
def test_normal_bundle(n):
    assert linecong.cn1_matches_closed_form(n)
    assert linecong.porteous_a(n) == "d*e - D"
    assert linecong.check_c_prime_square(n) == "0"


def test_relations():
    assert linecong.plane_relation_unit() == 1
    assert linecong.double_point_relation(3) == linecong.double_point_relation(9)


def test_survivors():
    got = {(r["e"], r["d"], r["D"], r["a"], r["b"]) for r in linecong.survivors()}
    assert got == {(1, 2, 0, 2, 2), (1, 2, 1, 1, 2), (1, 3, 0, 3, 3), (2, 3, 3, 3, 6)}


def test_classify_report_json():
    doc = json.loads(linecong.classify_report(20, "json"))
    assert doc["meta"]["d_max"] == 20
    assert len(doc["rows"]) == len(linecong.classify(20))
    with pytest.raises(ValueError):
        linecong.classify_report(20, "xml")


def test_verify_small():
    rows = linecong.verify(3, 4, 10)
    assert rows and all(r["passed"] for r in rows)
    bad = linecong.verify(3, 3, 10, mutate="euler")
    assert not all(r["passed"] for r in bad)


def test_planarity():
    rep = linecong.planarity(20)
    assert rep["counterexamples_passing_hurwitz"] == 0


def test_linecase():
    r = linecong.linecase(5, 2, 2, 3)
    assert r["case"] == "linked-through-vertex"
    assert (r["a"], r["b"], r["residual_degree"]) == (2, 1, 3)
    assert linecong.linecase(4, 2, 2, 2)["case"] == "complete-intersection"


def test_split():
    r = linecong.split("O(0) -> O(1):x, O(1):x")
    assert r["torsion"] == 1 and r["twists"] == [1]
    assert r["oracle"]["text"] == r["text"]
    assert linecong.h0_twist("O(0) -> O(1):x, O(1):y", 0) == 3
    with pytest.raises(ValueError):
        linecong.split("O(0) -> O(2):x")


def test_strata():
    s = linecong.strata(5)
    assert [x["splitting"] for x in s[:2]] == ["O(2)^4", "O(3) + O(2)^2 + O(1)"]
    assert s[2]["contradiction"]
