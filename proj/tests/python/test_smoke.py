from fractions import Fraction

import pytest

import derangements as drg


def test_symmetric_group_on_four_points():
    gens = [[1, 0, 2, 3], [1, 2, 3, 0]]
    assert drg.group_order(4, gens) == 24
    assert drg.derangement_proportion(4, gens) == Fraction(3, 8)


def test_class_counts():
    assert drg.class_count("Sp", 4, 2) == (11, 4)
    assert drg.class_count("GL", 2, 3, method="both")[0] == 8
    assert drg.gl_class_count(6, 5) == drg.class_count("GL", 6, 5, method="genfun")[0]


def test_limits_and_weyl():
    item, value = drg.limit_partial("GU", 2)
    assert item == 2
    assert 8.2 <= float(value) <= 8.3
    assert drg.young_limiting_delta(4, 2) == Fraction(7, 12)


def test_run_matches_cli_document():
    doc, code = drg.run("delta", "S4-natural")
    assert code == 0
    assert doc["results"]["delta"] == "3/8"
    doc, code = drg.run("delta", {"degree": 3, "generators": [], "colour": 1})
    assert code == 2
    assert "colour" in doc["error"]["message"]


def test_verify_rows():
    rows = drg.verify("hall")
    assert rows and all(ok for _, _, ok, _ in rows)


def test_errors_raise():
    with pytest.raises(drg.Error, match="CapExceeded"):
        drg.group_order(9, [[1, 0, 2, 3, 4, 5, 6, 7, 8], [1, 2, 3, 4, 5, 6, 7, 8, 0]], cap=100)
    with pytest.raises(drg.Error, match="UnsupportedFamily"):
        drg.limit_partial("SL", 3)
