import pytest

from conftest import columns_square, columns_two_three, u12_heavy_top
from src.coefficients.multiplicity_extremes import extreme_b_dual, extreme_b_top
from src.matroid.constructors import uniform
from src.matroid.multiplicity import trivial_multiplicity
from src.utils.errors import ColoopError, LoopError


def test_top_family_examples():
    report = extreme_b_top(columns_square())
    assert report.entry("b_{2,0}").formula == 1
    assert report.entry("b_{1,0}").formula == 1
    assert report.all_match
    heavy = extreme_b_top(u12_heavy_top())
    assert heavy.entry("b_{0,1}").formula == 5
    assert heavy.entry("b_{0,0}").formula == -4
    assert heavy.entry("b_{-1,0}").formula is None


def test_dual_family_examples():
    report = extreme_b_dual(columns_two_three())
    assert report.entry("b_{0,1}").formula == 1
    assert report.entry("b_{0,0}").formula == 3
    assert report.entry("b_{0,0}").alternate == 3
    assert report.all_match
    u24 = extreme_b_dual(trivial_multiplicity(uniform(2, 4)))
    assert u24.entry("b_{0,2}").formula == 1


def test_not_applicable_entries():
    report = extreme_b_top(trivial_multiplicity(uniform(1, 3)))
    labels = {e.label: e.applicable for e in report}
    assert labels["b_{-1,0}"] is False
    assert labels["b_{0,1}"] is True
    assert report.entry("b_{-1,2}").match is None


def test_preconditions():
    with pytest.raises(LoopError):
        extreme_b_top(trivial_multiplicity(uniform(0, 2)))
    with pytest.raises(ColoopError):
        extreme_b_dual(trivial_multiplicity(uniform(2, 2)))


def test_families_match_on_corpus(small_corpus):
    for name, mm in small_corpus:
        if not mm.matroid.loops:
            top = extreme_b_top(mm)
            assert top.all_match, (name, top.mismatches())
        if not mm.matroid.coloops:
            dual = extreme_b_dual(mm)
            assert dual.all_match, (name, dual.mismatches())
            for entry in dual:
                if entry.applicable:
                    assert entry.alternate == entry.formula, (name, entry.label)


def test_records_carry_booleans_and_table_carries_markers():
    report = extreme_b_top(trivial_multiplicity(uniform(1, 3)))
    records = report.to_dict()["entries"]
    assert {r["match"] for r in records} == {True, None}
    assert set(report.to_frame()["match"]) == {"✅", "➖"}
