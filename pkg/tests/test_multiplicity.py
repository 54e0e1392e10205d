import pytest

from conftest import columns_square, columns_two_three, u12_heavy_top
from src.matroid.constructors import IntegerMatrixSpec, from_integer_matrix, uniform
from src.matroid.multiplicity import MultiplicityMatroid, check_arithmetic_axioms, trivial_multiplicity
from src.utils.errors import InvalidSubsetError, MultiplicityError, SizeGuardError


def test_trivial_multiplicity():
    mm = trivial_multiplicity(uniform(2, 3))
    assert mm.is_trivial
    assert set(mm.table) == {1}


def test_non_positive_values_rejected():
    with pytest.raises(MultiplicityError):
        MultiplicityMatroid(uniform(1, 2), [1, 0, 1, 1])
    with pytest.raises(MultiplicityError):
        MultiplicityMatroid(uniform(1, 2), [1, 1, 1])


def test_dual_multiplicity_reads_complements():
    dual = columns_two_three().dual()
    assert dual.m(0) == 1
    assert dual.m(0b01) == 3
    assert dual.dual() == columns_two_three()


def test_restrict():
    mm = columns_two_three()
    assert mm.restrict(0b01).table == (1, 2)
    assert mm.restrict(0).table == (1,)
    assert mm.restrict(0b11) == mm


def test_axioms_pass_for_single_column():
    report = check_arithmetic_axioms(from_integer_matrix(IntegerMatrixSpec(((2,),))))
    assert report.all_passed
    assert report.failed_axioms() == []


def test_axioms_pass_for_trivial_multiplicity(small_corpus):
    for _, mm in small_corpus:
        if mm.n <= 6:
            assert trivial_multiplicity(mm.matroid).check_arithmetic_axioms().all_passed


def test_axiom_one_witness():
    report = u12_heavy_top().check_arithmetic_axioms()
    assert not report.passed(1)
    assert any(w.subsets == (0b01, 0b11) for w in report.witnesses[1])
    assert "molecule" in report.summary()


def test_matrix_realizations_are_arithmetic(small_corpus):
    for name, mm in small_corpus:
        if name.startswith(("matrix", "columns")):
            assert mm.check_arithmetic_axioms().all_passed, name
    assert columns_square().check_arithmetic_axioms().all_passed


def test_dual_of_arithmetic_is_arithmetic(small_corpus):
    for name, mm in small_corpus:
        if mm.check_arithmetic_axioms().all_passed:
            assert mm.dual().check_arithmetic_axioms().all_passed, name


def test_axiom_sweep_is_guarded():
    mm = trivial_multiplicity(uniform(1, 13))
    with pytest.raises(SizeGuardError):
        check_arithmetic_axioms(mm)


def test_restrict_rejects_out_of_range_mask():
    with pytest.raises(InvalidSubsetError):
        trivial_multiplicity(uniform(2, 3)).restrict(0b1000)
