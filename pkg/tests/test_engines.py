import random

import pytest

from conftest import FOUR_CYCLE_ONE_DOUBLED, columns_two_three, two_parallel_pairs
from src.engines.activities import tutte_by_activities, validate_order
from src.engines.characteristic import char_poly_via_flats, tutte_x0
from src.engines.convolution import convolution_tutte
from src.engines.deletion_contraction import tutte_deletion_contraction
from src.engines.subset_sum import char_poly, multiplicity_tutte_definition, tutte_definition
from src.matroid.constructors import IntegerMatrixSpec, MultigraphSpec, from_integer_matrix, graphic, uniform
from src.matroid.core import Matroid
from src.matroid.multiplicity import trivial_multiplicity
from src.poly.bivariate import BivarPoly
from src.poly.univariate import UniPoly
from src.utils.errors import InvalidOrderError, LoopError, SizeGuardError
from src.utils.guards import set_max_n_override

X, Y = BivarPoly.x(), BivarPoly.y()


def test_definition_examples():
    assert tutte_definition(uniform(1, 2)) == X + Y
    assert tutte_definition(uniform(2, 4)) == X * X + X.scale(2) + Y.scale(2) + Y * Y
    assert tutte_definition(Matroid(0, [0])) == BivarPoly.constant(1)
    assert multiplicity_tutte_definition(trivial_multiplicity(uniform(2, 3))) == X * X + X + Y
    assert multiplicity_tutte_definition(from_integer_matrix(IntegerMatrixSpec(((2,),)))) == X + 1
    assert multiplicity_tutte_definition(columns_two_three()) == X + Y + 3


def test_known_graph_polynomials():
    assert tutte_definition(two_parallel_pairs()) == (X + Y) * (X + Y)
    four_cycle = X * X * X + X * X + X + Y + X * X * Y + X * Y + Y * Y
    assert tutte_definition(graphic(FOUR_CYCLE_ONE_DOUBLED)) == four_cycle


def test_deletion_contraction_examples():
    assert tutte_deletion_contraction(uniform(1, 2)) == X + Y
    assert tutte_deletion_contraction(uniform(2, 3)) == X * X + X + Y
    assert tutte_deletion_contraction(graphic(MultigraphSpec(1, ((0, 0),)))) == Y


def test_activities_trace():
    polynomial, records = tutte_by_activities(uniform(1, 2), [0, 1])
    assert polynomial == X + Y
    assert [(r.basis, r.internal_activity, r.external_activity) for r in records] == [(0b01, 1, 0), (0b10, 0, 1)]
    polynomial, records = tutte_by_activities(uniform(2, 3), [0, 1, 2])
    assert polynomial == X * X + X + Y
    assert len(records) == 3


def test_activity_order_must_be_a_permutation():
    with pytest.raises(InvalidOrderError):
        validate_order([0, 0, 1], 3)
    with pytest.raises(InvalidOrderError):
        tutte_by_activities(uniform(1, 2), [0, 2])


def test_convolution_examples():
    assert convolution_tutte(trivial_multiplicity(uniform(2, 3))) == X * X + X + Y
    assert convolution_tutte(columns_two_three()) == X + Y + 3
    loop = trivial_multiplicity(graphic(MultigraphSpec(1, ((0, 0),))))
    assert convolution_tutte(loop) == Y


def test_engines_agree(small_corpus):
    rng = random.Random(4)
    for name, mm in small_corpus:
        polynomial = multiplicity_tutte_definition(mm)
        assert convolution_tutte(mm) == polynomial, name
        assert convolution_tutte(mm, all_subsets=True) == polynomial, name
        tutte = tutte_definition(mm.matroid)
        assert tutte == multiplicity_tutte_definition(trivial_multiplicity(mm.matroid))
        assert tutte_deletion_contraction(mm.matroid) == tutte, name
        for _ in range(3):
            order = list(range(mm.n))
            rng.shuffle(order)
            assert tutte_by_activities(mm.matroid, order)[0] == tutte, (name, order)


def test_duality_swaps_variables(small_corpus):
    for name, mm in small_corpus:
        assert multiplicity_tutte_definition(mm.dual()) == multiplicity_tutte_definition(mm).swap(), name


def test_tutte_at_one_one_counts_bases(small_corpus):
    for _, mm in small_corpus:
        assert tutte_definition(mm.matroid).evaluate(1, 1) == mm.matroid.count_bases()


def test_characteristic_polynomial():
    assert char_poly(uniform(2, 3)) == UniPoly([2, -3, 1])
    assert char_poly(uniform(1, 2)) == UniPoly([-1, 1])
    assert char_poly(graphic(MultigraphSpec(2, ((0, 1), (1, 1))))).is_zero
    assert char_poly_via_flats(uniform(2, 3)) == UniPoly([2, -3, 1])
    with pytest.raises(LoopError):
        char_poly_via_flats(uniform(0, 1))


def test_tutte_x0():
    assert tutte_x0(uniform(2, 3)) == UniPoly([0, 1, 1])
    assert tutte_x0(uniform(1, 2)) == UniPoly([0, 1])
    assert tutte_x0(Matroid(0, [0])) == UniPoly([1])
    with pytest.raises(LoopError):
        tutte_x0(uniform(0, 2))


def test_specialization_and_flats_form(small_corpus):
    for name, mm in small_corpus:
        m = mm.matroid
        if m.loops:
            assert char_poly(m).is_zero
            continue
        assert char_poly_via_flats(m) == char_poly(m), name
        assert tutte_x0(m).to_bivariate("x") == tutte_definition(m).y_zero_slice(), name


def test_convolution_guard():
    mm = trivial_multiplicity(uniform(2, 5))
    set_max_n_override(4)
    with pytest.raises(SizeGuardError):
        convolution_tutte(mm)
