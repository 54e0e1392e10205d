import random

import networkx as nx
import pytest
from sympy import Matrix

from conftest import K4, TRIANGLE, columns_square, columns_two_three
from src.matroid import subsets
from src.matroid.constructors import (
    IntegerMatrixSpec, MultigraphSpec, bond, direct_sum, from_integer_matrix, from_rank_table, graphic,
    random_integer_matrix, random_rank_table, uniform,
)
from src.matroid.integer_matrix import bareiss_determinant, bareiss_rank, minor_gcd, snf_multiplicity
from src.utils.errors import InputError, RankAxiomError, SizeGuardError


def test_uniform():
    assert uniform(2, 3).flats == (0, 0b001, 0b010, 0b100, 0b111)
    assert uniform(0, 2).loops == 0b11
    assert uniform(3, 3).coloops == 0b111
    with pytest.raises(InputError):
        uniform(4, 3)


def test_graphic_matches_networkx_components():
    for spec in (TRIANGLE, K4, MultigraphSpec(3, ((0, 1), (0, 1), (2, 2), (1, 2)))):
        m = graphic(spec)
        for mask in range(1 << len(spec.edges)):
            components = nx.number_connected_components(spec.to_networkx(mask))
            assert m.rank(mask) == spec.vertices - components


def test_graphic_examples():
    assert graphic(TRIANGLE) == uniform(2, 3)
    assert graphic(MultigraphSpec(2, ((0, 1), (0, 1)))) == uniform(1, 2)
    assert graphic(MultigraphSpec(1, ((0, 0),))).full_rank == 0
    assert bond(TRIANGLE) == uniform(1, 3)


def test_multigraph_endpoints_checked():
    with pytest.raises(InputError):
        MultigraphSpec(2, ((0, 2),))


def test_from_rank_table():
    assert from_rank_table(2, [0, 1, 1, 1]) == uniform(1, 2)
    with pytest.raises(RankAxiomError) as caught:
        from_rank_table(2, [0, 1, 0, 0])
    assert any(v.axiom == 2 for v in caught.value.violations)
    with pytest.raises(RankAxiomError):
        from_rank_table(1, [1, 1])


def test_direct_sum():
    m = direct_sum(uniform(1, 2), uniform(1, 2))
    assert m.full_rank == 2
    assert m.parallel_classes().classes == (0b0011, 0b1100)


def test_integer_matrix_examples():
    single = from_integer_matrix(IntegerMatrixSpec(((2,),)))
    assert single.table == (1, 2)
    assert single.matroid.coloops == 0b1
    pair = columns_two_three()
    assert pair.table == (1, 2, 3, 1)
    square = columns_square()
    assert square.m(0b11) == 2
    identity = from_integer_matrix(IntegerMatrixSpec(((1, 0, 0), (0, 1, 0), (0, 0, 1))))
    assert identity.is_trivial


def test_bareiss_against_sympy():
    rng = random.Random(3)
    for _ in range(40):
        rows = [[rng.randint(-5, 5) for _ in range(rng.randint(1, 5))]]
        rows += [[rng.randint(-5, 5) for _ in rows[0]] for _ in range(rng.randint(0, 3))]
        assert bareiss_rank(rows) == Matrix(rows).rank()
        size = min(len(rows), len(rows[0]))
        square = [row[:size] for row in rows[:size]]
        assert bareiss_determinant(square) == Matrix(square).det()


def test_minor_gcd_agrees_with_smith_form():
    rng = random.Random(11)
    for _ in range(40):
        spec = random_integer_matrix(rng.randint(1, 4), rng.randint(1, 6), rng)
        rows = [list(row) for row in spec.rows]
        assert minor_gcd(rows) == max(snf_multiplicity(rows), 1)


def test_methods_agree_on_full_tables():
    rng = random.Random(5)
    for _ in range(10):
        spec = random_integer_matrix(rng.randint(1, 3), rng.randint(1, 5), rng)
        assert from_integer_matrix(spec, "snf") == from_integer_matrix(spec, "minors")


def test_deleting_a_column_is_restriction():
    rng = random.Random(9)
    for _ in range(10):
        spec = random_integer_matrix(rng.randint(1, 3), rng.randint(2, 5), rng)
        n = spec.shape[1]
        full = from_integer_matrix(spec)
        for c in range(n):
            smaller = IntegerMatrixSpec(tuple(tuple(v for k, v in enumerate(row) if k != c) for row in spec.rows))
            keep = subsets.full_mask(n) ^ 1 << c
            assert from_integer_matrix(smaller) == full.restrict(keep)


def test_matrix_guards():
    with pytest.raises(SizeGuardError):
        from_integer_matrix(IntegerMatrixSpec(tuple((1,) * 21 for _ in range(1))))
    with pytest.raises(SizeGuardError):
        from_integer_matrix(IntegerMatrixSpec(tuple((1,) for _ in range(13))))


def test_random_rank_tables_are_valid():
    rng = random.Random(1)
    for _ in range(20):
        m = random_rank_table(rng.randint(0, 6), rng)
        assert m.validate_rank_axioms() == []
