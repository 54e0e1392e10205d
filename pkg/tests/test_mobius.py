import pytest

from src.coefficients.mobius import mobius, mobius_boolean_expansion, mobius_low_rank, mobius_table
from src.matroid.constructors import uniform
from src.utils.errors import LoopError, NotAFlatError, PreconditionError


def test_mobius_examples():
    u23 = uniform(2, 3)
    assert mobius(u23, 0, 0b001) == -1
    assert mobius(u23, 0, 0b111) == 2
    assert mobius(u23, 0b010, 0b010) == 1
    assert mobius(u23, 0b001, 0b010) == 0


def test_boolean_expansion_examples():
    u23 = uniform(2, 3)
    assert mobius_boolean_expansion(u23, 0, 0b111) == 2
    assert mobius_boolean_expansion(u23, 0, 0b001) == -1
    assert mobius_boolean_expansion(u23, 0b111, 0b111) == 1


def test_low_rank_forms():
    assert mobius_low_rank(uniform(2, 3), 0) == 1
    assert mobius_low_rank(uniform(2, 3), 0b100) == -1
    assert mobius_low_rank(uniform(2, 4), 0b1111) == 3
    with pytest.raises(PreconditionError):
        mobius_low_rank(uniform(3, 3), 0b111)


def test_preconditions():
    with pytest.raises(LoopError):
        mobius(uniform(0, 1), 0b1, 0b1)
    with pytest.raises(NotAFlatError):
        mobius(uniform(2, 3), 0, 0b011)


def test_recursion_matches_boolean_expansion(small_corpus):
    for name, mm in small_corpus:
        m = mm.matroid
        if m.loops:
            continue
        table = mobius_table(m)
        assert table.delta_violations() == [], name
        for low in m.flats:
            for high in m.flats:
                assert table.mu(low, high) == mobius_boolean_expansion(m, low, high), name
            if m.rank_table[low] <= 2:
                assert mobius_low_rank(m, low) == table.from_bottom(low), name
