import random

import pytest

from conftest import FOUR_CYCLE_ONE_DOUBLED, two_parallel_pairs
from src.coefficients.tutte_extremes import (
    capped_class_sum, lemma_identities, t_difference, t_extreme, t_extreme_dual,
)
from src.matroid import subsets
from src.matroid.constructors import graphic, uniform
from src.matroid.core import Matroid
from src.utils.errors import ColoopError, LoopError, PreconditionError, RankTooSmallError


def test_capped_class_sum():
    assert capped_class_sum(uniform(2, 4).parallel_classes()) == 1
    assert capped_class_sum(two_parallel_pairs().parallel_classes()) == 1
    assert capped_class_sum(uniform(2, 3).parallel_classes()) == 0


def test_u24_generalized_forms():
    report = t_extreme(uniform(2, 4))
    five, six = report.entry("t_{0,1}"), report.entry("t_{0,2}")
    assert (five.formula, five.brute_force, five.as_stated) == (2, 2, 0)
    assert five.hypothesis_ok is False
    assert (six.formula, six.brute_force) == (1, 1)
    assert report.all_match
    assert report.as_stated_consistent
    assert report.note


def test_two_parallel_pairs():
    report = t_extreme(two_parallel_pairs())
    six = report.entry("t_{0,2}")
    assert (six.formula, six.as_stated, six.brute_force) == (1, 1, 1)
    assert six.hypothesis_ok is False
    assert report.entry("t_{0,1}").formula == 0
    assert report.entry("t_{1,1}").formula == 2


def test_four_cycle_as_stated_disagrees():
    report = t_extreme(graphic(FOUR_CYCLE_ONE_DOUBLED))
    six = report.entry("t_{1,2}")
    assert six.as_stated == 1
    assert six.brute_force == 0
    assert six.formula == 0
    assert six.hypothesis_ok is False
    assert report.entry("t_{1,1}").formula == 1
    assert report.all_match


def test_difference():
    check = t_difference(uniform(2, 3))
    assert (check.as_stated, check.generalized, check.brute_force) == (-1, -1, -1)
    assert check.hypothesis_ok
    assert check.match and check.as_stated_match
    pairs = t_difference(two_parallel_pairs())
    assert pairs.generalized == pairs.brute_force == 1
    with pytest.raises(RankTooSmallError):
        t_difference(uniform(1, 2))


def test_dual_family_on_triangle():
    report = t_extreme_dual(uniform(2, 3))
    assert report.entry("t_{0,1}").as_stated == 1
    assert report.entry("t_{0,0}").as_stated == 0
    assert report.entry("t_{1,0}").as_stated == 1
    assert report.all_match
    assert report.as_stated_consistent


def test_preconditions():
    with pytest.raises(LoopError):
        t_extreme(uniform(0, 1))
    with pytest.raises(ColoopError):
        t_extreme_dual(uniform(1, 1))


def test_lemma_identities_rank_two():
    checks = lemma_identities(uniform(2, 4))
    assert [c.status for c in checks] == [None, None, True, True]
    four = checks[3]
    assert (four.direct, four.closed_form, four.general_form) == (1, None, 1)
    assert checks[2].direct == 2


def test_lemma_identities_rank_one():
    checks = lemma_identities(uniform(1, 3))
    assert [c.status for c in checks] == [True, True, None, None]
    assert lemma_identities(uniform(1, 2))[1].applicable is False


def test_hypotheses_imply_as_stated(small_corpus):
    for name, mm in small_corpus:
        matroid = mm.matroid
        if not mm.is_trivial:
            continue
        if not matroid.loops:
            report = t_extreme(matroid)
            assert report.all_match, (name, report.mismatches())
            assert report.as_stated_consistent, name
        if not matroid.coloops:
            dual = t_extreme_dual(matroid)
            assert dual.all_match, (name, dual.mismatches())
            assert dual.as_stated_consistent, name


def rank_two_from_class_sizes(sizes):
    """Rank-2 matroid whose parallel classes have the given sizes."""
    owner = [k for k, size in enumerate(sizes) for _ in range(size)]
    n = len(owner)
    ranks = [min(2, len({owner[e] for e in subsets.elements(a)})) for a in range(1 << n)]
    return Matroid(n, ranks)


def test_lemma_identities_on_random_low_rank_matroids():
    rng = random.Random(11)
    instances = [uniform(1, k) for k in range(2, 8)]
    while len(instances) < 100:
        sizes = [rng.randint(1, 3) for _ in range(rng.randint(2, 4))]
        if len(sizes) == 2 and min(sizes) < 2:
            continue
        instances.append(rank_two_from_class_sizes(sizes))
    for matroid in instances:
        assert not matroid.loops and not matroid.coloops
        assert matroid.full_rank in (1, 2)
        checks = lemma_identities(matroid)
        assert all(c.status is not False for c in checks), [(c.clause, c.direct) for c in checks]
        assert any(c.status for c in checks)


def test_lemma_identities_rank_outside_range():
    with pytest.raises(RankTooSmallError):
        lemma_identities(uniform(0, 0))
    with pytest.raises(PreconditionError):
        lemma_identities(uniform(3, 4))
