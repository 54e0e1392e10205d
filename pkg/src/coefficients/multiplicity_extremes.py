"""Closed forms for the six extreme coefficients of the multiplicity Tutte
polynomial at each corner: near x^rk (top family) and near y^(|X|-rk) (dual family)."""

import logging
import math

from src.coefficients.report import ExtremeCoefficientReport, make_entry
from src.engines.subset_sum import multiplicity_tutte_definition
from src.matroid import subsets
from src.matroid.core import require_coloop_free, require_loopless
from src.utils.errors import LoopError

logger = logging.getLogger(__name__)


def _alternating(flat, weight, m, min_size=0):
    """Sum over A in `flat` with |A| >= min_size of weight(A) * m(A)."""
    return sum(weight(a) * m[a] for a in subsets.submasks(flat) if subsets.size(a) >= min_size)


def _sign(a):
    return -1 if subsets.size(a) % 2 else 1


def parallel_count_after_contracting(matroid, flat):
    quotient = matroid.contract(flat)
    if quotient.loops:
        raise LoopError(f"contraction by {subsets.format_subset(flat)}", quotient.loops)
    return quotient.parallel_classes().count


def extreme_b_top(mm, polynomial=None):
    """b_{r,0}, b_{r-1,0}, b_{r-2,0}, b_{r-1,1}, b_{r-2,1}, b_{r-2,2} for a loopless MM."""
    matroid = mm.matroid
    require_loopless(matroid, 'extreme_b_top')
    polynomial = polynomial or multiplicity_tutte_definition(mm)
    m, ranks = mm.table, matroid.rank_table
    r = matroid.full_rank
    p = matroid.parallel_classes().count
    rank_one, rank_two = matroid.flats_of_rank(1), matroid.flats_of_rank(2)
    cyclic_one = matroid.cyclic_flats_of_rank(1)
    empty = m[0]

    def shift(flat):
        return parallel_count_after_contracting(matroid, flat) - r + 1

    def odd_sum(flat):
        return _alternating(flat, lambda a: -_sign(a), m)

    def b2():
        return (p - r) * empty + sum(odd_sum(f) for f in rank_one)

    def b3():
        lead = math.comb(r, 2) - (r - 1) * p + sum(matroid.restrict(f).parallel_classes().count - 1 for f in rank_two)
        middle = sum(shift(f) * odd_sum(f) for f in rank_one)
        tail = sum(_alternating(f, _sign, m) for f in rank_two)
        return lead * empty + middle + tail

    def pair_sum(flat):
        return _alternating(flat, lambda a: _sign(a) * (subsets.size(a) - 1), m, 2)

    def b4():
        return sum(pair_sum(f) for f in cyclic_one)

    def b5():
        head = sum(shift(f) * pair_sum(f) for f in cyclic_one)
        tail = sum(_alternating(f, lambda a: -_sign(a) * (subsets.size(a) - ranks[a]), m, 2) for f in rank_two)
        return head + tail

    def b6():
        head = sum(shift(f) * _alternating(f, lambda a: -_sign(a) * math.comb(subsets.size(a) - 1, 2), m, 3)
                   for f in cyclic_one)
        tail = sum(_alternating(f, lambda a: _sign(a) * math.comb(subsets.size(a) - ranks[a], 2), m, 3)
                   for f in rank_two)
        return head + tail

    entries = [
        make_entry("b", r, 0, lambda: empty, polynomial),
        make_entry("b", r - 1, 0, b2, polynomial),
        make_entry("b", r - 2, 0, b3, polynomial),
        make_entry("b", r - 1, 1, b4, polynomial),
        make_entry("b", r - 2, 1, b5, polynomial),
        make_entry("b", r - 2, 2, b6, polynomial),
    ]
    return ExtremeCoefficientReport("top", entries)


def _dual_transcription(mm):
    """The dual-family closed forms written against M itself, over flats of M*.

    s(F-bar) is s(M|F-bar) and s(M/F-bar) the series count of the contraction.
    The inner rank weight of the last two clauses is |A| - rk*(A) = rk(M) - rk(X \\ A).
    """
    matroid = mm.matroid
    dual = matroid.dual()
    top, n, r = matroid.ground, matroid.n, matroid.full_rank
    ranks = matroid.rank_table
    corank = n - r
    series = matroid.series_classes()
    s, s_prime = series.count, series.nontrivial_count
    m = mm.table
    m_star = [m[top ^ a] for a in range(1 << n)]
    rank_one, rank_two = dual.flats_of_rank(1), dual.flats_of_rank(2)
    cyclic_one = dual.cyclic_flats_of_rank(1)
    full = m[top]

    def series_of_restriction(flat):
        return matroid.restrict(top ^ flat).series_classes().count

    def series_of_contraction(flat):
        return matroid.contract(top ^ flat).series_classes().count

    def shift(flat):
        return series_of_restriction(flat) - n + r + 1

    def odd_sum(flat):
        return _alternating(flat, lambda a: -_sign(a), m_star)

    def pair_sum(flat):
        return _alternating(flat, lambda a: _sign(a) * (subsets.size(a) - 1), m_star, 2)

    def dual_nullity(a):
        return r - ranks[top ^ a]

    values = {
        (0, corank): lambda: full,
        (0, corank - 1): lambda: (s - n + r) * full + sum(odd_sum(f) for f in rank_one),
        (0, corank - 2): lambda: (
            (math.comb(corank, 2) - (corank - 1) * s + sum(series_of_contraction(f) - 1 for f in rank_two)) * full
            + sum(shift(f) * odd_sum(f) for f in rank_one)
            + sum(_alternating(f, _sign, m_star) for f in rank_two)),
        (1, corank - 1): lambda: sum(pair_sum(f) for f in cyclic_one),
        (1, corank - 2): lambda: (
            sum(shift(f) * pair_sum(f) for f in cyclic_one)
            + sum(_alternating(f, lambda a: -_sign(a) * dual_nullity(a), m_star, 2) for f in rank_two)),
        (2, corank - 2): lambda: (
            sum(shift(f) * _alternating(f, lambda a: -_sign(a) * math.comb(subsets.size(a) - 1, 2), m_star, 3)
                for f in cyclic_one)
            + sum(_alternating(f, lambda a: _sign(a) * math.comb(dual_nullity(a), 2), m_star, 3)
                  for f in rank_two)),
    }
    logger.debug("dual transcription: s=%d, s'=%d, %d rank-1 dual flats", s, s_prime, len(rank_one))
    return values


def extreme_b_dual(mm, polynomial=None):
    """b_{0,c}, b_{0,c-1}, b_{0,c-2}, b_{1,c-1}, b_{1,c-2}, b_{2,c-2} with c = |X| - rk, for a coloop-free MM.

    `formula` is the direct transcription, `alternate` the top family of the
    dual read through M(x, y) = M*(y, x).
    """
    require_coloop_free(mm.matroid, 'extreme_b_dual')
    polynomial = polynomial or multiplicity_tutte_definition(mm)
    direct = _dual_transcription(mm)
    through_dual = extreme_b_top(mm.dual(), polynomial.swap())
    by_index = {(e.j, e.i): e.formula for e in through_dual}
    entries = []
    for (i, j), compute in direct.items():
        alternate = by_index.get((i, j)) if i >= 0 and j >= 0 else None
        entries.append(make_entry("b", i, j, compute, polynomial, alternate=alternate))
    return ExtremeCoefficientReport("dual", entries)
