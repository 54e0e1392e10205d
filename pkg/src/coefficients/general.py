"""Every coefficient b_{i,j} through a double sum over flats, and the T(x, 0) extremes.

Grouping the convolution formula by flats F gives

    b_{i,j} = (-1)^(r+i+j) * sum_F X_F(i) * Y_F(j)

    X_F(i) = sum over flats F' of M/F of mu(empty, F') * C(rk(M/F) - rk(F'), i)
    Y_F(j) = sum over A in F of (-1)^|A| * C(|A| - rk(A), j) * m(A)
"""

import functools
import logging
import math
from collections import defaultdict

from src.coefficients.mobius import mobius_table
from src.coefficients.report import ExtremeCoefficientReport, make_entry
from src.engines.characteristic import tutte_x0
from src.matroid import subsets
from src.matroid.core import require_loopless
from src.matroid.multiplicity import trivial_multiplicity
from src.utils.guards import check_size

logger = logging.getLogger(__name__)


def binomial(k, j):
    """C(k, j), zero whenever k < j (negative k included)."""
    if j < 0 or k < j:
        return 0
    return math.comb(k, j)


class GeneralCoefficients:
    """Per-flat data for the double sum, computed once per multiplicity matroid."""

    def __init__(self, mm):
        matroid = mm.matroid
        require_loopless(matroid, 'b_ij_general')
        check_size(matroid.n, 'general_coefficient_max_n', 'b_ij_general')
        self.rank = matroid.full_rank
        ranks, m = matroid.rank_table, mm.table
        self._flat_data = []
        for flat in matroid.flats:
            quotient = matroid.contract(flat)
            table = mobius_table(quotient)
            corank_weights = defaultdict(int)
            for upper in quotient.flats:
                corank_weights[quotient.full_rank - quotient.rank_table[upper]] += table.from_bottom(upper)
            nullity_weights = defaultdict(int)
            for a in subsets.submasks(flat):
                sign = -1 if subsets.size(a) % 2 else 1
                nullity_weights[subsets.size(a) - ranks[a]] += sign * m[a]
            self._flat_data.append((dict(corank_weights), dict(nullity_weights)))
        logger.debug("general coefficient data over %d flats", len(self._flat_data))

    def coefficient(self, i, j):
        if i < 0 or j < 0:
            return 0
        total = 0
        for corank_weights, nullity_weights in self._flat_data:
            x_part = sum(w * binomial(k, i) for k, w in corank_weights.items())
            if not x_part:
                continue
            y_part = sum(w * binomial(k, j) for k, w in nullity_weights.items())
            total += x_part * y_part
        return -total if (self.rank + i + j) % 2 else total


@functools.lru_cache(maxsize=32)
def general_coefficients(mm):
    return GeneralCoefficients(mm)


def b_ij_general(mm, i, j):
    return general_coefficients(mm).coefficient(i, j)


def t_ij_general(matroid, i, j):
    """t_{i,j} through the same double sum with trivial multiplicity."""
    return b_ij_general(trivial_multiplicity(matroid), i, j)


def tutte_x0_extreme(matroid):
    """[x^r], [x^(r-1)] and [x^(r-2)] of T(x, 0) in closed form."""
    require_loopless(matroid, 'tutte_x0_extreme')
    r = matroid.full_rank
    p = matroid.parallel_classes().count
    slice_x0 = tutte_x0(matroid).to_bivariate("x")

    def third():
        rank_two = sum(matroid.restrict(f).parallel_classes().count - 1 for f in matroid.flats_of_rank(2))
        return math.comb(r, 2) - (r - 1) * p + rank_two

    entries = [
        make_entry("t", r, 0, lambda: 1, slice_x0, label="[x^r]T(x,0)"),
        make_entry("t", r - 1, 0, lambda: p - r, slice_x0, label="[x^(r-1)]T(x,0)"),
        make_entry("t", r - 2, 0, third, slice_x0, label="[x^(r-2)]T(x,0)"),
    ]
    return ExtremeCoefficientReport("tutte_x0", entries)
