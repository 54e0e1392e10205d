"""Subset-sum engines: the defining sums of the Tutte, multiplicity Tutte and
characteristic polynomials, evaluated over every subset of the ground set."""

import logging
from collections import defaultdict

from src.matroid import subsets
from src.poly.bivariate import BivarPoly, shifted_monomial
from src.poly.univariate import UniPoly
from src.utils.guards import check_size

logger = logging.getLogger(__name__)


def _grouped_sum(matroid, weights, operation):
    n = matroid.n
    check_size(n, 'max_n', operation)
    ranks, r = matroid.rank_table, matroid.full_rank
    # Subsets sharing (corank, nullity) share the monomial; sum their weights first.
    groups = defaultdict(int)
    for a in range(1 << n):
        rk = ranks[a]
        groups[(r - rk, subsets.size(a) - rk)] += 1 if weights is None else weights[a]
    logger.debug("%s on n=%d: %d (corank, nullity) groups", operation, n, len(groups))
    total = BivarPoly.zero()
    for (corank, nullity), weight in sorted(groups.items()):
        total = total + shifted_monomial(corank, nullity, weight)
    return total


def multiplicity_tutte_definition(mm):
    """Sum over A of m(A) (x-1)^(r-rk A) (y-1)^(|A|-rk A)."""
    return _grouped_sum(mm.matroid, mm.table, 'multiplicity_tutte_definition')


def tutte_definition(matroid):
    return _grouped_sum(matroid, None, 'tutte_definition')


def char_poly(matroid):
    """Sum over A of (-1)^|A| lambda^(r - rk A); identically zero when a loop exists."""
    n = matroid.n
    check_size(n, 'max_n', 'char_poly')
    ranks, r = matroid.rank_table, matroid.full_rank
    coefficients = [0] * (r + 1)
    for a in range(1 << n):
        coefficients[r - ranks[a]] += -1 if subsets.size(a) % 2 else 1
    return UniPoly(coefficients)
