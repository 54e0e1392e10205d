"""Convolution formula: M(x, y) = sum over A of M_{M|A}(0, y) * T_{M/A}(x, 0)."""

import logging

from src.engines.subset_sum import multiplicity_tutte_definition, tutte_definition
from src.poly.bivariate import BivarPoly
from src.utils.guards import check_size

logger = logging.getLogger(__name__)


def convolution_tutte(mm, all_subsets=False):
    """
    Sums over flats by default: T_{M/A}(x, 0) vanishes unless A is a flat,
    since M/A then has a loop. all_subsets=True sums over every A instead.
    """
    matroid = mm.matroid
    check_size(matroid.n, 'convolution_max_n', 'convolution_tutte')
    domain = range(1 << matroid.n) if all_subsets else matroid.flats
    total = BivarPoly.zero()
    terms = 0
    for a in domain:
        tail = tutte_definition(matroid.contract(a)).y_zero_slice()
        if tail.is_zero:
            continue
        head = multiplicity_tutte_definition(mm.restrict(a)).x_zero_slice()
        total = total + head * tail
        terms += 1
    logger.debug("convolution on n=%d: %d nonvanishing summands", matroid.n, terms)
    return total
