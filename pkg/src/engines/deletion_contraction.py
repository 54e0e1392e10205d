"""Classical deletion-contraction recurrence, memoized on the rank table."""

import logging

from src.matroid import subsets
from src.poly.bivariate import BivarPoly
from src.utils.guards import check_size

logger = logging.getLogger(__name__)


class DeletionContraction:
    """
    T(M) = T(M \\ e) + T(M / e) for the least element e that is neither a loop
    nor a coloop; otherwise T(M) = x^#coloops * y^#loops.
    """

    def __init__(self):
        self._memo = {}
        self.hits = 0

    def tutte(self, matroid):
        check_size(matroid.n, 'max_n', 'tutte_deletion_contraction')
        result = self._solve(matroid)
        logger.debug("deletion-contraction: %d subproblems, %d memo hits", len(self._memo), self.hits)
        return result

    def _solve(self, matroid):
        key = (matroid.n, matroid.rank_table)
        if key in self._memo:
            self.hits += 1
            return self._memo[key]
        blocked = matroid.loops | matroid.coloops
        pivot = next((e for e in range(matroid.n) if not blocked >> e & 1), None)
        if pivot is None:
            result = BivarPoly.monomial(subsets.size(matroid.coloops), subsets.size(matroid.loops))
        else:
            element = 1 << pivot
            result = self._solve(matroid.delete(element)) + self._solve(matroid.contract(element))
        self._memo[key] = result
        return result


def tutte_deletion_contraction(matroid):
    return DeletionContraction().tutte(matroid)
