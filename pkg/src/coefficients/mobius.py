"""Moebius function of the lattice of flats."""

import functools
import logging

from src.matroid import subsets
from src.matroid.core import require_loopless
from src.utils.errors import NotAFlatError, PreconditionError

logger = logging.getLogger(__name__)


class MobiusTable:
    """Memoized mu(F1, F2) over the flats of a loopless matroid."""

    def __init__(self, matroid):
        require_loopless(matroid, 'mobius')
        self.matroid = matroid
        self.flats = matroid.flats
        self._flat_set = frozenset(self.flats)
        self._values = {}

    def _require_flat(self, subset):
        if subset not in self._flat_set:
            raise NotAFlatError(subset)

    def mu(self, low, high):
        self._require_flat(low)
        self._require_flat(high)
        if low & ~high:
            return 0
        if (low, high) not in self._values:
            self._fill_from(low)
        return self._values[(low, high)]

    def _fill_from(self, low):
        # Ascending bitmask order lists every proper subflat before the flat.
        above = [f for f in self.flats if f & low == low]
        computed = {}
        for f in above:
            if f == low:
                computed[f] = 1
            else:
                computed[f] = -sum(v for g, v in computed.items() if g & ~f == 0)
            self._values[(low, f)] = computed[f]
        logger.debug("mobius row from %s: %d flats", subsets.format_subset(low), len(above))

    def from_bottom(self, flat):
        """mu(empty set, flat)."""
        return self.mu(0, flat)

    def delta_violations(self):
        """Pairs x <= z of flats where the sum of mu(x, y) over x <= y <= z differs from delta(x, z)."""
        bad = []
        for low in self.flats:
            for high in self.flats:
                if low & ~high:
                    continue
                total = sum(self.mu(low, f) for f in self.flats if f & low == low and f & ~high == 0)
                if total != (1 if low == high else 0):
                    bad.append((low, high, total))
        return bad


@functools.lru_cache(maxsize=64)
def mobius_table(matroid):
    return MobiusTable(matroid)


def mobius(matroid, low, high):
    return mobius_table(matroid).mu(low, high)


def mobius_boolean_expansion(matroid, low, high):
    """Sum of (-1)^(|A| - |low|) over low <= A <= high with rk(A) = rk(high)."""
    table = mobius_table(matroid)
    table._require_flat(low)
    table._require_flat(high)
    if low & ~high:
        return 0
    ranks = matroid.rank_table
    target = ranks[high]
    total = 0
    for extra in subsets.submasks(high ^ low):
        if ranks[low | extra] == target:
            total += -1 if subsets.size(extra) % 2 else 1
    return total


def mobius_low_rank(matroid, flat):
    """Closed forms for mu(empty set, F) when rk(F) <= 2: 1, -1 and p(F) - 1."""
    mobius_table(matroid)._require_flat(flat)
    rank = matroid.rank_table[flat]
    if rank == 0:
        return 1
    if rank == 1:
        return -1
    if rank == 2:
        return matroid.restrict(flat).parallel_classes().count - 1
    raise PreconditionError(f"closed form only covers flats of rank <= 2, got rank {rank}")
