"""Crapo's activity expansion: T(M) = sum over bases of x^internal * y^external."""

import logging
from dataclasses import dataclass

from src.matroid import subsets
from src.poly.bivariate import BivarPoly
from src.utils.errors import InvalidOrderError
from src.utils.guards import check_size

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ActivityRecord:
    basis: int
    internal_activity: int
    external_activity: int
    order: tuple

    def __str__(self):
        return (f"basis {subsets.format_subset(self.basis)}: "
                f"internal {self.internal_activity}, external {self.external_activity}")


def validate_order(order, n):
    order = tuple(int(e) for e in order)
    if sorted(order) != list(range(n)):
        raise InvalidOrderError(f"order {list(order)} is not a permutation of 0..{n - 1}")
    return order


def fundamental_circuit(matroid, basis, e):
    """The unique circuit in basis + e: e plus every f whose exchange keeps full rank."""
    ranks = matroid.rank_table
    r = ranks[basis]
    circuit = 1 << e
    for f in subsets.elements(basis):
        if ranks[(basis ^ 1 << f) | 1 << e] == r:
            circuit |= 1 << f
    return circuit


def fundamental_cocircuit(matroid, basis, f):
    """Fundamental circuit of f with respect to the complementary basis of the dual."""
    return fundamental_circuit(matroid.dual(), matroid.ground ^ basis, f)


def tutte_by_activities(matroid, order=None):
    """Returns (polynomial, records) with one ActivityRecord per basis."""
    n = matroid.n
    check_size(n, 'max_n', 'tutte_by_activities')
    order = validate_order(range(n) if order is None else order, n)
    position = {e: index for index, e in enumerate(order)}

    def least(mask):
        return min(subsets.elements(mask), key=position.__getitem__)

    terms = {}
    records = []
    for basis in matroid.bases():
        outside = matroid.ground ^ basis
        external = sum(1 for e in subsets.elements(outside)
                       if least(fundamental_circuit(matroid, basis, e)) == e)
        internal = sum(1 for f in subsets.elements(basis)
                       if least(fundamental_cocircuit(matroid, basis, f)) == f)
        records.append(ActivityRecord(basis, internal, external, order))
        terms[(internal, external)] = terms.get((internal, external), 0) + 1
    logger.debug("activity expansion on n=%d: %d bases", n, len(records))
    return BivarPoly(terms), records
