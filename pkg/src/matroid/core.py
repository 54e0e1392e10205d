"""Ground-set and rank-function machinery for finite matroids.

A Matroid stores its rank function as a dense table with one entry per
bitmask (see src.matroid.subsets). Values are immutable after construction;
derived structures (flats, loops, parallel classes, the dual) are computed
on first use and cached on the instance.
"""

import functools
import itertools
import logging
from dataclasses import dataclass

from src.matroid import subsets
from src.utils.errors import ColoopError, InputError, LoopError, NotAFlatError
from src.utils.guards import check_size

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RankAxiomViolation:
    axiom: int
    witnesses: tuple
    detail: str

    def __str__(self):
        sets = ", ".join(subsets.format_subset(w) for w in self.witnesses)
        return f"axiom ({self.axiom}) at {sets}: {self.detail}"


@dataclass(frozen=True)
class PartitionIntoClasses:
    """Disjoint classes covering every non-loop element, ordered by least element."""
    classes: tuple

    @property
    def count(self):
        return len(self.classes)

    @property
    def nontrivial_count(self):
        return sum(1 for c in self.classes if subsets.size(c) >= 2)

    def sizes(self):
        return [subsets.size(c) for c in self.classes]


def validate_rank_axioms(n, table):
    """Checks the three rank axioms on a raw table of length 2**n.

    Monotonicity and submodularity are checked in their local forms
    (single-element extensions and diamonds A, A+e, A+f, A+e+f), which are
    equivalent to the global statements on a Boolean lattice.
    """
    check_size(n, 'max_n', 'validate_rank_axioms')
    if len(table) != 1 << n:
        raise InputError(f"rank table has {len(table)} entries, expected {1 << n}")
    violations = []
    for a in range(1 << n):
        if not 0 <= table[a] <= subsets.size(a):
            violations.append(RankAxiomViolation(1, (a,), f"rank {table[a]} not in [0, {subsets.size(a)}]"))
    for a in range(1 << n):
        for e in range(n):
            if not a >> e & 1 and table[a] > table[a | 1 << e]:
                b = a | 1 << e
                violations.append(RankAxiomViolation(2, (a, b), f"rank {table[a]} > rank {table[b]}"))
    for a in range(1 << n):
        outside = [e for e in range(n) if not a >> e & 1]
        for e, f in itertools.combinations(outside, 2):
            ae, af, aef = a | 1 << e, a | 1 << f, a | 1 << e | 1 << f
            if table[aef] + table[a] > table[ae] + table[af]:
                violations.append(RankAxiomViolation(
                    3, (ae, af),
                    f"rank(union)+rank(intersection) = {table[aef] + table[a]} > {table[ae] + table[af]}"))
    return violations


class Matroid:
    """A matroid on ground set {0..n-1} given by its total rank function."""

    def __init__(self, n, ranks, labels=None):
        check_size(n, 'max_n', 'Matroid')
        if len(ranks) != 1 << n:
            raise InputError(f"rank table has {len(ranks)} entries, expected {1 << n}")
        if any(r < 0 or r > n for r in ranks):
            raise InputError("rank values must lie in [0, n]")
        self._n = n
        # One byte per subset; ranks never exceed 24.
        self._ranks = bytes(ranks)
        self.labels = tuple(labels) if labels is not None else tuple(range(n))
        if len(self.labels) != n:
            raise InputError("labels must name every element exactly once")

    # --- basic accessors ---

    @property
    def n(self):
        return self._n

    @property
    def ground(self):
        return subsets.full_mask(self._n)

    @property
    def rank_table(self):
        return self._ranks

    @property
    def full_rank(self):
        return self._ranks[self.ground]

    def rank(self, subset):
        return self._ranks[subsets.check_subset(subset, self._n)]

    def validate_rank_axioms(self):
        return validate_rank_axioms(self._n, self._ranks)

    def __eq__(self, other):
        if not isinstance(other, Matroid):
            return NotImplemented
        return self._n == other._n and self._ranks == other._ranks

    def __hash__(self):
        return hash((self._n, self._ranks))

    def __repr__(self):
        return f"Matroid(n={self._n}, rank={self.full_rank})"

    # --- closure and flats ---

    def closure(self, subset):
        subsets.check_subset(subset, self._n)
        r = self._ranks[subset]
        closed = subset
        for e in range(self._n):
            if not subset >> e & 1 and self._ranks[subset | 1 << e] == r:
                closed |= 1 << e
        return closed

    def is_flat(self, subset):
        return self.closure(subset) == subset

    @functools.cached_property
    def flats(self):
        """All flats, ascending by bitmask value."""
        check_size(self._n, 'max_n', 'enumerate_flats')
        found = tuple(a for a in range(1 << self._n) if self.closure(a) == a)
        logger.debug("enumerated %d flats on n=%d", len(found), self._n)
        return found

    def flats_of_rank(self, i):
        return tuple(f for f in self.flats if self._ranks[f] == i)

    def is_cyclic_flat(self, flat):
        """True iff the restriction to `flat` has no coloops."""
        if not self.is_flat(flat):
            raise NotAFlatError(flat)
        r = self._ranks[flat]
        return all(self._ranks[flat ^ 1 << e] == r for e in subsets.elements(flat))

    def cyclic_flats_of_rank(self, i):
        return tuple(f for f in self.flats_of_rank(i) if self.is_cyclic_flat(f))

    # --- loops, coloops, classes ---

    @functools.cached_property
    def loops(self):
        return subsets.from_elements(e for e in range(self._n) if self._ranks[1 << e] == 0)

    @functools.cached_property
    def coloops(self):
        top, r = self.ground, self.full_rank
        return subsets.from_elements(e for e in range(self._n) if self._ranks[top ^ 1 << e] == r - 1)

    @property
    def is_loopless(self):
        return self.loops == 0

    @property
    def has_coloops(self):
        return self.coloops != 0

    def parallel_classes(self):
        return self._parallel_partition

    def series_classes(self):
        return self.dual().parallel_classes()

    @functools.cached_property
    def _parallel_partition(self):
        classes = []
        assigned = self.loops
        for e in range(self._n):
            if assigned >> e & 1:
                continue
            cls = 1 << e
            for f in range(e + 1, self._n):
                if self._ranks[1 << f] == 1 and self._ranks[1 << e | 1 << f] == 1:
                    cls |= 1 << f
            assigned |= cls
            classes.append(cls)
        return PartitionIntoClasses(tuple(classes))

    # --- duality and minors ---

    def dual(self):
        return self._dual

    @functools.cached_property
    def _dual(self):
        top, r = self.ground, self.full_rank
        ranks = [subsets.size(a) + self._ranks[top ^ a] - r for a in range(1 << self._n)]
        dual = Matroid(self._n, ranks, self.labels)
        # The dual of the dual is this matroid, bit for bit.
        dual.__dict__['_dual'] = self
        return dual

    def restrict(self, keep):
        """M|T on the elements of `keep`, re-indexed densely in ascending order."""
        subsets.check_subset(keep, self._n)
        table = subsets.expansion_table(keep)
        ranks = [self._ranks[a] for a in table]
        return Matroid(subsets.size(keep), ranks, [self.labels[e] for e in subsets.elements(keep)])

    def delete(self, removed):
        return self.restrict(self.ground & ~removed)

    def contract(self, contracted):
        """M/T on X minus `contracted`, with rank rk(A u T) - rk(T)."""
        subsets.check_subset(contracted, self._n)
        keep = self.ground & ~contracted
        table = subsets.expansion_table(keep)
        base = self._ranks[contracted]
        ranks = [self._ranks[a | contracted] - base for a in table]
        return Matroid(subsets.size(keep), ranks, [self.labels[e] for e in subsets.elements(keep)])

    # --- bases ---

    def bases(self):
        """Yields every basis as a bitmask, ascending by bitmask value."""
        r = self.full_rank
        found = []
        for combo in itertools.combinations(range(self._n), r):
            mask = subsets.from_elements(combo)
            if self._ranks[mask] == r:
                found.append(mask)
        yield from sorted(found)

    def count_bases(self):
        return sum(1 for _ in self.bases())


def require_loopless(matroid, operation):
    if matroid.loops:
        raise LoopError(operation, matroid.loops)


def require_coloop_free(matroid, operation):
    if matroid.coloops:
        raise ColoopError(operation, matroid.coloops)
