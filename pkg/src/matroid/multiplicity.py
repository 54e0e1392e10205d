"""Multiplicity matroids and the arithmetic-matroid axiom checker."""

import logging
from dataclasses import dataclass, field

from src.matroid import subsets
from src.utils.errors import MultiplicityError
from src.utils.guards import check_size

logger = logging.getLogger(__name__)

MOLECULE_NOTE = (
    "axiom (2) uses the molecule condition rk(C) = rk(A) + |C ∩ F| for A ⊆ C ⊆ B; "
    "the variant with |C ∪ F| cannot be satisfied and is not checked"
)


class MultiplicityMatroid:
    """A matroid together with a positive integer multiplicity on every subset."""

    def __init__(self, matroid, multiplicities):
        values = tuple(int(v) for v in multiplicities)
        if len(values) != 1 << matroid.n:
            raise MultiplicityError(f"multiplicity table has {len(values)} entries, expected {1 << matroid.n}")
        bad = next((a for a, v in enumerate(values) if v < 1), None)
        if bad is not None:
            raise MultiplicityError(
                f"multiplicity of {subsets.format_subset(bad)} is {values[bad]}; values must be positive")
        self.matroid = matroid
        self._m = values

    @property
    def n(self):
        return self.matroid.n

    @property
    def table(self):
        return self._m

    def m(self, subset):
        return self._m[subsets.check_subset(subset, self.n)]

    @property
    def is_trivial(self):
        return all(v == 1 for v in self._m)

    def __eq__(self, other):
        if not isinstance(other, MultiplicityMatroid):
            return NotImplemented
        return self.matroid == other.matroid and self._m == other._m

    def __hash__(self):
        return hash((self.matroid, self._m))

    def __repr__(self):
        return f"MultiplicityMatroid(n={self.n}, rank={self.matroid.full_rank}, trivial={self.is_trivial})"

    def dual(self):
        """The dual matroid with m*(A) = m(X \\ A)."""
        top = self.matroid.ground
        return MultiplicityMatroid(self.matroid.dual(), [self._m[top ^ a] for a in range(1 << self.n)])

    def restrict(self, keep):
        subsets.check_subset(keep, self.n)
        table = subsets.expansion_table(keep)
        return MultiplicityMatroid(self.matroid.restrict(keep), [self._m[a] for a in table])

    def check_arithmetic_axioms(self):
        return check_arithmetic_axioms(self)


def trivial_multiplicity(matroid):
    return MultiplicityMatroid(matroid, [1] * (1 << matroid.n))


@dataclass(frozen=True)
class AxiomWitness:
    subsets: tuple
    detail: str

    def __str__(self):
        return ", ".join(subsets.format_subset(s) for s in self.subsets) + f": {self.detail}"


@dataclass
class AxiomReport:
    """Per-axiom pass/fail with every witness found."""
    witnesses: dict = field(default_factory=lambda: {1: [], 2: [], 3: [], 4: []})
    header: str = MOLECULE_NOTE

    def passed(self, axiom):
        return not self.witnesses[axiom]

    @property
    def all_passed(self):
        return all(self.passed(axiom) for axiom in self.witnesses)

    def failed_axioms(self):
        return [axiom for axiom in sorted(self.witnesses) if not self.passed(axiom)]

    def summary(self):
        lines = [self.header]
        for axiom in sorted(self.witnesses):
            found = self.witnesses[axiom]
            status = "pass" if not found else f"fail ({len(found)} witnesses, first: {found[0]})"
            lines.append(f"axiom ({axiom}): {status}")
        return "\n".join(lines)


def _check_divisibility(ranks, m, n, report):
    for a in range(1 << n):
        for e in range(n):
            if a >> e & 1:
                continue
            b = a | 1 << e
            if ranks[b] == ranks[a]:
                if m[a] % m[b]:
                    report.witnesses[1].append(AxiomWitness((a, b), f"{m[b]} does not divide {m[a]}"))
            elif m[b] % m[a]:
                report.witnesses[1].append(AxiomWitness((a, b), f"{m[a]} does not divide {m[b]}"))


def _check_molecules(ranks, m, n, report):
    # With F the elements of B \ A that raise rank when added to A alone and T the
    # rest, the condition over every A ⊆ C ⊆ B reduces to rk(B) = rk(A) + |F|:
    # T lies in the closure of A, and each F element is then independent.
    for b in range(1 << n):
        for a in subsets.submasks(b):
            if a == b:
                continue
            rest = b ^ a
            f_part = subsets.from_elements(e for e in subsets.elements(rest) if ranks[a | 1 << e] > ranks[a])
            if ranks[b] != ranks[a] + subsets.size(f_part):
                continue
            t_part = rest ^ f_part
            if not f_part or not t_part:
                continue
            left = m[a] * m[b]
            right = m[a | f_part] * m[a | t_part]
            if left != right:
                report.witnesses[2].append(AxiomWitness(
                    (a, b, f_part, t_part), f"m(A)m(B) = {left} != m(A∪F)m(A∪T) = {right}"))


def _check_alternating_sums(ranks, m, n, witnesses, label):
    """For every A ⊆ B with rk(A) = rk(B): sum over A ⊆ T ⊆ B of (-1)^{|T|-|A|} m(T) >= 0."""
    top = subsets.full_mask(n)
    for a in range(1 << n):
        free = top ^ a
        lift = subsets.expansion_table(free)
        k = subsets.size(free)
        # Moebius transform over the cube above A: sums[s] = sum_{t ⊆ s} (-1)^{|s|-|t|} m(A ∪ t).
        sums = [m[a | lift[s]] for s in range(1 << k)]
        for bit in range(k):
            step = 1 << bit
            for s in range(1 << k):
                if s & step:
                    sums[s] -= sums[s ^ step]
        for s in range(1 << k):
            b = a | lift[s]
            if ranks[b] != ranks[a]:
                continue
            total = sums[s] if s.bit_count() % 2 == 0 else -sums[s]
            if total < 0:
                witnesses.append(AxiomWitness((a, b), f"{label} alternating sum {total} < 0"))


def check_arithmetic_axioms(mm):
    """Sweeps all four arithmetic-matroid axioms and reports every witness."""
    n = mm.n
    check_size(n, 'axiom_max_n', 'check_arithmetic_axioms')
    ranks, m = mm.matroid.rank_table, mm.table
    report = AxiomReport()
    _check_divisibility(ranks, m, n, report)
    _check_molecules(ranks, m, n, report)
    _check_alternating_sums(ranks, m, n, report.witnesses[3], "m")
    # Axiom (4) is axiom (3) for the dual rank function and m*(T) = m(X \ T).
    dual = mm.dual()
    _check_alternating_sums(dual.matroid.rank_table, dual.table, n, report.witnesses[4], "m*")
    logger.debug("axiom sweep on n=%d: failed %s", n, report.failed_axioms())
    return report
