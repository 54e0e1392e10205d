"""Extreme coefficients t_{i,j} of the classical Tutte polynomial.

Each top-family entry carries two closed forms. The generalized form holds on
every loopless matroid. The as-stated form replaces the rank-2 terms by a case
split on p(F) in {2, 3} and drops the size condition on rank-1 cyclic flats,
so it is exact only when `hypothesis_ok` is set.
"""

import logging
import math
from dataclasses import dataclass

from src.coefficients.multiplicity_extremes import parallel_count_after_contracting
from src.coefficients.report import ExtremeCoefficientReport, make_entry
from src.engines.subset_sum import tutte_definition
from src.matroid import subsets
from src.matroid.core import require_coloop_free, require_loopless
from src.utils.errors import ColoopError, LoopError, PreconditionError, RankTooSmallError

logger = logging.getLogger(__name__)


def capped_class_sum(partition):
    """sum of min(|P|, 3) over classes, minus the number of classes with at least three elements, minus 3."""
    sizes = partition.sizes()
    return sum(min(size, 3) for size in sizes) - sum(1 for size in sizes if size >= 3) - 3


@dataclass(frozen=True)
class AsStatedHypotheses:
    """Whether the rank-2 case split and the rank-1 size condition hold."""
    rank_two_split: bool
    rank_one_large: bool

    @property
    def clause_five(self):
        return self.rank_two_split

    @property
    def clause_six(self):
        return self.rank_two_split and self.rank_one_large


class _FlatProfile:
    """Parallel-class data of the low-rank flats of a loopless matroid."""

    def __init__(self, matroid):
        self.matroid = matroid
        self.r = matroid.full_rank
        classes = matroid.parallel_classes()
        self.p, self.p_prime = classes.count, classes.nontrivial_count
        self.rank_two = [matroid.restrict(f).parallel_classes() for f in matroid.flats_of_rank(2)]
        self.cyclic_two = [matroid.restrict(f).parallel_classes() for f in matroid.cyclic_flats_of_rank(2)]
        self.cyclic_one = matroid.cyclic_flats_of_rank(1)
        self.contracted = {f: parallel_count_after_contracting(matroid, f) for f in self.cyclic_one}
        self.hypotheses = AsStatedHypotheses(
            rank_two_split=all(c.count in (2, 3) for c in self.cyclic_two),
            rank_one_large=all(subsets.size(f) >= 3 for f in self.cyclic_one),
        )

    def cyclic_two_with(self, count):
        return [c for c in self.cyclic_two if c.count == count]

    # clauses shared by both forms

    def t_lead(self):
        return 1

    def t_second(self):
        return self.p - self.r

    def t_third(self):
        return math.comb(self.r, 2) - (self.r - 1) * self.p + sum(c.count - 1 for c in self.rank_two)

    def t_mixed(self):
        return self.p_prime

    # generalized forms

    def t_five(self):
        return ((1 - self.r) * self.p_prime + sum(self.contracted.values())
                + sum(c.count - 2 for c in self.rank_two))

    def t_six(self):
        head = sum(q - self.r + 1 for f, q in self.contracted.items() if subsets.size(f) >= 3)
        return head + sum(capped_class_sum(c) for c in self.cyclic_two)

    # literal case-split forms

    def t_five_as_stated(self):
        return ((1 - self.r) * self.p_prime + sum(self.contracted.values())
                + len(self.cyclic_two_with(3)))

    def t_six_as_stated(self):
        return ((1 - self.r) * self.p_prime + sum(self.contracted.values())
                + len(self.cyclic_two_with(2))
                + sum(c.nontrivial_count for c in self.cyclic_two_with(3)))

    def difference_as_stated(self):
        return len(self.cyclic_two_with(2)) + sum(c.nontrivial_count - 1 for c in self.cyclic_two_with(3))


def t_extreme(matroid, polynomial=None):
    """The six top-corner t_{i,j} of a loopless matroid, generalized and as stated."""
    require_loopless(matroid, 't_extreme')
    polynomial = polynomial or tutte_definition(matroid)
    profile = _FlatProfile(matroid)
    flags = profile.hypotheses
    r = profile.r
    entries = [
        make_entry("t", r, 0, profile.t_lead, polynomial, as_stated=1, hypothesis_ok=True),
        make_entry("t", r - 1, 0, profile.t_second, polynomial, as_stated=profile.t_second(), hypothesis_ok=True),
        make_entry("t", r - 2, 0, profile.t_third, polynomial, as_stated=profile.t_third(), hypothesis_ok=True),
        make_entry("t", r - 1, 1, profile.t_mixed, polynomial, as_stated=profile.t_mixed(), hypothesis_ok=True),
        make_entry("t", r - 2, 1, profile.t_five, polynomial,
                   as_stated=profile.t_five_as_stated(), hypothesis_ok=flags.clause_five),
        make_entry("t", r - 2, 2, profile.t_six, polynomial,
                   as_stated=profile.t_six_as_stated(), hypothesis_ok=flags.clause_six),
    ]
    note = "" if flags.clause_six else "as-stated forms need every rank-2 cyclic flat to have p in {2,3} " \
                                      "and every rank-1 cyclic flat to have at least 3 elements"
    return ExtremeCoefficientReport("t_top", entries, note)


def t_extreme_dual(matroid, polynomial=None):
    """The six bottom-corner t_{i,j} of a coloop-free matroid, through the dual.

    Clauses (1)-(4) are also transcribed in terms of series classes of M;
    clauses (5) and (6) carry only the duality value and the dual's flags.
    """
    require_coloop_free(matroid, 't_extreme_dual')
    polynomial = polynomial or tutte_definition(matroid)
    dual = matroid.dual()
    through_dual = {(e.j, e.i): e for e in t_extreme(dual, polynomial.swap())}
    n, r = matroid.n, matroid.full_rank
    corank = n - r
    top = matroid.ground
    series = matroid.series_classes()
    s, s_prime = series.count, series.nontrivial_count

    def third():
        rank_two = sum(matroid.contract(top ^ f).series_classes().count - 1 for f in dual.flats_of_rank(2))
        return math.comb(corank, 2) - (corank - 1) * s + rank_two

    transcribed = {
        (0, corank): lambda: 1,
        (0, corank - 1): lambda: s - n + r,
        (0, corank - 2): third,
        (1, corank - 1): lambda: s_prime,
    }
    entries = []
    for i, j in [(0, corank), (0, corank - 1), (0, corank - 2), (1, corank - 1), (1, corank - 2), (2, corank - 2)]:
        mapped = through_dual.get((i, j))
        formula = mapped.formula if mapped is not None else None
        literal = transcribed.get((i, j))
        as_stated = literal() if literal is not None and j >= 0 else None
        hypothesis = True if literal is not None else (mapped.hypothesis_ok if mapped is not None else None)
        entries.append(make_entry("t", i, j, lambda f=formula: f, polynomial,
                                  as_stated=as_stated, hypothesis_ok=hypothesis))
    return ExtremeCoefficientReport("t_dual", entries)


@dataclass(frozen=True)
class DifferenceCheck:
    as_stated: int
    generalized: int
    brute_force: int
    hypothesis_ok: bool

    @property
    def match(self):
        return self.generalized == self.brute_force

    @property
    def as_stated_match(self):
        return self.as_stated == self.brute_force


def t_difference(matroid, polynomial=None):
    """t_{r-2,2} - t_{r-2,1}: case-split right-hand side, generalized value and brute force."""
    require_loopless(matroid, 't_difference')
    r = matroid.full_rank
    if r < 2:
        raise RankTooSmallError(f"t_difference needs rank >= 2, got {r}")
    polynomial = polynomial or tutte_definition(matroid)
    profile = _FlatProfile(matroid)
    return DifferenceCheck(
        as_stated=profile.difference_as_stated(),
        generalized=profile.t_six() - profile.t_five(),
        brute_force=polynomial.coefficient(r - 2, 2) - polynomial.coefficient(r - 2, 1),
        hypothesis_ok=profile.hypotheses.clause_six,
    )


@dataclass(frozen=True)
class LemmaCheck:
    clause: int
    direct: object = None
    closed_form: object = None
    general_form: object = None

    @property
    def applicable(self):
        return self.direct is not None

    @property
    def status(self):
        """True/False on the case-split closed form, else on the general form; None when not applicable."""
        if not self.applicable:
            return None
        reference = self.closed_form if self.closed_form is not None else self.general_form
        if reference is None:
            return None
        ok = reference == self.direct
        if self.general_form is not None:
            ok = ok and self.general_form == self.direct
        return ok


def lemma_identities(matroid):
    """The four alternating-sum identities for rank-1 and rank-2 matroids without loops or coloops.

    Clauses (1) and (2) need rank 1, clauses (3) and (4) rank 2; the pair for the
    other rank, and clause (2) below three elements, come back not applicable.
    """
    if matroid.loops:
        raise LoopError('lemma_identities', matroid.loops)
    if matroid.coloops:
        raise ColoopError('lemma_identities', matroid.coloops)
    n, r, ranks = matroid.n, matroid.full_rank, matroid.rank_table
    if r < 1:
        raise RankTooSmallError(f"lemma_identities needs rank 1 or 2, got {r}")
    if r > 2:
        raise PreconditionError(f"lemma_identities needs rank 1 or 2, got {r}")
    everything = list(range(1 << n))

    def direct(weight, min_size=0):
        return sum(weight(a) for a in everything if subsets.size(a) >= min_size)

    def sign(a):
        return -1 if subsets.size(a) % 2 else 1

    checks = []
    if r == 1:
        checks.append(LemmaCheck(1, direct(lambda a: sign(a) * (subsets.size(a) - 1), 2), 1))
        if n >= 3:
            checks.append(LemmaCheck(2, direct(lambda a: -sign(a) * math.comb(subsets.size(a) - 1, 2), 3), 1))
        else:
            checks.append(LemmaCheck(2))
    else:
        checks.extend([LemmaCheck(1), LemmaCheck(2)])
    if r == 2:
        classes = matroid.parallel_classes()
        checks.append(LemmaCheck(3, direct(lambda a: -sign(a) * (subsets.size(a) - ranks[a])), classes.count - 2))
        case_split = {2: 1, 3: classes.nontrivial_count}.get(classes.count)
        checks.append(LemmaCheck(
            4, direct(lambda a: sign(a) * math.comb(subsets.size(a) - ranks[a], 2)),
            case_split, capped_class_sum(classes)))
    else:
        checks.extend([LemmaCheck(3), LemmaCheck(4)])
    logger.debug("lemma identities on n=%d, r=%d: %s", n, r, [c.status for c in checks])
    return checks
