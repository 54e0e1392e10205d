"""Runs every applicable identity on one multiplicity matroid.

Each `check_` method records one or more entries on the report; the checks
are discovered by name, so adding an identity means adding a method.
"""

import functools
import logging
import random

from src.coefficients.general import b_ij_general, t_ij_general, tutte_x0_extreme
from src.coefficients.mobius import mobius, mobius_boolean_expansion, mobius_low_rank, mobius_table
from src.coefficients.multiplicity_extremes import extreme_b_dual, extreme_b_top
from src.coefficients.tutte_extremes import lemma_identities, t_difference, t_extreme, t_extreme_dual
from src.engines.activities import tutte_by_activities
from src.engines.characteristic import char_poly_via_flats, tutte_x0
from src.engines.convolution import convolution_tutte
from src.engines.deletion_contraction import tutte_deletion_contraction
from src.engines.subset_sum import char_poly, multiplicity_tutte_definition, tutte_definition
from src.matroid import subsets
from src.utils.config_loader import get_settings
from src.utils.errors import SizeGuardError
from src.verification.report import VerificationReport

logger = logging.getLogger(__name__)

# Summing the convolution over every subset re-checks that non-flats vanish.
ALL_SUBSET_CONVOLUTION_MAX_N = 12


def _first_mismatch(report):
    bad = report.mismatches()
    if not bad:
        return ""
    e = bad[0]
    return f"{e.label}: formula {e.formula}, alternate {e.alternate}, brute force {e.brute_force}"


class IdentityVerifier:

    def __init__(self, mm, settings=None):
        self.mm = mm
        self.matroid = mm.matroid
        self.settings = settings or get_settings()
        self.rng = random.Random(self.settings.random_seed)
        self.checks = self._get_all_checks()

    def _get_all_checks(self):
        """Dynamically gets all methods starting with 'check_'."""
        return [getattr(self, name) for name in dir(self) if name.startswith('check_') and callable(getattr(self, name))]

    def run(self):
        report = VerificationReport()
        for check in self.checks:
            try:
                check(report)
            except SizeGuardError as exc:
                report.add(check.__name__.removeprefix('check_'), "size guard", None, f"skipped: {exc}")
        logger.info("verification on n=%d: %s (%d entries)", self.matroid.n, report.overall, len(report.entries))
        return report

    @functools.cached_property
    def polynomial(self):
        return multiplicity_tutte_definition(self.mm)

    @functools.cached_property
    def tutte(self):
        return tutte_definition(self.matroid)

    @property
    def loopless(self):
        return not self.matroid.loops

    @property
    def coloop_free(self):
        return not self.matroid.coloops

    # --- engines ---

    def check_convolution(self, report):
        anchor = "M(x,y) = sum_A M_{M|A}(0,y) T_{M/A}(x,0)"
        by_flats = convolution_tutte(self.mm)
        report.add("convolution", anchor, by_flats == self.polynomial, f"flats sum gives {by_flats}")
        if self.matroid.n <= ALL_SUBSET_CONVOLUTION_MAX_N:
            every = convolution_tutte(self.mm, all_subsets=True)
            report.add("convolution_all_subsets", anchor, every == self.polynomial, f"subset sum gives {every}")

    def check_duality(self, report):
        dual = multiplicity_tutte_definition(self.mm.dual())
        report.add("duality", "M_M(x,y) = M_{M*}(y,x)", dual == self.polynomial.swap(), f"dual gives {dual}")

    def check_involution(self, report):
        ok = self.matroid.dual().dual() == self.matroid and self.mm.dual().dual() == self.mm
        report.add("involution", "(M*)* = M and m** = m", ok, "double dual differs")

    def check_trivial_reduction(self, report):
        if not self.mm.is_trivial:
            report.add("trivial_multiplicity", "m = 1 gives T_M", None)
            return
        report.add("trivial_multiplicity", "m = 1 gives T_M", self.polynomial == self.tutte,
                   f"{self.polynomial} != {self.tutte}")

    def check_deletion_contraction(self, report):
        result = tutte_deletion_contraction(self.matroid)
        report.add("deletion_contraction", "T(M) = T(M\\e) + T(M/e)", result == self.tutte, f"gives {result}")

    def check_activity_orders(self, report):
        n = self.matroid.n
        orders = [list(range(n))]
        for _ in range(self.settings.random_orders):
            order = list(range(n))
            self.rng.shuffle(order)
            orders.append(order)
        witness = ""
        for order in orders:
            result, _ = tutte_by_activities(self.matroid, order)
            if result != self.tutte:
                witness = f"order {order} gives {result}"
                break
        report.add("activities", "T = sum over bases x^internal y^external", not witness, witness)

    def check_basis_count(self, report):
        bases = self.matroid.count_bases()
        value = self.tutte.evaluate(1, 1)
        report.add("basis_count", "T(1,1) = #bases", value == bases, f"T(1,1) = {value}, bases = {bases}")

    def check_characteristic(self, report):
        chi = char_poly(self.matroid)
        if not self.loopless:
            report.add("characteristic_loop", "chi = 0 with a loop", chi.is_zero, f"chi = {chi}")
            report.add("characteristic_flats", "chi = sum_F mu(0,F) l^(r-rk F)", None)
            report.add("tutte_x0", "T(x,0) = (-1)^r chi(1-x)", None)
            return
        via_flats = char_poly_via_flats(self.matroid)
        report.add("characteristic_flats", "chi = sum_F mu(0,F) l^(r-rk F)", via_flats == chi,
                   f"{via_flats} != {chi}")
        specialized = tutte_x0(self.matroid).to_bivariate("x")
        report.add("tutte_x0", "T(x,0) = (-1)^r chi(1-x)", specialized == self.tutte.y_zero_slice(),
                   f"{specialized} != {self.tutte.y_zero_slice()}")

    # --- flat lattice ---

    def check_mobius(self, report):
        anchor = "mu recursion = Boolean expansion; mu(0,F) in {1, -1, p(F)-1}"
        if not self.loopless:
            report.add("mobius", anchor, None)
            return
        table = mobius_table(self.matroid)
        witness = ""
        if table.delta_violations():
            witness = f"delta sums fail at {table.delta_violations()[0]}"
        flats = self.matroid.flats
        for low in flats:
            for high in flats:
                if witness:
                    break
                if low & ~high == 0 and mobius(self.matroid, low, high) != mobius_boolean_expansion(self.matroid, low, high):
                    witness = f"mu({subsets.format_subset(low)}, {subsets.format_subset(high)})"
        for flat in flats:
            if not witness and self.matroid.rank_table[flat] <= 2:
                if mobius_low_rank(self.matroid, flat) != table.from_bottom(flat):
                    witness = f"low-rank form at {subsets.format_subset(flat)}"
        report.add("mobius", anchor, not witness, witness)

    def check_tutte_x0_extremes(self, report):
        ok = tutte_x0_extreme(self.matroid).all_match if self.loopless else None
        report.add("tutte_x0_extremes", "[x^r]T(x,0) = 1, [x^(r-1)] = p-r, [x^(r-2)]", ok, "closed form differs")

    # --- coefficient formulas ---

    def check_general_coefficients(self, report):
        anchor = "b_ij = (-1)^(r+i+j) sum_F X_F(i) Y_F(j)"
        if not self.loopless:
            report.add("general_coefficients", anchor, None)
            return
        r, n = self.matroid.full_rank, self.matroid.n
        witness = ""
        for i in range(r + 2):
            for j in range(n - r + 2):
                if b_ij_general(self.mm, i, j) != self.polynomial.coefficient(i, j):
                    witness = f"b_{{{i},{j}}}"
                elif t_ij_general(self.matroid, i, j) != self.tutte.coefficient(i, j):
                    witness = f"t_{{{i},{j}}}"
                if witness:
                    break
            if witness:
                break
        report.add("general_coefficients", anchor, not witness, witness)

    def check_extreme_top(self, report):
        if not self.loopless:
            report.add("extreme_b_top", "b_{r,0} = m(0) and five neighbours", None)
            return
        result = extreme_b_top(self.mm, self.polynomial)
        report.add("extreme_b_top", "b_{r,0} = m(0) and five neighbours", result.all_match, _first_mismatch(result))

    def check_extreme_dual(self, report):
        if not self.coloop_free:
            report.add("extreme_b_dual", "b_{0,|X|-r} = m(X) and five neighbours", None)
            return
        result = extreme_b_dual(self.mm, self.polynomial)
        report.add("extreme_b_dual", "b_{0,|X|-r} = m(X) and five neighbours", result.all_match,
                   _first_mismatch(result))

    def check_t_extremes(self, report):
        anchor = "t_{r,0} = 1, t_{r-1,1} = p' and four neighbours"
        if not self.loopless:
            report.add("t_extremes", anchor, None)
            return
        result = t_extreme(self.matroid, self.tutte)
        ok = result.all_match and result.as_stated_consistent
        report.add("t_extremes", anchor, ok, _first_mismatch(result) or "as-stated value differs with hypotheses met")

    def check_t_extremes_dual(self, report):
        anchor = "t_{0,|X|-r} = 1, t_{1,|X|-r-1} = s' and four neighbours"
        if not self.coloop_free:
            report.add("t_extremes_dual", anchor, None)
            return
        result = t_extreme_dual(self.matroid, self.tutte)
        ok = result.all_match and result.as_stated_consistent
        report.add("t_extremes_dual", anchor, ok, _first_mismatch(result) or "as-stated value differs")

    def check_t_difference(self, report):
        anchor = "t_{r-2,2} - t_{r-2,1}"
        if not self.loopless or self.matroid.full_rank < 2:
            report.add("t_difference", anchor, None)
            return
        result = t_difference(self.matroid, self.tutte)
        ok = result.match and (result.as_stated_match or not result.hypothesis_ok)
        report.add("t_difference", anchor, ok, str(result))

    def check_lemma_identities(self, report):
        anchor = "alternating sums over rank-1 and rank-2 matroids"
        if not (self.loopless and self.coloop_free) or self.matroid.full_rank not in (1, 2):
            report.add("lemma_identities", anchor, None)
            return
        statuses = [c.status for c in lemma_identities(self.matroid)]
        ok = None if all(s is None for s in statuses) else all(s is not False for s in statuses)
        failed = [c + 1 for c, s in enumerate(statuses) if s is False]
        report.add("lemma_identities", anchor, ok, f"clauses {failed}")

    def check_arithmetic_axioms(self, report):
        axioms = self.mm.check_arithmetic_axioms()
        witness = ""
        if not axioms.all_passed:
            first = axioms.failed_axioms()[0]
            witness = f"axiom ({first}) at {axioms.witnesses[first][0]}"
        report.add("arithmetic_axioms", "divisibility, molecules, alternating sums", axioms.all_passed, witness)
