"""Characteristic polynomial over the flat lattice and the T(x, 0) specialization."""

from src.coefficients.mobius import mobius_table
from src.engines.subset_sum import char_poly
from src.matroid.core import require_loopless
from src.poly.univariate import UniPoly


def char_poly_via_flats(matroid):
    """Sum over flats F of mu(empty set, F) lambda^(r - rk F)."""
    require_loopless(matroid, 'char_poly_via_flats')
    table = mobius_table(matroid)
    r, ranks = matroid.full_rank, matroid.rank_table
    coefficients = [0] * (r + 1)
    for flat in matroid.flats:
        coefficients[r - ranks[flat]] += table.from_bottom(flat)
    return UniPoly(coefficients)


def tutte_x0(matroid):
    """T(x, 0) = (-1)^r chi(1 - x), as a polynomial in x."""
    require_loopless(matroid, 'tutte_x0')
    return char_poly(matroid).substitute_one_minus().negate_by_parity(matroid.full_rank)
