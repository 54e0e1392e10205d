"""Exact integer linear algebra for matrix-realized arithmetic matroids.

Ranks come from fraction-free (Bareiss) elimination. Multiplicities are the
gcd of the maximal non-vanishing minors of a column submatrix, obtained either
by enumerating those minors or as the product of the Smith normal form's
invariant factors (sympy over ZZ). The two paths are kept for cross-checking.
"""

import itertools
import math

from sympy import ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import smith_normal_form


def bareiss_rank(rows):
    """Rank over the rationals of an integer matrix given as a list of rows."""
    a = [list(row) for row in rows]
    if not a or not a[0]:
        return 0
    height, width = len(a), len(a[0])
    rank, previous = 0, 1
    for col in range(width):
        pivot = next((i for i in range(rank, height) if a[i][col] != 0), None)
        if pivot is None:
            continue
        a[rank], a[pivot] = a[pivot], a[rank]
        for i in range(rank + 1, height):
            for j in range(col + 1, width):
                a[i][j] = (a[i][j] * a[rank][col] - a[i][col] * a[rank][j]) // previous
            a[i][col] = 0
        previous = a[rank][col]
        rank += 1
        if rank == height:
            break
    return rank


def bareiss_determinant(square):
    a = [list(row) for row in square]
    size = len(a)
    if size == 0:
        return 1
    sign, previous = 1, 1
    for k in range(size - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, size) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // previous
        previous = a[k][k]
    return sign * a[-1][-1]


def column_submatrix(rows, columns):
    return [[row[c] for c in columns] for row in rows]


def minor_gcd(rows, rank=None):
    """gcd of all rank x rank minors; 1 for the empty or zero matrix."""
    if rank is None:
        rank = bareiss_rank(rows)
    if rank == 0:
        return 1
    width = len(rows[0])
    g = 0
    for row_pick in itertools.combinations(range(len(rows)), rank):
        for col_pick in itertools.combinations(range(width), rank):
            minor = [[rows[i][j] for j in col_pick] for i in row_pick]
            g = math.gcd(g, bareiss_determinant(minor))
            if g == 1:
                return 1
    return abs(g)


def smith_invariant_factors(rows):
    """Nonzero diagonal entries of the Smith normal form over ZZ."""
    if not rows or not rows[0]:
        return []
    matrix = DomainMatrix([[ZZ(v) for v in row] for row in rows], (len(rows), len(rows[0])), ZZ)
    snf = smith_normal_form(matrix).to_Matrix()
    diagonal = (snf[i, i] for i in range(min(snf.shape)))
    return [abs(int(d)) for d in diagonal if d != 0]


def snf_multiplicity(rows):
    return math.prod(smith_invariant_factors(rows))
