"""Dense univariate polynomials over the integers (characteristic polynomials)."""

import math
from fractions import Fraction

from src.poly.bivariate import BivarPoly


class UniPoly:
    """Coefficients indexed by degree; trailing zeros are trimmed."""

    __slots__ = ('_coefficients',)

    def __init__(self, coefficients=()):
        values = [int(c) for c in coefficients]
        while values and values[-1] == 0:
            values.pop()
        self._coefficients = tuple(values)

    @property
    def coefficients(self):
        return self._coefficients

    @property
    def degree(self):
        return len(self._coefficients) - 1

    @property
    def is_zero(self):
        return not self._coefficients

    def coefficient(self, k):
        return self._coefficients[k] if 0 <= k < len(self._coefficients) else 0

    def __add__(self, other):
        size = max(len(self._coefficients), len(other._coefficients))
        return UniPoly(self.coefficient(k) + other.coefficient(k) for k in range(size))

    def __mul__(self, other):
        if isinstance(other, int):
            return UniPoly(c * other for c in self._coefficients)
        out = [0] * max(len(self._coefficients) + len(other._coefficients) - 1, 0)
        for a, ca in enumerate(self._coefficients):
            for b, cb in enumerate(other._coefficients):
                out[a + b] += ca * cb
        return UniPoly(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self._coefficients == other._coefficients

    def __hash__(self):
        return hash(self._coefficients)

    def substitute_affine(self, a, b):
        """q(a + b*x)."""
        out = [0] * len(self._coefficients)
        for k, c in enumerate(self._coefficients):
            for t in range(k + 1):
                out[t] += c * math.comb(k, t) * a ** (k - t) * b ** t
        return UniPoly(out)

    def substitute_one_minus(self):
        return self.substitute_affine(1, -1)

    def negate_by_parity(self, s):
        return self if s % 2 == 0 else self * -1

    def evaluate(self, value):
        value = Fraction(value)
        return sum((c * value ** k for k, c in enumerate(self._coefficients)), Fraction(0))

    def to_bivariate(self, variable="x"):
        if variable == "x":
            return BivarPoly({(k, 0): c for k, c in enumerate(self._coefficients)})
        return BivarPoly({(0, k): c for k, c in enumerate(self._coefficients)})

    def format(self, variable="x"):
        return str(self.to_bivariate("x")).replace("x", variable)

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"UniPoly({list(self._coefficients)})"


def coefficient_uni(q, k):
    return q.coefficient(k)


def substitute_uni(q):
    """q(1 - x)."""
    return q.substitute_one_minus()


def negate_by_parity(q, s):
    return q.negate_by_parity(s)
