"""Sparse bivariate polynomials with exact integer coefficients.

Every engine returns a BivarPoly. Terms are kept as {(i, j): c} with i the
x-degree and j the y-degree; zero coefficients are never stored, so two
polynomials are equal exactly when their term maps are equal.
"""

import json
import math
from fractions import Fraction


class BivarPoly:
    __slots__ = ('_terms',)

    def __init__(self, terms=None):
        clean = {}
        for (i, j), c in (terms or {}).items():
            if i < 0 or j < 0:
                raise ValueError(f"negative degree ({i}, {j})")
            c = int(c)
            if c:
                clean[(int(i), int(j))] = c
        self._terms = dict(sorted(clean.items()))

    # --- constructors ---

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def constant(cls, c):
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, i, j, c=1):
        return cls({(i, j): c})

    @classmethod
    def x(cls):
        return cls.monomial(1, 0)

    @classmethod
    def y(cls):
        return cls.monomial(0, 1)

    # --- access ---

    @property
    def terms(self):
        """(i, j, c) triples, ascending lexicographically by (i, j)."""
        return [(i, j, c) for (i, j), c in self._terms.items()]

    def coefficient(self, i, j):
        return self._terms.get((i, j), 0)

    @property
    def is_zero(self):
        return not self._terms

    @property
    def degree_x(self):
        return max((i for i, _ in self._terms), default=0)

    @property
    def degree_y(self):
        return max((j for _, j in self._terms), default=0)

    # --- ring operations ---

    def __add__(self, other):
        other = _coerce(other)
        out = dict(self._terms)
        for key, c in other._terms.items():
            out[key] = out.get(key, 0) + c
        return BivarPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return BivarPoly({key: -c for key, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        out = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                key = (i1 + i2, j1 + j2)
                out[key] = out.get(key, 0) + c1 * c2
        return BivarPoly(out)

    __rmul__ = __mul__

    def scale(self, c):
        return BivarPoly({key: c * v for key, v in self._terms.items()})

    def __eq__(self, other):
        if isinstance(other, int):
            other = BivarPoly.constant(other)
        if not isinstance(other, BivarPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(tuple(self._terms.items()))

    # --- transforms ---

    def swap(self):
        """p(y, x)."""
        return BivarPoly({(j, i): c for (i, j), c in self._terms.items()})

    def x_zero_slice(self):
        """p(0, y)."""
        return BivarPoly({(i, j): c for (i, j), c in self._terms.items() if i == 0})

    def y_zero_slice(self):
        """p(x, 0)."""
        return BivarPoly({(i, j): c for (i, j), c in self._terms.items() if j == 0})

    def evaluate(self, x0, y0):
        x0, y0 = Fraction(x0), Fraction(y0)
        return sum((c * x0 ** i * y0 ** j for (i, j), c in self._terms.items()), Fraction(0))

    # --- rendering ---

    def __str__(self):
        if not self._terms:
            return "0"
        pieces = []
        for (i, j), c in sorted(self._terms.items(), reverse=True):
            factors = [_power("x", i), _power("y", j)]
            monomial = "*".join(f for f in factors if f)
            magnitude = abs(c)
            if not monomial:
                body = str(magnitude)
            elif magnitude == 1:
                body = monomial
            else:
                body = f"{magnitude}*{monomial}"
            if not pieces:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(pieces)

    def __repr__(self):
        return f"BivarPoly({self})"

    def to_dict(self):
        return {"terms": [{"x": i, "y": j, "c": str(c)} for i, j, c in self.terms]}

    def to_json(self):
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, data):
        return cls({(int(t["x"]), int(t["y"])): int(t["c"]) for t in data["terms"]})

    @classmethod
    def from_json(cls, text):
        return cls.from_dict(json.loads(text))


def _coerce(value):
    if isinstance(value, BivarPoly):
        return value
    if isinstance(value, int):
        return BivarPoly.constant(value)
    raise TypeError(f"cannot combine BivarPoly with {type(value).__name__}")


def _power(name, exponent):
    if exponent == 0:
        return ""
    return name if exponent == 1 else f"{name}^{exponent}"


def add(p, q):
    return p + q


def mul(p, q):
    return p * q


def scale(p, c):
    return p.scale(c)


def coefficient(p, i, j):
    return p.coefficient(i, j)


def binomial_power(base_shift, exponent, variable="x"):
    """(variable + base_shift) ** exponent, expanded."""
    if exponent < 0:
        raise ValueError("exponent must be non-negative")
    if variable not in ("x", "y"):
        raise ValueError(f"unknown variable {variable!r}")
    terms = {}
    for k in range(exponent + 1):
        c = math.comb(exponent, k) * base_shift ** (exponent - k)
        terms[(k, 0) if variable == "x" else (0, k)] = c
    return BivarPoly(terms)


def shifted_monomial(corank, nullity, weight=1):
    """weight * (x - 1)^corank * (y - 1)^nullity."""
    return (binomial_power(-1, corank, "x") * binomial_power(-1, nullity, "y")).scale(weight)
