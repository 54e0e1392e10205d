"""Labeled coefficient values with their brute-force counterparts."""

from dataclasses import dataclass, field

import pandas as pd

NOT_APPLICABLE = "n/a"

STATUS_MARKERS = {True: "✅", False: "❌", None: "➖"}


def _show(value):
    return NOT_APPLICABLE if value is None else str(value)


@dataclass(frozen=True)
class CoefficientEntry:
    """
    One coefficient. `formula` is None when the index has a negative degree.
    `alternate` holds a second derivation of the same value (duality path).
    `as_stated` and `hypothesis_ok` carry the literal closed-form value and
    whether the hypotheses under which it is exact hold.
    """
    label: str
    i: int
    j: int
    formula: object = None
    brute_force: object = None
    alternate: object = None
    as_stated: object = None
    hypothesis_ok: object = None

    @property
    def applicable(self):
        return self.formula is not None

    @property
    def match(self):
        if not self.applicable:
            return None
        if self.alternate is not None and self.alternate != self.brute_force:
            return False
        return self.formula == self.brute_force

    @property
    def as_stated_match(self):
        if self.as_stated is None or not self.applicable:
            return None
        return self.as_stated == self.brute_force

    def to_record(self):
        return {
            "coefficient": self.label,
            "formula": _show(self.formula),
            "brute_force": _show(self.brute_force if self.applicable else None),
            "alternate": _show(self.alternate),
            "as_stated": _show(self.as_stated),
            "hypothesis_ok": _show(self.hypothesis_ok),
            "match": self.match,
        }


@dataclass
class ExtremeCoefficientReport:
    family: str
    entries: list = field(default_factory=list)
    note: str = ""

    def entry(self, label):
        return next(e for e in self.entries if e.label == label)

    def __iter__(self):
        return iter(self.entries)

    @property
    def all_match(self):
        return all(e.match is not False for e in self.entries)

    @property
    def as_stated_consistent(self):
        """Every as-stated value whose hypotheses hold agrees with brute force."""
        return all(e.as_stated_match is not False for e in self.entries if e.hypothesis_ok)

    def mismatches(self):
        return [e for e in self.entries if e.match is False]

    def to_frame(self):
        frame = pd.DataFrame([e.to_record() for e in self.entries])
        if not frame.empty:
            frame["match"] = [STATUS_MARKERS[e.match] for e in self.entries]
        return frame

    def to_dict(self):
        return {"family": self.family, "note": self.note, "entries": [e.to_record() for e in self.entries]}


def coefficient_label(symbol, i, j):
    return f"{symbol}_{{{i},{j}}}"


def make_entry(symbol, i, j, compute, polynomial, label=None, **extra):
    """Builds an entry, evaluating `compute` only when both degrees are non-negative."""
    label = label or coefficient_label(symbol, i, j)
    if i < 0 or j < 0:
        return CoefficientEntry(label, i, j)
    return CoefficientEntry(label, i, j, formula=compute(), brute_force=polynomial.coefficient(i, j), **extra)
