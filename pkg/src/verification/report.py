"""Pass/fail ledger of the identities checked on one instance."""

import json
from dataclasses import dataclass, field

import pandas as pd

PASS = "pass"
FAIL = "fail"
NOT_APPLICABLE = "n/a"

MARKERS = {PASS: "✅", FAIL: "❌", NOT_APPLICABLE: "➖"}


@dataclass(frozen=True)
class VerificationEntry:
    name: str
    anchor: str
    status: str
    witness: str = ""

    def to_record(self):
        return {"identity": self.name, "anchor": self.anchor, "status": self.status, "witness": self.witness}


@dataclass
class VerificationReport:
    entries: list = field(default_factory=list)

    def add(self, name, anchor, ok, witness=""):
        """ok is True, False or None (not applicable)."""
        status = NOT_APPLICABLE if ok is None else (PASS if ok else FAIL)
        self.entries.append(VerificationEntry(name, anchor, status, "" if ok else witness))

    @property
    def passed(self):
        return all(e.status != FAIL for e in self.entries)

    @property
    def overall(self):
        return PASS if self.passed else FAIL

    def failures(self):
        return [e for e in self.entries if e.status == FAIL]

    def status_of(self, name):
        return next(e.status for e in self.entries if e.name == name)

    def to_frame(self):
        return pd.DataFrame([e.to_record() for e in self.entries], columns=["identity", "anchor", "status", "witness"])

    def to_dict(self):
        return {"overall": self.overall, "entries": [e.to_record() for e in self.entries]}

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False)

    def render(self):
        lines = [f"{MARKERS[e.status]} {e.name}: {e.anchor}" + (f"  [{e.witness}]" if e.witness else "")
                 for e in self.entries]
        lines.append(f"overall: {MARKERS[self.overall]} {self.overall}")
        return "\n".join(lines)
