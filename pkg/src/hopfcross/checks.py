"""Check reports: the uniform result type of every verifier.

A report carries the names of all identities that were checked and a list
of violations; it passes iff the list is empty.  Each violation pins down
one failing instance: the identity name, the tuple of basis indices at
which it fails, and the two evaluated sides.  Violations are kept sorted
(identity name, then index tuple) so reports are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product as iproduct

import numpy as np

from .linalg import eqarr


@dataclass(frozen=True)
class Violation:
    identity: str
    index: tuple
    lhs: tuple
    rhs: tuple

    def sort_key(self):
        return (self.identity, self.index)


@dataclass
class CheckReport:
    title: str
    identities: tuple = ()
    violations: tuple = ()
    notes: tuple = ()

    @property
    def passed(self) -> bool:
        return not self.violations

    def identity_passed(self, name: str) -> bool:
        assert name in self.identities, f"{name!r} was not checked in {self.title!r}"
        return all(v.identity != name for v in self.violations)

    def sub_report(self, *names) -> "CheckReport":
        """Restrict to a subset of the checked identities."""
        for n in names:
            assert n in self.identities, f"{n!r} was not checked in {self.title!r}"
        return CheckReport(
            title=f"{self.title}[{','.join(names)}]",
            identities=tuple(names),
            violations=tuple(v for v in self.violations if v.identity in names),
            notes=self.notes,
        )

    def merged(self, other: "CheckReport", title=None) -> "CheckReport":
        vs = sorted(self.violations + other.violations, key=Violation.sort_key)
        return CheckReport(
            title=title or self.title,
            identities=self.identities + tuple(
                n for n in other.identities if n not in self.identities),
            violations=tuple(vs),
            notes=self.notes + tuple(n for n in other.notes if n not in self.notes),
        )

    def summary(self) -> str:
        mark = "PASS" if self.passed else f"FAIL ({len(self.violations)} violations)"
        return f"{self.title}: {mark}"

    def to_dict(self, fld) -> dict:
        def fmt(x):
            try:
                return fld.format(x)
            except (TypeError, ValueError):
                return str(x)

        return {
            "title": self.title,
            "passed": self.passed,
            "identities": list(self.identities),
            "notes": list(self.notes),
            "violations": [
                {
                    "identity": v.identity,
                    "index": list(v.index),
                    "lhs": [fmt(x) for x in v.lhs],
                    "rhs": [fmt(x) for x in v.rhs],
                }
                for v in self.violations
            ],
        }


class ReportBuilder:
    """Accumulates identity checks into one CheckReport."""

    def __init__(self, title: str):
        self.title = title
        self._identities = []
        self._violations = []
        self._notes = []

    def compare(self, identity: str, lhs: np.ndarray, rhs: np.ndarray):
        """Compare two tensors whose last axis is the output coordinate.

        All leading axes are basis indices; every index tuple at which the
        output vectors differ becomes one violation.
        """
        assert lhs.shape == rhs.shape, \
            f"{identity}: shape mismatch {lhs.shape} vs {rhs.shape}"
        self._identities.append(identity)
        lead = lhs.shape[:-1]
        for idx in iproduct(*(range(n) for n in lead)):
            lv, rv = lhs[idx], rhs[idx]
            if not eqarr(lv, rv):
                self._violations.append(
                    Violation(identity, idx, tuple(lv), tuple(rv)))

    def require(self, identity: str, ok: bool, index=(), lhs=(), rhs=()):
        """Record a single named yes/no check."""
        self._identities.append(identity)
        if not ok:
            self._violations.append(Violation(identity, tuple(index), tuple(lhs), tuple(rhs)))

    def note(self, text: str):
        self._notes.append(text)

    def absorb(self, report: CheckReport, prefix: str = ""):
        """Inline another report's results, optionally prefixing identity names."""
        for name in report.identities:
            self._identities.append(prefix + name)
        for v in report.violations:
            self._violations.append(
                Violation(prefix + v.identity, v.index, v.lhs, v.rhs))
        self._notes.extend(report.notes)

    def build(self) -> CheckReport:
        return CheckReport(
            title=self.title,
            identities=tuple(dict.fromkeys(self._identities)),
            violations=tuple(sorted(self._violations, key=Violation.sort_key)),
            notes=tuple(self._notes),
        )
