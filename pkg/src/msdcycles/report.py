"""Structured pass/fail records shared by the checker operations."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Mapping

CONJECTURE_TAG = "CONJECTURE-COUNTEREXAMPLE"

Witness = Mapping[str, Any]


@dataclass(frozen=True)
class CheckReport:
    """One named check: pass/fail plus structured counterexample witnesses.

    A report may aggregate subchecks; then ``passed`` is the conjunction and
    ``witnesses`` collects the failing subchecks' witnesses.  The invariant
    "witnesses nonempty iff failed" holds at every level: a failing check
    always carries at least one witness.
    """

    name: str
    passed: bool
    witnesses: tuple[Witness, ...] = ()
    notes: str = ""
    subchecks: tuple[CheckReport, ...] = ()

    def __post_init__(self) -> None:
        if self.passed and self.witnesses:
            raise ValueError(f"check {self.name!r} passed but has witnesses")
        if not self.passed and not self.witnesses:
            raise ValueError(f"check {self.name!r} failed without a witness")

    @classmethod
    def leaf(cls, name: str, witnesses: list[Witness], notes: str = "") -> CheckReport:
        return cls(name, not witnesses, tuple(witnesses), notes)

    @classmethod
    def group(
        cls, name: str, subchecks: list[CheckReport], notes: str = ""
    ) -> CheckReport:
        witnesses: list[Witness] = []
        for sub in subchecks:
            witnesses.extend(sub.witnesses)
        return cls(
            name,
            all(sub.passed for sub in subchecks),
            tuple(witnesses),
            notes,
            tuple(subchecks),
        )

    @property
    def is_conjecture_counterexample(self) -> bool:
        return not self.passed and CONJECTURE_TAG in self.notes

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "name": self.name,
            "passed": self.passed,
            "witnesses": [dict(w) for w in self.witnesses],
            "notes": self.notes,
        }
        if self.subchecks:
            out["subchecks"] = [sub.to_dict() for sub in self.subchecks]
        return out


def flatten(reports: list[CheckReport]) -> list[CheckReport]:
    """Leaf-level reports in order, for one-line-per-check rendering."""
    out: list[CheckReport] = []
    for r in reports:
        if r.subchecks:
            out.extend(flatten(list(r.subchecks)))
        else:
            out.append(r)
    return out
