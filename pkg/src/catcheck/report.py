"""Check records and deterministic report rendering."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field

LABELS = (
    "pentagon",
    "triangle",
    "hexagon",
    "closure",
    "l1",
    "eq1",
    "l2",
    "nl3",
    "l0",
    "nt1",
    "ex1",
    "monoidal-MI",
)


@dataclass
class Check:
    label: str
    instance: str
    passed: bool
    detail: str = ""
    warning: str = ""
    # number of individual equalities behind this record
    n: int = 1

    def __post_init__(self):
        if self.label not in LABELS:
            raise ValueError(f"unknown check label {self.label!r}")
        self.passed = bool(self.passed)


@dataclass
class Report:
    checks: list[Check] = field(default_factory=list)

    def add(self, label, instance, passed, detail="", warning="", n=1):
        c = Check(label, instance, passed, detail, warning, n)
        self.checks.append(c)
        return c

    def extend(self, other: "Report | list[Check]"):
        self.checks.extend(other.checks if isinstance(other, Report) else other)
        return self

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    @property
    def ok(self) -> bool:
        return not self.failures

    def count(self, label=None) -> int:
        return sum(1 for c in self.checks if label is None or c.label == label)

    def identities(self, label=None) -> int:
        return sum(c.n for c in self.checks if label is None or c.label == label)

    def summary(self) -> str:
        return f"{len(self.checks)} checks, {len(self.failures)} failures"

    def render_text(self) -> str:
        lines = []
        for c in self.checks:
            line = f"[{'PASS' if c.passed else 'FAIL'}] {c.label:<11} {c.instance}"
            if c.detail:
                line += f" :: {c.detail}"
            if c.warning:
                line += f" (warning: {c.warning})"
            lines.append(line)
        lines.append(self.summary())
        return "\n".join(lines) + "\n"

    def render_records(self) -> str:
        lines = [json.dumps(asdict(c), sort_keys=True) for c in self.checks]
        lines.append(json.dumps({"summary": self.summary(), "ok": self.ok}, sort_keys=True))
        return "\n".join(lines) + "\n"

    def render(self, fmt="text") -> str:
        return self.render_records() if fmt == "records" else self.render_text()
