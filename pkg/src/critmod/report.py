"""Uniform pass/fail record returned by every check."""

from dataclasses import dataclass, field


@dataclass
class CheckResult:
    name: str
    passed: bool
    details: dict = field(default_factory=dict)

    def to_json(self):
        return {"name": self.name, "passed": bool(self.passed), "details": self.details}

    def line(self):
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.name}"
