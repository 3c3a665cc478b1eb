"""Small result types shared by the verification suites.

Every ``verify_*`` function returns a Report: a titled list of named checks,
each check either passed or failed with a human-readable detail string.
Failures never raise; callers decide whether a failed finding is fatal.
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class Report:
    title: str
    checks: list[Check] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def add(self, name: str, passed: bool, detail: str = "") -> None:
        self.checks.append(Check(name, passed, detail))

    def note(self, text: str) -> None:
        """Record an informational finding that does not affect pass/fail."""
        self.notes.append(text)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def lines(self, verbose: bool = False) -> list[str]:
        out = []
        mark = "PASS" if self.passed else "FAIL"
        out.append(f"[{mark}] {self.title} ({sum(c.passed for c in self.checks)}"
                   f"/{len(self.checks)} checks)")
        for c in self.checks:
            if verbose or not c.passed:
                m = "ok " if c.passed else "FAIL"
                detail = f" -- {c.detail}" if c.detail else ""
                out.append(f"    {m} {c.name}{detail}")
        for n in self.notes:
            out.append(f"    note: {n}")
        return out

    def render(self, verbose: bool = False) -> str:
        return "\n".join(self.lines(verbose))
