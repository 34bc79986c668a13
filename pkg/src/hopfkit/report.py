"""Check results, witnesses and per-structure axiom reports."""

from __future__ import annotations

from dataclasses import dataclass, field


def label_str(label) -> str:
    """Render a (possibly nested tuple) basis label compactly."""
    if isinstance(label, tuple):
        return "(" + ",".join(label_str(part) for part in label) + ")"
    return str(label)


@dataclass(frozen=True)
class Witness:
    """First failing basis tuple of a sweep, with both evaluated sides."""

    at: tuple
    lhs: str
    rhs: str

    def __str__(self) -> str:
        at = ",".join(label_str(x) for x in self.at)
        return f"at ({at}): lhs = {self.lhs}, rhs = {self.rhs}"

    def as_dict(self) -> dict:
        return {"at": [label_str(x) for x in self.at],
                "lhs": self.lhs, "rhs": self.rhs}


@dataclass
class CheckResult:
    name: str
    passed: bool
    witness: Witness | None = None

    def as_dict(self) -> dict:
        out: dict = {"name": self.name, "passed": self.passed}
        if self.witness is not None:
            out["witness"] = self.witness.as_dict()
        return out


@dataclass
class AxiomReport:
    """Ordered list of named axiom checks for one structure."""

    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, witness: Witness | None) -> None:
        self.checks.append(CheckResult(name, witness is None, witness))

    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def first_failure(self) -> CheckResult | None:
        for c in self.checks:
            if not c.passed:
                return c
        return None

    def __getitem__(self, name: str) -> CheckResult:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def as_dict(self) -> dict:
        return {"passed": self.passed,
                "checks": [c.as_dict() for c in self.checks]}

    def __str__(self) -> str:
        lines = [f"{'PASS' if c.passed else 'FAIL'}  {c.name}"
                 + (f"  [{c.witness}]" if c.witness else "")
                 for c in self.checks]
        return "\n".join(lines)
