"""Validation reports shared by the function-class validators."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass(frozen=True)
class Violation:
    prop: str
    witness: dict[str, Any]
    lhs: float
    rhs: float

    def to_dict(self) -> dict[str, Any]:
        return {"property": self.prop, "witness": self.witness, "lhs": self.lhs, "rhs": self.rhs}


@dataclass
class ValidationReport:
    """Outcome of a sampled check; ``valid`` iff no violations were recorded."""

    violations: list[Violation] = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return not self.violations

    def add(self, prop: str, witness: dict[str, Any], lhs: float, rhs: float) -> None:
        self.violations.append(Violation(prop, witness, float(lhs), float(rhs)))

    def extend(self, other: ValidationReport) -> None:
        self.violations.extend(other.violations)

    def properties(self) -> set[str]:
        return {v.prop for v in self.violations}

    def to_dict(self) -> dict[str, Any]:
        return {"valid": self.valid, "violations": [v.to_dict() for v in self.violations]}
