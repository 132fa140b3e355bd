"""Structured pass/fail records, serialized as ``og6report/v1``."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

from .hodge_core import ZERO, HodgeClass, to_json

FORMAT = "og6report/v1"


def _render_side(value: Any) -> Any:
    if isinstance(value, HodgeClass):
        return json.loads(to_json(value))
    return value


def _describe(value: Any) -> str:
    if isinstance(value, HodgeClass):
        from .render import describe

        return describe(value)
    return str(value)


@dataclass(frozen=True)
class Check:
    """One verified identity.

    ``residual`` is ``lhs - rhs`` as a class for class-valued checks.  Scalar
    checks carry an empty class on pass and the signed difference (or a short
    explanation) on failure.
    """

    id: str
    passed: bool
    lhs: Any = None
    rhs: Any = None
    residual: Any = ZERO
    note: str = ""

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    def to_dict(self) -> dict:
        out = {
            "id": self.id,
            "status": self.status,
            "lhs": _render_side(self.lhs),
            "rhs": _render_side(self.rhs),
            "residual": _render_side(self.residual),
        }
        if self.note:
            out["note"] = self.note
        return out


def class_check(id: str, lhs: HodgeClass, rhs: HodgeClass, note: str = "") -> Check:
    residual = lhs - rhs
    return Check(id, not residual, lhs, rhs, residual, note)


def scalar_check(id: str, lhs: Any, rhs: Any, note: str = "") -> Check:
    ok = lhs == rhs
    if ok:
        residual: Any = ZERO
    elif isinstance(lhs, int) and isinstance(rhs, int):
        residual = lhs - rhs
    else:
        residual = f"{lhs!s} != {rhs!s}"
    return Check(id, ok, lhs, rhs, residual, note)


@dataclass
class VerificationReport:
    checks: list[Check] = field(default_factory=list)

    def add(self, check: Check) -> Check:
        self.checks.append(check)
        return check

    def extend(self, other: "VerificationReport") -> None:
        self.checks.extend(other.checks)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def __getitem__(self, id: str) -> Check:
        for c in self.checks:
            if c.id == id:
                return c
        raise KeyError(id)

    def to_dict(self) -> dict:
        return {"format": FORMAT, "checks": [c.to_dict() for c in self.checks]}

    def to_json(self, indent: int | None = None) -> str:
        seps = (",", ":") if indent is None else (",", ": ")
        return json.dumps(self.to_dict(), indent=indent, separators=seps)

    def to_text(self) -> str:
        lines = []
        width = max((len(c.id) for c in self.checks), default=0)
        for c in self.checks:
            line = f"{c.status.upper():4}  {c.id:<{width}}"
            if c.note:
                line += f"  {c.note}"
            lines.append(line.rstrip())
            if not c.passed:
                lines.append(f"      residual: {_describe(c.residual)}")
        total = len(self.checks)
        bad = len(self.failures())
        lines.append(f"{total - bad}/{total} checks passed")
        return "\n".join(lines)
