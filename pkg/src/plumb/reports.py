"""Machine-readable pass/fail certificates for theorem checks."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Literal

Status = Literal["pass", "fail", "skipped"]


@dataclass(frozen=True)
class CheckResult:
    name: str
    status: Status
    details: str = ""

    def to_dict(self) -> dict[str, Any]:
        return {"name": self.name, "status": self.status, "details": self.details}


def check(name: str, ok: bool, details: str = "") -> CheckResult:
    return CheckResult(name, "pass" if ok else "fail", details)


def skipped(name: str, details: str = "") -> CheckResult:
    return CheckResult(name, "skipped", details)


@dataclass(frozen=True)
class VerificationReport:
    """Result of one theorem check at a parameter point (p, m).

    `trace` is optional move-by-move state for replayed handle calculus; it is
    serialized only when present.
    """

    p: int
    m: int
    checks: tuple[CheckResult, ...]
    trace: tuple[dict[str, Any], ...] | None = None

    @property
    def passed(self) -> bool:
        return all(c.status != "fail" for c in self.checks)

    def to_dict(self) -> dict[str, Any]:
        doc: dict[str, Any] = {
            "p": self.p,
            "m": self.m,
            "checks": [c.to_dict() for c in self.checks],
        }
        if self.trace is not None:
            doc["trace"] = list(self.trace)
        return doc
