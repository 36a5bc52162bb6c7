"""Named pass/fail checks with failure witnesses."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Iterator

import numpy as np

from .exact import first_mismatch, to_strings


class Status(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    NOT_APPLICABLE = "n/a"


@dataclass(frozen=True)
class Check:
    name: str
    status: Status
    witness: dict[str, Any] | None = None

    @property
    def passed(self) -> bool:
        return self.status is Status.PASS

    @property
    def failed(self) -> bool:
        return self.status is Status.FAIL

    def to_json(self) -> dict[str, Any]:
        out: dict[str, Any] = {"name": self.name, "status": self.status.value}
        if self.witness is not None:
            out["witness"] = self.witness
        return out

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> "Check":
        return cls(data["name"], Status(data["status"]), data.get("witness"))


@dataclass(frozen=True)
class ValidationReport:
    checks: tuple[Check, ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        """True when no check failed (not-applicable checks are neutral)."""
        return not any(c.failed for c in self.checks)

    def __iter__(self) -> Iterator[Check]:
        return iter(self.checks)

    def __len__(self) -> int:
        return len(self.checks)

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def names(self) -> list[str]:
        return [c.name for c in self.checks]

    def failures(self) -> list[Check]:
        return [c for c in self.checks if c.failed]

    def __add__(self, other: "ValidationReport") -> "ValidationReport":
        return ValidationReport(self.checks + other.checks)


def passed(name: str) -> Check:
    return Check(name, Status.PASS)


def not_applicable(name: str, reason: str) -> Check:
    return Check(name, Status.NOT_APPLICABLE, {"reason": reason})


def failed(name: str, **witness: Any) -> Check:
    return Check(name, Status.FAIL, witness or None)


def compare(name: str, lhs, rhs, slots: int | None = None) -> Check:
    """Exact componentwise comparison of two equally shaped arrays.

    The first ``slots`` axes index frame arguments; the witness reports them
    1-based together with the full lhs/rhs values at that frame tuple.
    """
    lhs = np.asarray(lhs, dtype=object)
    rhs = np.asarray(rhs, dtype=object)
    idx = first_mismatch(lhs, rhs)
    if idx is None:
        return passed(name)
    slots = len(idx) if slots is None else slots
    head = idx[:slots]
    return failed(
        name,
        index=[i + 1 for i in head],
        lhs=to_strings(lhs[head]),
        rhs=to_strings(rhs[head]),
    )
