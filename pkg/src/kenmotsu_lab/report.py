"""Reports emitted by the command-line driver."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

from .checks import Check, Status, ValidationReport


@dataclass
class Report:
    command: str
    subject: str
    checks: list[tuple[str, Check]] = field(default_factory=list)
    quantities: dict[str, Any] = field(default_factory=dict)

    def add(self, section: str, checks: ValidationReport | Check) -> None:
        if isinstance(checks, Check):
            checks = ValidationReport((checks,))
        self.checks.extend((section, c) for c in checks)

    @property
    def ok(self) -> bool:
        return not any(c.failed for _, c in self.checks)

    @property
    def exit_code(self) -> int:
        return 0 if self.ok else 1

    def to_json(self) -> dict[str, Any]:
        return {
            "command": self.command,
            "subject": self.subject,
            "checks": [{"section": s, **c.to_json()} for s, c in self.checks],
            "quantities": self.quantities,
        }

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> "Report":
        checks = [(d["section"], Check.from_json({k: v for k, v in d.items() if k != "section"}))
                  for d in data["checks"]]
        return cls(data["command"], data["subject"], checks, dict(data["quantities"]))

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, ensure_ascii=False) + "\n"

    def render_text(self) -> str:
        lines = [f"{self.command}: {self.subject}"]
        section = None
        for s, c in self.checks:
            if s != section:
                lines.append(f"[{s}]")
                section = s
            tag = {Status.PASS: "PASS", Status.FAIL: "FAIL", Status.NOT_APPLICABLE: "N/A "}[c.status]
            lines.append(f"  {tag}  {c.name}")
            if c.witness and c.status is not Status.PASS:
                lines.append(f"        {json.dumps(c.witness, ensure_ascii=False)}")
        if self.quantities:
            lines.append("[quantities]")
            for name, value in self.quantities.items():
                lines.extend(_render_quantity(name, value))
        n_fail = sum(c.failed for _, c in self.checks)
        lines.append("result: " + ("all checks pass" if n_fail == 0 else f"{n_fail} check(s) failed"))
        return "\n".join(lines) + "\n"


def _depth(value) -> int:
    d = 0
    while isinstance(value, list) and value:
        value = value[0]
        d += 1
    return d


def _render_quantity(name: str, value) -> list[str]:
    depth = _depth(value)
    if depth == 0:
        text = value if isinstance(value, str) else json.dumps(value)
        return [f"  {name} = {text}"]
    if depth == 1:
        return [f"  {name} = ({', '.join(map(str, value))})"]
    if depth == 2:
        width = max(len(str(v)) for row in value for v in row)
        rows = ["    [" + "  ".join(str(v).rjust(width) for v in row) + "]" for row in value]
        return [f"  {name} ="] + rows
    out = [f"  {name} (nonzero components, 1-based):"]
    stack = [((), value)]
    entries = []
    while stack:
        idx, v = stack.pop()
        if isinstance(v, list):
            stack.extend(((idx + (i + 1,), x) for i, x in reversed(list(enumerate(v)))))
        elif v != "0":
            entries.append(f"    [{','.join(map(str, idx))}] = {v}")
    return out + (entries or ["    (all zero)"])
