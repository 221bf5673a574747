"""Machine-readable verification reports.

A report serializes to::

    {
      "run":    {"command": ..., "m": ..., "params": ..., "seed": ..., ...},
      "result": {...},
      "checks": [{"name": ..., "status": "pass" | "fail", "detail": {...}}, ...]
    }

``result`` holds the computed objects (operators, polynomials, ranks) and
``checks`` the verifications; a run passes when every check passes.

Keys are sorted and checks keep their insertion order, so two runs with the
same flags and seed produce byte-identical JSON.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any


@dataclass
class Check:
    name: str
    passed: bool
    detail: dict[str, Any] = field(default_factory=dict)

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    def as_dict(self) -> dict:
        return {"name": self.name, "status": self.status, "detail": _jsonable(self.detail)}


@dataclass
class VerificationReport:
    run: dict[str, Any]
    checks: list[Check] = field(default_factory=list)
    result: dict[str, Any] = field(default_factory=dict)

    def add(self, check: Check) -> Check:
        self.checks.append(check)
        return check

    def extend(self, checks) -> None:
        self.checks.extend(checks)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def as_dict(self) -> dict:
        return {
            "run": _jsonable(self.run),
            "result": _jsonable(self.result),
            "checks": [c.as_dict() for c in self.checks],
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2, sort_keys=True) + "\n"

    def to_text(self) -> str:
        lines = []
        for k in sorted(self.result):
            v = self.result[k]
            if isinstance(v, (list, tuple)):
                lines.append(f"{k}:")
                lines.extend(f"  {_plain(item)}" for item in v)
            else:
                lines.append(f"{k}: {_plain(v)}")
        for c in self.checks:
            lines.append(f"[{c.status.upper()}] {c.name}")
            for k in sorted(c.detail):
                v = c.detail[k]
                if isinstance(v, (list, tuple)):
                    lines.append(f"    {k}:")
                    lines.extend(f"      {_plain(item)}" for item in v)
                else:
                    lines.append(f"    {k}: {_plain(v)}")
        n_pass = sum(c.passed for c in self.checks)
        lines.append(f"{n_pass}/{len(self.checks)} checks passed")
        return "\n".join(lines) + "\n"


def _plain(v: Any) -> str:
    if isinstance(v, dict):
        return ", ".join(f"{k}={_plain(v[k])}" for k in sorted(v))
    return str(v)


def _jsonable(v: Any) -> Any:
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, (bool, int, float, str)) or v is None:
        return v
    if isinstance(v, Fraction):
        return str(v)
    return str(v)
