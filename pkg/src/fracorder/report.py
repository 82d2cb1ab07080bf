"""Verification report records and their JSON serialization."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Any, Optional

# pass/fail rules a case can carry in params["tol_policy"]
POLICIES = ("rel", "abs", "rel+remainder", "exact")
# parameters that order cases within a name, ahead of all others
_ORDER_KEYS = ("function", "n", "j", "t", "series_k")


def _finite_or_none(x: Optional[float]) -> Optional[float]:
    if x is None or not math.isfinite(x):
        return None
    return x


@dataclass
class Case:
    name: str
    params: dict[str, Any]
    expected: float
    computed: Optional[float]
    tol: float
    periods_used: int = 0
    runtime_ms: int = 0
    abs_err: float = field(init=False)
    rel_err: float = field(init=False)
    passed: bool = field(init=False)

    def __post_init__(self):
        policy = self.params.setdefault("tol_policy", "rel")
        if policy not in POLICIES:
            raise ValueError(f"unknown tolerance policy {policy!r}")
        if self.computed is None or not math.isfinite(self.computed):
            self.abs_err = math.inf
            self.rel_err = math.inf
            self.passed = False
            return
        self.abs_err = abs(self.computed - self.expected)
        self.rel_err = self.abs_err / abs(self.expected) if self.expected != 0 else self.abs_err
        if policy == "rel":
            self.passed = self.rel_err <= self.tol
        elif policy == "abs":
            self.passed = self.abs_err <= self.tol
        elif policy == "rel+remainder":
            allowed = self.tol * abs(self.expected) + self.params.get("series_remainder", 0.0)
            self.passed = self.abs_err <= allowed
        else:
            self.passed = bool(self.params.get("exact_match", False))

    def sort_key(self):
        def norm(v):
            if isinstance(v, (int, float)) and not isinstance(v, bool):
                return (0, float(v), "")
            return (1, 0.0, str(v))

        primary = tuple(norm(self.params.get(k)) for k in _ORDER_KEYS)
        rest = tuple((k, norm(v)) for k, v in sorted(self.params.items()) if k not in _ORDER_KEYS)
        return (self.name, primary, rest)

    def to_dict(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "params": self.params,
            "expected": _finite_or_none(self.expected),
            "computed": _finite_or_none(self.computed),
            "abs_err": _finite_or_none(self.abs_err),
            "rel_err": _finite_or_none(self.rel_err),
            "tol": self.tol,
            "passed": self.passed,
            "periods_used": self.periods_used,
            "runtime_ms": self.runtime_ms,
        }


@dataclass
class VerificationReport:
    cases: list[Case] = field(default_factory=list)

    def add(self, case: Case) -> None:
        self.cases.append(case)

    @property
    def summary(self) -> dict[str, int]:
        passed = sum(c.passed for c in self.cases)
        return {"total": len(self.cases), "passed": passed, "failed": len(self.cases) - passed}

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.cases)

    def to_dict(self) -> dict[str, Any]:
        ordered = sorted(self.cases, key=Case.sort_key)
        return {"cases": [c.to_dict() for c in ordered], "summary": self.summary}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, allow_nan=False) + "\n"
