"""Pass/fail reports shared by the verifiers and the command line."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Optional

import numpy as np

from .exactlin import serialize_vector


@dataclass
class Check:
    name: str
    ref: str
    passed: bool
    witness: Any = None
    detail: Any = None

    def to_dict(self) -> dict:
        d = {"name": self.name, "ref": self.ref, "pass": bool(self.passed), "witness": _jsonable(self.witness)}
        if self.detail is not None:
            d["detail"] = _jsonable(self.detail)
        return d


@dataclass
class Report:
    title: str
    checks: list = field(default_factory=list)
    info: dict = field(default_factory=dict)

    def add(self, name: str, ref: str, passed: bool, witness=None, detail=None) -> Check:
        c = Check(name, ref, bool(passed), None if passed else witness, detail)
        self.checks.append(c)
        return c

    def extend(self, other: "Report", prefix: str = "") -> None:
        for c in other.checks:
            self.checks.append(Check(prefix + c.name, c.ref, c.passed, c.witness, c.detail))

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def first_failure(self) -> Optional[Check]:
        return next((c for c in self.checks if not c.passed), None)

    def failures(self) -> list:
        return [c for c in self.checks if not c.passed]

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def __contains__(self, name: str) -> bool:
        return any(c.name == name for c in self.checks)

    def to_dict(self) -> dict:
        return {
            "title": self.title,
            "pass": self.passed,
            "info": _jsonable(self.info),
            "checks": [c.to_dict() for c in self.checks],
        }

    def text(self) -> str:
        lines = [f"== {self.title} =="]
        for k, v in self.info.items():
            lines.append(f"  {k}: {_jsonable(v)}")
        for c in self.checks:
            mark = "PASS" if c.passed else "FAIL"
            lines.append(f"  [{mark}] {c.name}  ({c.ref})")
            if not c.passed and c.witness is not None:
                lines.append(f"         witness: {_jsonable(c.witness)}")
        return "\n".join(lines)


def _jsonable(x):
    if isinstance(x, np.ndarray):
        if x.ndim == 1:
            return serialize_vector(x)
        return [_jsonable(r) for r in x]
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, (bool, str)) or x is None:
        return x
    if isinstance(x, (int, np.integer)):
        return int(x)
    return str(x)
