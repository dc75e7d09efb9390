"""Verification reports and their byte-stable JSON encoding."""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Any


@dataclass
class VerificationReport:
    check: str
    paper_ref: str
    lhs: float
    rhs: float
    residual: float
    tolerance: float
    passed: bool
    stderr: float = 0.0
    seed: int | None = None
    details: dict[str, Any] = field(default_factory=dict)

    def to_json_obj(self) -> dict:
        obj = {
            "check": self.check,
            "paper_ref": self.paper_ref,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "residual": self.residual,
            "tolerance": self.tolerance,
            "pass": bool(self.passed),
            "stderr": self.stderr,
            "seed": self.seed,
        }
        if self.details:
            obj["details"] = self.details
        return obj

    def summary(self) -> str:
        flag = "PASS" if self.passed else "FAIL"
        return (
            f"[{flag}] {self.check}: lhs={self.lhs:.6g} rhs={self.rhs:.6g} "
            f"residual={self.residual:.3g} tol={self.tolerance:.3g}"
        )


@dataclass
class SuiteResult:
    suite: str
    reports: list[VerificationReport]
    duration: float = 0.0

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.reports)

    def to_json_obj(self, include_duration: bool = False) -> dict:
        obj: dict[str, Any] = {
            "suite": self.suite,
            "pass": self.passed,
            "reports": [r.to_json_obj() for r in self.reports],
        }
        if include_duration:
            obj["duration"] = self.duration
        return obj


def _fmt_float(x: float) -> str:
    if math.isnan(x):
        return "NaN"
    if math.isinf(x):
        return "Infinity" if x > 0 else "-Infinity"
    s = format(x, ".17g")
    if not any(ch in s for ch in ".eEn"):
        s += ".0"
    return s


def dumps(obj: Any, indent: int = 2, _level: int = 0) -> str:
    """JSON text with every float written to 17 significant digits."""
    pad = " " * (indent * (_level + 1))
    end = " " * (indent * _level)
    if isinstance(obj, bool) or obj is None:
        return "true" if obj is True else "false" if obj is False else "null"
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return _fmt_float(obj)
    if hasattr(obj, "item") and not isinstance(obj, (list, tuple, dict, str)):
        return dumps(obj.item(), indent, _level)
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{dumps(str(k), indent, _level + 1)}: {dumps(v, indent, _level + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        if all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in obj):
            return "[" + ", ".join(dumps(v, indent, _level + 1) for v in obj) + "]"
        items = [pad + dumps(v, indent, _level + 1) for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + end + "]"
    if hasattr(obj, "to_json_obj"):
        return dumps(obj.to_json_obj(), indent, _level)
    raise TypeError(f"cannot encode {type(obj).__name__}")
