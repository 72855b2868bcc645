"""Report rows and canonical rendering (text, JSON, LaTeX)."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum

from .poly import IntPoly, format_poly


class Status(str, Enum):
    VERIFIED = "VERIFIED"
    EXPECTED_DIVERGENCE = "EXPECTED-DIVERGENCE"
    FAILURE = "FAILURE"


@dataclass(frozen=True)
class ReportRow:
    subject: str
    parameters: dict[str, int] = field(default_factory=dict)
    expected: str = ""
    computed: str = ""
    status: Status = Status.VERIFIED

    @classmethod
    def compare(cls, subject: str, parameters: dict, expected, computed) -> ReportRow:
        status = Status.VERIFIED if expected == computed else Status.FAILURE
        return cls(subject, dict(parameters), render_value(expected), render_value(computed), status)

    def to_json(self) -> dict:
        return {
            "subject": self.subject,
            "parameters": {k: str(v) for k, v in self.parameters.items()},
            "expected": self.expected,
            "computed": self.computed,
            "status": self.status.value,
        }

    def to_text(self) -> str:
        params = " ".join(f"{k}={v}" for k, v in self.parameters.items())
        return f"{self.status.value:<20} {self.subject} [{params}] expected={self.expected} computed={self.computed}"


def render_value(v, var: str = "t", style: str = "text") -> str:
    if isinstance(v, IntPoly):
        return format_poly(v, var, style)
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (list, tuple)):
        return "[" + ", ".join(render_value(x, var, style) for x in v) + "]"
    if v is None:
        return "none"
    return str(v)


def jsonable(v):
    """Integers become decimal strings; containers are converted recursively."""
    if isinstance(v, bool):
        return v
    if isinstance(v, int):
        return str(v)
    if isinstance(v, IntPoly):
        return [str(c) for c in v.coeffs]
    if isinstance(v, dict):
        return {str(k): jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [jsonable(x) for x in v]
    if isinstance(v, Enum):
        return v.value
    if v is None or isinstance(v, str):
        return v
    raise TypeError(f"cannot serialize {type(v).__name__}")


def dumps(obj) -> str:
    """Canonical JSON: sorted keys, fixed indentation, no floats."""
    return json.dumps(jsonable(obj), sort_keys=True, indent=2, ensure_ascii=True)
