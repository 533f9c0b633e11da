"""Machine-readable reports emitted by the command line tool."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from . import __version__


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class Report:
    command: str
    parameters: dict[str, Any]
    rows: list[dict[str, Any]] = field(default_factory=list)
    checks: list[Check] = field(default_factory=list)
    result: dict[str, Any] = field(default_factory=dict)
    version: str = __version__

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def check(self, name: str, passed: bool, detail: str = "") -> bool:
        self.checks.append(Check(name, bool(passed), detail))
        return bool(passed)

    def to_dict(self) -> dict[str, Any]:
        return {
            "command": self.command,
            "parameters": _jsonable(self.parameters),
            "rows": [_jsonable(r) for r in self.rows],
            "checks": [
                {"name": c.name, "passed": c.passed, "detail": c.detail} for c in self.checks
            ],
            "result": _jsonable(self.result),
            "version": self.version,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        if self.rows:
            columns = list(self.rows[0])
            writer = csv.writer(buf, lineterminator="\n")
            writer.writerow(columns)
            for row in self.rows:
                writer.writerow([_scalar_text(_jsonable(row[c])) for c in columns])
        return buf.getvalue()

    def to_table(self) -> str:
        lines = [f"{self.command}  " + "  ".join(f"{k}={v}" for k, v in self.parameters.items())]
        if self.rows:
            columns = list(self.rows[0])
            cells = [[_scalar_text(_jsonable(r[c])) for c in columns] for r in self.rows]
            widths = [max(len(c), *(len(row[i]) for row in cells)) for i, c in enumerate(columns)]
            lines.append("  ".join(c.rjust(w) for c, w in zip(columns, widths)))
            for row in cells:
                lines.append("  ".join(v.rjust(w) for v, w in zip(row, widths)))
        for key in sorted(self.result):
            lines.append(f"{key}: {_scalar_text(_jsonable(self.result[key]))}")
        for c in self.checks:
            status = "PASS" if c.passed else "FAIL"
            lines.append(f"[{status}] {c.name}" + (f"  ({c.detail})" if c.detail else ""))
        return "\n".join(lines) + "\n"

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return self.to_json()
        if fmt == "csv":
            return self.to_csv()
        return self.to_table()


def _jsonable(value):
    # exact quantities travel as decimal strings; floats keep 15 significant digits
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, float):
        return float(format(value, ".15g"))
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return str(value)


def _scalar_text(value) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, list):
        return "(" + ",".join(_scalar_text(v) for v in value) + ")"
    if isinstance(value, float):
        return format(value, ".12g")
    return str(value)
