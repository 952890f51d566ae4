"""Run reports: one nested mapping rendered either as JSON or as indented text."""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .lattice import DivisorClass
from .scalars import RootValue, format_rational

SCHEMA_VERSION = 1


def to_plain(value: Any) -> Any:
    """JSON-compatible form with exact numbers rendered as strings (``"p/q"``, ``"sqrt(q)"``)."""
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, RootValue):
        return str(value)
    if isinstance(value, DivisorClass):
        return [format_rational(c) for c in value.coords]
    if isinstance(value, dict):
        return {str(k): to_plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_plain(v) for v in value]
    return str(value)


def run_report(command: str, result: dict, digest: str | None = None, caveats=(), seed=None, wall_time=None) -> dict:
    report: dict[str, Any] = {"schema": SCHEMA_VERSION, "command": command}
    if digest is not None:
        report["digest"] = digest
    report["result"] = result
    report["caveats"] = list(caveats)
    if seed is not None:
        report["seed"] = seed
    if wall_time is not None:
        report["wall_time_s"] = round(wall_time, 3)
    return to_plain(report)


def render_json(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=False)


def render_text(report: dict) -> str:
    lines: list[str] = []
    _render(report, 0, lines)
    return "\n".join(lines)


def _scalar(v: Any) -> str:
    if v is None:
        return "-"
    if isinstance(v, bool):
        return "yes" if v else "no"
    if isinstance(v, list) and all(not isinstance(x, (dict, list)) for x in v):
        return "(" + ", ".join(_scalar(x) for x in v) + ")"
    return str(v)


def _render(node: Any, depth: int, lines: list[str]) -> None:
    pad = "  " * depth
    if isinstance(node, dict):
        for k, v in node.items():
            if isinstance(v, dict) and v:
                lines.append(f"{pad}{k}:")
                _render(v, depth + 1, lines)
            elif isinstance(v, list) and any(isinstance(x, (dict, list)) or (isinstance(x, str) and " " in x) for x in v):
                lines.append(f"{pad}{k}:")
                for item in v:
                    if isinstance(item, dict):
                        lines.append(f"{pad}  -")
                        _render(item, depth + 2, lines)
                    else:
                        lines.append(f"{pad}  - {_scalar(item)}")
            else:
                lines.append(f"{pad}{k}: {_scalar(v) if v != {} else '-'}")
    else:
        lines.append(f"{pad}{_scalar(node)}")
