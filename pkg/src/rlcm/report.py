"""Deterministic reports: canonical JSON with words spelled out and rationals as "p/q"."""

from __future__ import annotations

import hashlib
import json
from fractions import Fraction
from pathlib import Path
from typing import Any, Iterable

from . import __version__
from .presentations import HomogeneousPresentation


def digest(paths: Iterable[str | Path]) -> str:
    h = hashlib.sha256()
    for p in paths:
        data = Path(p).read_bytes()
        h.update(len(data).to_bytes(8, "big"))
        h.update(data)
    return "sha256:" + h.hexdigest()


def jsonable(obj: Any, pres: HomogeneousPresentation | None = None) -> Any:
    """Convert results to plain JSON types.  Tuples of ints are words."""
    if hasattr(obj, "to_json"):
        return jsonable(obj.to_json(), pres)
    if isinstance(obj, dict):
        return {str(k): jsonable(v, pres) for k, v in obj.items()}
    if isinstance(obj, tuple):
        if pres is not None and all(isinstance(x, int) for x in obj):
            return pres.format_word(obj)
        return [jsonable(x, pres) for x in obj]
    if isinstance(obj, (list, set, frozenset)):
        items = [jsonable(x, pres) for x in obj]
        return sorted(items, key=repr) if isinstance(obj, (set, frozenset)) else items
    if isinstance(obj, Fraction):
        return f"{obj.numerator}/{obj.denominator}"
    if isinstance(obj, float):
        return "inf" if obj == float("inf") else obj
    return obj


def make_report(command: str, inputs: list[str], parameters: dict, results: Any,
                pres: HomogeneousPresentation | None = None, timing: float | None = None) -> dict:
    report = {
        "tool": "rlcm",
        "version": __version__,
        "command": command,
        "input_digest": digest(inputs) if inputs else None,
        "parameters": jsonable(parameters, pres),
        "results": jsonable(results, pres),
    }
    if pres is not None:
        report["monoid"] = pres.label
        report["generators"] = list(pres.names)
    if timing is not None:
        report["timing_seconds"] = round(timing, 3)
    return report


def dumps(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
