"""Three-valued outcomes for bounded verification.

Every check in this package runs on a finite ball of a monoid, so a
positive answer only ever means "no violation up to the radius".  A
negative answer always ships a witness that can be replayed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Iterable, Union


@dataclass(frozen=True)
class Holds:
    bound: int | None = None
    checked: int = 0

    kind = "holds"

    def to_json(self) -> dict[str, Any]:
        return {"kind": self.kind, "bound": self.bound, "checked": self.checked}


@dataclass(frozen=True)
class Fails:
    witness: dict[str, Any] = field(default_factory=dict)
    bound: int | None = None

    kind = "fails"

    def to_json(self) -> dict[str, Any]:
        return {"kind": self.kind, "bound": self.bound, "witness": self.witness}


@dataclass(frozen=True)
class Inconclusive:
    bound: int | None = None
    reason: str = ""
    unresolved: int = 0

    kind = "inconclusive"

    def to_json(self) -> dict[str, Any]:
        return {
            "kind": self.kind,
            "bound": self.bound,
            "reason": self.reason,
            "unresolved": self.unresolved,
        }


Verdict = Union[Holds, Fails, Inconclusive]


def aggregate(verdicts: Iterable[Verdict], bound: int | None = None) -> Verdict:
    """Combine item verdicts: any Fails wins, then any Inconclusive, else Holds."""
    checked = 0
    first_inconclusive: Inconclusive | None = None
    unresolved = 0
    for v in verdicts:
        if isinstance(v, Fails):
            return v
        if isinstance(v, Inconclusive):
            unresolved += max(v.unresolved, 1)
            if first_inconclusive is None:
                first_inconclusive = v
        else:
            checked += max(v.checked, 1)
    if first_inconclusive is not None:
        return Inconclusive(bound, first_inconclusive.reason, unresolved)
    return Holds(bound, checked)
