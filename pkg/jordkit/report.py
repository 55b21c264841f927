"""
report.py

Result objects for the exhaustive checks. A failed identity, a grading
violation or a non-multiplicative map is returned as data in a report,
never raised.
"""
from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Any

if TYPE_CHECKING:
    from jordkit.algebra.superalgebra import Element

PASS = "pass"
FAIL = "fail"
DEVIATION = "deviation"


@dataclass(frozen=True)
class Witness:
    """
    One failing instance of a checked identity.

    :ivar indices: The basis-index tuple the identity was evaluated on.
    :vartype indices: tuple[int, ...]
    :ivar defect: The nonzero value the identity produced there.
    :vartype defect: Element
    :ivar label: Optional name used instead of basis labels (random trials).
    :vartype label: str
    """

    indices: tuple[int, ...]
    defect: Element
    label: str = ""

    def describe(self) -> str:
        if self.label:
            return f"{self.label} -> {self.defect}"
        labels = self.defect.algebra.labels
        named = ", ".join(
            labels[i] if i < len(labels) else str(i) for i in self.indices
        )
        return f"({named}) -> {self.defect}"


@dataclass(frozen=True)
class IdentityReport:
    """
    Outcome of an identity sweep.

    The status is "pass" exactly when there are no witnesses. Witnesses are
    kept sorted by their index tuple so that reports compare equal however
    the sweep was scheduled.

    :ivar identity_name: Which identity was checked.
    :vartype identity_name: str
    :ivar witnesses: Failing instances, sorted by index tuple.
    :vartype witnesses: tuple[Witness, ...]
    :ivar checked: How many instances were evaluated.
    :vartype checked: int
    :ivar notes: Free-form metadata, e.g. characteristic caveats.
    :vartype notes: dict[str, Any]
    """

    identity_name: str
    witnesses: tuple[Witness, ...] = ()
    checked: int = 0
    notes: dict[str, Any] = field(default_factory=dict, compare=False)

    @classmethod
    def from_witnesses(
        cls,
        identity_name: str,
        witnesses: Iterable[Witness],
        checked: int,
        **notes: Any,
    ) -> IdentityReport:
        ordered = tuple(sorted(witnesses, key=lambda w: w.indices))
        return cls(identity_name, ordered, checked, dict(notes))

    @property
    def status(self) -> str:
        return FAIL if self.witnesses else PASS

    @property
    def passed(self) -> bool:
        return not self.witnesses

    def __bool__(self) -> bool:
        return self.passed

    def summary(self, limit: int = 5) -> str:
        lines = [f"{self.identity_name}: {self.status} ({self.checked} checked)"]
        for witness in self.witnesses[:limit]:
            lines.append(f"  witness {witness.describe()}")
        if len(self.witnesses) > limit:
            lines.append(f"  ... {len(self.witnesses) - limit} more")
        return "\n".join(lines)

    def to_dict(self) -> dict[str, Any]:
        return {
            "identity": self.identity_name,
            "status": self.status,
            "checked": self.checked,
            "witnesses": [
                {
                    "indices": list(w.indices),
                    "defect": w.defect.to_strings(),
                }
                for w in self.witnesses
            ],
            "notes": {key: str(value) for key, value in sorted(self.notes.items())},
        }


@dataclass(frozen=True)
class Claim:
    """
    One verified statement.

    :ivar name: Short identifier, e.g. ``"iii.radical-solvable"``.
    :vartype name: str
    :ivar status: "pass", "fail" or "deviation".
    :vartype status: str
    :ivar detail: What was computed.
    :vartype detail: str
    """

    name: str
    status: str
    detail: str = ""

    @classmethod
    def check(cls, name: str, condition: bool, detail: str = "") -> Claim:
        return cls(name, PASS if condition else FAIL, detail)

    def to_dict(self) -> dict[str, str]:
        return {"claim": self.name, "status": self.status, "detail": self.detail}
