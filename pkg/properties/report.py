"""
Property reports: verdicts and the evidence behind them.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Iterable, List, Optional

from models.model_set import AffixModel
from models.program import Program
from program_io.parser import render_program
from semantics.ids import SemanticsId


class Verdict(str, Enum):
    HOLDS = "holds-on-instance"
    FAILS = "fails-on-instance"
    INAPPLICABLE = "inapplicable"


def atoms_json(atoms: Optional[Iterable[str]]) -> Optional[List[str]]:
    """Sorted atom list, ``None`` stays ``None`` (an undefined kernel)."""
    return None if atoms is None else sorted(atoms)


def model_json(model: AffixModel) -> Dict[str, Any]:
    return model.to_json()


def program_json(program: Program) -> str:
    return render_program(program)


@dataclass(frozen=True)
class Witness:
    """
    Evidence for one property violation.

    ``data`` holds JSON-ready values only (sorted atom lists, model dicts,
    rendered programs).
    """
    kind: str
    data: Dict[str, Any] = field(default_factory=dict)

    def to_json(self) -> Dict[str, Any]:
        return {"kind": self.kind, **self.data}


@dataclass
class PropertyReport:
    """Outcome of one property check on one program."""
    property: str
    semantics: SemanticsId
    verdict: Verdict
    witnesses: List[Witness] = field(default_factory=list)
    reason: Optional[str] = None
    notes: List[str] = field(default_factory=list)

    @property
    def fails(self) -> bool:
        return self.verdict is Verdict.FAILS

    def witnesses_of(self, *kinds: str) -> List[Witness]:
        return [w for w in self.witnesses if w.kind in kinds]

    def to_json(self) -> Dict[str, Any]:
        """Convert to the CLI report layout (fixed field order)."""
        return {
            "property": self.property,
            "semantics": self.semantics.value,
            "verdict": self.verdict.value,
            "reason": self.reason,
            "witnesses": [w.to_json() for w in self.witnesses],
            "notes": list(self.notes)
        }


def verdict_from(witnesses: List[Witness]) -> Verdict:
    return Verdict.FAILS if witnesses else Verdict.HOLDS
