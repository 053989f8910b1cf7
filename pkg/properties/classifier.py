"""
Classification of a semantics over a corpus into the five-property type
vector (existence, gl, lg, cm, cut).

Every checker is a falsifier: a property is confirmed failed only when some
corpus program yields a witness, and is otherwise reported as not falsified.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Iterable, List, Optional, Tuple, Union

from models.program import Program
from rule_graph.layering import relevant_subprogram
from semantics.ids import SemanticsId, resolve_semantics
from semantics.limits import DEFAULT_MAX_ATOMS, EnumerationLimitError
from semantics.registry import compute_models
from .bridges import embed_defective_host
from .cumulativity import check_cm_cut
from .relevance import check_relevance
from .structural import (
    check_defectivity,
    check_excessiveness,
    check_irregularity
)

logger = logging.getLogger(__name__)

PROPERTIES = ("exists", "gl", "lg", "cm", "cut")

# Vectors realizing these (property, failed?) pairs cannot occur.
EXCLUDED_PATTERNS: Tuple[Tuple[Tuple[str, bool], Tuple[str, bool]], ...] = (
    (("exists", True), ("gl", False)),
    (("exists", False), ("gl", True)),
    (("exists", True), ("cm", False)),
)


class ClassificationError(Exception):
    """Raised when a semantics cannot be classified."""
    pass


class Status(str, Enum):
    FAILED = "confirmed-failed"
    NOT_FALSIFIED = "not-falsified"
    UNKNOWN = "unknown"


@dataclass
class TypeVector:
    """Per-property status, with the evidence for each confirmed failure."""
    semantics: SemanticsId
    exists: Status = Status.UNKNOWN
    gl: Status = Status.UNKNOWN
    lg: Status = Status.UNKNOWN
    cm: Status = Status.UNKNOWN
    cut: Status = Status.UNKNOWN
    evidence: Dict[str, List[Dict[str, Any]]] = field(default_factory=dict)
    inconsistencies: List[str] = field(default_factory=list)

    def status(self, prop: str) -> Status:
        return getattr(self, prop)

    def pattern(self) -> str:
        """Row-style digits: 0 failed, 1 not falsified, ? unknown."""
        digits = {Status.FAILED: "0", Status.NOT_FALSIFIED: "1",
                  Status.UNKNOWN: "?"}
        return "".join(digits[self.status(p)] for p in PROPERTIES)

    @property
    def is_consistent(self) -> bool:
        return not self.inconsistencies

    def to_json(self) -> Dict[str, Any]:
        return {
            "semantics": self.semantics.value,
            **{p: self.status(p).value for p in PROPERTIES},
            "pattern": self.pattern(),
            "evidence": {p: self.evidence.get(p, []) for p in PROPERTIES},
            "inconsistencies": list(self.inconsistencies)
        }


class _Collector:
    """Accumulates failure evidence per property across programs."""

    def __init__(self):
        self.evidence: Dict[str, List[Dict[str, Any]]] = {p: [] for p in PROPERTIES}
        self.unknown: set = set()

    def fail(self, props: Iterable[str], program: str, source: str,
             witness: Optional[Dict[str, Any]] = None) -> None:
        for prop in props:
            self.evidence[prop].append({
                "program": program,
                "source": source,
                "witness": witness or {}
            })


def _existence_failure(collector: _Collector, name: str, program: Program,
                       sem: SemanticsId, max_atoms: int) -> None:
    """Record a program without models and its defective host."""
    collector.fail(["exists"], name, "no models")
    host = embed_defective_host(program)
    for witness in check_defectivity(host, sem, max_atoms).witnesses:
        collector.fail(["exists", "gl", "cm"], f"{name} (embedded)",
                       "defectivity", witness.to_json())


def _check_program(collector: _Collector, name: str, program: Program,
                   sem: SemanticsId, max_atoms: int) -> None:
    if not compute_models(program, sem, max_atoms):
        _existence_failure(collector, name, program, sem, max_atoms)

    defect = check_defectivity(program, sem, max_atoms)
    for witness in defect.witnesses:
        collector.fail(["exists", "gl", "cm"], name, "defectivity",
                       witness.to_json())

    for witness in check_excessiveness(program, sem, max_atoms).witnesses:
        collector.fail(["cut"], name, "excessiveness", witness.to_json())

    for witness in check_irregularity(program, sem, max_atoms).witnesses:
        collector.fail(["lg"], name, "irregularity", witness.to_json())

    cumulative = check_cm_cut(program, sem, "cumulativity", max_atoms)
    for witness in cumulative.witnesses:
        prop = witness.kind.split("-")[0]
        collector.fail([prop], name, witness.kind, witness.to_json())

    for witness in check_relevance(program, sem, max_atoms).witnesses:
        collector.fail([witness.kind], name, "relevance", witness.to_json())
        if witness.data["relevant_kernel"] is None:
            local = relevant_subprogram(program, witness.data["atom"])
            _existence_failure(collector, f"{name} Rel({witness.data['atom']})",
                               local, sem, max_atoms)


def _inconsistencies(vector: TypeVector) -> List[str]:
    found = []
    for (p1, failed1), (p2, failed2) in EXCLUDED_PATTERNS:
        s1, s2 = vector.status(p1), vector.status(p2)
        if Status.UNKNOWN in (s1, s2):
            continue
        if (s1 is Status.FAILED) == failed1 and (s2 is Status.FAILED) == failed2:
            found.append(
                f"{p1}={'0' if failed1 else '1'} with {p2}={'0' if failed2 else '1'}"
            )
    return found


def classify(
    corpus: Iterable[Union[Program, Tuple[str, Program]]],
    sem: Union[SemanticsId, str],
    max_atoms: int = DEFAULT_MAX_ATOMS
) -> TypeVector:
    """
    Classify a semantics by running every checker over a corpus.

    Args:
        corpus: Programs, optionally paired with a name
        sem: An ASM^h or ASM^m semantics
        max_atoms: Enumeration cap

    Returns:
        TypeVector with evidence; inconsistent vectors are logged at ERROR
        and listed in ``inconsistencies``

    Raises:
        ClassificationError: If the semantics is outside ASM^h and ASM^m
    """
    sem = resolve_semantics(sem)
    if not sem.is_asm:
        raise ClassificationError(
            f"{sem.value} is not in ASM^h or ASM^m; the type table does not apply"
        )

    collector = _Collector()
    checked = 0
    for index, entry in enumerate(corpus):
        name, program = entry if isinstance(entry, tuple) else (f"#{index}", entry)
        try:
            _check_program(collector, name, program, sem, max_atoms)
            checked += 1
        except EnumerationLimitError as e:
            logger.warning("Skipping %s: %s", name, e)
            collector.unknown.add(name)

    vector = TypeVector(semantics=sem)
    for prop in PROPERTIES:
        if collector.evidence[prop]:
            status = Status.FAILED
        elif checked:
            status = Status.NOT_FALSIFIED
        else:
            status = Status.UNKNOWN
        setattr(vector, prop, status)
        if collector.evidence[prop]:
            vector.evidence[prop] = collector.evidence[prop]

    vector.inconsistencies = _inconsistencies(vector)
    for problem in vector.inconsistencies:
        logger.error("Inconsistent type vector for %s: %s", sem.value, problem)
    logger.info("%s classified as %s over %d programs", sem.value,
                vector.pattern(), checked)
    return vector
