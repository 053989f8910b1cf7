"""
Structural checks relating whole-program models to segment models:
defectivity, excessiveness and irregularity.
"""

import logging
from typing import Dict, List, Tuple

from models.model_set import AffixModel
from models.program import AtomSet, Program
from rule_graph.layering import Layering, layering, segment_split, split_at
from semantics.ids import SemanticsId, resolve_semantics
from semantics.limits import DEFAULT_MAX_ATOMS
from semantics.registry import compute_models, model_function
from semantics.regularity import irregular_levels, segment_views
from .report import (
    PropertyReport,
    Verdict,
    Witness,
    atoms_json,
    model_json,
    program_json,
    verdict_from
)

logger = logging.getLogger(__name__)


def _proper_segments(program: Program) -> Tuple[Layering, List[int]]:
    layers = layering(program)
    return layers, [t for t in layers.segment_levels if t < layers.max_layer]


def check_defectivity(
    program: Program,
    sem: SemanticsId,
    max_atoms: int = DEFAULT_MAX_ATOMS
) -> PropertyReport:
    """
    Look for a segment model M at level T with SEM(P>T u M+) empty.

    A witness means the semantics is defective on this program. Only
    programs with at least one model qualify.
    """
    sem = resolve_semantics(sem)
    if not compute_models(program, sem, max_atoms):
        return PropertyReport(
            "defectivity", sem, Verdict.INAPPLICABLE,
            reason="SEM(P) is empty"
        )

    layers, levels = _proper_segments(program)
    witnesses: List[Witness] = []
    for t in levels:
        lower, upper = split_at(program, layers, t)
        for model in compute_models(lower, sem, max_atoms):
            reduced = upper.add_facts(model.positive)
            if not compute_models(reduced, sem, max_atoms):
                witnesses.append(Witness("defective-segment", {
                    "T": t,
                    "M": model_json(model),
                    "program": program_json(reduced)
                }))

    if witnesses:
        logger.info("%s is defective on the program at T=%s", sem.value,
                    witnesses[0].data["T"])
    return PropertyReport("defectivity", sem, verdict_from(witnesses),
                          witnesses)


def check_excessiveness(
    program: Program,
    sem: SemanticsId,
    max_atoms: int = DEFAULT_MAX_ATOMS
) -> PropertyReport:
    """
    Look for a model N of P and a segment T such that:

    1. some M of P<=T has M+ = N+ & Heads(P<=T);
    2. N+ is the positive part of no model of P>T u M*+, for every M* of
       P<=T;
    3. some model N* of P is a model of P>T u M+.
    """
    sem = resolve_semantics(sem)
    models = compute_models(program, sem, max_atoms)
    whole = models.positive_set()
    layers, levels = _proper_segments(program)
    witnesses: List[Witness] = []

    for t in levels:
        lower, upper = split_at(program, layers, t)
        heads = lower.heads()
        segment = compute_models(lower, sem, max_atoms)
        # Models of P>T u M+, keyed by M+.
        continuations: Dict[AtomSet, frozenset] = {
            m.positive: compute_models(upper.add_facts(m.positive), sem,
                                       max_atoms).positive_set()
            for m in segment
        }
        for n in models:
            restricted = n.positive & heads
            if restricted not in continuations:
                continue
            if any(n.positive in reached for reached in continuations.values()):
                continue
            companions = sorted(
                (sorted(p) for p in continuations[restricted] & whole)
            )
            if not companions:
                continue
            witnesses.append(Witness("excessive-model", {
                "T": t,
                "N": model_json(n),
                "M": atoms_json(restricted),
                "segment_models": [model_json(m) for m in segment],
                "N_star": companions[0]
            }))

    if witnesses:
        logger.info("%s is excessive on the program (%d witnesses)",
                    sem.value, len(witnesses))
    return PropertyReport("excessiveness", sem, verdict_from(witnesses),
                          witnesses)


def check_irregularity(
    program: Program,
    sem: SemanticsId,
    max_atoms: int = DEFAULT_MAX_ATOMS
) -> PropertyReport:
    """List every model of P that is irregular at some proper segment."""
    sem = resolve_semantics(sem)
    models = compute_models(program, sem, max_atoms)
    witnesses: List[Witness] = []
    notes: List[str] = []
    if not models:
        notes.append("SEM(P) is empty")
    else:
        views = segment_views(program, model_function(sem, max_atoms))
        by_level = {view.level: view for view in views}
        for n in models:
            for t in irregular_levels(n.positive, views):
                view = by_level[t]
                witnesses.append(Witness("irregular-model", {
                    "T": t,
                    "N": model_json(n),
                    "restricted": atoms_json(n.positive & view.heads),
                    "segment_models": sorted(sorted(p) for p in view.positives)
                }))

    if witnesses:
        logger.info("%s is irregular on the program (%d witnesses)",
                    sem.value, len(witnesses))
    return PropertyReport("irregularity", sem, verdict_from(witnesses),
                          witnesses, notes=notes)


def is_regular(
    program: Program,
    sem: SemanticsId,
    model: AffixModel,
    t: int,
    max_atoms: int = DEFAULT_MAX_ATOMS
) -> bool:
    """
    True iff the model restricted to the heads of P<=T is a segment model.

    Raises:
        NotASegmentError: If T is not a segment level
    """
    lower, _ = segment_split(program, t)
    segment = compute_models(lower, sem, max_atoms)
    return (model.positive & lower.heads()) in segment.positive_set()
