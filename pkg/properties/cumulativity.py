"""
Cautious monotony, cut and cumulativity checks.

Both readings are evaluated for every non-empty S contained in the kernel:
the classical one compares kernels, the refined one compares model sets
(positive part and affix for the minimal hypotheses family, positive part
otherwise).
"""

import logging
from typing import List

from models.model_set import ModelSet
from models.program import Program
from semantics.ids import SemanticsId, resolve_semantics
from semantics.limits import DEFAULT_MAX_ATOMS, check_limit, subsets_by_size
from semantics.registry import compute_models
from .report import (
    PropertyReport,
    Verdict,
    Witness,
    atoms_json,
    model_json,
    verdict_from
)

logger = logging.getLogger(__name__)

CM_CUT_PROPERTIES = ("cm", "cut", "cumulativity")


def _models_by_key(models: ModelSet, with_affix: bool) -> dict:
    return {m.key(with_affix): m for m in models}


def check_cm_cut(
    program: Program,
    sem: SemanticsId,
    prop: str = "cumulativity",
    max_atoms: int = DEFAULT_MAX_ATOMS
) -> PropertyReport:
    """
    Look for cautious monotony and cut violations on one program.

    Args:
        program: The program
        sem: Semantics under test
        prop: ``cm``, ``cut`` or ``cumulativity`` (both)
        max_atoms: Enumeration cap

    Returns:
        PropertyReport; inapplicable when SEM(P) is empty
    """
    sem = resolve_semantics(sem)
    if prop not in CM_CUT_PROPERTIES:
        raise ValueError(f"Unknown cumulativity property '{prop}'")
    want_cm = prop in ("cm", "cumulativity")
    want_cut = prop in ("cut", "cumulativity")

    base = compute_models(program, sem, max_atoms)
    kernel = base.kernel()
    if kernel is None:
        return PropertyReport(
            prop, sem, Verdict.INAPPLICABLE,
            reason="kernel undefined: SEM(P) is empty"
        )

    refined = sem.is_asm
    with_affix = sem.is_affix_based
    base_keys = _models_by_key(base, with_affix)
    witnesses: List[Witness] = []
    notes: List[str] = []
    if not refined:
        notes.append("refined comparison skipped: not an ASM semantics")

    ordered = check_limit(kernel, max_atoms, "kernel subsets")
    for subset in subsets_by_size(ordered, min_size=1):
        extended = compute_models(program.add_facts(subset), sem, max_atoms)
        extended_kernel = extended.kernel()
        s_json = atoms_json(subset)

        if extended_kernel is None:
            notes.append(f"kernel of P u {s_json} undefined")
        else:
            if want_cm and not kernel <= extended_kernel:
                witnesses.append(Witness("cm-classical", {
                    "S": s_json,
                    "kernel": atoms_json(kernel),
                    "extended_kernel": atoms_json(extended_kernel)
                }))
            if want_cut and not extended_kernel <= kernel:
                witnesses.append(Witness("cut-classical", {
                    "S": s_json,
                    "kernel": atoms_json(kernel),
                    "extended_kernel": atoms_json(extended_kernel)
                }))

        if not refined:
            continue
        extended_keys = _models_by_key(extended, with_affix)
        if want_cm:
            extra = [extended_keys[k] for k in extended_keys
                     if k not in base_keys]
            if extra:
                witnesses.append(Witness("cm-refined", {
                    "S": s_json,
                    "models": [model_json(m) for m in ModelSet(extra)]
                }))
        if want_cut:
            missing = [base_keys[k] for k in base_keys
                       if k not in extended_keys]
            if missing:
                witnesses.append(Witness("cut-refined", {
                    "S": s_json,
                    "models": [model_json(m) for m in ModelSet(missing)]
                }))

    verdict = verdict_from(witnesses)
    if witnesses:
        logger.info("%s fails %s: %d witnesses", sem.value, prop,
                    len(witnesses))
    return PropertyReport(prop, sem, verdict, witnesses, notes=notes)
