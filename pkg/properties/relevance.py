"""
Global-to-local (gl) and local-to-global (lg) relevance.

For every atom ``a``: gl asks ``a in ker(P) => a in ker(Rel_P(a))`` and lg
the converse.
"""

import logging
from typing import List

from models.program import Program
from rule_graph.layering import relevant_subprogram
from semantics.ids import SemanticsId, resolve_semantics
from semantics.limits import DEFAULT_MAX_ATOMS
from semantics.registry import compute_models
from .report import (
    PropertyReport,
    Verdict,
    Witness,
    atoms_json,
    program_json,
    verdict_from
)

logger = logging.getLogger(__name__)


def check_relevance(
    program: Program,
    sem: SemanticsId,
    max_atoms: int = DEFAULT_MAX_ATOMS
) -> PropertyReport:
    """
    Check both relevance directions for every atom of the program.

    An undefined kernel of ``Rel_P(a)`` is a gl witness when ``a`` is in the
    kernel of P (the membership cannot be established locally); with ``a``
    outside the kernel of P it is only noted. The whole check is
    inapplicable when SEM(P) is empty.
    """
    sem = resolve_semantics(sem)
    kernel = compute_models(program, sem, max_atoms).kernel()
    if kernel is None:
        return PropertyReport(
            "relevance", sem, Verdict.INAPPLICABLE,
            reason="kernel undefined: SEM(P) is empty"
        )

    witnesses: List[Witness] = []
    notes: List[str] = []
    for atom in sorted(program.atoms()):
        local = relevant_subprogram(program, atom)
        local_kernel = compute_models(local, sem, max_atoms).kernel()
        details = {
            "atom": atom,
            "kernel": atoms_json(kernel),
            "relevant_kernel": atoms_json(local_kernel),
            "relevant_program": program_json(local)
        }
        if local_kernel is None:
            if atom in kernel:
                witnesses.append(Witness("gl", details))
            else:
                notes.append(f"kernel of Rel_P({atom}) undefined")
            continue
        if atom in kernel and atom not in local_kernel:
            witnesses.append(Witness("gl", details))
        if atom in local_kernel and atom not in kernel:
            witnesses.append(Witness("lg", details))

    if witnesses:
        logger.info("%s fails relevance on %d atoms", sem.value,
                    len(witnesses))
    return PropertyReport("relevance", sem, verdict_from(witnesses),
                          witnesses, notes=notes)
