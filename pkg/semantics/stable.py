"""
Stable models by the reduct method.
"""

import logging
from typing import Iterable

from models.model_set import AffixModel, ModelSet
from models.program import Interpretation3V, Program
from reduction.wellfounded import gl_reduct, least_model, well_founded_model
from .limits import DEFAULT_MAX_ATOMS, check_limit, subsets_by_size

logger = logging.getLogger(__name__)


def is_stable(program: Program, model: Iterable[str]) -> bool:
    """True iff ``model`` is the least model of its reduct."""
    chosen = frozenset(model)
    return least_model(gl_reduct(program, chosen)) == chosen


def stable_models(
    program: Program,
    max_atoms: int = DEFAULT_MAX_ATOMS,
    prune: bool = True
) -> ModelSet:
    """
    Compute every stable model of a program.

    Args:
        program: The program
        max_atoms: Cap on the number of atoms whose truth is guessed
        prune: Guess only the atoms left undefined by the well-founded
            model (every stable model extends it); ``False`` guesses over
            the whole Herbrand base

    Returns:
        ModelSet of total models, without affixes

    Raises:
        EnumerationLimitError: If the guessed atoms exceed ``max_atoms``
    """
    universe = program.atoms()
    if prune:
        wfm = well_founded_model(program)
        base, open_atoms = wfm.true_set, wfm.undef_set
    else:
        base, open_atoms = frozenset(), universe
    guessed = check_limit(open_atoms, max_atoms, "stable model search")

    found = [
        AffixModel(Interpretation3V.total(base | extra, universe))
        for extra in subsets_by_size(guessed)
        if is_stable(program, base | extra)
    ]
    logger.debug("%d stable models over %d guessed atoms",
                 len(found), len(guessed))
    return ModelSet(found)
