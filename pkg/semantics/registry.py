"""
Dispatch from semantics identifiers to model computations.
"""

import logging
from functools import lru_cache
from typing import Callable, Dict, Union

from models.model_set import ModelSet
from models.program import Program
from .affix import mh_family_models
from .classical import blue_models, cyan_models, green_models, navy_models
from .ids import SemanticsId, resolve_semantics
from .limits import DEFAULT_MAX_ATOMS
from .picky import picky_models
from .stable import stable_models

logger = logging.getLogger(__name__)

ModelFunction = Callable[[Program, int], ModelSet]


def _mh(sem: SemanticsId) -> ModelFunction:
    return lambda program, max_atoms: mh_family_models(program, sem, max_atoms)


_DISPATCH: Dict[SemanticsId, ModelFunction] = {
    SemanticsId.SM: stable_models,
    SemanticsId.NAVY: navy_models,
    SemanticsId.BLUE: blue_models,
    SemanticsId.CYAN: cyan_models,
    SemanticsId.GREEN: green_models,
    SemanticsId.PICKY: picky_models,
    **{sem: _mh(sem) for sem in SemanticsId if sem.is_affix_based},
}


@lru_cache(maxsize=4096)
def _cached_models(program: Program, sem: SemanticsId,
                   max_atoms: int) -> ModelSet:
    return _DISPATCH[sem](program, max_atoms)


def compute_models(
    program: Program,
    sem: Union[SemanticsId, str],
    max_atoms: int = DEFAULT_MAX_ATOMS
) -> ModelSet:
    """
    Compute the models of a program under a semantics.

    Args:
        program: The program
        sem: Semantics identifier or its CLI name
        max_atoms: Enumeration cap

    Returns:
        Canonically sorted ModelSet, possibly empty

    Raises:
        UnknownSemanticsError: If ``sem`` names no implemented semantics
        EnumerationLimitError: If a subset search exceeds ``max_atoms``
    """
    sem = resolve_semantics(sem)
    models = _cached_models(program, sem, max_atoms)
    logger.debug("%s: %d models over %d rules",
                 sem.value, len(models), len(program))
    return models


def model_function(sem: Union[SemanticsId, str],
                   max_atoms: int = DEFAULT_MAX_ATOMS
                   ) -> Callable[[Program], ModelSet]:
    """Bind a semantics and cap into a one-argument model function."""
    sem = resolve_semantics(sem)
    return lambda program: compute_models(program, sem, max_atoms)
