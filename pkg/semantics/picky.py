"""
Picky: the stable models, kept only when every subset of their kernel
leaves the kernel unchanged once added as facts.
"""

import logging

from models.model_set import ModelSet
from models.program import Program
from .limits import DEFAULT_MAX_ATOMS, check_limit, subsets_by_size
from .stable import stable_models

logger = logging.getLogger(__name__)


def picky_models(
    program: Program,
    max_atoms: int = DEFAULT_MAX_ATOMS
) -> ModelSet:
    models = stable_models(program, max_atoms)
    kernel = models.kernel()
    if kernel is None:
        return ModelSet()
    for subset in subsets_by_size(check_limit(kernel, max_atoms,
                                              "kernel subsets")):
        extended = stable_models(program.add_facts(subset), max_atoms)
        if extended.kernel() != kernel:
            logger.debug("Picky rejects: kernel changes after adding %s",
                         sorted(subset))
            return ModelSet()
    return models
