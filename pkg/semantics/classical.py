"""
Semantics built on the classical minimal models of the WFS remainder:
Navy, Green, Blue and Cyan.
"""

import logging
from typing import Callable, Dict, Iterable, List, Optional

from models.model_set import AffixModel, ModelSet
from models.program import AtomSet, Interpretation3V, Program
from reduction.operations import WFS
from reduction.remainder import remainder
from rule_graph.layering import relevant_subprogram
from .limits import DEFAULT_MAX_ATOMS, check_limit, subsets_by_size
from .regularity import regular_subset

logger = logging.getLogger(__name__)


def is_classical_model(program: Program, model: Iterable[str]) -> bool:
    """Every rule whose body holds under ``model`` has its head in it."""
    chosen = frozenset(model)
    return all(
        rule.head in chosen
        for rule in program
        if rule.pos <= chosen and not rule.neg & chosen
    )


def classical_models(
    program: Program,
    max_atoms: int = DEFAULT_MAX_ATOMS
) -> ModelSet:
    """All total classical models over the Herbrand base."""
    universe = program.atoms()
    ordered = check_limit(universe, max_atoms, "classical model search")
    return ModelSet(
        AffixModel(Interpretation3V.total(chosen, universe))
        for chosen in subsets_by_size(ordered)
        if is_classical_model(program, chosen)
    )


def minimal_classical_models(
    program: Program,
    max_atoms: int = DEFAULT_MAX_ATOMS
) -> List[AtomSet]:
    """Inclusion-minimal classical models, as positive parts."""
    # Atoms of a minimal model are always heads.
    ordered = check_limit(program.heads(), max_atoms,
                          "minimal model search")
    found: List[AtomSet] = []
    for chosen in subsets_by_size(ordered):
        if any(m <= chosen for m in found):
            continue
        if is_classical_model(program, chosen):
            found.append(chosen)
    return found


def _as_models(positives: Iterable[AtomSet], universe: AtomSet) -> ModelSet:
    return ModelSet(
        AffixModel(Interpretation3V.total(positive, universe))
        for positive in positives
    )


def navy_models(
    program: Program,
    max_atoms: int = DEFAULT_MAX_ATOMS
) -> ModelSet:
    """Minimal models of the WFS remainder; erased atoms are false."""
    reduced = remainder(program, WFS)
    return _as_models(minimal_classical_models(reduced, max_atoms),
                      program.atoms())


def unsupported_atoms(program: Program, model: Interpretation3V) -> AtomSet:
    """True atoms with no rule whose body holds in ``model``."""
    true_set = model.true_set
    supported = {
        rule.head for rule in program
        if rule.pos <= true_set and not rule.neg & true_set
    }
    return true_set - supported


def green_models(
    program: Program,
    max_atoms: int = DEFAULT_MAX_ATOMS
) -> ModelSet:
    """
    Minimal models of the WFS remainder with the smallest sets of
    classically unsupported atoms.

    A model M is discarded when another minimal model N has strictly fewer
    unsupported atoms and every atom on which N and M disagree depends on
    an atom that N supports and M does not. Models that differ below the
    atoms they leave unsupported are not compared.
    """
    reduced = remainder(program, WFS)
    universe = program.atoms()
    scored = [
        (positive, unsupported_atoms(
            reduced, Interpretation3V.total(positive, reduced.atoms())))
        for positive in minimal_classical_models(reduced, max_atoms)
    ]
    reach: Dict[str, AtomSet] = {}

    def reaches(atom: str) -> AtomSet:
        if atom not in reach:
            reach[atom] = relevant_subprogram(reduced, atom).atoms() | {atom}
        return reach[atom]

    def dominated(positive: AtomSet, unsupported: AtomSet) -> bool:
        for other, other_unsupported in scored:
            if not other_unsupported < unsupported:
                continue
            gained = unsupported - other_unsupported
            if all(reaches(atom) & gained for atom in positive ^ other):
                return True
        return False

    kept = [
        positive for positive, unsupported in scored
        if not dominated(positive, unsupported)
    ]
    logger.debug("Green keeps %d of %d minimal models", len(kept), len(scored))
    return _as_models(kept, universe)


def _kernel_iteration(
    program: Program,
    semantics: Callable[[Program], ModelSet]
) -> Optional[Program]:
    """
    Grow the program by kernel atoms until the kernel of the extended
    program agrees with the kernel it was extended with.

    Returns:
        The final ``current u K``, or ``None`` when a kernel is undefined
    """
    current = program
    rounds = 0
    while True:
        kernel = semantics(current).kernel()
        if kernel is None:
            return None
        extended = current.add_facts(kernel)
        next_kernel = semantics(extended).kernel()
        if next_kernel is None:
            return None
        rounds += 1
        if next_kernel == kernel:
            logger.debug("Kernel fixpoint after %d rounds", rounds)
            return extended
        grown = current.add_facts(next_kernel)
        if grown == current:
            return extended
        current = grown


def blue_models(
    program: Program,
    max_atoms: int = DEFAULT_MAX_ATOMS
) -> ModelSet:
    """Navy models of the program closed under its Navy kernel."""
    def navy(p: Program) -> ModelSet:
        return navy_models(p, max_atoms)

    closed = _kernel_iteration(program, navy)
    if closed is None:
        return ModelSet()
    return navy(closed)


def cyan_models(
    program: Program,
    max_atoms: int = DEFAULT_MAX_ATOMS
) -> ModelSet:
    """
    As Blue, but kernels range over regular Navy models only, and only the
    regular models of the closed program are kept.
    """
    def navy(p: Program) -> ModelSet:
        return navy_models(p, max_atoms)

    def regular_navy(p: Program) -> ModelSet:
        return regular_subset(p, navy(p), navy)

    closed = _kernel_iteration(program, regular_navy)
    if closed is None:
        return ModelSet()
    return regular_navy(closed)
