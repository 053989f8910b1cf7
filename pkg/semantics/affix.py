"""
Affix stable interpretations and the minimal hypotheses (MH) family.

An affix H turns a program into one whose well-founded model is total;
that total model is the affix stable interpretation of H.
"""

import logging
from typing import Iterator, List

from models.model_set import AffixModel, ModelSet
from models.program import AtomSet, Program
from reduction.operations import negated_in_loops
from reduction.remainder import remainder
from reduction.wellfounded import well_founded_model
from .ids import SemanticsId
from .limits import DEFAULT_MAX_ATOMS, check_limit, subsets_by_size
from .regularity import regular_subset

logger = logging.getLogger(__name__)


def hyps(program: Program, sem: SemanticsId = SemanticsId.MH) -> AtomSet:
    """
    Assumable hypotheses: atoms default-negated in the layered remainder.

    For MH_LOOP only atoms negated in rules that are in loop through that
    default literal qualify.
    """
    reduced = remainder(program, sem.op_set)
    if sem is SemanticsId.MH_LOOP:
        return negated_in_loops(reduced)
    return reduced.negated_atoms()


def affix_model(program: Program, affix: AtomSet) -> AffixModel:
    """The (possibly non-total) interpretation WFM(P u H) paired with H."""
    wfm = well_founded_model(program.add_facts(affix))
    return AffixModel(wfm.padded(program.atoms()), frozenset(affix))


def _affixes(hypotheses: AtomSet, max_atoms: int) -> Iterator[AtomSet]:
    ordered = check_limit(hypotheses, max_atoms, "hypotheses enumeration")
    if not ordered:
        return iter([frozenset()])
    return subsets_by_size(ordered, min_size=1)


def affix_candidates(
    program: Program,
    hypotheses: AtomSet,
    max_atoms: int = DEFAULT_MAX_ATOMS
) -> List[AffixModel]:
    """
    Every H over ``hypotheses`` whose well-founded extension is total.

    H is non-empty unless there are no hypotheses at all, in which case
    the empty affix is the only candidate.
    """
    found = []
    for affix in _affixes(hypotheses, max_atoms):
        candidate = affix_model(program, affix)
        if candidate.interpretation.is_total:
            found.append(candidate)
    return found


def minimal_affix_models(
    program: Program,
    hypotheses: AtomSet,
    max_atoms: int = DEFAULT_MAX_ATOMS
) -> List[AffixModel]:
    """Candidates whose affix is minimal with respect to set inclusion."""
    accepted: List[AffixModel] = []
    for affix in _affixes(hypotheses, max_atoms):
        if any(m.affix <= affix for m in accepted):
            continue
        candidate = affix_model(program, affix)
        if candidate.interpretation.is_total:
            accepted.append(candidate)
    logger.debug("%d minimal affixes over %d hypotheses",
                 len(accepted), len(hypotheses))
    return accepted


def is_sustainable(program: Program, model: AffixModel) -> bool:
    """
    No single hypothesis may be defined in the well-founded model of the
    program extended with the remaining ones.
    """
    for h in model.affix:
        rest = model.affix - {h}
        if not rest:
            continue
        if h not in well_founded_model(program.add_facts(rest)).undef_set:
            return False
    return True


def _minimal_positive(models: List[AffixModel]) -> List[AffixModel]:
    return [
        m for m in models
        if not any(o.positive < m.positive for o in models)
    ]


def mh_family_models(
    program: Program,
    sem: SemanticsId = SemanticsId.MH,
    max_atoms: int = DEFAULT_MAX_ATOMS
) -> ModelSet:
    """
    Models of a semantics of the minimal hypotheses family.

    Args:
        program: The program
        sem: MH, MH_LS, MH_LOOP, MH_SUST, MH_SUST_MIN or MH_REG
        max_atoms: Cap on the hypotheses enumerated

    Returns:
        ModelSet of total models carrying their affixes
    """
    if not sem.is_affix_based:
        raise ValueError(f"{sem.value} is not a minimal hypotheses semantics")

    models = minimal_affix_models(program, hyps(program, sem), max_atoms)
    if sem in (SemanticsId.MH_SUST, SemanticsId.MH_SUST_MIN):
        models = [m for m in models if is_sustainable(program, m)]
    if sem is SemanticsId.MH_SUST_MIN:
        models = _minimal_positive(models)

    result = ModelSet(models)
    if sem is SemanticsId.MH_REG:
        result = regular_subset(
            program, result,
            lambda lower: mh_family_models(lower, SemanticsId.MH, max_atoms)
        )
    return result
