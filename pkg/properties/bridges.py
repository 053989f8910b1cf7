"""
Program constructions that turn a witness of one property failure into a
program witnessing a related failure.
"""

import logging
from typing import List, Tuple

from models.model_set import AffixModel
from models.program import Atom, AtomSet, Program, Rule
from rule_graph.layering import segment_split
from semantics.ids import SemanticsId
from semantics.limits import DEFAULT_MAX_ATOMS
from semantics.registry import compute_models
from .cumulativity import check_cm_cut
from .structural import check_defectivity

logger = logging.getLogger(__name__)


class WitnessError(Exception):
    """Raised when a transform is given a program that witnesses nothing."""
    pass


def fresh_atoms(program: Program, *stems: str) -> Tuple[Atom, ...]:
    """One unused atom per stem: the stem itself, else stem1, stem2, ..."""
    taken = set(program.atoms())
    chosen: List[Atom] = []
    for stem in stems:
        candidate, n = stem, 0
        while candidate in taken:
            n += 1
            candidate = f"{stem}{n}"
        taken.add(candidate)
        chosen.append(candidate)
    return tuple(chosen)


def embed_defective_host(program: Program) -> Program:
    """
    Put ``program`` above a choice between fresh ``x`` and ``y``.

    Every rule is guarded by ``x``, so the choice loop is the segment at
    T = 1. When the program has no models the host is defective there:
    choosing ``x`` leaves ``program u {x}``.
    """
    x, y = fresh_atoms(program, "x", "y")
    choice = (Rule(x, frozenset(), frozenset({y})),
              Rule(y, frozenset(), frozenset({x})))
    guarded = tuple(rule.with_body(pos={x}) for rule in program)
    return Program(choice + guarded)


def irregularity_lg_host(program: Program, t: int,
                         model: AffixModel) -> Tuple[Program, Atom]:
    """
    Extend ``program`` with ``z <- N+ of segment T, not (other segment heads)``
    and ``g <- not z`` for fresh ``z`` and ``g``.

    For an irregular model N at T, ``g`` is in the kernel of its relevant
    subprogram (z is underivable from segment models) but the extension of
    N makes ``z`` true, so ``g`` leaves the kernel of the host: an lg
    violation. Valid for MH, MH_LS, MH_LOOP, MH_REG, Navy, Blue and Cyan.

    Returns:
        The host program and the atom ``g``
    """
    lower, _ = segment_split(program, t)
    heads = lower.heads()
    chosen = model.positive & heads
    z, g = fresh_atoms(program, "z", "g")
    extra = (
        Rule(z, frozenset(chosen), frozenset(heads - chosen)),
        Rule(g, frozenset(), frozenset({z}))
    )
    return program.union(extra), g


def prop1_witness_transform(
    program: Program,
    max_atoms: int = DEFAULT_MAX_ATOMS
) -> Program:
    """
    Convert between stable-model existence failure and cautious monotony
    failure.

    - No stable models: the program is guarded by ``not k`` under the
      choice ``x <- not y``, ``y <- not x``, ``k <- y``. Its only stable
      model is ``{y, k}``; adding ``k`` admits ``{x, k}``.
    - Defective program: the upper part of the first defective segment
      together with the segment model, which has no stable model.
    - Otherwise a cautious monotony failure on S gives
      ``P u {f <- S, not f}``, which has no stable model.

    Raises:
        WitnessError: If the program witnesses neither failure, or the
            constructed program does not witness the other one
    """
    sem = SemanticsId.SM
    if not compute_models(program, sem, max_atoms):
        x, y, k = fresh_atoms(program, "x", "y", "k")
        host = Program((
            Rule(x, frozenset(), frozenset({y})),
            Rule(y, frozenset(), frozenset({x})),
            Rule(k, frozenset({y}))
        ) + tuple(rule.with_body(neg={k}) for rule in program))
        if not check_cm_cut(host, sem, "cm", max_atoms).fails:
            raise WitnessError("Constructed host shows no cautious monotony failure")
        logger.info("Existence failure embedded under %s", k)
        return host

    defect = check_defectivity(program, sem, max_atoms)
    if defect.fails:
        witness = defect.witnesses[0]
        _, upper = segment_split(program, witness.data["T"])
        segment_model: AtomSet = frozenset(witness.data["M"]["true"])
        return upper.add_facts(segment_model)

    cm = check_cm_cut(program, sem, "cm", max_atoms)
    if not cm.fails:
        raise WitnessError("Program shows neither existence nor cautious monotony failure")
    subset = frozenset(cm.witnesses[0].data["S"])
    (f,) = fresh_atoms(program, "f")
    guarded = program.union((Rule(f, subset, frozenset({f})),))
    if compute_models(guarded, sem, max_atoms):
        raise WitnessError("Kernel guard still has stable models")
    return guarded
