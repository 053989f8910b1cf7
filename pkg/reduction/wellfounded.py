"""
Well-founded model computation, by remainder and by alternating fixpoint.
"""

from typing import Iterable

from models.program import AtomSet, Interpretation3V, Program, Rule
from .operations import WFS
from .remainder import remainder


class ReductError(Exception):
    """Raised when a default-negation-free program is required."""
    pass


def gl_reduct(program: Program, model: Iterable[str]) -> Program:
    """
    Gelfond-Lifschitz reduct of a program with respect to an atom set.

    Rules with ``not c``, ``c`` in the set, are dropped; the remaining
    default literals are deleted.
    """
    chosen = frozenset(model)
    return Program(tuple(
        Rule(rule.head, rule.pos)
        for rule in program
        if not rule.neg & chosen
    ))


def least_model(program: Program) -> AtomSet:
    """
    Least model of a default-negation-free program.

    Raises:
        ReductError: If some rule has a default literal
    """
    if any(rule.neg for rule in program):
        raise ReductError("least_model needs a program without default literals")
    derived = set()
    pending = list(program.rules)
    changed = True
    while changed:
        changed = False
        waiting = []
        for rule in pending:
            if rule.pos <= derived:
                if rule.head not in derived:
                    derived.add(rule.head)
                    changed = True
            else:
                waiting.append(rule)
        pending = waiting
    return frozenset(derived)


def wfm_from_remainder(program: Program) -> Interpretation3V:
    """
    Well-founded model read off the WFS remainder: facts are true, atoms
    that are no longer heads are false.
    """
    reduced = remainder(program, WFS)
    universe = program.atoms()
    true_set = reduced.fact_atoms()
    false_set = universe - reduced.heads()
    return Interpretation3V(true_set, false_set,
                            universe - true_set - false_set)


def wfm_alternating(program: Program) -> Interpretation3V:
    """Well-founded model by the alternating fixpoint construction."""
    def gamma(atoms: AtomSet) -> AtomSet:
        return least_model(gl_reduct(program, atoms))

    universe = program.atoms()
    true_set: AtomSet = frozenset()
    while True:
        possible = gamma(true_set)
        refined = gamma(possible)
        if refined == true_set:
            break
        true_set = refined
    return Interpretation3V(true_set, universe - possible,
                            possible - true_set)


def well_founded_model(program: Program) -> Interpretation3V:
    """Well-founded model used by the model-producing semantics."""
    return wfm_alternating(program)
