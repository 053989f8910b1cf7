"""
Program reduction operations.

Each operation performs a single reduction step and returns the reduced
program, or ``None`` when it does not apply. Given an ``rng``, an operation
rewrites a randomly chosen redex instead of the first one. Loop membership
for the layered operations is recomputed on the program being reduced.
"""

import random
from enum import Enum
from typing import Callable, Dict, FrozenSet, Iterator, Optional

from models.program import Atom, AtomSet, Program
from rule_graph.graph import build_crg, in_loop_through


class ReductionOp(str, Enum):
    """The reduction operations."""
    PR = "PR"
    NR = "NR"
    LNR = "LNR"
    S = "S"
    LS = "LS"
    F = "F"
    L = "L"


class OpSetError(Exception):
    """Raised for operation sets mixing an operation with its layered form."""
    pass


class OpSet(frozenset):
    """A set of reduction operations."""

    def __new__(cls, ops=()):
        instance = super().__new__(cls, (ReductionOp(op) for op in ops))
        if {ReductionOp.NR, ReductionOp.LNR} <= instance:
            raise OpSetError("NR and LNR cannot be combined")
        if {ReductionOp.S, ReductionOp.LS} <= instance:
            raise OpSetError("S and LS cannot be combined")
        return instance

    @property
    def label(self) -> str:
        return "{" + ", ".join(sorted(op.value for op in self)) + "}"


WFS = OpSet({ReductionOp.PR, ReductionOp.NR, ReductionOp.S,
             ReductionOp.F, ReductionOp.L})
MH = OpSet({ReductionOp.PR, ReductionOp.LNR, ReductionOp.S,
            ReductionOp.F, ReductionOp.L})
MH_LS = OpSet({ReductionOp.PR, ReductionOp.LNR, ReductionOp.LS,
               ReductionOp.F, ReductionOp.L})

PRESETS: Dict[str, OpSet] = {"wfs": WFS, "mh": MH, "mhls": MH_LS}


def _choose(
    rewrites: Iterator[Program],
    rng: Optional[random.Random]
) -> Optional[Program]:
    """The first rewrite, or a random one when ``rng`` is given."""
    if rng is None:
        return next(rewrites, None)
    options = list(rewrites)
    return rng.choice(options) if options else None


def op_positive_reduction(
    program: Program,
    rng: Optional[random.Random] = None
) -> Optional[Program]:
    """Remove ``not b`` from a rule when ``b`` is not a head."""
    heads = program.heads()
    return _choose((
        program.replace(rule, rule.drop_negative(b))
        for rule in program
        for b in sorted(rule.neg - heads)
    ), rng)


def op_negative_reduction(
    program: Program,
    rng: Optional[random.Random] = None
) -> Optional[Program]:
    """Delete a rule containing ``not b`` when ``b`` is a fact."""
    facts = program.fact_atoms()
    return _choose(
        (program.without(rule) for rule in program if rule.neg & facts), rng
    )


def _layered_negative_redexes(program: Program) -> Iterator[Program]:
    facts = program.fact_atoms()
    graph = None
    for index, rule in enumerate(program.rules):
        triggers = rule.neg & facts
        if not triggers:
            continue
        graph = graph or build_crg(program)
        if any(not in_loop_through(graph, index, b) for b in triggers):
            yield program.without(rule)


def op_layered_negative_reduction(
    program: Program,
    rng: Optional[random.Random] = None
) -> Optional[Program]:
    """As negative reduction, unless the rule is in loop through ``not b``."""
    return _choose(_layered_negative_redexes(program), rng)


def op_success(
    program: Program,
    rng: Optional[random.Random] = None
) -> Optional[Program]:
    """Remove a positive body literal ``b`` when ``b`` is a fact."""
    facts = program.fact_atoms()
    return _choose((
        program.replace(rule, rule.drop_positive(b))
        for rule in program
        for b in sorted(rule.pos & facts)
    ), rng)


def _layered_success_redexes(program: Program) -> Iterator[Program]:
    facts = program.fact_atoms()
    graph = None
    for index, rule in enumerate(program.rules):
        for b in sorted(rule.pos & facts):
            graph = graph or build_crg(program)
            if not in_loop_through(graph, index, b):
                yield program.replace(rule, rule.drop_positive(b))


def op_layered_success(
    program: Program,
    rng: Optional[random.Random] = None
) -> Optional[Program]:
    """As success, unless the rule is in loop through ``b``."""
    return _choose(_layered_success_redexes(program), rng)


def op_failure(
    program: Program,
    rng: Optional[random.Random] = None
) -> Optional[Program]:
    """Delete a rule with a positive body literal that is not a head."""
    heads = program.heads()
    return _choose(
        (program.without(rule) for rule in program if rule.pos - heads), rng
    )


def unfounded_loop_atoms(program: Program) -> AtomSet:
    """
    Greatest atom set A such that every rule with head in A has a positive
    body atom in A.
    """
    candidate = set(program.atoms())
    changed = True
    while changed:
        changed = False
        for rule in program:
            if rule.head in candidate and not rule.pos & candidate:
                candidate.discard(rule.head)
                changed = True
    return frozenset(candidate)


def op_loop_detection(
    program: Program,
    rng: Optional[random.Random] = None
) -> Optional[Program]:
    """
    Delete every rule whose positive body meets the unfounded set.

    With ``rng`` only the rules over one randomly chosen unfounded atom are
    deleted; the rest of the set stays unfounded for later steps.
    """
    unfounded = unfounded_loop_atoms(program)
    if rng is not None:
        used = sorted({a for rule in program for a in rule.pos & unfounded})
        if not used:
            return None
        unfounded = frozenset({rng.choice(used)})
    kept = tuple(rule for rule in program if not rule.pos & unfounded)
    if len(kept) == len(program):
        return None
    return Program(kept)


Operation = Callable[[Program, Optional[random.Random]], Optional[Program]]

OPERATIONS: Dict[ReductionOp, Operation] = {
    ReductionOp.PR: op_positive_reduction,
    ReductionOp.NR: op_negative_reduction,
    ReductionOp.LNR: op_layered_negative_reduction,
    ReductionOp.S: op_success,
    ReductionOp.LS: op_layered_success,
    ReductionOp.F: op_failure,
    ReductionOp.L: op_loop_detection,
}

# Deterministic engine order.
ENGINE_ORDER = (
    ReductionOp.L, ReductionOp.F, ReductionOp.S, ReductionOp.LS,
    ReductionOp.NR, ReductionOp.LNR, ReductionOp.PR
)


def negated_in_loops(program: Program) -> FrozenSet[Atom]:
    """Atoms ``b`` such that some rule is in loop through ``not b``."""
    graph = build_crg(program)
    return frozenset(
        b
        for index, rule in enumerate(program.rules)
        for b in rule.neg
        if in_loop_through(graph, index, b)
    )
