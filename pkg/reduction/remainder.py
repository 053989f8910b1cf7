"""
Remainder engine: applies a reduction system until no operation applies.
"""

import logging
import random
from typing import Optional

from models.program import Program
from .operations import ENGINE_ORDER, OPERATIONS, OpSet

logger = logging.getLogger(__name__)


def remainder(
    program: Program,
    ops: OpSet,
    rng: Optional[random.Random] = None
) -> Program:
    """
    Reduce a program to its remainder under an operation set.

    Args:
        program: Program to reduce
        ops: Reduction system
        rng: When given, each step picks a random applicable operation and
            that operation rewrites a random redex, instead of the fixed
            engine order and the first redex

    Returns:
        A program invariant under every operation of ``ops``
    """
    ordered = [op for op in ENGINE_ORDER if op in ops]
    current = program
    steps = 0
    while True:
        if rng is None:
            reduced = None
            for op in ordered:
                reduced = OPERATIONS[op](current)
                if reduced is not None:
                    break
        else:
            applicable = [
                op for op in ordered if OPERATIONS[op](current) is not None
            ]
            reduced = (OPERATIONS[rng.choice(applicable)](current, rng)
                       if applicable else None)
        if reduced is None:
            logger.debug("Remainder under %s after %d steps",
                         ops.label, steps)
            return current
        current = reduced
        steps += 1
