"""
Rule layering, T-segments and relevant subprograms.
"""

from dataclasses import dataclass
from typing import Dict, Tuple

from models.program import Atom, Program
from .graph import RuleGraph, ancestors_of, build_crg


class NotASegmentError(Exception):
    """Raised when a layer value does not define a T-segment."""
    pass


@dataclass(frozen=True)
class Layering:
    """Layer number per rule index plus the layer values that are segments."""
    layer: Tuple[int, ...]
    segment_levels: Tuple[int, ...]

    @property
    def max_layer(self) -> int:
        return max(self.layer, default=0)

    def by_rule(self, program: Program) -> Dict[str, int]:
        return {str(rule): self.layer[i] for i, rule in enumerate(program)}


def _component_layers(graph: RuleGraph) -> Dict[int, int]:
    # Tarjan emits components in reverse topological order.
    layers: Dict[int, int] = {}
    for c in reversed(range(len(graph.components))):
        preds = {
            graph.component_of[p]
            for member in graph.components[c]
            for p in graph.predecessors[member]
        } - {c}
        layers[c] = 1 + max((layers[p] for p in preds), default=0)
    return layers


def layering(program: Program) -> Layering:
    """
    Compute the minimal rule layering of a program.

    A component with no predecessor component gets layer 1; any other gets
    one more than the maximum layer of its predecessor components.

    Args:
        program: The program

    Returns:
        Layering with the segment levels T such that
        Atoms(P^{<=T}) and Heads(P^{>T}) are disjoint
    """
    graph = build_crg(program)
    component_layer = _component_layers(graph)
    layer = tuple(
        component_layer[graph.component_of[i]] for i in graph.vertices
    )
    levels = []
    for t in sorted(set(layer)):
        low_atoms = frozenset(
            a for i, rule in enumerate(program) if layer[i] <= t
            for a in rule.atoms
        )
        high_heads = frozenset(
            rule.head for i, rule in enumerate(program) if layer[i] > t
        )
        if not low_atoms & high_heads:
            levels.append(t)
    return Layering(layer=layer, segment_levels=tuple(levels))


def split_at(program: Program, layers: Layering,
             t: int) -> Tuple[Program, Program]:
    lower = Program(tuple(
        r for i, r in enumerate(program) if layers.layer[i] <= t
    ))
    upper = Program(tuple(
        r for i, r in enumerate(program) if layers.layer[i] > t
    ))
    return lower, upper


def segment_split(program: Program, t: int) -> Tuple[Program, Program]:
    """
    Split a program at a segment level.

    Returns:
        The pair (P^{<=T}, P^{>T})

    Raises:
        NotASegmentError: If T is not a segment level
    """
    layers = layering(program)
    if program and t not in layers.segment_levels:
        raise NotASegmentError(
            f"Layer {t} is not a segment (levels: {list(layers.segment_levels)})"
        )
    return split_at(program, layers, t)


def relevant_subprogram(program: Program, atom: Atom) -> Program:
    """
    Rules relevant to an atom: the rules with head ``atom`` and every rule
    they depend on.
    """
    graph = build_crg(program)
    head_rules = [i for i, r in enumerate(program) if r.head == atom]
    wanted = set(head_rules) | ancestors_of(graph, head_rules)
    return program.select(wanted)
