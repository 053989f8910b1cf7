"""
Regularity of whole models against the models of the program's segments.

A model N is regular at segment level T when ``N+ & Heads(P<=T)`` is the
positive part of some model of ``P<=T`` under the same semantics.
"""

from dataclasses import dataclass
from typing import Callable, FrozenSet, List, Tuple

from models.model_set import ModelSet
from models.program import AtomSet, Program
from rule_graph.layering import layering, split_at

SegmentSemantics = Callable[[Program], ModelSet]


@dataclass(frozen=True)
class SegmentView:
    """One proper segment of a program with its model positive parts."""
    level: int
    lower: Program
    heads: AtomSet
    positives: FrozenSet[AtomSet]

    def admits(self, positive: AtomSet) -> bool:
        return (positive & self.heads) in self.positives


def segment_views(program: Program,
                  semantics: SegmentSemantics) -> Tuple[SegmentView, ...]:
    """
    Models of every proper segment ``P<=T`` (T below the top layer).

    Args:
        program: The whole program
        semantics: Model function applied to each segment
    """
    layers = layering(program)
    views: List[SegmentView] = []
    for t in layers.segment_levels:
        if t >= layers.max_layer:
            continue
        lower, _ = split_at(program, layers, t)
        views.append(SegmentView(
            level=t,
            lower=lower,
            heads=lower.heads(),
            positives=semantics(lower).positive_set()
        ))
    return tuple(views)


def irregular_levels(positive: AtomSet,
                     views: Tuple[SegmentView, ...]) -> List[int]:
    """Segment levels at which a model with this positive part is irregular."""
    return [view.level for view in views if not view.admits(positive)]


def is_regular_model(positive: AtomSet,
                     views: Tuple[SegmentView, ...]) -> bool:
    return all(view.admits(positive) for view in views)


def regular_subset(program: Program, models: ModelSet,
                   semantics: SegmentSemantics) -> ModelSet:
    """Keep the models of ``program`` that are regular at every segment."""
    if not models:
        return models
    views = segment_views(program, semantics)
    return models.filter(lambda m: is_regular_model(m.positive, views))
