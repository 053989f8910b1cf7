"""
Complete rule graph of a program.

Vertices are rule indices; there is an arc ``r -> s`` iff the head of ``r``
occurs in the body of ``s``. Rule ``s`` depends on ``r`` iff there is a
path of length >= 1 from ``r`` to ``s``.
"""

from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Set, Tuple

from models.program import Atom, Program

Arc = Tuple[int, int]


@dataclass(frozen=True)
class RuleGraph:
    """Rule graph of a program together with its SCC partition."""
    program: Program
    arcs: FrozenSet[Arc]
    successors: Tuple[Tuple[int, ...], ...]
    predecessors: Tuple[Tuple[int, ...], ...]
    components: Tuple[FrozenSet[int], ...]
    component_of: Tuple[int, ...]

    @property
    def vertices(self) -> range:
        return range(len(self.program))

    def is_cyclic(self, component: int) -> bool:
        """True iff the component contains a cycle (a loop)."""
        members = self.components[component]
        if len(members) > 1:
            return True
        (only,) = tuple(members)
        return (only, only) in self.arcs

    def in_loop(self, index: int) -> bool:
        return self.is_cyclic(self.component_of[index])

    def loop_of(self, index: int) -> FrozenSet[int]:
        """The maximal loop containing the rule, empty if none."""
        if not self.in_loop(index):
            return frozenset()
        return self.components[self.component_of[index]]


def _strongly_connected(successors: List[List[int]]) -> List[List[int]]:
    """Iterative Tarjan; components come out in reverse topological order."""
    index_of: Dict[int, int] = {}
    low: Dict[int, int] = {}
    on_stack: Set[int] = set()
    stack: List[int] = []
    result: List[List[int]] = []
    counter = 0

    for root in range(len(successors)):
        if root in index_of:
            continue
        work = [(root, 0)]
        while work:
            node, child = work.pop()
            if child == 0:
                index_of[node] = low[node] = counter
                counter += 1
                stack.append(node)
                on_stack.add(node)
            recurse = False
            for i in range(child, len(successors[node])):
                succ = successors[node][i]
                if succ not in index_of:
                    work.append((node, i + 1))
                    work.append((succ, 0))
                    recurse = True
                    break
                if succ in on_stack:
                    low[node] = min(low[node], index_of[succ])
            if recurse:
                continue
            if low[node] == index_of[node]:
                component = []
                while True:
                    member = stack.pop()
                    on_stack.discard(member)
                    component.append(member)
                    if member == node:
                        break
                result.append(sorted(component))
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[node])
    return result


def build_crg(program: Program) -> RuleGraph:
    """
    Build the complete rule graph of a program.

    Args:
        program: The program

    Returns:
        RuleGraph with arcs and strongly connected components
    """
    rules = program.rules
    by_body_atom: Dict[Atom, List[int]] = {}
    for s, rule in enumerate(rules):
        for atom in rule.body_atoms:
            by_body_atom.setdefault(atom, []).append(s)

    successors: List[List[int]] = [
        sorted(by_body_atom.get(rule.head, ())) for rule in rules
    ]
    predecessors: List[List[int]] = [[] for _ in rules]
    arcs = set()
    for r, targets in enumerate(successors):
        for s in targets:
            arcs.add((r, s))
            predecessors[s].append(r)

    components = _strongly_connected(successors)
    component_of = [0] * len(rules)
    for c, members in enumerate(components):
        for member in members:
            component_of[member] = c

    return RuleGraph(
        program=program,
        arcs=frozenset(arcs),
        successors=tuple(tuple(s) for s in successors),
        predecessors=tuple(tuple(sorted(p)) for p in predecessors),
        components=tuple(frozenset(c) for c in components),
        component_of=tuple(component_of)
    )


def reachable_from(graph: RuleGraph, start: int) -> FrozenSet[int]:
    """Rules reachable from ``start`` by a path of length >= 1."""
    seen: Set[int] = set()
    frontier = list(graph.successors[start])
    while frontier:
        node = frontier.pop()
        if node in seen:
            continue
        seen.add(node)
        frontier.extend(graph.successors[node])
    return frozenset(seen)


def ancestors_of(graph: RuleGraph, targets) -> FrozenSet[int]:
    """Rules with a path of length >= 1 into some target."""
    seen: Set[int] = set()
    frontier = [p for t in targets for p in graph.predecessors[t]]
    while frontier:
        node = frontier.pop()
        if node in seen:
            continue
        seen.add(node)
        frontier.extend(graph.predecessors[node])
    return frozenset(seen)


def depends_on(graph: RuleGraph, s: int, r: int) -> bool:
    """True iff rule ``s`` depends on rule ``r`` (path from r to s)."""
    if graph.component_of[r] == graph.component_of[s] and graph.in_loop(r):
        return True
    return s in reachable_from(graph, r)


def loops(graph: RuleGraph) -> List[FrozenSet[int]]:
    """All maximal loops, i.e. the cyclic components."""
    return [
        members for c, members in enumerate(graph.components)
        if graph.is_cyclic(c)
    ]


def in_loop_through(graph: RuleGraph, index: int, atom: Atom) -> bool:
    """
    True iff the rule is in loop through a literal over ``atom``.

    Some rule of the rule's loop must have ``atom`` as head.
    """
    rules = graph.program.rules
    return any(rules[s].head == atom for s in graph.loop_of(index))
