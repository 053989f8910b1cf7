"""Tests for the rule graph, layering and relevance."""

import itertools

import pytest

from models.program import Program
from program_io.parser import parse_program
from .graph import build_crg, depends_on, in_loop_through, loops
from .layering import (
    NotASegmentError,
    layering,
    relevant_subprogram,
    segment_split
)

DEFECTIVE_CHOICE = "a :- not b.\nb :- not a.\nc :- a.\nc :- not c.\n"

WFS_REMAINDER = """
a :- not f.
a :- not b.
b :- not a.
c :- a.
d :- f.
e :- d.
d :- e.
"""

EXCESSIVE = """
a :- not b.
b :- not a.
u :- a.
u :- b.
p :- not p, not u.
q :- not q, not p.
"""


@pytest.fixture
def defective_choice():
    """Provide the defectivity example program."""
    return parse_program(DEFECTIVE_CHOICE)


@pytest.fixture
def wfs_remainder():
    """Provide the remainder example program."""
    return parse_program(WFS_REMAINDER)


def test_single_fact_graph():
    """Test a lone fact has no arcs and no self-dependency."""
    graph = build_crg(parse_program("a."))
    assert graph.arcs == frozenset()
    assert not depends_on(graph, 0, 0)


def test_even_loop_graph():
    """Test mutual arcs form one component."""
    graph = build_crg(parse_program("a :- not b.\nb :- not a."))
    assert graph.arcs == {(0, 1), (1, 0)}
    assert len(graph.components) == 1
    assert loops(graph) == [frozenset({0, 1})]


def test_self_loop():
    """Test a rule depending on itself."""
    graph = build_crg(parse_program("c :- not c."))
    assert depends_on(graph, 0, 0)
    assert in_loop_through(graph, 0, "c")


def test_wfs_remainder_components(wfs_remainder):
    """Test the two loops of the remainder example."""
    graph = build_crg(wfs_remainder)
    cyclic = {frozenset(str(wfs_remainder.rules[i]) for i in c)
              for c in loops(graph)}
    assert cyclic == {
        frozenset({"e :- d.", "d :- e."}),
        frozenset({"a :- not b.", "b :- not a."})
    }
    # c :- a depends on a :- not f
    assert depends_on(graph, 3, 0)


def test_depends_on_is_transitive(wfs_remainder):
    """Test transitivity over every triple."""
    graph = build_crg(wfs_remainder)
    n = len(wfs_remainder)
    for r, s, t in itertools.product(range(n), repeat=3):
        if depends_on(graph, s, r) and depends_on(graph, t, s):
            assert depends_on(graph, t, r)


def test_layering_even_loop():
    """Test a single loop sits in layer 1."""
    layers = layering(parse_program("a :- not b.\nb :- not a."))
    assert layers.layer == (1, 1)
    assert layers.segment_levels == (1,)


def test_layering_defective_choice(defective_choice):
    """Test the a/b loop is the first segment."""
    layers = layering(defective_choice)
    assert layers.layer[:2] == (1, 1)
    assert 1 in layers.segment_levels
    lower, upper = segment_split(defective_choice, 1)
    assert lower == parse_program("a :- not b.\nb :- not a.")
    assert upper == parse_program("c :- a.\nc :- not c.")


def test_layering_excessive_program():
    """Test the four dashed layers are all segments."""
    layers = layering(parse_program(EXCESSIVE))
    assert layers.layer == (1, 1, 2, 2, 3, 4)
    assert layers.segment_levels == (1, 2, 3, 4)


def test_layering_is_minimal(wfs_remainder):
    """Test lowering any rule's layer breaks a constraint."""
    layers = layering(wfs_remainder)
    graph = build_crg(wfs_remainder)
    n = len(wfs_remainder)

    def valid(labels):
        for r, s in itertools.product(range(n), repeat=2):
            r_on_s = depends_on(graph, r, s)
            s_on_r = depends_on(graph, s, r)
            if r_on_s and s_on_r and labels[r] != labels[s]:
                return False
            if r_on_s and not s_on_r and labels[r] <= labels[s]:
                return False
        return True

    assert valid(layers.layer)
    for i in range(n):
        if layers.layer[i] > 1:
            lowered = list(layers.layer)
            lowered[i] -= 1
            assert not valid(lowered)


def test_segment_condition_holds(wfs_remainder):
    """Test every segment level satisfies the disjointness condition."""
    for source in (wfs_remainder, parse_program(EXCESSIVE)):
        layers = layering(source)
        for t in layers.segment_levels:
            lower, upper = segment_split(source, t)
            assert not lower.atoms() & upper.heads()
            assert lower.union(upper) == source


def test_not_a_segment(wfs_remainder):
    """Test layer 1 of the remainder example is not a segment."""
    with pytest.raises(NotASegmentError):
        segment_split(wfs_remainder, 1)


def test_max_layer_split(wfs_remainder):
    """Test splitting at the top layer."""
    top = layering(wfs_remainder).max_layer
    assert segment_split(wfs_remainder, top) == (wfs_remainder, Program())


def test_relevant_subprogram(defective_choice):
    """Test Rel_P(a) on small programs."""
    assert relevant_subprogram(parse_program("a."), "a") == \
        parse_program("a.")
    assert relevant_subprogram(defective_choice, "a") == \
        parse_program("a :- not b.\nb :- not a.")
    assert relevant_subprogram(defective_choice, "c") == defective_choice


def test_relevant_subprogram_is_closed(wfs_remainder):
    """Test Rel_P(a) is closed under dependency."""
    graph = build_crg(wfs_remainder)
    for atom in wfs_remainder.atoms():
        rel = relevant_subprogram(wfs_remainder, atom)
        members = {i for i, r in enumerate(wfs_remainder) if r in rel}
        for s in members:
            for r in range(len(wfs_remainder)):
                if depends_on(graph, s, r):
                    assert r in members
