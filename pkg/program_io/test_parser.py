"""Tests for program parsing and rendering."""

import pytest

from models.program import Literal, Program, Rule, add_facts, atoms, facts, heads
from .parser import (
    NonGroundProgramError,
    ProgramSyntaxError,
    parse_program,
    render_program
)

MH_NOT_CUMULATIVE = """
u :- b.
u :- c.
t :- a.
t :- h.
a :- not b.
b :- not c.
c :- h, u.
h :- not h, not t.
"""

WFS_REMAINDER = """
a :- not f.
a :- not b.
b :- not a.
c :- a.
d :- f.
e :- d.
d :- e.
"""


@pytest.fixture
def mh_not_cumulative():
    """Provide the eight-rule cumulativity counter-example."""
    return parse_program(MH_NOT_CUMULATIVE)


def test_parse_choice_pair():
    """Test a two-rule even loop."""
    program = parse_program("a :- not b.\nb :- not a.")
    assert len(program) == 2
    assert program.atoms() == {"a", "b"}
    assert program.rules[0] == Rule.make("a", [Literal("b", True)])


def test_duplicate_rules_are_merged():
    """Test set semantics on repeated rules and literals."""
    assert len(parse_program("a.\na.")) == 1
    program = parse_program("a :- b, b, not c, not c.")
    assert program.rules[0].pos == {"b"}
    assert program.rules[0].neg == {"c"}


def test_parse_mh_not_cumulative(mh_not_cumulative):
    """Test the eight-rule program parses with its atoms."""
    assert len(mh_not_cumulative) == 8
    assert mh_not_cumulative.atoms() == {"a", "b", "c", "h", "t", "u"}


def test_comments_and_whitespace():
    """Test comments run to end of line."""
    program = parse_program("% header\na.  % trailing\n\n  b :-\n  not a .")
    assert len(program) == 2


def test_atom_names_starting_with_not():
    """Test that 'nota' is an atom, not a default literal."""
    program = parse_program("a :- nota, not notb.")
    assert program.rules[0].pos == {"nota"}
    assert program.rules[0].neg == {"notb"}


def test_variables_are_rejected():
    """Test non-ground input."""
    with pytest.raises(NonGroundProgramError) as info:
        parse_program("a.\np :- q, X.")
    assert info.value.line == 2


def test_syntax_error_position():
    """Test syntax errors carry a position."""
    with pytest.raises(ProgramSyntaxError) as info:
        parse_program("a :- b\nc.")
    assert info.value.line >= 1
    assert info.value.column >= 1


def test_render():
    """Test rendering of empty programs and facts."""
    assert render_program(Program()) == ""
    assert render_program(parse_program("a.")) == "a.\n"
    assert render_program(parse_program("h :- not t, c, b.")) == \
        "h :- b, c, not t.\n"


def test_round_trip(mh_not_cumulative):
    """Test parse(render(P)) = P."""
    assert parse_program(render_program(mh_not_cumulative)) == mh_not_cumulative


def test_accessors():
    """Test Atoms, Heads and Facts."""
    rule = Rule.make("a", [Literal("b", True)])
    assert atoms(rule) == {"a", "b"}
    assert heads(parse_program(WFS_REMAINDER)) == {"a", "b", "c", "d", "e"}
    program = parse_program("a.\nb :- not a.")
    assert facts(program) == {Rule.fact("a")}


def test_add_facts():
    """Test adding atoms as facts."""
    assert add_facts(Program(), {"a"}) == parse_program("a.")
    assert add_facts(parse_program("a."), {"a"}) == parse_program("a.")
    base = parse_program(WFS_REMAINDER)
    assert add_facts(base, {"a", "b"}) == \
        add_facts(add_facts(base, {"a"}), {"b"})
