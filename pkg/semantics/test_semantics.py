"""Tests for the model-producing semantics."""

import pytest

from models.model_set import ModelSet
from models.program import Interpretation3V, Program
from program_io.parser import parse_program
from .affix import affix_candidates, hyps, is_sustainable, mh_family_models
from .classical import (
    blue_models,
    classical_models,
    cyan_models,
    green_models,
    navy_models,
    unsupported_atoms
)
from .ids import SemanticsId, UnknownSemanticsError, resolve_semantics
from .limits import EnumerationLimitError
from .picky import picky_models
from .registry import compute_models
from .stable import stable_models

MH_REMAINDER = """
a :- not f.
a :- not b.
b :- not a.
c :- a.
d :- f.
e :- d.
d :- e.
"""

DEFECTIVE_CHOICE = "a :- not b.\nb :- not a.\nc :- a.\nc :- not c.\n"

SM_NOT_CAUTIOUS = """
a :- not b, not s.
b :- not a, not c.
c :- not b, not k.
d :- b.
d :- not d.
s :- not a, d.
d :- a.
c :- k.
k :- a, d.
"""

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

EXCESSIVE = """
a :- not b.
b :- not a.
u :- a.
u :- b.
p :- not p, not u.
q :- not q, not p.
"""

IRREGULAR = """
a :- not b.
b :- not a.
p :- not p, not a.
q :- not q, not b.
"""


SUSTAINABLE_CYCLE = """
a :- not a, not c.
b :- not b, not a.
c :- not c, not b.
"""

NONLOCAL_HYPOTHESIS = """
x :- not x, not y.
y :- c.
c :- x.
q :- not c.
"""


def positives(models: ModelSet) -> set:
    return {frozenset(m.positive) for m in models}


def with_affixes(models: ModelSet) -> set:
    return {(frozenset(m.positive), frozenset(m.affix)) for m in models}


def fs(*atoms: str) -> frozenset:
    return frozenset(atoms)


@pytest.fixture
def mh_remainder():
    """Provide the MH computation example."""
    return parse_program(MH_REMAINDER)


@pytest.fixture
def sm_not_cautious():
    """Provide the stable-model cumulativity example."""
    return parse_program(SM_NOT_CAUTIOUS)


@pytest.fixture
def mh_not_cumulative():
    """Provide the MH cumulativity example."""
    return parse_program(MH_NOT_CUMULATIVE)


@pytest.fixture
def irregular():
    """Provide the irregularity example."""
    return parse_program(IRREGULAR)


@pytest.fixture
def excessive():
    """Provide the excessiveness example."""
    return parse_program(EXCESSIVE)


def test_semantics_ids():
    """Test operation sets and family tags."""
    assert SemanticsId.MH_LS.op_set != SemanticsId.MH.op_set
    assert SemanticsId.NAVY.op_set == SemanticsId.SM.op_set
    assert SemanticsId.SM.families == ("ASM^h", "ASM^m")
    assert SemanticsId.MH_SUST_MIN.in_asm_m
    assert not SemanticsId.PICKY.is_asm
    assert resolve_semantics("MH_LS") is SemanticsId.MH_LS
    with pytest.raises(UnknownSemanticsError):
        resolve_semantics("blurple")


def test_stable_models_simple():
    """Test stable models of small programs."""
    assert not stable_models(parse_program("a :- not a."))
    assert positives(stable_models(parse_program(DEFECTIVE_CHOICE))) == {fs("a", "c")}
    assert positives(stable_models(parse_program("a :- not b.\nb :- not a."))) \
        == {fs("a"), fs("b")}


def test_stable_models_sm_not_cautious(sm_not_cautious):
    """Test the stable models before and after adding the kernel."""
    expected = {fs("a", "c", "d", "k"), fs("b", "d", "s")}
    assert positives(stable_models(sm_not_cautious)) == expected
    assert positives(stable_models(sm_not_cautious, prune=False)) == expected
    assert positives(stable_models(sm_not_cautious.add_facts({"d"}))) == \
        expected | {fs("c", "d", "s")}


def test_stable_models_are_total(sm_not_cautious):
    """Test every stable model covers the Herbrand base."""
    for model in stable_models(sm_not_cautious):
        assert model.interpretation.is_total
        assert model.interpretation.universe == sm_not_cautious.atoms()


def test_enumeration_limit():
    """Test the atom cap stops oversized searches."""
    program = parse_program("a :- not b.\nb :- not a.\nc :- not d.\nd :- not c.")
    with pytest.raises(EnumerationLimitError):
        stable_models(program, max_atoms=3)
    with pytest.raises(EnumerationLimitError):
        classical_models(program, max_atoms=2)


def test_hyps(mh_remainder, irregular):
    """Test the assumable hypotheses sets."""
    assert hyps(mh_remainder) == {"a", "b"}
    assert hyps(parse_program("a.\nc :- a.")) == frozenset()
    assert hyps(irregular) == {"a", "b", "p", "q"}
    assert hyps(irregular, SemanticsId.MH_LOOP) == {"a", "b", "p", "q"}


def test_hyps_loop_restriction():
    """Test MH_LOOP drops atoms only negated outside loops."""
    program = parse_program("a :- not b.\nb :- not a.\nc :- not a.")
    assert hyps(program) == {"a", "b"}
    assert hyps(parse_program("c :- not d.\nd :- not e.\ne :- not e.")) == \
        {"d", "e"}
    assert hyps(parse_program("c :- not d.\nd :- not e.\ne :- not e."),
                SemanticsId.MH_LOOP) == {"e"}


def test_affix_candidates(mh_remainder, irregular):
    """Test candidates are total with their affix."""
    found = with_affixes(affix_candidates(mh_remainder, hyps(mh_remainder)))
    assert (fs("a", "c"), fs("a")) in found
    assert (fs("a", "b", "c"), fs("b")) in found
    irregular_found = with_affixes(affix_candidates(irregular, hyps(irregular)))
    assert {(fs("a", "b"), fs("a", "b")), (fs("a", "q"), fs("a", "q")),
            (fs("b", "p"), fs("b", "p"))} <= irregular_found
    assert all(affix != fs("a") for _, affix in irregular_found)


def test_affix_candidates_without_hyps():
    """Test the empty affix is the only candidate for stratified programs."""
    candidates = affix_candidates(parse_program("a.\nc :- a."), frozenset())
    assert len(candidates) == 1
    assert candidates[0].affix == frozenset()
    assert candidates[0].positive == {"a", "c"}


def test_mh_two_models(mh_remainder):
    """Test the two MH models of the computation example."""
    models = compute_models(mh_remainder, SemanticsId.MH)
    assert with_affixes(models) == {
        (fs("a", "c"), fs("a")),
        (fs("a", "b", "c"), fs("b"))
    }
    assert positives(compute_models(mh_remainder, SemanticsId.SM)) == \
        {fs("a", "c")}


def test_mh_defective_choice():
    """Test MH adds a model where stable models have a single one."""
    models = mh_family_models(parse_program(DEFECTIVE_CHOICE))
    assert with_affixes(models) == {
        (fs("a", "c"), fs("a")),
        (fs("b", "c"), fs("b", "c"))
    }
    assert models.kernel() == {"c"}


@pytest.mark.parametrize("sem", [
    SemanticsId.MH, SemanticsId.MH_LS, SemanticsId.MH_LOOP,
    SemanticsId.MH_SUST, SemanticsId.MH_REG
])
def test_mh_family_mh_not_cumulative(mh_not_cumulative, sem):
    """Test the three MH models and their kernel."""
    models = compute_models(mh_not_cumulative, sem)
    assert with_affixes(models) == {
        (fs("a", "c", "t", "u"), fs("c")),
        (fs("b", "c", "h", "t", "u"), fs("b", "h")),
        (fs("b", "t", "u"), fs("t"))
    }
    assert models.kernel() == {"t", "u"}


@pytest.mark.parametrize("sem", [
    SemanticsId.MH, SemanticsId.MH_LS, SemanticsId.MH_LOOP
])
def test_mh_family_mh_not_cumulative_with_kernel(mh_not_cumulative, sem):
    """Test the models after adding u as a fact."""
    models = compute_models(mh_not_cumulative.add_facts({"u"}), sem)
    assert with_affixes(models) == {
        (fs("a", "c", "t", "u"), fs("c")),
        (fs("a", "c", "h", "t", "u"), fs("h")),
        (fs("b", "t", "u"), fs("t"))
    }


def test_mh_family_irregular(irregular):
    """Test the sustainable and regular variants drop N = {a, b}."""
    assert with_affixes(compute_models(irregular, SemanticsId.MH)) == {
        (fs("a", "b"), fs("a", "b")),
        (fs("a", "q"), fs("a", "q")),
        (fs("b", "p"), fs("b", "p"))
    }
    for sem in (SemanticsId.MH_SUST, SemanticsId.MH_SUST_MIN,
                SemanticsId.MH_REG):
        assert positives(compute_models(irregular, sem)) == \
            {fs("a", "q"), fs("b", "p")}


def test_sustainability(irregular):
    """Test a hypothesis defined by the other ones is not sustainable."""
    by_positive = {m.positive: m for m in mh_family_models(irregular)}
    assert not is_sustainable(irregular, by_positive[fs("a", "b")])
    assert is_sustainable(irregular, by_positive[fs("a", "q")])


def test_mh_excessive(excessive):
    """Test the four MH models of the excessiveness example."""
    assert with_affixes(compute_models(excessive, SemanticsId.MH)) == {
        (fs("a", "p", "u"), fs("a", "p")),
        (fs("a", "q", "u"), fs("a", "q")),
        (fs("b", "p", "u"), fs("b", "p")),
        (fs("b", "q", "u"), fs("b", "q"))
    }


def test_classical_models():
    """Test rules read as implications."""
    models = classical_models(parse_program("a :- not b."))
    assert positives(models) == {fs("a"), fs("b"), fs("a", "b")}
    assert positives(classical_models(parse_program("a."))) == {fs("a")}


def test_classical_models_irregular(irregular):
    """Test supersets of classical models stay models here."""
    found = positives(classical_models(irregular))
    assert {fs("a", "b"), fs("a", "q"), fs("b", "p"),
            fs("a", "b", "p", "q")} <= found


def test_navy(mh_remainder, irregular, excessive):
    """Test minimal models of the WFS remainder."""
    assert positives(navy_models(mh_remainder)) == {fs("a", "c")}
    assert positives(navy_models(irregular)) == \
        {fs("a", "b"), fs("a", "q"), fs("b", "p")}
    assert positives(navy_models(excessive)) == {
        fs("a", "p", "u"), fs("a", "q", "u"),
        fs("b", "p", "u"), fs("b", "q", "u")
    }
    assert positives(navy_models(Program())) == {fs()}


def test_navy_erased_atoms_are_false(mh_remainder):
    """Test atoms removed by reduction are false in every model."""
    for model in navy_models(mh_remainder):
        assert model.interpretation.false_set == {"b", "d", "e", "f"}


def test_unsupported_atoms(irregular):
    """Test classically unsupported atoms."""
    universe = irregular.atoms()
    assert unsupported_atoms(parse_program("a."),
                             Interpretation3V.total({"a"}, {"a"})) == frozenset()
    assert unsupported_atoms(
        irregular, Interpretation3V.total({"a", "b"}, universe)) == {"a", "b"}
    assert unsupported_atoms(
        irregular, Interpretation3V.total({"a", "q"}, universe)) == {"q"}


def test_green(irregular, excessive):
    """Test Green keeps models with minimal unsupported sets."""
    assert positives(green_models(irregular)) == \
        {fs("a", "b"), fs("a", "q"), fs("b", "p")}
    assert fs("a", "p", "u") in positives(green_models(excessive))
    assert positives(green_models(parse_program("a.\nc :- a."))) == \
        {fs("a", "c")}


def test_green_compares_dependent_models(sm_not_cautious):
    """Test Green only discards a model below a newly supported atom."""
    assert positives(green_models(parse_program(DEFECTIVE_CHOICE))) == \
        {fs("a", "c"), fs("b", "c")}
    assert positives(green_models(sm_not_cautious)) == \
        {fs("a", "c", "d", "k"), fs("b", "d", "s")}
    extended = parse_program(SM_NOT_CAUTIOUS + "d.\n")
    assert fs("c", "d", "s") in positives(green_models(extended))


def test_mh_sust_without_models():
    """Test every minimal affix of the cycle is unsustainable."""
    program = parse_program(SUSTAINABLE_CYCLE)
    assert with_affixes(mh_family_models(program)) == {
        (fs("a", "b"), fs("a", "b")),
        (fs("a", "c"), fs("a", "c")),
        (fs("b", "c"), fs("b", "c")),
    }
    for sem in (SemanticsId.MH_SUST, SemanticsId.MH_SUST_MIN):
        assert not mh_family_models(program, sem)
    assert positives(green_models(program)) == \
        positives(mh_family_models(program))


def test_mh_sust_nonlocal_hypothesis():
    """Test sustainable models of a hypothesis negated outside its loop."""
    program = parse_program(NONLOCAL_HYPOTHESIS)
    assert hyps(program) == {"c", "x", "y"}
    assert with_affixes(mh_family_models(program, SemanticsId.MH_SUST)) == {
        (fs("c", "x", "y"), fs("x")),
        (fs("c", "y"), fs("c")),
        (fs("q", "y"), fs("y")),
    }
    assert with_affixes(
        mh_family_models(program, SemanticsId.MH_SUST_MIN)) == {
        (fs("c", "y"), fs("c")),
        (fs("q", "y"), fs("y")),
    }
    assert positives(mh_family_models(program, SemanticsId.MH_REG)) == \
        {fs("c", "x", "y"), fs("q", "y")}


def test_blue(irregular, excessive):
    """Test the kernel iteration of Blue."""
    assert blue_models(irregular) == navy_models(irregular)
    assert positives(blue_models(excessive)) == \
        {fs("a", "q", "u"), fs("b", "q", "u")}
    assert positives(blue_models(parse_program("a."))) == {fs("a")}


def test_cyan(irregular):
    """Test Cyan keeps only regular models."""
    assert positives(cyan_models(irregular)) == {fs("a", "q"), fs("b", "p")}
    assert positives(cyan_models(parse_program("a."))) == {fs("a")}


def test_picky(sm_not_cautious):
    """Test Picky on the cumulativity example."""
    assert picky_models(sm_not_cautious) == stable_models(sm_not_cautious)
    assert len(picky_models(sm_not_cautious.add_facts({"d"}))) == 3
    assert not picky_models(parse_program("a :- not a."))


def test_picky_rejects_kernel_change():
    """Test Picky drops all models when an added kernel atom moves the kernel."""
    program = parse_program(DEFECTIVE_CHOICE)
    assert stable_models(program.add_facts({"c"})).kernel() == {"c"}
    assert not picky_models(program)


@pytest.mark.parametrize("sem", list(SemanticsId))
def test_empty_program(sem):
    """Test every semantics gives the empty program one empty model."""
    assert positives(compute_models(Program(), sem)) == {fs()}


@pytest.mark.parametrize("sem", [s for s in SemanticsId if s.is_asm])
def test_conservative_extension(mh_remainder, sm_not_cautious, mh_not_cumulative,
                                irregular, excessive, sem):
    """Test every stable model is a model of each extension of SM."""
    for program in (mh_remainder, sm_not_cautious, mh_not_cumulative, irregular,
                    excessive, parse_program(DEFECTIVE_CHOICE)):
        assert positives(stable_models(program)) <= \
            positives(compute_models(program, sem))


def test_compute_models_by_name(mh_remainder):
    """Test CLI names dispatch like identifiers."""
    assert compute_models(mh_remainder, "mh") == \
        compute_models(mh_remainder, SemanticsId.MH)
    with pytest.raises(UnknownSemanticsError):
        compute_models(mh_remainder, "nope")
