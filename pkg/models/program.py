"""
Core representation of finite ground normal logic programs.

A program is a set of rules ``h <- b1, ..., bm, not c1, ..., not cn``.
Atoms are interned strings; rule bodies and programs follow set semantics,
so duplicate literals and duplicate rules are merged on construction.
"""

import re
import sys
from dataclasses import dataclass, field
from typing import FrozenSet, Iterable, Iterator, List, Optional, Tuple, Union

Atom = str
AtomSet = FrozenSet[Atom]

ATOM_PATTERN = re.compile(r"[a-z][A-Za-z0-9_]*")


class ProgramError(Exception):
    """Custom exception for invalid program or interpretation values."""
    pass


def make_atom(symbol: str) -> Atom:
    """
    Validate and intern an atom symbol.

    Args:
        symbol: Token matching ``[a-z][A-Za-z0-9_]*``

    Returns:
        The interned symbol

    Raises:
        ProgramError: If the symbol is not a valid ground atom
    """
    if not ATOM_PATTERN.fullmatch(symbol):
        raise ProgramError(f"Invalid atom symbol: {symbol!r}")
    return sys.intern(symbol)


@dataclass(frozen=True, order=True)
class Literal:
    """A positive literal ``a`` or a default literal ``not a``."""
    atom: Atom
    negated: bool = False

    def __str__(self) -> str:
        return f"not {self.atom}" if self.negated else self.atom


@dataclass(frozen=True)
class Rule:
    """A normal rule; the body is kept as two atom sets."""
    head: Atom
    pos: AtomSet = frozenset()
    neg: AtomSet = frozenset()

    @classmethod
    def make(cls, head: str, body: Iterable[Literal] = ()) -> 'Rule':
        """Build a rule from a literal sequence, merging duplicates."""
        literals = list(body)
        return cls(
            head=make_atom(head),
            pos=frozenset(make_atom(lit.atom) for lit in literals
                          if not lit.negated),
            neg=frozenset(make_atom(lit.atom) for lit in literals
                          if lit.negated)
        )

    @classmethod
    def fact(cls, head: str) -> 'Rule':
        """Build the fact ``head.``"""
        return cls(head=make_atom(head))

    @property
    def body(self) -> Tuple[Literal, ...]:
        """Canonical body: positive literals, then default literals."""
        return (
            tuple(Literal(a) for a in sorted(self.pos))
            + tuple(Literal(a, True) for a in sorted(self.neg))
        )

    @property
    def is_fact(self) -> bool:
        return not self.pos and not self.neg

    @property
    def atoms(self) -> AtomSet:
        return frozenset({self.head}) | self.pos | self.neg

    @property
    def body_atoms(self) -> AtomSet:
        return self.pos | self.neg

    def drop_positive(self, atom: Atom) -> 'Rule':
        return Rule(self.head, self.pos - {atom}, self.neg)

    def drop_negative(self, atom: Atom) -> 'Rule':
        return Rule(self.head, self.pos, self.neg - {atom})

    def with_body(
        self,
        pos: Iterable[Atom] = (),
        neg: Iterable[Atom] = ()
    ) -> 'Rule':
        """Return the rule with extra body literals added."""
        return Rule(self.head, self.pos | frozenset(pos),
                    self.neg | frozenset(neg))

    def __str__(self) -> str:
        if self.is_fact:
            return f"{self.head}."
        body = ", ".join(str(lit) for lit in self.body)
        return f"{self.head} :- {body}."


@dataclass(frozen=True)
class Program:
    """
    An ordered, duplicate-free set of rules.

    Rule indices follow insertion order. Equality and hashing ignore
    order, matching the view of programs as sets of rules.
    """
    rules: Tuple[Rule, ...] = ()
    _rule_set: FrozenSet[Rule] = field(
        default=frozenset(), init=False, repr=False, compare=False
    )

    def __post_init__(self) -> None:
        unique = tuple(dict.fromkeys(self.rules))
        object.__setattr__(self, "rules", unique)
        object.__setattr__(self, "_rule_set", frozenset(unique))

    @classmethod
    def of(cls, rules: Iterable[Rule]) -> 'Program':
        return cls(tuple(rules))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Program):
            return NotImplemented
        return self._rule_set == other._rule_set

    def __hash__(self) -> int:
        return hash(self._rule_set)

    def __iter__(self) -> Iterator[Rule]:
        return iter(self.rules)

    def __len__(self) -> int:
        return len(self.rules)

    def __contains__(self, rule: object) -> bool:
        return rule in self._rule_set

    @property
    def rule_set(self) -> FrozenSet[Rule]:
        return self._rule_set

    def atoms(self) -> AtomSet:
        """Herbrand base of the program."""
        return frozenset(a for rule in self.rules for a in rule.atoms)

    def heads(self) -> AtomSet:
        return frozenset(rule.head for rule in self.rules)

    def facts(self) -> FrozenSet[Rule]:
        return frozenset(rule for rule in self.rules if rule.is_fact)

    def fact_atoms(self) -> AtomSet:
        return frozenset(rule.head for rule in self.rules if rule.is_fact)

    def negated_atoms(self) -> AtomSet:
        return frozenset(a for rule in self.rules for a in rule.neg)

    def union(self, other: Iterable[Rule]) -> 'Program':
        return Program(self.rules + tuple(other))

    def without(self, rule: Rule) -> 'Program':
        return Program(tuple(r for r in self.rules if r != rule))

    def replace(self, old: Rule, new: Rule) -> 'Program':
        """Replace ``old`` by ``new`` in place, merging if ``new`` exists."""
        return Program(tuple(new if r == old else r for r in self.rules))

    def add_facts(self, atoms: Iterable[Atom]) -> 'Program':
        return add_facts(self, atoms)

    def select(self, indices: Iterable[int]) -> 'Program':
        """Subprogram made of the rules at ``indices`` (kept in order)."""
        wanted = set(indices)
        return Program(tuple(
            r for i, r in enumerate(self.rules) if i in wanted
        ))


RuleContainer = Union[Rule, Program, Iterable[Rule]]


def _as_rules(element: RuleContainer) -> List[Rule]:
    if isinstance(element, Rule):
        return [element]
    return list(element)


def atoms(element: RuleContainer) -> AtomSet:
    """All atoms occurring in a rule, rule set or program."""
    return frozenset(a for r in _as_rules(element) for a in r.atoms)


def heads(element: RuleContainer) -> AtomSet:
    return frozenset(r.head for r in _as_rules(element))


def facts(element: RuleContainer) -> FrozenSet[Rule]:
    return frozenset(r for r in _as_rules(element) if r.is_fact)


def body_atoms(rule: Rule) -> AtomSet:
    return rule.body_atoms


def add_facts(program: Program, new_atoms: Iterable[Atom]) -> Program:
    """
    Add one fact per atom, merged as a set.

    Args:
        program: Base program
        new_atoms: Atoms to add as facts

    Returns:
        The program ``P u S``
    """
    extra = tuple(Rule.fact(a) for a in sorted(set(new_atoms)))
    return program.union(extra)


@dataclass(frozen=True)
class Interpretation3V:
    """Partition of a universe of atoms into true, false and undefined."""
    true_set: AtomSet = frozenset()
    false_set: AtomSet = frozenset()
    undef_set: AtomSet = frozenset()

    def __post_init__(self) -> None:
        if (self.true_set & self.false_set
                or self.true_set & self.undef_set
                or self.false_set & self.undef_set):
            raise ProgramError("Interpretation sets must be pairwise disjoint")

    @classmethod
    def total(cls, true_set: Iterable[Atom],
              universe: Iterable[Atom]) -> 'Interpretation3V':
        """Total interpretation over ``universe`` with the given true atoms."""
        positive = frozenset(true_set)
        return cls(positive, frozenset(universe) - positive, frozenset())

    @property
    def universe(self) -> AtomSet:
        return self.true_set | self.false_set | self.undef_set

    @property
    def is_total(self) -> bool:
        return not self.undef_set

    def padded(self, universe: Iterable[Atom],
               as_undefined: bool = False) -> 'Interpretation3V':
        """Extend to a larger universe, new atoms false (or undefined)."""
        extra = frozenset(universe) - self.universe
        if as_undefined:
            return Interpretation3V(self.true_set, self.false_set,
                                    self.undef_set | extra)
        return Interpretation3V(self.true_set, self.false_set | extra,
                                self.undef_set)

    def to_json(self) -> dict:
        return {
            "true": sorted(self.true_set),
            "false": sorted(self.false_set),
            "undef": sorted(self.undef_set)
        }


def format_atoms(atom_set: Optional[Iterable[Atom]]) -> str:
    """Render an atom set as ``{a, b}``."""
    return "{" + ", ".join(sorted(atom_set or ())) + "}"
