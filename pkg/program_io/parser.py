"""
Text format for ground normal logic programs.

Programs use an ASP-like syntax: ``h :- b1, not b2.`` for rules, ``a.`` for
facts and ``%`` for comments. Parsing is done with a LALR Lark grammar;
rendering produces text that parses back to an equal program.
"""

import logging
import re
from typing import Iterable, List

from lark import Lark, Transformer, v_args
from lark.exceptions import UnexpectedInput

from models.program import Literal, Program, Rule

logger = logging.getLogger(__name__)

PROGRAM_GRAMMAR = r"""
    start: rule*

    rule: ATOM "."                  -> fact
        | ATOM ":-" body "."        -> normal_rule

    body: literal ("," literal)*

    literal: NOT ATOM               -> default_literal
           | ATOM                   -> positive_literal

    NOT.2: /not(?=\s)/
    ATOM: /[a-z][A-Za-z0-9_]*/
    COMMENT: /%[^\n]*/

    %import common.WS
    %ignore WS
    %ignore COMMENT
"""

VARIABLE_PATTERN = re.compile(r"(?<![A-Za-z0-9_])[A-Z][A-Za-z0-9_]*")


class ProgramSyntaxError(Exception):
    """Raised when program text does not follow the grammar."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class NonGroundProgramError(ProgramSyntaxError):
    """Raised when program text contains a variable token."""
    pass


@v_args(inline=True)
class _RuleBuilder(Transformer):
    """Turns the parse tree into rules."""

    def start(self, *rules: Rule) -> List[Rule]:
        return list(rules)

    def fact(self, head) -> Rule:
        return Rule.fact(str(head))

    def normal_rule(self, head, body: List[Literal]) -> Rule:
        return Rule.make(str(head), body)

    def body(self, *literals: Literal) -> List[Literal]:
        return list(literals)

    def default_literal(self, _not, atom) -> Literal:
        return Literal(str(atom), True)

    def positive_literal(self, atom) -> Literal:
        return Literal(str(atom), False)


class ProgramParser:
    """Parser for the program text format."""

    def __init__(self):
        self._parser = Lark(PROGRAM_GRAMMAR, parser='lalr')

    def _reject_variables(self, text: str) -> None:
        for line_no, line in enumerate(text.splitlines(), 1):
            code = line.split("%", 1)[0]
            match = VARIABLE_PATTERN.search(code)
            if match:
                raise NonGroundProgramError(
                    f"non-ground program: variable token {match.group()!r}",
                    line_no,
                    match.start() + 1
                )

    def parse(self, text: str) -> Program:
        """
        Parse program text.

        Args:
            text: Program source

        Returns:
            The program, duplicates merged

        Raises:
            NonGroundProgramError: If an uppercase-initial token occurs
            ProgramSyntaxError: If the text violates the grammar
        """
        self._reject_variables(text)
        try:
            tree = self._parser.parse(text)
        except UnexpectedInput as e:
            summary = (str(e).strip().splitlines() or ["end of input"])[0]
            raise ProgramSyntaxError(
                f"unexpected input: {summary}",
                getattr(e, "line", -1),
                getattr(e, "column", -1)
            )
        rules = _RuleBuilder().transform(tree)
        program = Program.of(rules)
        logger.debug("Parsed %d rules over %d atoms",
                     len(program), len(program.atoms()))
        return program


_default_parser = None


def parse_program(text: str) -> Program:
    """Parse program text with a shared parser instance."""
    global _default_parser
    if _default_parser is None:
        _default_parser = ProgramParser()
    return _default_parser.parse(text)


def render_rules(rules: Iterable[Rule]) -> str:
    return "".join(f"{rule}\n" for rule in rules)


def render_program(program: Program) -> str:
    """Render a program, one rule per line."""
    return render_rules(program.rules)
