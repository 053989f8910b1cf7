"""
Command-line front end for the logic program semantics lab.
Parses programs, computes remainders, models and property reports.
"""

import argparse
import json
import logging
import os
import random
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Any, List, Optional

from dotenv import load_dotenv
from rich.console import Console
from rich.table import Table

from corpus.corpus import (
    CORPUS,
    corpus_entry,
    corpus_programs,
    dump_corpus,
    load_corpus_dir
)
from corpus.generator import GeneratorConfig, program_stream
from corpus.operations import CHECKS, OperationError, run_check, run_operation
from models.program import Program, ProgramError, format_atoms
from program_io.parser import ProgramSyntaxError, parse_program, render_program
from properties.bridges import WitnessError
from properties.classifier import PROPERTIES, ClassificationError, classify
from reduction.operations import PRESETS, OpSetError
from reduction.remainder import remainder
from rule_graph.layering import NotASegmentError
from semantics.ids import SemanticsId, UnknownSemanticsError, resolve_semantics
from semantics.limits import DEFAULT_MAX_ATOMS, EnumerationLimitError

logger = logging.getLogger(__name__)

LAB_ERRORS = (
    ProgramSyntaxError, ProgramError, NotASegmentError, EnumerationLimitError,
    UnknownSemanticsError, OperationError, ClassificationError, WitnessError,
    OpSetError, FileNotFoundError, KeyError, ValueError
)


@dataclass
class LabConfig:
    """Configuration for the command line."""
    max_atoms: int = DEFAULT_MAX_ATOMS
    log_level: str = "WARNING"

    @classmethod
    def from_env(cls) -> 'LabConfig':
        """Load configuration from environment variables."""
        load_dotenv(override=False)

        raw_cap = os.getenv("LPLAB_MAX_ATOMS", str(DEFAULT_MAX_ATOMS))
        try:
            max_atoms = int(raw_cap)
        except ValueError:
            raise ValueError(f"LPLAB_MAX_ATOMS must be an integer, got {raw_cap!r}")
        if max_atoms < 0:
            raise ValueError(f"LPLAB_MAX_ATOMS must not be negative, got {max_atoms}")

        log_level = os.getenv("LPLAB_LOG_LEVEL", "WARNING").upper()
        if not isinstance(logging.getLevelName(log_level), int):
            raise ValueError(f"LPLAB_LOG_LEVEL is not a logging level: {log_level!r}")

        return cls(max_atoms=max_atoms, log_level=log_level)


class UsageError(Exception):
    """Raised for invalid command-line usage."""
    pass


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message: str) -> None:
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    """Build the argument parser with one subcommand per operation."""
    common = _ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true",
                        help="Print JSON instead of text")
    common.add_argument("--max-atoms", type=int, default=None,
                        help="Enumeration cap (overrides LPLAB_MAX_ATOMS)")
    common.add_argument("--seed", type=int, default=None,
                        help="Seed for randomized operations")

    parser = _ArgumentParser(
        prog="lplab",
        description="Two-valued semantics lab for ground normal logic programs."
    )
    commands = parser.add_subparsers(dest="command", required=True)

    def command(name: str, text: str) -> argparse.ArgumentParser:
        return commands.add_parser(name, parents=[common], help=text,
                                   description=text)

    def file_argument(sub: argparse.ArgumentParser) -> None:
        sub.add_argument("file", help="Program file, '-' for standard input")

    def semantics_argument(sub: argparse.ArgumentParser) -> None:
        sub.add_argument("--semantics", required=True,
                         help=f"One of: {', '.join(s.value for s in SemanticsId)}")

    file_argument(command("parse", "Parse and print a program canonically"))

    sub = command("remainder", "Reduce a program to its remainder")
    sub.add_argument("--system", default="wfs", choices=sorted(PRESETS),
                     help="Reduction system")
    file_argument(sub)

    file_argument(command("wfm", "Well-founded model"))
    file_argument(command("layers", "Rule layering and segment levels"))

    sub = command("relevant", "Relevant subprogram of an atom")
    sub.add_argument("atom", help="The atom")
    file_argument(sub)

    for name, text in (("models", "Models under a semantics"),
                       ("kernel", "Semantic kernel")):
        sub = command(name, text)
        semantics_argument(sub)
        file_argument(sub)

    sub = command("check", "Check one property on a program")
    sub.add_argument("property", choices=list(CHECKS), help="Property")
    semantics_argument(sub)
    file_argument(sub)

    sub = command("classify", "Type vector of a semantics over a corpus")
    semantics_argument(sub)
    sub.add_argument("--corpus", default=None,
                     help="Directory of .lp files (default: embedded corpus)")

    sub = command("corpus", "List, print or dump the embedded corpus")
    sub.add_argument("name", nargs="?", help="Entry to print")
    sub.add_argument("--dump", default=None, help="Write the entries to DIR")

    sub = command("generate", "Generate random programs")
    sub.add_argument("--atoms", type=int, default=4)
    sub.add_argument("--rules", type=int, default=6)
    sub.add_argument("--max-body", type=int, default=2)
    sub.add_argument("--negation", type=float, default=0.5,
                     help="Probability of a default literal")
    sub.add_argument("--count", type=int, default=1)
    return parser


def read_program(source: str) -> Program:
    """Parse a program from a file, or from standard input for '-'."""
    if source == "-":
        return parse_program(sys.stdin.read())
    path = Path(source)
    if not path.is_file():
        raise FileNotFoundError(f"Program file not found: {path}")
    return parse_program(path.read_text(encoding="utf-8"))


class LabCommands:
    """Runs parsed subcommands and writes their output."""

    def __init__(self, config: LabConfig, args: argparse.Namespace,
                 console: Console):
        self.config = config
        self.args = args
        self.console = console
        self.max_atoms = (args.max_atoms if args.max_atoms is not None
                          else config.max_atoms)

    def emit_json(self, data: Any) -> None:
        self.console.out(json.dumps(data, indent=2, ensure_ascii=False),
                         highlight=False)

    def emit_text(self, text: str) -> None:
        self.console.out(text, highlight=False, end="")

    def run(self) -> None:
        handler = getattr(self, f"cmd_{self.args.command}")
        handler()

    def _operation(self, operation: str, **arguments) -> Any:
        program = read_program(self.args.file)
        return program, run_operation(program, operation, arguments,
                                      self.max_atoms)

    def cmd_parse(self) -> None:
        program, data = self._operation("parse")
        if self.args.json:
            self.emit_json(data)
        else:
            self.emit_text(render_program(program))

    def cmd_remainder(self) -> None:
        program = read_program(self.args.file)
        rng = random.Random(self.args.seed) if self.args.seed is not None else None
        reduced = remainder(program, PRESETS[self.args.system], rng)
        if self.args.json:
            self.emit_json({"system": self.args.system,
                            "rules": sorted(str(rule) for rule in reduced)})
        else:
            self.emit_text(render_program(reduced))

    def cmd_wfm(self) -> None:
        _, data = self._operation("wfm")
        if self.args.json:
            self.emit_json(data)
            return
        for part in ("true", "false", "undef"):
            self.console.print(f"{part}: {format_atoms(data[part])}",
                               highlight=False)

    def cmd_layers(self) -> None:
        _, data = self._operation("layers")
        if self.args.json:
            self.emit_json(data)
            return
        table = Table("Layer", "Rule")
        for rule, layer in data["layers"].items():
            table.add_row(str(layer), rule)
        self.console.print(table)
        self.console.print(f"Segments: {data['segments']}", highlight=False)

    def cmd_relevant(self) -> None:
        _, data = self._operation("relevant", atom=self.args.atom)
        if self.args.json:
            self.emit_json(data)
        else:
            self.emit_text(data["program"])

    def cmd_models(self) -> None:
        _, data = self._operation("models", semantics=self.args.semantics)
        if self.args.json:
            self.emit_json(data)
            return
        if not data["models"]:
            self.console.print(f"No {data['semantics']} models", highlight=False)
            return
        table = Table("Model", "Affix", title=f"{data['semantics']} models")
        for model in data["models"]:
            affix = format_atoms(model["affix"]) if "affix" in model else "-"
            table.add_row(format_atoms(model["true"]), affix)
        self.console.print(table)

    def cmd_kernel(self) -> None:
        _, data = self._operation("kernel", semantics=self.args.semantics)
        if self.args.json:
            self.emit_json(data)
        elif data["kernel"] is None:
            self.console.print("Kernel undefined: no models", highlight=False)
        else:
            self.console.print(format_atoms(data["kernel"]), highlight=False)

    def cmd_check(self) -> None:
        program = read_program(self.args.file)
        sem = resolve_semantics(self.args.semantics)
        report = run_check(program, self.args.property, sem, self.max_atoms)
        if self.args.json:
            self.emit_json(report.to_json())
            return
        self.console.print(
            f"{report.property} / {sem.value}: {report.verdict.value}",
            highlight=False
        )
        if report.reason:
            self.console.print(f"  reason: {report.reason}", highlight=False)
        for witness in report.witnesses:
            self.console.print(f"  {witness.kind}: "
                               f"{json.dumps(witness.data, ensure_ascii=False)}",
                               highlight=False, soft_wrap=True)
        for note in report.notes:
            self.console.print(f"  note: {note}", highlight=False)

    def cmd_classify(self) -> None:
        if self.args.corpus:
            programs = load_corpus_dir(Path(self.args.corpus))
        else:
            programs = corpus_programs()
        vector = classify(programs, self.args.semantics, self.max_atoms)
        if self.args.json:
            self.emit_json(vector.to_json())
            return
        table = Table(*PROPERTIES, title=f"{vector.semantics.value} type vector")
        table.add_row(*(vector.status(p).value for p in PROPERTIES))
        self.console.print(table)
        self.console.print(f"Pattern: {vector.pattern()}", highlight=False)
        for problem in vector.inconsistencies:
            self.console.print(f"[red]Inconsistent:[/red] {problem}")

    def cmd_corpus(self) -> None:
        if self.args.dump:
            written = dump_corpus(Path(self.args.dump))
            names = [str(path) for path in written]
            if self.args.json:
                self.emit_json({"written": names})
            else:
                self.emit_text("".join(f"{name}\n" for name in names))
            return
        if self.args.name:
            entry = corpus_entry(self.args.name)
            if self.args.json:
                self.emit_json({"name": entry.name,
                                "description": entry.description,
                                "program": entry.text,
                                "expectations": [
                                    {"operation": op, "arguments": args,
                                     "expected": expected}
                                    for op, args, expected in entry.expectations
                                ]})
            else:
                self.emit_text(entry.text)
            return
        if self.args.json:
            self.emit_json([{"name": e.name, "description": e.description}
                            for e in CORPUS])
            return
        table = Table("Name", "Description", "Rules")
        for entry in CORPUS:
            table.add_row(entry.name, entry.description, str(len(entry.program)))
        self.console.print(table)

    def cmd_generate(self) -> None:
        config = GeneratorConfig(
            atom_count=self.args.atoms,
            rule_count=self.args.rules,
            max_body=self.args.max_body,
            negation_probability=self.args.negation,
            seed=self.args.seed or 0
        )
        programs = list(program_stream(config, self.args.count))
        if self.args.json:
            self.emit_json([sorted(str(r) for r in p) for p in programs])
            return
        self.emit_text("".join(
            f"% program {index}\n{render_program(p)}"
            for index, p in enumerate(programs, 1)
        ))


def run(argv: Optional[List[str]] = None) -> int:
    """
    Run the command line.

    Returns:
        0 when the command ran (whatever the verdict), 1 on usage or input errors
    """
    errors = Console(stderr=True, highlight=False)
    try:
        config = LabConfig.from_env()
    except ValueError as e:
        errors.print(f"Error: {e}", markup=False, soft_wrap=True)
        return 1
    logging.basicConfig(
        level=config.log_level,
        format='%(asctime)s - %(levelname)s - %(message)s'
    )

    try:
        args = build_parser().parse_args(argv)
        LabCommands(config, args, Console()).run()
    except SystemExit as e:
        return e.code or 0
    except UsageError as e:
        errors.print(f"Error: {e}", markup=False, soft_wrap=True)
        return 1
    except LAB_ERRORS as e:
        logger.debug("Command failed", exc_info=True)
        message = e.args[0] if isinstance(e, KeyError) and e.args else str(e)
        errors.print(f"Error: {message}", markup=False, soft_wrap=True)
        return 1
    return 0


def main():
    """Main entry point."""
    sys.exit(run())


if __name__ == "__main__":
    main()
