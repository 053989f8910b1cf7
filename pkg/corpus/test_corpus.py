"""Golden suite over the embedded corpus and the shipped corpus files."""

from pathlib import Path

import pytest

from program_io.parser import parse_program
from semantics.ids import UnknownSemanticsError
from .corpus import (
    CORPUS,
    corpus_entry,
    corpus_programs,
    dump_corpus,
    load_corpus_dir
)
from .operations import OperationError, matches, run_check, run_operation

DATA_DIR = Path(__file__).resolve().parent.parent / "data"

GOLDEN = [
    pytest.param(entry, operation, arguments, expected,
                 id=f"{entry.name}-{operation}-{'-'.join(map(str, arguments.values()))}")
    for entry in CORPUS
    for operation, arguments, expected in entry.expectations
]


@pytest.mark.parametrize("entry,operation,arguments,expected", GOLDEN)
def test_golden(entry, operation, arguments, expected):
    """Test every stored expectation."""
    actual = run_operation(entry.program, operation, arguments)
    assert matches(expected, actual), actual


def test_corpus_covers_examples():
    """Test the corpus holds every worked example."""
    names = {entry.name for entry in CORPUS}
    assert {"defective_choice", "wfs_remainder", "mh_remainder", "sm_not_cautious",
            "mh_not_cumulative", "picky_agrees", "excessive_model",
            "irregular_model", "sustainable_cycle",
            "nonlocal_hypothesis"} <= names
    assert all(entry.expectations for entry in CORPUS)


@pytest.mark.parametrize("entry", CORPUS, ids=lambda e: e.name)
def test_shipped_files_match(entry):
    """Test data/*.lp holds the embedded programs."""
    shipped = (DATA_DIR / entry.file_name).read_text(encoding="utf-8")
    assert parse_program(shipped) == entry.program


def test_dump_and_load(tmp_path):
    """Test dumping then loading gives the corpus programs back."""
    written = dump_corpus(tmp_path / "out")
    assert len(written) == len(CORPUS)
    loaded = dict(load_corpus_dir(tmp_path / "out"))
    assert loaded == dict(corpus_programs())


def test_load_missing_dir(tmp_path):
    """Test a missing corpus directory."""
    with pytest.raises(FileNotFoundError):
        load_corpus_dir(tmp_path / "missing")


def test_corpus_entry_lookup():
    """Test lookup by name."""
    assert corpus_entry("mh_not_cumulative").name == "mh_not_cumulative"
    with pytest.raises(KeyError):
        corpus_entry("missing_entry")


def test_remainder_system_case():
    """Test system names are case-insensitive."""
    result = run_operation(corpus_entry("wfs_remainder").program, "remainder",
                           {"system": "WFS"})
    assert result == {"system": "wfs", "rules": ["a.", "c."]}


def test_relevant_operation():
    """Test the relevant subprogram is rendered as program text."""
    result = run_operation(corpus_entry("defective_choice").program, "relevant",
                           {"atom": "b"})
    assert result == {"atom": "b", "program": "a :- not b.\nb :- not a.\n"}


def test_operation_errors():
    """Test unknown operations, systems, properties and semantics."""
    program = corpus_entry("defective_choice").program
    with pytest.raises(OperationError):
        run_operation(program, "solve")
    with pytest.raises(OperationError):
        run_operation(program, "remainder", {"system": "lnr"})
    with pytest.raises(OperationError):
        run_operation(program, "models")
    with pytest.raises(OperationError):
        run_check(program, "monotony", "sm")
    with pytest.raises(UnknownSemanticsError):
        run_operation(program, "models", {"semantics": "purple"})


def test_matches():
    """Test expectations match on a key subset."""
    assert matches({"verdict": "x"}, {"verdict": "x", "notes": []})
    assert not matches({"verdict": "x"}, {"verdict": "y"})
    assert not matches({"verdict": "x"}, ["x"])
    assert matches([1, 2], [1, 2])
