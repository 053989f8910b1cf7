"""
Embedded corpus of example programs with their expected results.

Each entry carries the program text and a list of expectations
``(operation, arguments, expected JSON)`` evaluated through
``corpus.operations.run_operation``. The same texts ship as ``data/*.lp``.
"""

import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Tuple

from models.program import Program
from program_io.parser import parse_program

logger = logging.getLogger(__name__)

Expectation = Tuple[str, Dict[str, Any], Any]

FAILS = {"verdict": "fails-on-instance"}
HOLDS = {"verdict": "holds-on-instance"}


@dataclass(frozen=True)
class CorpusEntry:
    """A named program with the results it is known to produce."""
    name: str
    text: str
    description: str
    expectations: List[Expectation] = field(default_factory=list)

    @property
    def program(self) -> Program:
        return parse_program(self.text)

    @property
    def file_name(self) -> str:
        return f"{self.name}.lp"


DEFECTIVE_CHOICE = """\
% Defective segment for stable models.
a :- not b.
b :- not a.
c :- a.
c :- not c.
"""

NO_STABLE_MODEL = """\
% Upper part of defective_choice over the segment model {b}.
c :- a.
c :- not c.
b.
"""

WFS_REMAINDER = """\
% Well-founded remainder computation.
a :- not f.
a :- not b.
b :- not a.
c :- a.
d :- f.
e :- d.
d :- e.
"""

SM_NOT_CAUTIOUS = """\
% Stable models are not cautiously monotonic.
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

MH_NOT_CUMULATIVE = """\
% Minimal hypotheses fail cautious monotony and cut on S = {u}.
u :- b.
u :- c.
t :- a.
t :- h.
a :- not b.
b :- not c.
c :- h, u.
h :- not h, not t.
"""

EXCESSIVE_MODEL = """\
% The model {a, u, p} is excessive at T = 2.
a :- not b.
b :- not a.
u :- a.
u :- b.
p :- not p, not u.
q :- not q, not p.
"""

IRREGULAR_MODEL = """\
% The model {a, b} is irregular at T = 1.
a :- not b.
b :- not a.
p :- not p, not a.
q :- not q, not b.
"""

SUSTAINABLE_CYCLE = """\
% Every minimal affix holds a hypothesis that the other one makes false.
a :- not a, not c.
b :- not b, not a.
c :- not c, not b.
"""

NONLOCAL_HYPOTHESIS = """\
% c is negated only in the rule for q; the model {c, y} is irregular at T = 1.
x :- not x, not y.
y :- c.
c :- x.
q :- not c.
"""

CAUTIOUS_MODELS = [{"true": ["a", "c", "d", "k"]}, {"true": ["b", "d", "s"]}]

CORPUS: Tuple[CorpusEntry, ...] = (
    CorpusEntry("defective_choice", DEFECTIVE_CHOICE,
                "defective segment at T = 1", [
        ("models", {"semantics": "sm"}, {"models": [{"true": ["a", "c"]}]}),
        ("models", {"semantics": "mh"}, {"models": [
            {"true": ["a", "c"], "affix": ["a"]},
            {"true": ["b", "c"], "affix": ["b", "c"]},
        ]}),
        ("layers", {}, {
            "layers": {"a :- not b.": 1, "b :- not a.": 1,
                       "c :- a.": 2, "c :- not c.": 3},
            "segments": [1, 3],
        }),
        ("check", {"property": "defectivity", "semantics": "sm"}, FAILS),
        ("check", {"property": "relevance", "semantics": "sm"}, FAILS),
        ("models", {"semantics": "picky"}, {"models": []}),
        ("models", {"semantics": "green"}, {"models": [
            {"true": ["a", "c"]}, {"true": ["b", "c"]}
        ]}),
        ("check", {"property": "relevance", "semantics": "green"}, HOLDS),
    ]),
    CorpusEntry("no_stable_model", NO_STABLE_MODEL,
                "program without stable models", [
        ("models", {"semantics": "sm"}, {"models": []}),
        ("kernel", {"semantics": "sm"}, {"kernel": None}),
        ("wfm", {}, {"true": ["b"], "false": ["a"], "undef": ["c"]}),
    ]),
    CorpusEntry("wfs_remainder", WFS_REMAINDER, "well-founded remainder", [
        ("remainder", {"system": "wfs"}, {"rules": ["a.", "c."]}),
        ("wfm", {}, {"true": ["a", "c"], "false": ["b", "d", "e", "f"],
                     "undef": []}),
    ]),
    CorpusEntry("mh_remainder", WFS_REMAINDER, "layered remainder and MH", [
        ("remainder", {"system": "mh"},
         {"rules": ["a :- not b.", "a.", "b :- not a.", "c."]}),
        ("models", {"semantics": "mh"}, {"models": [
            {"true": ["a", "b", "c"], "affix": ["b"]},
            {"true": ["a", "c"], "affix": ["a"]},
        ]}),
        ("models", {"semantics": "sm"}, {"models": [{"true": ["a", "c"]}]}),
    ]),
    CorpusEntry("sm_not_cautious", SM_NOT_CAUTIOUS, "stable models fail cm", [
        ("models", {"semantics": "sm"}, {"models": CAUTIOUS_MODELS}),
        ("kernel", {"semantics": "sm"}, {"kernel": ["d"]}),
        ("check", {"property": "cm", "semantics": "sm"}, FAILS),
        ("check", {"property": "cut", "semantics": "sm"}, HOLDS),
        ("models", {"semantics": "green"}, {"models": CAUTIOUS_MODELS}),
        ("check", {"property": "cm", "semantics": "green"}, FAILS),
        ("check", {"property": "cm", "semantics": "navy"}, HOLDS),
    ]),
    CorpusEntry("mh_not_cumulative", MH_NOT_CUMULATIVE, "MH fails cm and cut", [
        ("models", {"semantics": "mh"}, {"models": [
            {"true": ["a", "c", "t", "u"], "affix": ["c"]},
            {"true": ["b", "c", "h", "t", "u"], "affix": ["b", "h"]},
            {"true": ["b", "t", "u"], "affix": ["t"]},
        ]}),
        ("kernel", {"semantics": "mh"}, {"kernel": ["t", "u"]}),
        ("check", {"property": "cm", "semantics": "mh"}, FAILS),
        ("check", {"property": "cut", "semantics": "mh"}, FAILS),
    ]),
    CorpusEntry("picky_agrees", SM_NOT_CAUTIOUS, "Picky agrees with SM", [
        ("models", {"semantics": "picky"}, {"models": CAUTIOUS_MODELS}),
    ]),
    CorpusEntry("picky_extended", SM_NOT_CAUTIOUS + "d.\n",
                "Picky after adding the kernel", [
        ("models", {"semantics": "picky"}, {"models": CAUTIOUS_MODELS + [
            {"true": ["c", "d", "s"]}
        ]}),
        ("models", {"semantics": "green"}, {"models": CAUTIOUS_MODELS + [
            {"true": ["c", "d", "s"]}
        ]}),
    ]),
    CorpusEntry("excessive_model", EXCESSIVE_MODEL,
                "excessive model", [
        ("check", {"property": "excessiveness", "semantics": "mh"}, FAILS),
        ("check", {"property": "excessiveness", "semantics": "navy"}, FAILS),
        ("check", {"property": "excessiveness", "semantics": "blue"}, HOLDS),
        ("models", {"semantics": "blue"}, {"models": [
            {"true": ["a", "q", "u"]}, {"true": ["b", "q", "u"]}
        ]}),
    ]),
    CorpusEntry("irregular_model", IRREGULAR_MODEL,
                "irregular model", [
        ("check", {"property": "irregularity", "semantics": "mh"}, FAILS),
        ("check", {"property": "irregularity", "semantics": "cyan"}, HOLDS),
        ("models", {"semantics": "cyan"}, {"models": [
            {"true": ["a", "q"]}, {"true": ["b", "p"]}
        ]}),
        ("models", {"semantics": "mhreg"}, {"models": [
            {"true": ["a", "q"], "affix": ["a", "q"]},
            {"true": ["b", "p"], "affix": ["b", "p"]},
        ]}),
    ]),
    CorpusEntry("sustainable_cycle", SUSTAINABLE_CYCLE,
                "no sustainable hypotheses", [
        ("models", {"semantics": "mh"}, {"models": [
            {"true": ["a", "b"], "affix": ["a", "b"]},
            {"true": ["a", "c"], "affix": ["a", "c"]},
            {"true": ["b", "c"], "affix": ["b", "c"]},
        ]}),
        ("models", {"semantics": "mhsust"}, {"models": []}),
        ("models", {"semantics": "mhsustmin"}, {"models": []}),
        ("models", {"semantics": "sm"}, {"models": []}),
    ]),
    CorpusEntry("nonlocal_hypothesis", NONLOCAL_HYPOTHESIS,
                "hypothesis negated above its segment", [
        ("models", {"semantics": "mh"}, {"models": [
            {"true": ["c", "x", "y"], "affix": ["x"]},
            {"true": ["c", "y"], "affix": ["c"]},
            {"true": ["q", "y"], "affix": ["y"]},
        ]}),
        ("models", {"semantics": "mhsustmin"}, {"models": [
            {"true": ["c", "y"], "affix": ["c"]},
            {"true": ["q", "y"], "affix": ["y"]},
        ]}),
        ("models", {"semantics": "mhreg"}, {"models": [
            {"true": ["c", "x", "y"], "affix": ["x"]},
            {"true": ["q", "y"], "affix": ["y"]},
        ]}),
        ("models", {"semantics": "navy"}, {"models": [
            {"true": ["c", "y"]}, {"true": ["q", "y"]}
        ]}),
        ("check", {"property": "irregularity", "semantics": "mhsust"}, FAILS),
        ("check", {"property": "irregularity", "semantics": "mhloop"}, HOLDS),
    ]),
)


def corpus_entry(name: str) -> CorpusEntry:
    """
    Look up an entry by name.

    Raises:
        KeyError: If no entry has that name
    """
    for entry in CORPUS:
        if entry.name == name:
            return entry
    raise KeyError(f"No corpus entry named '{name}'")


def corpus_programs() -> List[Tuple[str, Program]]:
    """Named programs in corpus order, ready for ``classify``."""
    return [(entry.name, entry.program) for entry in CORPUS]


def load_corpus_dir(directory: Path) -> List[Tuple[str, Program]]:
    """
    Read every ``*.lp`` file of a directory, sorted by name.

    Raises:
        FileNotFoundError: If the directory does not exist
    """
    directory = Path(directory)
    if not directory.is_dir():
        raise FileNotFoundError(f"Corpus directory not found: {directory}")
    programs = [
        (path.stem, parse_program(path.read_text(encoding="utf-8")))
        for path in sorted(directory.glob("*.lp"))
    ]
    logger.info("Loaded %d programs from %s", len(programs), directory)
    return programs


def dump_corpus(directory: Path) -> List[Path]:
    """Write every corpus entry as ``<name>.lp`` into ``directory``."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    written = []
    for entry in CORPUS:
        path = directory / entry.file_name
        path.write_text(entry.text, encoding="utf-8")
        written.append(path)
    logger.info("Wrote %d corpus files to %s", len(written), directory)
    return written
