"""
Seeded random generator of ground normal programs for the property suites.
"""

import logging
import random
import string
from typing import Iterator, List

from pydantic import BaseModel, ConfigDict, Field

from models.program import Literal, Program, Rule

logger = logging.getLogger(__name__)


class GeneratorConfig(BaseModel):
    """Bounds of a random program; the seed fixes the whole sequence."""
    model_config = ConfigDict(frozen=True)

    atom_count: int = Field(default=4, ge=1, le=26)
    rule_count: int = Field(default=6, ge=0)
    max_body: int = Field(default=2, ge=0)
    negation_probability: float = Field(default=0.5, ge=0.0, le=1.0)
    seed: int = 0

    @property
    def atoms(self) -> List[str]:
        return list(string.ascii_lowercase[:self.atom_count])


def _random_rule(rng: random.Random, config: GeneratorConfig) -> Rule:
    atoms = config.atoms
    head = rng.choice(atoms)
    body = [
        Literal(rng.choice(atoms), rng.random() < config.negation_probability)
        for _ in range(rng.randint(0, config.max_body))
    ]
    return Rule.make(head, body)


def _generate(rng: random.Random, config: GeneratorConfig) -> Program:
    return Program.of(_random_rule(rng, config)
                      for _ in range(config.rule_count))


def generate(config: GeneratorConfig) -> Program:
    """
    Draw one program within the configured bounds.

    Atoms are the first ``atom_count`` lowercase letters. Duplicate rules
    merge, so a program can have fewer than ``rule_count`` rules.
    """
    program = _generate(random.Random(config.seed), config)
    logger.debug("Generated %d rules (seed %d)", len(program), config.seed)
    return program


def program_stream(config: GeneratorConfig, count: int) -> Iterator[Program]:
    """``count`` programs drawn from one generator seeded by ``config.seed``."""
    rng = random.Random(config.seed)
    for _ in range(count):
        yield _generate(rng, config)
