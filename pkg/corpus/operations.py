"""
Named operations producing JSON-ready results.

The command line and the golden corpus suite share these, so an expectation
stored with a corpus entry is exactly what ``--json`` prints.
"""

import logging
from typing import Any, Callable, Dict, Mapping, Optional

from models.program import Program
from program_io.parser import render_program
from properties.cumulativity import check_cm_cut
from properties.relevance import check_relevance
from properties.report import PropertyReport, atoms_json
from properties.structural import (
    check_defectivity,
    check_excessiveness,
    check_irregularity
)
from reduction.operations import PRESETS
from reduction.remainder import remainder
from reduction.wellfounded import well_founded_model
from rule_graph.layering import layering, relevant_subprogram
from semantics.ids import SemanticsId, resolve_semantics
from semantics.limits import DEFAULT_MAX_ATOMS
from semantics.registry import compute_models

logger = logging.getLogger(__name__)

Checker = Callable[[Program, SemanticsId, int], PropertyReport]

CHECKS: Dict[str, Checker] = {
    "cm": lambda p, s, n: check_cm_cut(p, s, "cm", n),
    "cut": lambda p, s, n: check_cm_cut(p, s, "cut", n),
    "cumulativity": lambda p, s, n: check_cm_cut(p, s, "cumulativity", n),
    "relevance": check_relevance,
    "defectivity": check_defectivity,
    "excessiveness": check_excessiveness,
    "irregularity": check_irregularity,
}


class OperationError(Exception):
    """Raised for an unknown operation or a missing argument."""
    pass


def rules_json(program: Program) -> list:
    return sorted(str(rule) for rule in program)


def remainder_json(program: Program, system: str) -> Dict[str, Any]:
    ops = PRESETS.get(system.lower())
    if ops is None:
        raise OperationError(
            f"Unknown reduction system '{system}' (known: {', '.join(PRESETS)})"
        )
    return {"system": system.lower(),
            "rules": rules_json(remainder(program, ops))}


def layers_json(program: Program) -> Dict[str, Any]:
    layers = layering(program)
    return {"layers": layers.by_rule(program),
            "segments": list(layers.segment_levels)}


def models_json(program: Program, sem: SemanticsId,
                max_atoms: int) -> Dict[str, Any]:
    return {"semantics": sem.value,
            "models": compute_models(program, sem, max_atoms).to_json()}


def kernel_json(program: Program, sem: SemanticsId,
                max_atoms: int) -> Dict[str, Any]:
    kernel = compute_models(program, sem, max_atoms).kernel()
    return {"semantics": sem.value, "kernel": atoms_json(kernel)}


def run_check(program: Program, prop: str, sem: SemanticsId,
              max_atoms: int = DEFAULT_MAX_ATOMS) -> PropertyReport:
    """
    Run one property checker.

    Raises:
        OperationError: If ``prop`` names no checker
    """
    checker = CHECKS.get(prop)
    if checker is None:
        raise OperationError(
            f"Unknown property '{prop}' (known: {', '.join(CHECKS)})"
        )
    return checker(program, sem, max_atoms)


def run_operation(
    program: Program,
    operation: str,
    arguments: Optional[Mapping[str, Any]] = None,
    max_atoms: int = DEFAULT_MAX_ATOMS
) -> Any:
    """
    Evaluate a named operation on a program.

    Args:
        program: The program
        operation: One of parse, remainder, wfm, layers, relevant, models,
            kernel, check
        arguments: Operation arguments (system, atom, semantics, property)
        max_atoms: Enumeration cap

    Returns:
        The JSON-ready result

    Raises:
        OperationError: If the operation is unknown or lacks an argument
    """
    args = dict(arguments or {})

    def need(key: str) -> Any:
        if key not in args:
            raise OperationError(f"Operation '{operation}' needs '{key}'")
        return args[key]

    logger.debug("Running %s with %s", operation, args)
    if operation == "parse":
        return {"rules": rules_json(program)}
    if operation == "remainder":
        return remainder_json(program, need("system"))
    if operation == "wfm":
        return well_founded_model(program).to_json()
    if operation == "layers":
        return layers_json(program)
    if operation == "relevant":
        atom = need("atom")
        return {"atom": atom,
                "program": render_program(relevant_subprogram(program, atom))}
    if operation == "models":
        return models_json(program, resolve_semantics(need("semantics")),
                           max_atoms)
    if operation == "kernel":
        return kernel_json(program, resolve_semantics(need("semantics")),
                           max_atoms)
    if operation == "check":
        sem = resolve_semantics(need("semantics"))
        return run_check(program, need("property"), sem, max_atoms).to_json()
    raise OperationError(f"Unknown operation '{operation}'")


def matches(expected: Any, actual: Any) -> bool:
    """
    Compare a stored expectation with a result.

    Dictionaries match when every expected key matches; other values must be
    equal.
    """
    if isinstance(expected, dict):
        return isinstance(actual, dict) and all(
            key in actual and matches(value, actual[key])
            for key, value in expected.items()
        )
    return expected == actual
