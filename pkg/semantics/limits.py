"""
Enumeration caps for the exhaustive subset searches.
"""

from itertools import chain, combinations
from typing import Iterable, Iterator, Tuple

from models.program import Atom

DEFAULT_MAX_ATOMS = 22


class EnumerationLimitError(Exception):
    """Raised when a subset search would exceed the configured atom cap."""
    pass


def check_limit(atoms: Iterable[Atom], max_atoms: int, what: str) -> Tuple[Atom, ...]:
    """
    Return ``atoms`` sorted, or fail when there are more than ``max_atoms``.

    Raises:
        EnumerationLimitError: If the search space is over the cap
    """
    ordered = tuple(sorted(set(atoms)))
    if len(ordered) > max_atoms:
        raise EnumerationLimitError(
            f"{what}: {len(ordered)} atoms exceed the enumeration cap of "
            f"{max_atoms} (raise --max-atoms or LPLAB_MAX_ATOMS)"
        )
    return ordered


def subsets_by_size(atoms: Tuple[Atom, ...],
                    min_size: int = 0) -> Iterator[frozenset]:
    """All subsets of ``atoms``, smallest first, lexicographic within a size."""
    return (
        frozenset(subset) for subset in chain.from_iterable(
            combinations(atoms, k) for k in range(min_size, len(atoms) + 1)
        )
    )
