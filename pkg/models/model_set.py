from dataclasses import dataclass
from typing import Iterable, Iterator, List, Optional, Tuple

from models.program import AtomSet, Interpretation3V


@dataclass(frozen=True)
class AffixModel:
    """A total model, optionally carrying its affix (hypotheses set)."""
    interpretation: Interpretation3V
    affix: Optional[AtomSet] = None

    @property
    def positive(self) -> AtomSet:
        return self.interpretation.true_set

    def key(self, with_affix: bool = True) -> tuple:
        """Identity used when comparing model sets."""
        if with_affix and self.affix is not None:
            return (self.positive, self.affix)
        return (self.positive,)

    def sort_key(self) -> Tuple[Tuple[str, ...], Tuple[str, ...]]:
        return (tuple(sorted(self.positive)), tuple(sorted(self.affix or ())))

    def to_json(self) -> dict:
        """Convert the model to the CLI report format; affix only when set."""
        data = {"true": sorted(self.positive)}
        if self.affix is not None:
            data["affix"] = sorted(self.affix)
        return data


class ModelSet:
    """Canonical, duplicate-free and sorted collection of models."""

    def __init__(self, models: Iterable[AffixModel] = ()):
        unique = {(m.positive, m.affix): m for m in models}
        self._models: Tuple[AffixModel, ...] = tuple(
            sorted(unique.values(), key=AffixModel.sort_key)
        )

    def __iter__(self) -> Iterator[AffixModel]:
        return iter(self._models)

    def __len__(self) -> int:
        return len(self._models)

    def __bool__(self) -> bool:
        return bool(self._models)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ModelSet):
            return NotImplemented
        return self._models == other._models

    def __hash__(self) -> int:
        return hash(self._models)

    def __repr__(self) -> str:
        return f"ModelSet({[m.to_json() for m in self._models]})"

    @property
    def models(self) -> Tuple[AffixModel, ...]:
        return self._models

    def positives(self) -> List[AtomSet]:
        """Positive parts in canonical order (may repeat across affixes)."""
        return [m.positive for m in self._models]

    def positive_set(self) -> frozenset:
        return frozenset(self.positives())

    def keys(self, with_affix: bool = True) -> frozenset:
        return frozenset(m.key(with_affix) for m in self._models)

    def filter(self, predicate) -> 'ModelSet':
        return ModelSet(m for m in self._models if predicate(m))

    def to_json(self) -> List[dict]:
        return [m.to_json() for m in self._models]

    def kernel(self) -> Optional[AtomSet]:
        """Intersection of the positive parts, ``None`` for an empty set."""
        if not self._models:
            return None
        return frozenset.intersection(*self.positives())
