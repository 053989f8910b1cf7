from enum import Enum

from reduction.operations import MH, MH_LS, WFS, OpSet


class UnknownSemanticsError(Exception):
    """Raised for a semantics name that is not implemented."""
    pass


class SemanticsId(str, Enum):
    """Identifiers of the implemented semantics."""
    SM = "sm"
    MH = "mh"
    MH_LS = "mhls"
    MH_LOOP = "mhloop"
    MH_SUST = "mhsust"
    MH_SUST_MIN = "mhsustmin"
    MH_REG = "mhreg"
    NAVY = "navy"
    BLUE = "blue"
    CYAN = "cyan"
    GREEN = "green"
    PICKY = "picky"

    @property
    def op_set(self) -> OpSet:
        if self is SemanticsId.MH_LS:
            return MH_LS
        if self.is_affix_based:
            return MH
        return WFS

    @property
    def is_affix_based(self) -> bool:
        """True for the minimal hypotheses family."""
        return self in _MH_FAMILY

    @property
    def in_asm_h(self) -> bool:
        return self is SemanticsId.SM or self in _MH_FAMILY

    @property
    def in_asm_m(self) -> bool:
        return self in _ASM_M

    @property
    def is_asm(self) -> bool:
        return self.in_asm_h or self.in_asm_m

    @property
    def families(self) -> tuple:
        tags = []
        if self.in_asm_h:
            tags.append("ASM^h")
        if self.in_asm_m:
            tags.append("ASM^m")
        return tuple(tags)


_MH_FAMILY = frozenset({
    SemanticsId.MH, SemanticsId.MH_LS, SemanticsId.MH_LOOP,
    SemanticsId.MH_SUST, SemanticsId.MH_SUST_MIN, SemanticsId.MH_REG
})

_ASM_M = frozenset({
    SemanticsId.SM, SemanticsId.MH_SUST_MIN, SemanticsId.NAVY,
    SemanticsId.BLUE, SemanticsId.CYAN, SemanticsId.GREEN
})


def resolve_semantics(name: str) -> SemanticsId:
    """
    Look up a semantics by its CLI name (case-insensitive, ``_`` ignored).

    Raises:
        UnknownSemanticsError: If no semantics has that name
    """
    if isinstance(name, SemanticsId):
        return name
    key = name.strip().lower().replace("_", "").replace("-", "")
    for sem in SemanticsId:
        if sem.value == key:
            return sem
    known = ", ".join(s.value for s in SemanticsId)
    raise UnknownSemanticsError(f"Unknown semantics '{name}' (known: {known})")
