"""Minimal decompositions and their block partitions."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple

from domain.orders.value_objects.term import HTerm, Singleton


@dataclass(frozen=True)
class Placement:
    """Position of an original part inside the folded part containing it.

    With `shift` None the original part is the whole node at `prefix`;
    otherwise the node at `prefix` is an infinite sum whose outward summands
    from `shift` on are the summands of the original part.
    """

    part: int
    prefix: Tuple[int, ...] = ()
    shift: Optional[int] = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "prefix", tuple(self.prefix))

    @classmethod
    def base(cls, part: int, term: HTerm) -> "Placement":
        return cls(part, (), None if isinstance(term, Singleton) else 0)

    def nested(self, index: int) -> "Placement":
        return Placement(self.part, (index,) + self.prefix, self.shift)

    def moved(self) -> "Placement":
        """The same placement after one summand is prepended outward at the root."""
        if self.prefix:
            return Placement(self.part, (self.prefix[0] + 1,) + self.prefix[1:], self.shift)
        if self.shift is None:
            raise ValueError("A singleton part cannot host a merge")
        return Placement(self.part, (), self.shift + 1)


@dataclass(frozen=True)
class Decomposition:
    """Partition of a term's parts into consecutive foldable groups."""

    parts: Tuple[HTerm, ...]
    provenance: Tuple[Tuple[int, int], ...]
    placements: Tuple[Tuple[Placement, ...], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "parts", tuple(self.parts))
        object.__setattr__(self, "provenance", tuple(tuple(p) for p in self.provenance))
        object.__setattr__(self, "placements", tuple(tuple(p) for p in self.placements))
        if not self.parts:
            raise ValueError("Decomposition cannot be empty")
        if not (len(self.parts) == len(self.provenance) == len(self.placements)):
            raise ValueError("Parts, provenance and placements must align")

    @property
    def m(self) -> int:
        return len(self.parts)


class BlockKind(str, Enum):
    """Block types of a minimal decomposition."""

    A = "A"
    B = "B"
    C = "C"
    D = "D"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Block:
    """Typed convex group of consecutive decomposition parts, [start, end)."""

    kind: BlockKind
    start: int
    end: int
    parts: Tuple[HTerm, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "parts", tuple(self.parts))
        if self.end - self.start != len(self.parts) or not self.parts:
            raise ValueError("Block range must match its parts")

    @property
    def size(self) -> int:
        return len(self.parts)

    def shifted(self, offset: int) -> "Block":
        return Block(self.kind, self.start + offset, self.end + offset, self.parts)

    def glyphs(self) -> str:
        return "".join(glyph(part) for part in self.parts)

    def __str__(self) -> str:
        return f"{self.kind}{{{self.start}..{self.end - 1}}}"


def glyph(part: HTerm) -> str:
    if isinstance(part, Singleton):
        return "1"
    return "w" if part.kind.value == "omega_sum" else "w*"
