"""Eventually periodic descriptions of suborders of a fragment order."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from enum import Enum
from typing import Dict, Mapping, Optional, Sequence, Tuple, Union


class Uniform(str, Enum):
    """Whole-node selection."""

    FULL = "full"
    EMPTY = "empty"

    def __str__(self) -> str:
        return self.value


FULL = Uniform.FULL
EMPTY = Uniform.EMPTY


@dataclass(frozen=True)
class PeriodicTail:
    """Per-phase selection of pattern summands, repeating every `length` summands.

    Phases without an entry take `fill`. The phase of pattern summand i is
    (i - head length) mod length.
    """

    length: int
    entries: Tuple[Tuple[int, "NodeSpec"], ...] = ()
    fill: Uniform = FULL

    def __post_init__(self) -> None:
        entries = tuple(sorted((int(phase), spec) for phase, spec in self.entries))
        object.__setattr__(self, "entries", entries)
        if self.length <= 0:
            raise ValueError("Periodic tail length must be positive")
        phases = [phase for phase, _ in entries]
        if len(set(phases)) != len(phases):
            raise ValueError("Duplicate phase in periodic tail")
        if phases and (phases[0] < 0 or phases[-1] >= self.length):
            raise ValueError(f"Phases must lie in [0, {self.length})")

    @classmethod
    def of(cls, specs: Sequence["NodeSpec"]) -> "PeriodicTail":
        """Dense tail listing one spec per phase."""
        return cls(len(specs), tuple(enumerate(specs)), EMPTY)

    def at(self, phase: int) -> "NodeSpec":
        return self.lookup.get(phase % self.length, self.fill)

    @cached_property
    def lookup(self) -> Dict[int, "NodeSpec"]:
        return dict(self.entries)


Tail = Union[Uniform, PeriodicTail]


@dataclass(frozen=True)
class SumSpec:
    """Selection inside an infinite sum, by outward summand index.

    Explicit entries override the tail. Under a periodic tail, head summands
    without an explicit entry are selected whole.
    """

    explicit: Tuple[Tuple[int, "NodeSpec"], ...] = ()
    tail: Tail = EMPTY

    def __post_init__(self) -> None:
        explicit = tuple(sorted((int(index), spec) for index, spec in self.explicit))
        object.__setattr__(self, "explicit", explicit)
        indices = [index for index, _ in explicit]
        if len(set(indices)) != len(indices):
            raise ValueError("Duplicate summand index in explicit entries")
        if indices and indices[0] < 0:
            raise ValueError("Summand indices must be non-negative")

    @classmethod
    def of(cls, explicit: Mapping[int, "NodeSpec"], tail: Tail = EMPTY) -> "SumSpec":
        return cls(tuple(explicit.items()), tail)

    @property
    def last_explicit(self) -> int:
        return self.explicit[-1][0] if self.explicit else -1

    def at(self, index: int, head_length: int) -> "NodeSpec":
        found = self.lookup.get(index)
        if found is not None:
            return found
        if isinstance(self.tail, Uniform):
            return self.tail
        if index < head_length:
            return FULL
        return self.tail.at(index - head_length)

    @cached_property
    def lookup(self) -> Dict[int, "NodeSpec"]:
        return dict(self.explicit)


NodeSpec = Union[Uniform, SumSpec]


@dataclass(frozen=True)
class TermSpec:
    """One node spec per part of a term."""

    parts: Tuple[NodeSpec, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "parts", tuple(self.parts))
        if not self.parts:
            raise ValueError("Term spec must have at least one part")

    @classmethod
    def full(cls, size: int) -> "TermSpec":
        return cls((FULL,) * size)

    @classmethod
    def empty(cls, size: int) -> "TermSpec":
        return cls((EMPTY,) * size)

    def part(self, index: int) -> Optional[NodeSpec]:
        return self.parts[index] if index < len(self.parts) else None

    def __len__(self) -> int:
        return len(self.parts)
