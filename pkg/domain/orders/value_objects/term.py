"""Term value objects for the finitely presentable scattered-order fragment."""

from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Optional, Tuple, Union


class HTermKind(str, Enum):
    """Kind of an ha term."""

    SINGLETON = "singleton"
    OMEGA_SUM = "omega_sum"
    OMEGA_STAR_SUM = "omega_star_sum"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Singleton:
    """The one-point order."""

    @property
    def kind(self) -> HTermKind:
        return HTermKind.SINGLETON

    @property
    def is_infinite(self) -> bool:
        return False

    def __str__(self) -> str:
        return "1"


class _InfiniteSum(ABC):
    """Summand access shared by OmegaSum and OmegaStarSum.

    Summands are addressed by their *outward* index: counted from the left end
    for an OmegaSum and from the right end for an OmegaStarSum.
    """

    head: Tuple["HTerm", ...]
    pattern: Tuple["HTerm", ...]

    def _freeze(self) -> None:
        object.__setattr__(self, "head", tuple(self.head))
        object.__setattr__(self, "pattern", tuple(self.pattern))
        if not self.pattern:
            raise ValueError("Pattern cannot be empty")

    @property
    def is_infinite(self) -> bool:
        return True

    @property
    @abstractmethod
    def kind(self) -> HTermKind:
        """Which infinite sum this is."""

    @property
    @abstractmethod
    def outward_head(self) -> Tuple["HTerm", ...]:
        """Head summands in outward order."""

    @property
    @abstractmethod
    def outward_pattern(self) -> Tuple["HTerm", ...]:
        """One period of the pattern in outward order."""

    @property
    def head_length(self) -> int:
        return len(self.head)

    @property
    def pattern_length(self) -> int:
        return len(self.pattern)

    def summand(self, index: int) -> "HTerm":
        if index < 0:
            raise IndexError(f"Summand index must be non-negative, got {index}")
        head = self.outward_head
        if index < len(head):
            return head[index]
        return self.outward_pattern[(index - len(head)) % len(self.pattern)]

    def phase(self, index: int) -> Optional[int]:
        """Pattern phase of a summand index, or None inside the head."""
        if index < len(self.head):
            return None
        return (index - len(self.head)) % len(self.pattern)

    def find_pattern_index(
        self, start: int, accepts: Callable[["HTerm"], bool]
    ) -> Optional[int]:
        """Least pattern index >= start whose summand is accepted."""
        first = max(start, len(self.head))
        for index in range(first, first + len(self.pattern)):
            if accepts(self.summand(index)):
                return index
        return None


@dataclass(frozen=True)
class OmegaSum(_InfiniteSum):
    """ω-indexed sum: head[0] + head[1] + ... followed by the pattern repeated."""

    head: Tuple["HTerm", ...]
    pattern: Tuple["HTerm", ...]

    def __post_init__(self) -> None:
        self._freeze()

    @property
    def kind(self) -> HTermKind:
        return HTermKind.OMEGA_SUM

    @property
    def outward_head(self) -> Tuple["HTerm", ...]:
        return self.head

    @property
    def outward_pattern(self) -> Tuple["HTerm", ...]:
        return self.pattern

    def __str__(self) -> str:
        if not self.head and self.pattern == (SINGLETON,):
            return "w"
        inner = _join(self.pattern)
        if self.head:
            inner = f"{_join(self.head)}; {inner}"
        return f"w[{inner}]"


@dataclass(frozen=True)
class OmegaStarSum(_InfiniteSum):
    """ω*-indexed sum: the pattern repeated leftwards, then the head at the right end.

    Both sequences are listed left to right as they appear in the order.
    """

    pattern: Tuple["HTerm", ...]
    head: Tuple["HTerm", ...]

    def __post_init__(self) -> None:
        self._freeze()

    @property
    def kind(self) -> HTermKind:
        return HTermKind.OMEGA_STAR_SUM

    @property
    def outward_head(self) -> Tuple["HTerm", ...]:
        return tuple(reversed(self.head))

    @property
    def outward_pattern(self) -> Tuple["HTerm", ...]:
        return tuple(reversed(self.pattern))

    def __str__(self) -> str:
        if not self.head and self.pattern == (SINGLETON,):
            return "w*"
        inner = _join(self.pattern)
        if self.head:
            inner = f"{inner}; {_join(self.head)}"
        return f"w*[{inner}]"


HTerm = Union[Singleton, OmegaSum, OmegaStarSum]
InfiniteSum = Union[OmegaSum, OmegaStarSum]

SINGLETON = Singleton()
OMEGA = OmegaSum((), (SINGLETON,))
OMEGA_STAR = OmegaStarSum((SINGLETON,), ())


def _join(items: Tuple["HTerm", ...]) -> str:
    return ", ".join(str(item) for item in items)


def omega_tower(depth: int) -> HTerm:
    """The ω-tower of the given depth: 1, w, w[w], w[w[w]], ..."""
    if depth < 0:
        raise ValueError("Tower depth cannot be negative")
    term: HTerm = SINGLETON
    for _ in range(depth):
        term = OmegaSum((), (term,))
    return term


def tower_depth(term: HTerm) -> Optional[int]:
    """Depth of a homogeneous ω-tower or ω*-tower, None for anything else."""
    depth = 0
    kind: Optional[HTermKind] = None
    node = term
    while not isinstance(node, Singleton):
        if node.head or len(node.pattern) != 1:
            return None
        if kind is not None and node.kind != kind:
            return None
        kind = node.kind
        node = node.pattern[0]
        depth += 1
    return depth


@dataclass(frozen=True)
class Term:
    """Finite concatenation of ha terms, left to right."""

    parts: Tuple[HTerm, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "parts", tuple(self.parts))
        if not self.parts:
            raise ValueError("Term must have at least one part")

    @classmethod
    def of(cls, *parts: HTerm) -> "Term":
        return cls(tuple(parts))

    @property
    def is_finite(self) -> bool:
        return not any(part.is_infinite for part in self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __str__(self) -> str:
        return " + ".join(str(part) for part in self.parts)
