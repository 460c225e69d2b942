"""Finitely presented embeddings between fragment orders."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple, Union

from domain.orders.value_objects.address import Address


@dataclass(frozen=True)
class PointMap:
    """Sends the point of a Singleton to the target point at `target`."""

    target: Tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "target", tuple(self.target))
        if any(step < 0 for step in self.target):
            raise ValueError("Target path entries must be non-negative")


@dataclass(frozen=True)
class IntoSummand:
    """Sends a whole infinite sum into the single target summand `index`."""

    index: int
    inner: "Rep"

    def __post_init__(self) -> None:
        if self.index < 0:
            raise ValueError("Summand index must be non-negative")


@dataclass(frozen=True)
class SumMap:
    """Summand-wise map between infinite sums of the same kind.

    Indices are outward (from the left for ω-sums, from the right for ω*-sums).
    Source summand i < N goes to explicit[i]; source summand N + q*Q + r goes
    to periodic[r] shifted by q*stride, where N = len(explicit) and
    Q = len(periodic). Every entry is (target summand index, sub-embedding).
    """

    explicit: Tuple[Tuple[int, "Rep"], ...]
    periodic: Tuple[Tuple[int, "Rep"], ...]
    stride: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "explicit", tuple(tuple(e) for e in self.explicit))
        object.__setattr__(self, "periodic", tuple(tuple(e) for e in self.periodic))
        if not self.periodic:
            raise ValueError("Periodic part cannot be empty")
        if self.stride <= 0:
            raise ValueError("Stride must be positive")
        targets = [t for t, _ in self.explicit] + [t for t, _ in self.periodic]
        if targets[0] < 0:
            raise ValueError("Target indices must be non-negative")
        if any(b <= a for a, b in zip(targets, targets[1:])):
            raise ValueError("Summand map must be strictly increasing")
        if self.periodic[-1][0] >= self.periodic[0][0] + self.stride:
            raise ValueError("Stride too small for the periodic offsets")

    @property
    def start(self) -> int:
        return len(self.explicit)

    @property
    def period(self) -> int:
        return len(self.periodic)

    def entry(self, index: int) -> Tuple[int, "Rep"]:
        if index < self.start:
            return self.explicit[index]
        q, r = divmod(index - self.start, self.period)
        target, inner = self.periodic[r]
        return target + q * self.stride, inner

    def target_index(self, index: int) -> int:
        return self.entry(index)[0]

    def inner_at(self, index: int) -> "Rep":
        return self.entry(index)[1]


Rep = Union[PointMap, IntoSummand, SumMap]


@dataclass(frozen=True)
class PartMap:
    """Embedding of one part of a term into part `target_part` of the target."""

    target_part: int
    rep: Rep


@dataclass(frozen=True)
class TermEmbedding:
    """Self-embedding of a Term presented part by part."""

    parts: Tuple[PartMap, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "parts", tuple(self.parts))
        targets = [part.target_part for part in self.parts]
        if any(b < a for a, b in zip(targets, targets[1:])):
            raise ValueError("Part targets must be non-decreasing")


@dataclass(frozen=True)
class WitnessMap:
    """Finite certificate of an embedding on a truncation."""

    pairs: Tuple[Tuple[Address, Address], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "pairs", tuple(self.pairs))

    @property
    def sources(self) -> Tuple[Address, ...]:
        return tuple(source for source, _ in self.pairs)

    @property
    def targets(self) -> Tuple[Address, ...]:
        return tuple(target for _, target in self.pairs)

    def __len__(self) -> int:
        return len(self.pairs)


@dataclass(frozen=True)
class WitnessFailure:
    """Returned instead of a WitnessMap when no embedding exists."""

    reason: str

    def __bool__(self) -> bool:
        return False
