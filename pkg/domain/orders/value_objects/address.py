"""Point addresses inside a Term."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

from domain.orders.exceptions.order_exceptions import ShapeMismatchError
from domain.orders.value_objects.term import HTerm, OmegaStarSum, Singleton, Term


@dataclass(frozen=True)
class Address:
    """Path to a point: part index, then one outward summand index per infinite sum."""

    path: Tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "path", tuple(self.path))
        if not self.path:
            raise ValueError("Address path cannot be empty")
        if any(step < 0 for step in self.path):
            raise ValueError("Address steps must be non-negative")

    @property
    def part(self) -> int:
        return self.path[0]

    @property
    def inner(self) -> Tuple[int, ...]:
        return self.path[1:]

    def __str__(self) -> str:
        return ".".join(str(step) for step in self.path)


def hterm_order_key(term: HTerm, path: Tuple[int, ...]) -> Tuple[int, ...]:
    """Sort key of a point inside an ha term; index order flips at ω*-sums."""
    key = []
    node = term
    for position, step in enumerate(path):
        if isinstance(node, Singleton):
            raise ShapeMismatchError("Path continues past a point", _describe(path, position))
        key.append(-step if isinstance(node, OmegaStarSum) else step)
        node = node.summand(step)
    if not isinstance(node, Singleton):
        raise ShapeMismatchError("Path stops before reaching a point", _describe(path, len(path)))
    return tuple(key)


def order_key(term: Term, address: Address) -> Tuple[int, ...]:
    if address.part >= len(term.parts):
        raise ShapeMismatchError("No such part", str(address))
    return (address.part,) + hterm_order_key(term.parts[address.part], address.inner)


def compare(term: Term, left: Address, right: Address) -> int:
    """-1, 0 or 1 according to the order of the two points in term."""
    a, b = order_key(term, left), order_key(term, right)
    return (a > b) - (a < b)


def _describe(path: Tuple[int, ...], position: int) -> str:
    return "path[" + ", ".join(str(step) for step in path[:position]) + "]"
