"""Symbolic expressions for separative quotients of posets of copies."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Tuple, Union


@dataclass(frozen=True)
class PosetProperties:
    """Order-theoretic properties carried by every expression node."""

    sigma_closed: bool = True
    atomless: bool = True
    size: str = "𝔠"


SCATTERED = PosetProperties()


@dataclass(frozen=True)
class PFinPlus:
    """(P(ω)/Fin)^+."""

    properties: PosetProperties = SCATTERED

    def __str__(self) -> str:
        return "(P(w)/Fin)^+"


@dataclass(frozen=True)
class FinTimesFinPlus:
    """(P(ω×ω)/(Fin×Fin))^+."""

    properties: PosetProperties = SCATTERED

    def __str__(self) -> str:
        return "(P(wxw)/(Fin x Fin))^+"


@dataclass(frozen=True)
class Product:
    factors: Tuple["PosetExpr", ...]
    properties: PosetProperties = SCATTERED

    def __post_init__(self) -> None:
        object.__setattr__(self, "factors", tuple(self.factors))

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        return " x ".join(str(factor) for factor in self.factors)


@dataclass(frozen=True)
class Power:
    base: "PosetExpr"
    exponent: int
    properties: PosetProperties = SCATTERED

    def __post_init__(self) -> None:
        if self.exponent < 1:
            raise ValueError("Power exponent must be positive")

    def __str__(self) -> str:
        return f"({self.base})^{self.exponent}"


@dataclass(frozen=True)
class ReducedPower:
    """Positive part of rp^k(base): the ω-power modulo eventual equality, iterated k times."""

    base: "PosetExpr"
    iterations: int
    properties: PosetProperties = SCATTERED

    def __post_init__(self) -> None:
        if self.iterations < 0:
            raise ValueError("Reduced power iterations cannot be negative")

    def __str__(self) -> str:
        inner = str(self.base)
        if inner.endswith("^+"):
            inner = inner[1:-3]
        return f"(rp^{self.iterations}({inner}))^+"


@dataclass(frozen=True)
class Opaque:
    """Factor that is not identified with a named quotient."""

    label: str
    properties: PosetProperties = SCATTERED
    notes: Tuple[str, ...] = field(default=())

    def __str__(self) -> str:
        return f"Opaque[{self.label}]"


PosetExpr = Union[PFinPlus, FinTimesFinPlus, Product, Power, ReducedPower, Opaque]

P_FIN_PLUS = PFinPlus()
FIN_TIMES_FIN_PLUS = FinTimesFinPlus()
TRIVIAL = Product(())


@dataclass(frozen=True)
class SqAnalysis:
    """Quotient expression together with the annotations that justify or qualify it."""

    expression: PosetExpr
    notes: Tuple[str, ...] = ()
