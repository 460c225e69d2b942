"""Cantor normal form of ordinals below ω^ω."""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import total_ordering
from typing import Tuple

from domain.orders.value_objects.term import SINGLETON, HTerm, Term, omega_tower

_TERM_PATTERN = re.compile(r"^w(?:\^(\d+))?(?:\*(\d+))?$")


@total_ordering
@dataclass(frozen=True)
class CNF:
    """ω^e1·c1 + ... + ω^et·ct + remainder with e1 > ... > et >= 1."""

    terms: Tuple[Tuple[int, int], ...] = ()
    remainder: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "terms", tuple((int(e), int(c)) for e, c in self.terms))
        if self.remainder < 0:
            raise ValueError("Remainder cannot be negative")
        for exponent, coefficient in self.terms:
            if exponent < 1:
                raise ValueError("Exponents must be positive")
            if coefficient < 1:
                raise ValueError("Coefficients must be positive")
        exponents = [e for e, _ in self.terms]
        if any(b >= a for a, b in zip(exponents, exponents[1:])):
            raise ValueError("Exponents must be strictly decreasing")

    @classmethod
    def finite(cls, n: int) -> "CNF":
        return cls((), n)

    @classmethod
    def omega_power(cls, exponent: int, coefficient: int = 1) -> "CNF":
        if exponent == 0:
            return cls.finite(coefficient)
        return cls(((exponent, coefficient),), 0)

    @classmethod
    def from_string(cls, text: str) -> "CNF":
        """Parse strings like 'w^3*2 + w*3 + 4' (summands in any valid CNF order)."""
        compact = text.replace(" ", "")
        if not compact:
            raise ValueError("Empty CNF string")
        result = cls.finite(0)
        for chunk in compact.split("+"):
            if chunk.isdigit():
                summand = cls.finite(int(chunk))
            else:
                match = _TERM_PATTERN.match(chunk)
                if match is None:
                    raise ValueError(f"Invalid CNF summand: {chunk!r}")
                exponent = int(match.group(1) or 1)
                coefficient = int(match.group(2) or 1)
                if coefficient < 1:
                    raise ValueError(f"Invalid coefficient in {chunk!r}")
                summand = cls.omega_power(exponent, coefficient)
            result = result + summand
        return result

    @property
    def is_zero(self) -> bool:
        return not self.terms and self.remainder == 0

    @property
    def is_finite(self) -> bool:
        return not self.terms

    @property
    def leading_exponent(self) -> int:
        return self.terms[0][0] if self.terms else 0

    def __add__(self, other: "CNF") -> "CNF":
        if other.is_finite:
            return CNF(self.terms, self.remainder + other.remainder)
        lead, coefficient = other.terms[0]
        kept = [(e, c) for e, c in self.terms if e > lead]
        for e, c in self.terms:
            if e == lead:
                coefficient += c
        return CNF(tuple(kept) + ((lead, coefficient),) + other.terms[1:], other.remainder)

    def times_omega(self) -> "CNF":
        """Right multiplication by ω."""
        if self.is_zero:
            return self
        return CNF.omega_power(self.leading_exponent + 1)

    def _key(self) -> Tuple[Tuple[int, int], ...]:
        return self.terms + ((0, self.remainder),)

    def __lt__(self, other: object) -> bool:
        if not isinstance(other, CNF):
            return NotImplemented
        return self._key() < other._key()

    def to_term(self) -> Term:
        """A canonical fragment term denoting this ordinal."""
        if self.is_zero:
            raise ValueError("The empty order has no term")
        parts: list[HTerm] = []
        for exponent, coefficient in self.terms:
            parts.extend([omega_tower(exponent)] * coefficient)
        parts.extend([SINGLETON] * self.remainder)
        return Term(tuple(parts))

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        chunks = []
        for exponent, coefficient in self.terms:
            chunk = "w" if exponent == 1 else f"w^{exponent}"
            if coefficient > 1:
                chunk += f"*{coefficient}"
            chunks.append(chunk)
        if self.remainder:
            chunks.append(str(self.remainder))
        return " + ".join(chunks)
