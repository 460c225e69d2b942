"""Recursive-descent parser for the term expression language.

Grammar (whitespace-insensitive)::

    term  := hsum ("+" hsum)*
    hsum  := "1" | NAT | "w" | "w*" | "w^" NAT
           | "w" "[" list (";" list)? "]" | "w*" "[" list (";" list)? "]"
    list  := hsum ("," hsum)*
"""

import logging
from dataclasses import dataclass
from typing import List, Optional

from domain.orders.exceptions.order_exceptions import TermSyntaxError
from domain.orders.services.term_service import validate_term
from domain.orders.value_objects.term import (
    HTerm,
    OMEGA,
    OMEGA_STAR,
    OmegaStarSum,
    OmegaSum,
    SINGLETON,
    Term,
    omega_tower,
)

logger = logging.getLogger(__name__)

GRAMMAR = (
    'term := hsum ("+" hsum)*; '
    'hsum := "1" | NAT | "w" | "w*" | "w^" NAT | "w[" list (";" list)? "]" | "w*[" list (";" list)? "]"; '
    'list := hsum ("," hsum)*'
)

_PUNCTUATION = {"w", "*", "^", "[", "]", ";", ",", "+"}


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    position: int


class Tokenizer:
    """Splits an expression into tokens, skipping whitespace."""

    def __init__(self, text: str) -> None:
        self.text = text

    def tokens(self) -> List[Token]:
        result: List[Token] = []
        pos = 0
        while pos < len(self.text):
            ch = self.text[pos]
            if ch.isspace():
                pos += 1
            elif ch.isdigit():
                start = pos
                while pos < len(self.text) and self.text[pos].isdigit():
                    pos += 1
                result.append(Token("nat", self.text[start:pos], start))
            elif ch in _PUNCTUATION:
                result.append(Token(ch, ch, pos))
                pos += 1
            else:
                raise TermSyntaxError(f"Unexpected character {ch!r}", pos)
        result.append(Token("eof", "", len(self.text)))
        return result


class Parser:
    """Builds a Term from a token stream."""

    def __init__(self, text: str) -> None:
        self.tokens = Tokenizer(text).tokens()
        self.index = 0

    def peek(self) -> Token:
        return self.tokens[self.index]

    def advance(self) -> Token:
        token = self.tokens[self.index]
        if token.kind != "eof":
            self.index += 1
        return token

    def expect(self, kind: str) -> Token:
        token = self.peek()
        if token.kind != kind:
            found = token.text or "end of input"
            raise TermSyntaxError(f"Expected {kind!r} but found {found!r}", token.position)
        return self.advance()

    def parse_term(self) -> Term:
        parts = self.parse_hsum()
        while self.peek().kind == "+":
            self.advance()
            parts.extend(self.parse_hsum())
        token = self.peek()
        if token.kind != "eof":
            raise TermSyntaxError(f"Unexpected {token.text!r}", token.position)
        return Term(tuple(parts))

    def parse_list(self) -> List[HTerm]:
        items = self.parse_hsum()
        while self.peek().kind == ",":
            self.advance()
            items.extend(self.parse_hsum())
        return items

    def parse_nat(self) -> int:
        token = self.expect("nat")
        value = int(token.text)
        if value < 1:
            raise TermSyntaxError("Natural numbers must be positive", token.position)
        return value

    def parse_hsum(self) -> List[HTerm]:
        token = self.peek()
        if token.kind == "nat":
            return [SINGLETON] * self.parse_nat()
        if token.kind != "w":
            found = token.text or "end of input"
            raise TermSyntaxError(f"Expected a summand but found {found!r}", token.position)
        self.advance()
        if self.peek().kind == "*":
            self.advance()
            return [self._parse_star_body()]
        if self.peek().kind == "^":
            self.advance()
            return [omega_tower(self.parse_nat())]
        if self.peek().kind == "[":
            self.advance()
            first, second = self._parse_bracket()
            if second is None:
                return [OmegaSum((), tuple(first))]
            return [OmegaSum(tuple(first), tuple(second))]
        return [OMEGA]

    def _parse_star_body(self) -> HTerm:
        if self.peek().kind != "[":
            return OMEGA_STAR
        self.advance()
        pattern, head = self._parse_bracket()
        if head is None:
            return OmegaStarSum(tuple(pattern), ())
        return OmegaStarSum(tuple(pattern), tuple(head))

    def _parse_bracket(self) -> "tuple[List[HTerm], Optional[List[HTerm]]]":
        first = self.parse_list()
        second: Optional[List[HTerm]] = None
        if self.peek().kind == ";":
            self.advance()
            second = self.parse_list()
        self.expect("]")
        return first, second


def parse_term(text: str, validate: bool = True) -> Term:
    """Parse an expression string into a Term.

    Raises TermSyntaxError for grammar violations and InvalidTermError when a
    head element embeds into no pattern element.
    """
    term = Parser(text).parse_term()
    logger.debug(f"Parsed {text!r} into {len(term)} part(s)")
    if validate:
        validate_term(term)
    return term


def format_term(term: Term) -> str:
    """Canonical expression string; parse_term(format_term(t)) == t."""
    return str(term)
