"""Term-level services: validity, mirroring, ordinal value and truncation."""

import logging
from typing import List, Optional, Tuple

from domain.orders.exceptions.order_exceptions import InvalidTermError
from domain.orders.services.embedding_service import EmbeddingDecider
from domain.orders.value_objects.address import Address
from domain.orders.value_objects.cnf import CNF
from domain.orders.value_objects.term import (
    HTerm,
    OmegaStarSum,
    OmegaSum,
    Singleton,
    Term,
)

logger = logging.getLogger(__name__)


def validate_hterm(term: HTerm, decider: Optional[EmbeddingDecider] = None) -> None:
    """Raise InvalidTermError unless every head element embeds into a pattern element."""
    if isinstance(term, Singleton):
        return
    decider = decider or EmbeddingDecider()
    for child in term.head + term.pattern:
        validate_hterm(child, decider)
    for element in term.head:
        if not any(decider.hterm_embeds(element, q) for q in term.pattern):
            pattern = ", ".join(str(q) for q in term.pattern)
            raise InvalidTermError(
                f"Head element {element} of {term} does not embed into any pattern element ({pattern})",
                subterm=str(element),
            )


def validate_term(term: Term) -> None:
    decider = EmbeddingDecider()
    for part in term.parts:
        validate_hterm(part, decider)


def is_valid(term: Term) -> bool:
    try:
        validate_term(term)
    except InvalidTermError:
        return False
    return True


def mirror_hterm(term: HTerm) -> HTerm:
    if isinstance(term, Singleton):
        return term
    head = tuple(mirror_hterm(h) for h in reversed(term.head))
    pattern = tuple(mirror_hterm(p) for p in reversed(term.pattern))
    if isinstance(term, OmegaSum):
        return OmegaStarSum(pattern, head)
    return OmegaSum(head, pattern)


def mirror(term: Term) -> Term:
    """Reverse the order: parts reversed, ω-sums and ω*-sums swapped throughout."""
    return Term(tuple(mirror_hterm(part) for part in reversed(term.parts)))


def hterm_value(term: HTerm) -> Optional[CNF]:
    if isinstance(term, Singleton):
        return CNF.finite(1)
    if isinstance(term, OmegaStarSum):
        return None
    head = _sum_values(term.head)
    period = _sum_values(term.pattern)
    if head is None or period is None:
        return None
    return head + period.times_omega()


def ord_value(term: Term) -> Optional[CNF]:
    """Ordinal of an ω*-free term, None as soon as an ω*-sum occurs."""
    return _sum_values(term.parts)


def _sum_values(terms: Tuple[HTerm, ...]) -> Optional[CNF]:
    total = CNF.finite(0)
    for term in terms:
        value = hterm_value(term)
        if value is None:
            return None
        total = total + value
    return total


def truncate_hterm(term: HTerm, depth: int) -> List[Tuple[int, ...]]:
    """Inner paths of the depth-truncation of an ha term, in increasing order."""
    if isinstance(term, Singleton):
        return [()]
    count = term.head_length + depth * term.pattern_length
    indices = range(count) if isinstance(term, OmegaSum) else range(count - 1, -1, -1)
    return [
        (index,) + rest
        for index in indices
        for rest in truncate_hterm(term.summand(index), depth)
    ]


def truncate(term: Term, depth: int) -> List[Address]:
    """Addresses of the finite suborder keeping |head| + depth*|pattern| summands per sum."""
    if depth < 1:
        raise ValueError("Truncation depth must be positive")
    points = [
        Address((part_index,) + path)
        for part_index, part in enumerate(term.parts)
        for path in truncate_hterm(part, depth)
    ]
    logger.debug(f"Truncated {term} at depth {depth} to {len(points)} point(s)")
    return points
