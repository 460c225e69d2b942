"""Merging of consecutive ha terms, folding of groups and minimal decompositions."""

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from domain.orders.entities.decomposition import Decomposition, Placement
from domain.orders.exceptions.order_exceptions import InvalidDecompositionError
from domain.orders.services.embedding_service import EmbeddingDecider
from domain.orders.value_objects.term import HTerm, OmegaStarSum, OmegaSum, Singleton, Term

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Fold:
    """A group folded into one ha term, with the placement of every member."""

    term: HTerm
    placements: Tuple[Placement, ...]


class HClassService:
    """Decides merges and folds; the embedding decider is shared across calls."""

    def __init__(self, decider: Optional[EmbeddingDecider] = None) -> None:
        self.decider = decider or EmbeddingDecider()

    def merge(self, left: HTerm, right: HTerm) -> Optional[Tuple[HTerm, int]]:
        """Merged term and the rule (1 or 2) that produced it."""
        if isinstance(right, OmegaSum) and any(
            self.decider.hterm_embeds(left, q) for q in right.pattern
        ):
            return OmegaSum((left,) + right.head, right.pattern), 1
        if isinstance(left, OmegaStarSum) and any(
            self.decider.hterm_embeds(right, p) for p in left.pattern
        ):
            return OmegaStarSum(left.pattern, left.head + (right,)), 2
        return None

    def mergeable(self, left: HTerm, right: HTerm) -> Optional[HTerm]:
        merged = self.merge(left, right)
        return merged[0] if merged else None

    def folds(self, parts: Sequence[HTerm]) -> "FoldTable":
        return FoldTable(self, tuple(parts))

    def h_fold(self, group: Sequence[HTerm]) -> Optional[HTerm]:
        if not group:
            raise ValueError("Group cannot be empty")
        fold = self.folds(group).fold(0, len(group))
        return fold.term if fold else None

    def min_decomposition(self, term: Term) -> Decomposition:
        parts = term.parts
        n = len(parts)
        table = self.folds(parts)
        best: List[int] = [0] * (n + 1)
        for i in range(n - 1, -1, -1):
            best[i] = min(best[j] + 1 for j in range(i + 1, n + 1) if table.fold(i, j))
        folded, provenance, placements = [], [], []
        i = 0
        while i < n:
            for j in range(i + 1, n + 1):
                fold = table.fold(i, j)
                if fold and best[j] + 1 == best[i]:
                    folded.append(fold.term)
                    provenance.append((i, j))
                    placements.append(fold.placements)
                    i = j
                    break
        logger.debug(f"Minimal decomposition of {term}: m = {len(folded)}")
        return Decomposition(tuple(folded), tuple(provenance), tuple(placements))

    def verify_decomposition(self, parts: Sequence[HTerm]) -> None:
        """Raise InvalidDecompositionError unless parts satisfy the minimality shape conditions."""
        for index, (left, right) in enumerate(zip(parts, parts[1:])):
            if self.merge(left, right):
                raise InvalidDecompositionError(
                    f"Parts {index} and {index + 1} ({left}, {right}) are mergeable"
                )
            if isinstance(left, Singleton) and isinstance(right, OmegaSum):
                raise InvalidDecompositionError(
                    f"Singleton part {index} is followed by an ω-sum"
                )
            if isinstance(left, OmegaStarSum) and isinstance(right, Singleton):
                raise InvalidDecompositionError(
                    f"Singleton part {index + 1} is preceded by an ω*-sum"
                )


class FoldTable:
    """Interval dynamic programme over all binary fold trees of a part sequence."""

    def __init__(self, service: HClassService, parts: Tuple[HTerm, ...]) -> None:
        self._service = service
        self._parts = parts
        self._memo: Dict[Tuple[int, int], Optional[Fold]] = {}

    def fold(self, start: int, end: int) -> Optional[Fold]:
        key = (start, end)
        if key in self._memo:
            return self._memo[key]
        result: Optional[Fold] = None
        if end - start == 1:
            part = self._parts[start]
            result = Fold(part, (Placement.base(start, part),))
        else:
            for split in range(start + 1, end):
                left, right = self.fold(start, split), self.fold(split, end)
                if not (left and right):
                    continue
                merged = self._service.merge(left.term, right.term)
                if merged is None:
                    continue
                term, rule = merged
                if rule == 1:
                    placements = tuple(p.nested(0) for p in left.placements) + tuple(
                        p.moved() for p in right.placements
                    )
                else:
                    placements = tuple(p.moved() for p in left.placements) + tuple(
                        p.nested(0) for p in right.placements
                    )
                result = Fold(term, placements)
                break
        self._memo[key] = result
        return result


def mergeable(left: HTerm, right: HTerm) -> Optional[HTerm]:
    return HClassService().mergeable(left, right)


def h_fold(group: Sequence[HTerm]) -> Optional[HTerm]:
    return HClassService().h_fold(group)


def min_decomposition(term: Term) -> Decomposition:
    return HClassService().min_decomposition(term)
