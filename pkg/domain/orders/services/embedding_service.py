"""Embeddability decisions and constructive embeddings between fragment terms."""

import logging
from typing import Dict, List, Optional, Sequence, Tuple, Union

from domain.orders.entities.embedding_rep import (
    IntoSummand,
    PartMap,
    PointMap,
    Rep,
    SumMap,
    TermEmbedding,
    WitnessFailure,
    WitnessMap,
)
from domain.orders.exceptions.order_exceptions import PreconditionViolationError
from domain.orders.services.embedding_algebra import apply_rep
from domain.orders.value_objects.address import Address, order_key
from domain.orders.value_objects.term import HTerm, OmegaSum, Singleton, Term

logger = logging.getLogger(__name__)

GroupAssignment = List[Tuple[int, int, int]]


class EmbeddingDecider:
    """Decision procedure for embeddability, memoized per instance."""

    def __init__(self) -> None:
        self._memo: Dict[Tuple[HTerm, HTerm], bool] = {}

    def hterm_embeds(self, source: HTerm, target: HTerm) -> bool:
        if isinstance(source, Singleton):
            return True
        if isinstance(target, Singleton):
            return False
        key = (source, target)
        cached = self._memo.get(key)
        if cached is not None:
            return cached
        if source.kind == target.kind:
            # target pattern occurrences are cofinal, source heads reduce to the pattern
            result = all(
                any(self.hterm_embeds(p, q) for q in target.pattern) for p in source.pattern
            )
        else:
            # the source lands inside finitely many summands, hence inside one
            result = any(self.hterm_embeds(source, q) for q in target.pattern)
        self._memo[key] = result
        return result

    def group_embeds(self, group: Sequence[HTerm], target: HTerm) -> bool:
        """Does the concatenation of group embed into the ha term target?"""
        if len(group) == 1:
            return self.hterm_embeds(group[0], target)
        if isinstance(target, Singleton):
            return False
        if isinstance(target, OmegaSum):
            bounded, last = group[:-1], group[-1]
        else:
            bounded, last = group[1:], group[0]
        return all(
            any(self.hterm_embeds(g, q) for q in target.pattern) for g in bounded
        ) and self.hterm_embeds(last, target)

    def _table(self, source: Term, target: Term) -> List[List[bool]]:
        n, m = len(source.parts), len(target.parts)
        table = [[False] * (m + 1) for _ in range(n + 1)]
        for j in range(m + 1):
            table[n][j] = True
        for i in range(n - 1, -1, -1):
            for j in range(m - 1, -1, -1):
                table[i][j] = table[i][j + 1] or any(
                    table[k][j + 1] and self.group_embeds(source.parts[i:k], target.parts[j])
                    for k in range(i + 1, n + 1)
                )
        return table

    def embeds(self, source: Term, target: Term) -> bool:
        return self._table(source, target)[0][0]

    def assignment(self, source: Term, target: Term) -> Optional[GroupAssignment]:
        """Groups (start, end, target part) realizing an embedding, or None.

        Each group goes to the leftmost target part that still admits a
        solution, shortest group first.
        """
        table = self._table(source, target)
        if not table[0][0]:
            return None
        n = len(source.parts)
        groups: GroupAssignment = []
        i = j = 0
        while i < n:
            for k in range(i + 1, n + 1):
                if table[k][j + 1] and self.group_embeds(source.parts[i:k], target.parts[j]):
                    groups.append((i, k, j))
                    i = k
                    break
            j += 1
        logger.debug(f"Assignment of {source} into {target}: {groups}")
        return groups

    def build_rep(self, source: HTerm, target: HTerm, floor: int = 0) -> Rep:
        """Eventually periodic embedding of source into target.

        `floor` is the least outward target summand the image may use.
        Pattern occurrences are always taken leftmost-first.
        """
        if not self.hterm_embeds(source, target):
            raise PreconditionViolationError(f"{source} does not embed into {target}")
        return self._build(source, target, floor)

    def _build(self, source: HTerm, target: HTerm, floor: int) -> Rep:
        if isinstance(source, Singleton):
            return PointMap(self._anchor(target, floor))
        if source.kind != target.kind:
            index = self.occurrence(source, target, floor)
            return IntoSummand(index, self._build(source, target.summand(index), 0))
        previous = floor - 1
        explicit = []
        for i in range(source.head_length):
            element = source.summand(i)
            previous = self.occurrence(element, target, previous + 1)
            explicit.append((previous, self._build(element, target.summand(previous), 0)))
        periodic = []
        for r in range(source.pattern_length):
            element = source.summand(source.head_length + r)
            previous = self.occurrence(element, target, previous + 1)
            periodic.append((previous, self._build(element, target.summand(previous), 0)))
        span = periodic[-1][0] - periodic[0][0] + 1
        width = target.pattern_length
        stride = width * -(-span // width)
        return SumMap(tuple(explicit), tuple(periodic), stride)

    def occurrence(self, element: HTerm, target: HTerm, start: int) -> int:
        index = target.find_pattern_index(start, lambda q: self.hterm_embeds(element, q))
        if index is None:
            raise PreconditionViolationError(f"{element} embeds into no pattern element of {target}")
        return index

    def _anchor(self, target: HTerm, floor: int) -> Tuple[int, ...]:
        if isinstance(target, Singleton):
            return ()
        index = max(floor, target.head_length)
        return (index,) + self._anchor(target.summand(index), 0)

    def _into(self, element: HTerm, target: HTerm, index: int) -> Rep:
        summand = target.summand(index)
        if isinstance(element, Singleton):
            return PointMap((index,) + self._anchor(summand, 0))
        return IntoSummand(index, self._build(element, summand, 0))

    def build_group(self, group: Sequence[HTerm], target: HTerm) -> List[Rep]:
        """One map per group member, jointly embedding the concatenation into target."""
        if not self.group_embeds(group, target):
            raise PreconditionViolationError("Group does not embed into target")
        if len(group) == 1:
            return [self._build(group[0], target, 0)]
        reps: List[Optional[Rep]] = [None] * len(group)
        order = range(len(group) - 1) if isinstance(target, OmegaSum) else range(len(group) - 1, 0, -1)
        previous = -1
        for position in order:
            previous = self.occurrence(group[position], target, previous + 1)
            reps[position] = self._into(group[position], target, previous)
        last = len(group) - 1 if isinstance(target, OmegaSum) else 0
        reps[last] = self._build(group[last], target, previous + 1)
        return [rep for rep in reps if rep is not None]

    def build_embedding(self, source: Term, target: Term) -> Optional[TermEmbedding]:
        groups = self.assignment(source, target)
        if groups is None:
            return None
        parts: List[PartMap] = []
        for start, end, target_part in groups:
            reps = self.build_group(source.parts[start:end], target.parts[target_part])
            parts.extend(PartMap(target_part, rep) for rep in reps)
        return TermEmbedding(tuple(parts))


def embeds(source: Term, target: Term) -> bool:
    return EmbeddingDecider().embeds(source, target)


def embeds_group_into_ha(group: Sequence[HTerm], target: HTerm) -> bool:
    if not group:
        raise ValueError("Group cannot be empty")
    return EmbeddingDecider().group_embeds(group, target)


def embed_witness(source: Term, target: Term, depth: int) -> Union[WitnessMap, WitnessFailure]:
    """Realize truncate(source, depth) inside target, or report failure."""
    from domain.orders.services.term_service import truncate

    embedding = EmbeddingDecider().build_embedding(source, target)
    if embedding is None:
        return WitnessFailure(f"{source} does not embed into {target}")
    pairs = []
    for address in truncate(source, depth):
        part_map = embedding.parts[address.part]
        image = (part_map.target_part,) + apply_rep(part_map.rep, address.inner)
        pairs.append((address, Address(image)))
    logger.debug(f"Witness for {source} into {target} at depth {depth}: {len(pairs)} pair(s)")
    return WitnessMap(tuple(pairs))


def is_order_preserving(witness: WitnessMap, source: Term, target: Term) -> bool:
    """Strictly increasing and injective, with sources in increasing order."""
    source_keys = [order_key(source, a) for a in witness.sources]
    target_keys = [order_key(target, a) for a in witness.targets]
    return all(a < b for a, b in zip(source_keys, source_keys[1:])) and all(
        a < b for a, b in zip(target_keys, target_keys[1:])
    )
