"""Algebra of finitely presented embeddings: identity, application, composition."""

import logging
from typing import Optional, Tuple

from domain.orders.entities.embedding_rep import (
    IntoSummand,
    PartMap,
    PointMap,
    Rep,
    SumMap,
    TermEmbedding,
)
from domain.orders.exceptions.order_exceptions import ShapeMismatchError
from domain.orders.value_objects.address import hterm_order_key
from domain.orders.value_objects.term import HTerm, OmegaStarSum, Singleton, Term

logger = logging.getLogger(__name__)


def identity_rep(term: HTerm) -> Rep:
    if isinstance(term, Singleton):
        return PointMap(())
    h, p = term.head_length, term.pattern_length
    explicit = tuple((i, identity_rep(term.summand(i))) for i in range(h))
    periodic = tuple((h + r, identity_rep(term.summand(h + r))) for r in range(p))
    return SumMap(explicit, periodic, p)


def identity_embedding(term: Term) -> TermEmbedding:
    return TermEmbedding(
        tuple(PartMap(index, identity_rep(part)) for index, part in enumerate(term.parts))
    )


def apply_rep(rep: Rep, path: Tuple[int, ...]) -> Tuple[int, ...]:
    """Image of the point at `path` (inner path of the source ha term)."""
    if isinstance(rep, PointMap):
        if path:
            raise ShapeMismatchError("Point map applied to a non-singleton path")
        return rep.target
    if not path:
        raise ShapeMismatchError("Summand map applied to the empty path")
    if isinstance(rep, IntoSummand):
        return (rep.index,) + apply_rep(rep.inner, path)
    target, inner = rep.entry(path[0])
    return (target,) + apply_rep(inner, path[1:])


def shift_rep(rep: Rep, offset: int) -> Rep:
    """Move the top-level target summand indices of rep by offset."""
    if isinstance(rep, PointMap):
        if not rep.target:
            raise ShapeMismatchError("Cannot shift a map into a singleton")
        return PointMap((rep.target[0] + offset,) + rep.target[1:])
    if isinstance(rep, IntoSummand):
        return IntoSummand(rep.index + offset, rep.inner)
    return SumMap(
        tuple((t + offset, inner) for t, inner in rep.explicit),
        tuple((t + offset, inner) for t, inner in rep.periodic),
        rep.stride,
    )


def compose_reps(outer: Rep, inner: Rep) -> Rep:
    """outer ∘ inner: apply inner first."""
    if isinstance(inner, PointMap):
        return PointMap(apply_rep(outer, inner.target))
    if isinstance(outer, IntoSummand):
        return IntoSummand(outer.index, compose_reps(outer.inner, inner))
    if isinstance(outer, PointMap):
        raise ShapeMismatchError("Cannot compose an infinite sum into a point")
    if isinstance(inner, IntoSummand):
        target, sub = outer.entry(inner.index)
        return IntoSummand(target, compose_reps(sub, inner.inner))
    return _compose_sum_maps(outer, inner)


def _compose_sum_maps(outer: SumMap, inner: SumMap) -> SumMap:
    start = inner.start
    while inner.target_index(start) < outer.start:
        start += 1
    period = inner.period * outer.period

    def entry(index: int) -> Tuple[int, Rep]:
        middle, first = inner.entry(index)
        target, second = outer.entry(middle)
        return target, compose_reps(second, first)

    return SumMap(
        tuple(entry(i) for i in range(start)),
        tuple(entry(start + r) for r in range(period)),
        inner.stride * outer.stride,
    )


def compose_embeddings(outer: TermEmbedding, inner: TermEmbedding) -> TermEmbedding:
    """outer ∘ inner for part-wise embeddings; inner is applied first."""
    parts = []
    for index, first in enumerate(inner.parts):
        if first.target_part >= len(outer.parts):
            raise ShapeMismatchError("Embeddings do not compose", f"parts[{index}]")
        second = outer.parts[first.target_part]
        parts.append(PartMap(second.target_part, compose_reps(second.rep, first.rep)))
    return TermEmbedding(tuple(parts))


def validate_rep(rep: Rep, source: HTerm, target: HTerm, path: str = "map") -> None:
    """Raise ShapeMismatchError unless rep is an embedding of source into target.

    The embeddability of every summand pair is implied by the recursive shape check.
    """
    if isinstance(source, Singleton):
        if not isinstance(rep, PointMap):
            raise ShapeMismatchError("A singleton must be sent by a point map", path)
        try:
            hterm_order_key(target, rep.target)
        except ShapeMismatchError as error:
            raise ShapeMismatchError(f"Point target invalid ({error.message})", path) from error
        return
    if isinstance(rep, PointMap):
        raise ShapeMismatchError("An infinite sum cannot be sent to a point", path)
    if isinstance(target, Singleton):
        raise ShapeMismatchError("An infinite sum cannot embed into a singleton", path)
    if isinstance(rep, IntoSummand):
        validate_rep(rep.inner, source, target.summand(rep.index), f"{path}.into[{rep.index}]")
        return
    if source.kind != target.kind:
        raise ShapeMismatchError("Summand maps need sums of the same kind", path)
    if rep.start < source.head_length:
        raise ShapeMismatchError("Head summands must be mapped explicitly", path)
    if rep.period % source.pattern_length:
        raise ShapeMismatchError("Period must be a multiple of the source pattern length", path)
    if rep.stride % target.pattern_length:
        raise ShapeMismatchError("Stride must be a multiple of the target pattern length", path)
    for index, (goal, inner) in enumerate(rep.explicit):
        validate_rep(inner, source.summand(index), target.summand(goal), f"{path}.explicit[{index}]")
    for offset, (goal, inner) in enumerate(rep.periodic):
        if goal < target.head_length:
            raise ShapeMismatchError("Periodic targets must lie in the pattern", f"{path}.periodic[{offset}]")
        validate_rep(
            inner,
            source.summand(rep.start + offset),
            target.summand(goal),
            f"{path}.periodic[{offset}]",
        )


def _span(rep: Rep) -> Tuple[int, Optional[int]]:
    """Innermost and outermost top-level target summand (None when unbounded)."""
    if isinstance(rep, PointMap):
        return rep.target[0], rep.target[0]
    if isinstance(rep, IntoSummand):
        return rep.index, rep.index
    return rep.target_index(0), None


def _innermost(rep: Rep) -> Rep:
    """The part of rep landing in its innermost target summand."""
    if isinstance(rep, PointMap):
        return PointMap(rep.target[1:])
    if isinstance(rep, IntoSummand):
        return rep.inner
    return rep.entry(0)[1]


def precedes(left: Rep, right: Rep, target: HTerm) -> bool:
    """Whether every image point of left lies before every image point of right."""
    if isinstance(target, Singleton):
        return False
    left_inner, left_outer = _span(left)
    right_inner, right_outer = _span(right)
    if isinstance(target, OmegaStarSum):
        # later in the order means further inward
        last, first = left_inner, right_outer
        if first is not None and first < last:
            return True
    else:
        last, first = left_outer, right_inner
        if last is not None and last < first:
            return True
    if last is None or first is None or last != first:
        return False
    return precedes(_innermost(left), _innermost(right), target.summand(last))


def validate_embedding(embedding: TermEmbedding, source: Term, target: Term) -> None:
    """Raise ShapeMismatchError unless embedding maps source into target order-preservingly."""
    if len(embedding.parts) != len(source.parts):
        raise ShapeMismatchError(
            f"Expected {len(source.parts)} part maps, got {len(embedding.parts)}", "parts"
        )
    for index, (part, part_map) in enumerate(zip(source.parts, embedding.parts)):
        if part_map.target_part >= len(target.parts):
            raise ShapeMismatchError("Target part out of range", f"parts[{index}]")
        validate_rep(part_map.rep, part, target.parts[part_map.target_part], f"parts[{index}]")
    for index in range(1, len(embedding.parts)):
        left, right = embedding.parts[index - 1], embedding.parts[index]
        if left.target_part > right.target_part:
            raise ShapeMismatchError("Parts sent out of order", f"parts[{index}]")
        if left.target_part != right.target_part:
            continue
        node = target.parts[right.target_part]
        if isinstance(node, Singleton):
            raise ShapeMismatchError("Two parts sent into one point", f"parts[{index}]")
        if not precedes(left.rep, right.rep, node):
            raise ShapeMismatchError("Parts sharing a target overlap", f"parts[{index}]")
    logger.debug(f"Validated embedding of {source} into {target}")
