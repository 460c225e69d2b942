"""Set algebra, shape checks and induced suborders for subset specs."""

import logging
from math import isqrt, lcm
from typing import Callable, Dict, Iterator, List, Optional, Tuple

from domain.orders.entities.subset_spec import (
    EMPTY,
    FULL,
    NodeSpec,
    PeriodicTail,
    SumSpec,
    Tail,
    TermSpec,
    Uniform,
)
from domain.orders.exceptions.order_exceptions import ShapeMismatchError
from domain.orders.services.embedding_service import EmbeddingDecider
from domain.orders.services.term_service import mirror_hterm
from domain.orders.value_objects.term import HTerm, OmegaStarSum, OmegaSum, Singleton, Term

logger = logging.getLogger(__name__)

Membership = Callable[[bool, bool], bool]


def check_node(term: HTerm, spec: NodeSpec, path: str = "spec") -> None:
    if isinstance(spec, Uniform):
        return
    if isinstance(term, Singleton):
        raise ShapeMismatchError("A singleton admits only full or empty", path)
    for index, child in spec.explicit:
        check_node(term.summand(index), child, f"{path}.explicit[{index}]")
    tail = spec.tail
    if isinstance(tail, PeriodicTail):
        if tail.length % term.pattern_length:
            raise ShapeMismatchError(
                f"Periodic tail length {tail.length} is not a multiple of the pattern length {term.pattern_length}",
                f"{path}.tail",
            )
        for phase, child in tail.entries:
            check_node(term.summand(term.head_length + phase), child, f"{path}.tail[{phase}]")


def check_shape(term: Term, spec: TermSpec) -> None:
    """Raise ShapeMismatchError, with the offending path, unless spec fits term."""
    if len(spec.parts) != len(term.parts):
        raise ShapeMismatchError(
            f"Expected {len(term.parts)} part spec(s), got {len(spec.parts)}", "parts"
        )
    for index, (part, node) in enumerate(zip(term.parts, spec.parts)):
        check_node(part, node, f"parts[{index}]")


def _as_sum(spec: NodeSpec) -> SumSpec:
    return spec if isinstance(spec, SumSpec) else SumSpec((), spec)


def _as_periodic(tail: Tail, pattern_length: int) -> PeriodicTail:
    return tail if isinstance(tail, PeriodicTail) else PeriodicTail(pattern_length, (), tail)


def combine(term: HTerm, left: NodeSpec, right: NodeSpec, op: Membership) -> NodeSpec:
    """Pointwise boolean combination of two node specs over term."""
    if isinstance(left, Uniform) and isinstance(right, Uniform):
        return FULL if op(left is FULL, right is FULL) else EMPTY
    if isinstance(term, Singleton):
        raise ShapeMismatchError("A singleton admits only full or empty")
    a, b = _as_sum(left), _as_sum(right)
    h = term.head_length
    indices = set(a.lookup) | set(b.lookup)
    if isinstance(a.tail, PeriodicTail) or isinstance(b.tail, PeriodicTail):
        indices |= set(range(h))
    explicit = tuple(
        (i, combine(term.summand(i), a.at(i, h), b.at(i, h), op)) for i in sorted(indices)
    )
    return SumSpec(explicit, _combine_tails(term, a.tail, b.tail, op))


def _combine_tails(term: HTerm, left: Tail, right: Tail, op: Membership) -> Tail:
    if isinstance(left, Uniform) and isinstance(right, Uniform):
        return FULL if op(left is FULL, right is FULL) else EMPTY
    a = _as_periodic(left, term.pattern_length)
    b = _as_periodic(right, term.pattern_length)
    length = lcm(a.length, b.length)
    phases = set()
    for tail in (a, b):
        for phase, _ in tail.entries:
            phases.update(range(phase, length, tail.length))
    h = term.head_length
    entries = tuple(
        (phase, combine(term.summand(h + phase), a.at(phase), b.at(phase), op))
        for phase in sorted(phases)
    )
    fill = FULL if op(a.fill is FULL, b.fill is FULL) else EMPTY
    return PeriodicTail(length, entries, fill)


def union(term: HTerm, left: NodeSpec, right: NodeSpec) -> NodeSpec:
    return normalize(term, combine(term, left, right, lambda x, y: x or y))


def intersect(term: HTerm, left: NodeSpec, right: NodeSpec) -> NodeSpec:
    return normalize(term, combine(term, left, right, lambda x, y: x and y))


def difference(term: HTerm, left: NodeSpec, right: NodeSpec) -> NodeSpec:
    return normalize(term, combine(term, left, right, lambda x, y: x and not y))


def complement(term: HTerm, spec: NodeSpec) -> NodeSpec:
    return difference(term, FULL, spec)


def _periodic_default(tail: Tail, index: int, head_length: int) -> NodeSpec:
    if isinstance(tail, Uniform):
        return tail
    return FULL if index < head_length else tail.at(index - head_length)


def _divisors(value: int) -> List[int]:
    small = [d for d in range(1, isqrt(value) + 1) if value % d == 0]
    return sorted(set(small + [value // d for d in small]))


def _shortest_period(tail: PeriodicTail, pattern_length: int) -> PeriodicTail:
    entries = tail.lookup
    for length in _divisors(tail.length):
        if length % pattern_length or length == tail.length:
            continue
        classes: Dict[int, List[NodeSpec]] = {}
        for phase, spec in entries.items():
            classes.setdefault(phase % length, []).append(spec)
        repeats = tail.length // length
        if all(len(specs) == repeats and len(set(specs)) == 1 for specs in classes.values()):
            return PeriodicTail(length, tuple((p, s[0]) for p, s in classes.items()), tail.fill)
    return tail


def normalize(term: HTerm, spec: NodeSpec) -> NodeSpec:
    """Canonical form: uniform wherever possible, shortest tail period, no redundant entries."""
    if isinstance(spec, Uniform):
        return spec
    if isinstance(term, Singleton):
        raise ShapeMismatchError("A singleton admits only full or empty")
    h = term.head_length
    explicit = {i: normalize(term.summand(i), child) for i, child in spec.explicit}
    tail = spec.tail
    if isinstance(tail, PeriodicTail):
        for i in range(h):
            explicit.setdefault(i, FULL)
        entries = {}
        for phase, child in tail.entries:
            child = normalize(term.summand(h + phase), child)
            if child != tail.fill:
                entries[phase] = child
        values = set(entries.values())
        if not entries:
            tail = tail.fill
        elif len(entries) == tail.length and len(values) == 1 and isinstance(next(iter(values)), Uniform):
            tail = next(iter(values))
        else:
            tail = _shortest_period(PeriodicTail(tail.length, tuple(entries.items()), tail.fill), term.pattern_length)
    kept = tuple(
        (i, child) for i, child in sorted(explicit.items()) if child != _periodic_default(tail, i, h)
    )
    if not kept and isinstance(tail, Uniform):
        return tail
    return SumSpec(kept, tail)


def is_empty(term: HTerm, spec: NodeSpec) -> bool:
    return normalize(term, spec) is EMPTY


def is_subset(term: HTerm, left: NodeSpec, right: NodeSpec) -> bool:
    return is_empty(term, combine(term, left, right, lambda x, y: x and not y))


def _term_wise(term: Term, left: TermSpec, right: TermSpec, op: Callable) -> TermSpec:
    check_shape(term, left)
    check_shape(term, right)
    return TermSpec(tuple(op(part, a, b) for part, a, b in zip(term.parts, left.parts, right.parts)))


def term_union(term: Term, left: TermSpec, right: TermSpec) -> TermSpec:
    return _term_wise(term, left, right, union)


def term_intersect(term: Term, left: TermSpec, right: TermSpec) -> TermSpec:
    return _term_wise(term, left, right, intersect)


def term_difference(term: Term, left: TermSpec, right: TermSpec) -> TermSpec:
    return _term_wise(term, left, right, difference)


def term_complement(term: Term, spec: TermSpec) -> TermSpec:
    return term_difference(term, TermSpec.full(len(term)), spec)


def term_normalize(term: Term, spec: TermSpec) -> TermSpec:
    check_shape(term, spec)
    return TermSpec(tuple(normalize(part, node) for part, node in zip(term.parts, spec.parts)))


def term_is_empty(term: Term, spec: TermSpec) -> bool:
    return all(node is EMPTY for node in term_normalize(term, spec).parts)


def term_is_subset(term: Term, left: TermSpec, right: TermSpec) -> bool:
    return term_is_empty(term, term_difference(term, left, right))


def in_tower_ideal(spec: NodeSpec, depth: int) -> bool:
    """Membership in the iterated ideal of a depth-k tower.

    Depth 0 admits only the empty set; depth k admits the sets with only
    finitely many summands outside the depth k-1 ideal.
    """
    if isinstance(spec, Uniform):
        return spec is EMPTY
    if depth == 0:
        raise ShapeMismatchError("A singleton admits only full or empty")
    tail = spec.tail
    if isinstance(tail, Uniform):
        return tail is EMPTY
    if len(tail.entries) < tail.length and tail.fill is FULL:
        return False
    return all(in_tower_ideal(child, depth - 1) for _, child in tail.entries)


def _primitive_root(items: Tuple[HTerm, ...]) -> Tuple[HTerm, ...]:
    size = len(items)
    for length in range(1, size):
        if size % length == 0 and items == items[:length] * (size // length):
            return items[:length]
    return items


def _nonempty_indices(spec: SumSpec, head_length: int, low: int, high: int) -> Iterator[int]:
    """Ascending summand indices in [low, high) that spec does not leave empty."""
    tail = spec.tail
    if tail is FULL or (isinstance(tail, PeriodicTail) and tail.fill is FULL):
        candidates = set(range(low, high))
    else:
        candidates = {i for i in spec.lookup if low <= i < high}
        if isinstance(tail, PeriodicTail):
            candidates.update(range(low, min(high, head_length)))
            for phase, child in tail.entries:
                if child is EMPTY:
                    continue
                first = head_length + phase
                if first < low:
                    first += -(-(low - first) // tail.length) * tail.length
                candidates.update(range(first, high, tail.length))
    for index in sorted(candidates):
        if spec.at(index, head_length) is not EMPTY:
            yield index


def restrict_node(
    term: HTerm, spec: NodeSpec, decider: Optional[EmbeddingDecider] = None
) -> Tuple[HTerm, ...]:
    """Parts of the suborder of term selected by spec, left to right."""
    if spec is EMPTY:
        return ()
    if spec is FULL:
        return (term,)
    if isinstance(term, Singleton):
        raise ShapeMismatchError("A singleton admits only full or empty")
    decider = decider or EmbeddingDecider()
    if isinstance(term, OmegaStarSum):
        # outward indexing makes the spec valid for the mirror image unchanged
        mirrored = restrict_node(mirror_hterm(term), spec, decider)
        return tuple(mirror_hterm(part) for part in reversed(mirrored))
    h = term.head_length

    def selected(indices: range) -> Tuple[HTerm, ...]:
        return tuple(
            part
            for i in _nonempty_indices(spec, h, indices.start, indices.stop)
            for part in restrict_node(term.summand(i), spec.at(i, h), decider)
        )

    if spec.tail is EMPTY:
        return selected(range(spec.last_explicit + 1))
    length = term.pattern_length if isinstance(spec.tail, Uniform) else spec.tail.length
    start = max(h, spec.last_explicit + 1)
    start += (h - start) % length
    prefix = selected(range(start))
    period = selected(range(start, start + length))
    if not period:
        return prefix
    period = _primitive_root(period)
    cut = len(prefix)
    while cut > 0 and any(decider.hterm_embeds(prefix[cut - 1], q) for q in period):
        cut -= 1
    return prefix[:cut] + (OmegaSum(prefix[cut:], period),)


def restrict(
    term: Term, spec: TermSpec, decider: Optional[EmbeddingDecider] = None
) -> Optional[Term]:
    """Induced suborder as a term, or None when spec selects nothing."""
    check_shape(term, spec)
    decider = decider or EmbeddingDecider()
    parts = tuple(
        piece
        for part, node in zip(term.parts, spec.parts)
        for piece in restrict_node(part, node, decider)
    )
    logger.debug(f"Restricted {term} to {len(parts)} part(s)")
    return Term(parts) if parts else None
