"""Copies of a fragment order inside eventually periodic suborders.

Covers the copy criterion, the tiered separative order, images of
self-embeddings, disjoint copies, finite lower bounds and fusion of
descending chains of copies.
"""

import logging
from typing import Dict, List, Optional, Sequence, Tuple

from domain.orders.entities.copy_results import (
    DisjointCopies,
    FusionResult,
    StageRecord,
    Verdict,
)
from domain.orders.entities.decomposition import Decomposition, Placement
from domain.orders.entities.embedding_rep import (
    IntoSummand,
    PartMap,
    PointMap,
    Rep,
    SumMap,
    TermEmbedding,
)
from domain.orders.entities.subset_spec import (
    EMPTY,
    FULL,
    NodeSpec,
    PeriodicTail,
    SumSpec,
    TermSpec,
)
from domain.orders.exceptions.order_exceptions import (
    ChainConditionError,
    FiniteTermError,
    FusionError,
    OutsideExactTierError,
    PreconditionViolationError,
    ShapeMismatchError,
)
from domain.orders.services.embedding_algebra import (
    compose_embeddings,
    compose_reps,
    identity_rep,
    shift_rep,
    validate_embedding,
)
from domain.orders.services.embedding_service import EmbeddingDecider
from domain.orders.services.hclass_service import HClassService
from domain.orders.services.spec_algebra import (
    check_shape,
    difference,
    in_tower_ideal,
    is_subset,
    restrict,
    term_difference,
    term_intersect,
    union,
)
from domain.orders.value_objects.term import HTerm, Singleton, Term, tower_depth

logger = logging.getLogger(__name__)


def point_spec(term: HTerm, path: Tuple[int, ...]) -> NodeSpec:
    """Spec selecting the single point at path."""
    if isinstance(term, Singleton):
        if path:
            raise ShapeMismatchError("Path continues below a singleton")
        return FULL
    if not path:
        raise ShapeMismatchError("Path stops at an infinite sum")
    return SumSpec(((path[0], point_spec(term.summand(path[0]), path[1:])),), EMPTY)


def image_node(rep: Rep, target: HTerm) -> NodeSpec:
    """Spec of the image of rep inside target (not normalized)."""
    if isinstance(rep, PointMap):
        return point_spec(target, rep.target)
    if isinstance(target, Singleton):
        raise ShapeMismatchError("An infinite sum cannot map into a singleton")
    if isinstance(rep, IntoSummand):
        inner = image_node(rep.inner, target.summand(rep.index))
        return SumSpec(((rep.index, inner),), EMPTY)
    explicit: Dict[int, NodeSpec] = {
        goal: image_node(inner, target.summand(goal)) for goal, inner in rep.explicit
    }
    h = target.head_length
    for index in range(h):
        explicit.setdefault(index, EMPTY)
    for goal, _ in rep.periodic:
        # earlier summands of the same phase lie outside the image
        for index in range(goal - rep.stride, h - 1, -rep.stride):
            explicit.setdefault(index, EMPTY)
    entries = tuple(
        ((goal - h) % rep.stride, image_node(inner, target.summand(goal)))
        for goal, inner in rep.periodic
    )
    return SumSpec(tuple(explicit.items()), PeriodicTail(rep.stride, entries, EMPTY))


def _lowest(rep: Rep) -> int:
    if isinstance(rep, PointMap):
        return rep.target[0]
    if isinstance(rep, IntoSummand):
        return rep.index
    return rep.target_index(0)


def _descend(rep: Rep, prefix: Tuple[int, ...]) -> Optional[Rep]:
    for step in prefix:
        if isinstance(rep, PointMap) and rep.target[:1] == (step,):
            rep = PointMap(rep.target[1:])
        elif isinstance(rep, IntoSummand) and rep.index == step:
            rep = rep.inner
        else:
            return None
    return rep


def placement_rep(part: HTerm, placement: Placement) -> Rep:
    """Embedding of an original part onto its position inside the folded part."""
    rep = identity_rep(part)
    if placement.shift is not None:
        rep = shift_rep(rep, placement.shift)
    for step in reversed(placement.prefix):
        rep = PointMap((step,) + rep.target) if isinstance(rep, PointMap) else IntoSummand(step, rep)
    return rep


def doubling_embedding(term: Term) -> TermEmbedding:
    """Self-embedding sending summand i of every tower part to summand 2i."""
    parts: List[PartMap] = []
    for index, part in enumerate(term.parts):
        if isinstance(part, Singleton):
            parts.append(PartMap(index, PointMap(())))
            continue
        if tower_depth(part) is None:
            raise PreconditionViolationError(f"Part {index} ({part}) is not a tower")
        parts.append(PartMap(index, SumMap((), ((0, identity_rep(part.summand(0))),), 2)))
    return TermEmbedding(tuple(parts))


class CopyService:
    """Copy analyses over a shared embedding decider."""

    def __init__(self, decider: Optional[EmbeddingDecider] = None) -> None:
        self.decider = decider or EmbeddingDecider()
        self.hclass = HClassService(self.decider)

    def contains_copy(self, term: Term, spec: TermSpec) -> bool:
        """Each folded part must embed into the suborder selected inside its own region."""
        check_shape(term, spec)
        decomposition = self.hclass.min_decomposition(term)
        for part, (start, end) in zip(decomposition.parts, decomposition.provenance):
            region = restrict(
                Term(term.parts[start:end]), TermSpec(spec.parts[start:end]), self.decider
            )
            if region is None or not self.decider.embeds(Term.of(part), region):
                logger.debug(f"No copy of {part} inside parts {start}..{end - 1}")
                return False
        return True

    def le_star(self, term: Term, left: TermSpec, right: TermSpec) -> Verdict:
        """Separative order, exact on products of ω- and ω*-towers."""
        for spec in (left, right):
            if not self.contains_copy(term, spec):
                raise PreconditionViolationError("Both specs must contain a copy of the term")
        decomposition = self.hclass.min_decomposition(term)
        unknown = False
        for start, end in decomposition.provenance:
            depth = tower_depth(term.parts[start]) if end - start == 1 else None
            if depth is None:
                unknown = True
                continue
            rest = difference(term.parts[start], left.parts[start], right.parts[start])
            if not in_tower_ideal(rest, depth):
                return Verdict.FALSE
        return Verdict.UNKNOWN if unknown else Verdict.TRUE

    def compose(self, term: Term, outer: TermEmbedding, inner: TermEmbedding) -> TermEmbedding:
        validate_embedding(outer, term, term)
        validate_embedding(inner, term, term)
        return compose_embeddings(outer, inner)

    def image_spec(self, term: Term, embedding: TermEmbedding) -> TermSpec:
        nodes: List[NodeSpec] = [EMPTY] * len(term.parts)
        for part_map in embedding.parts:
            target = term.parts[part_map.target_part]
            image = image_node(part_map.rep, target)
            nodes[part_map.target_part] = union(target, nodes[part_map.target_part], image)
        return TermSpec(tuple(nodes))

    def _interleave(self, part: HTerm) -> Tuple[Rep, Rep]:
        if isinstance(part, Singleton):
            return PointMap(()), PointMap(())
        h, p = part.head_length, part.pattern_length
        first, second = [], []
        previous = -1
        for i in range(h):
            element = part.summand(i)
            k = self.decider.occurrence(element, part, previous + 1)
            l = self.decider.occurrence(element, part, k + 1)
            first.append((k, self.decider.build_rep(element, part.summand(k))))
            second.append((l, self.decider.build_rep(element, part.summand(l))))
            previous = l
        base = max(h, previous + 1)
        base += (h - base) % p
        return (
            SumMap(
                tuple(first),
                tuple((base + r, identity_rep(part.summand(base + r))) for r in range(p)),
                2 * p,
            ),
            SumMap(
                tuple(second),
                tuple((base + p + r, identity_rep(part.summand(base + p + r))) for r in range(p)),
                2 * p,
            ),
        )

    def _locate(self, decomposition: Decomposition, folded: int, rep: Rep) -> PartMap:
        for placement in decomposition.placements[folded]:
            inner = _descend(rep, placement.prefix)
            if inner is None:
                continue
            if placement.shift is not None:
                if isinstance(inner, PointMap) and not inner.target:
                    continue
                if _lowest(inner) < placement.shift:
                    continue
                inner = shift_rep(inner, -placement.shift)
            return PartMap(placement.part, inner)
        raise ShapeMismatchError(f"Image does not lie inside one part of folded part {folded}")

    def pull_back(
        self, term: Term, decomposition: Decomposition, embedding: TermEmbedding
    ) -> TermEmbedding:
        """Express a self-embedding of the folded parts on the original parts."""
        located: Dict[int, PartMap] = {}
        for folded, placements in enumerate(decomposition.placements):
            part_map = embedding.parts[folded]
            for placement in placements:
                rep = compose_reps(part_map.rep, placement_rep(term.parts[placement.part], placement))
                located[placement.part] = self._locate(decomposition, part_map.target_part, rep)
        result = TermEmbedding(tuple(located[index] for index in range(len(term.parts))))
        validate_embedding(result, term, term)
        return result

    def disjoint_copies(self, term: Term) -> DisjointCopies:
        if term.is_finite:
            raise FiniteTermError(str(term))
        decomposition = self.hclass.min_decomposition(term)
        pairs = [self._interleave(part) for part in decomposition.parts]
        maps = []
        for side in (0, 1):
            folded = TermEmbedding(tuple(PartMap(i, pair[side]) for i, pair in enumerate(pairs)))
            maps.append(self.pull_back(term, decomposition, folded))
        first_image = self.image_spec(term, maps[0])
        second_image = self.image_spec(term, maps[1])
        logger.info(f"Built disjoint copies of {term}")
        return DisjointCopies(
            maps[0],
            maps[1],
            first_image,
            second_image,
            term_intersect(term, first_image, second_image),
        )

    def finite_block_spec(self, term: Term) -> TermSpec:
        """Points of the singleton parts of the minimal decomposition."""
        decomposition = self.hclass.min_decomposition(term)
        nodes: List[NodeSpec] = [EMPTY] * len(term.parts)
        for part, (start, _) in zip(decomposition.parts, decomposition.provenance):
            if isinstance(part, Singleton):
                nodes[start] = FULL
        return TermSpec(tuple(nodes))

    def lower_bound_finite(self, term: Term, chain: Sequence[TermSpec]) -> TermSpec:
        """A copy below every member of a ≤*-decreasing chain of copies."""
        if not chain:
            raise PreconditionViolationError("Chain cannot be empty")
        for index in range(len(chain) - 1):
            verdict = self.le_star(term, chain[index + 1], chain[index])
            if verdict is Verdict.FALSE:
                raise ChainConditionError(index)
            if verdict is Verdict.UNKNOWN:
                raise OutsideExactTierError(
                    f"Separative order of {term} is not decided exactly"
                )
        # back-recursion from the last member: each step drops what lies outside the earlier member
        bound = chain[-1]
        for spec in reversed(chain[:-1]):
            outside = term_difference(term, bound, spec)
            bound = term_difference(term, bound, outside)
        if not self.contains_copy(term, bound):
            raise OutsideExactTierError("Lower bound of the chain contains no copy")
        logger.debug(f"Lower bound of a chain of {len(chain)} over {term}")
        return bound

    def fusion(self, term: Term, chain: Sequence[TermEmbedding], stages: int) -> FusionResult:
        """Diagonal embedding whose stage i lands inside every copy C_k with k <= i."""
        if stages <= 0:
            raise FusionError("Fusion needs at least one stage")
        if len(chain) < stages:
            raise FusionError(f"Chain has {len(chain)} embedding(s), {stages} stage(s) requested")
        composites: List[TermEmbedding] = []
        for index, step in enumerate(chain[:stages]):
            validate_embedding(step, term, term)
            if any(part_map.target_part != j for j, part_map in enumerate(step.parts)):
                raise FusionError(f"Embedding {index} of the chain moves a part")
            composites.append(step if not composites else compose_embeddings(composites[-1], step))
        copies = [self.image_spec(term, composite) for composite in composites]

        parts: List[PartMap] = []
        records: List[StageRecord] = []
        for j, part in enumerate(term.parts):
            if isinstance(part, Singleton):
                parts.append(PartMap(j, PointMap(())))
                continue
            maps = [composite.parts[j].rep for composite in composites]
            if not all(isinstance(rep, SumMap) for rep in maps):
                raise FusionError(f"Chain does not map part {j} summand-wise")
            rep = self._fuse_part(part, maps)
            parts.append(PartMap(j, rep))
            for stage in range(rep.start + rep.period):
                goal, inner = rep.entry(stage)
                component = SumSpec(((goal, image_node(inner, part.summand(goal))),), EMPTY)
                required = min(stage, stages - 1) + 1
                nested = tuple(
                    k for k in range(required) if is_subset(part, component, copies[k].parts[j])
                )
                records.append(StageRecord(j, stage, goal, nested, required))
        embedding = TermEmbedding(tuple(parts))
        validate_embedding(embedding, term, term)
        image = self.image_spec(term, embedding)
        result = FusionResult(embedding, image, tuple(records), self.contains_copy(term, image))
        logger.info(f"Fused {stages} stage(s) over {term}: verified={result.verified}")
        return result

    def _fuse_part(self, part: HTerm, maps: List[SumMap]) -> SumMap:
        stages = len(maps)
        h, p = part.head_length, part.pattern_length
        limit = max(stages, h)
        explicit: List[Tuple[int, Rep]] = []
        previous = -1
        for stage in range(limit):
            sigma = maps[min(stage, stages - 1)]
            element = part.summand(stage)
            source = stage
            if stage >= h:
                while sigma.target_index(source) <= previous:
                    source += p
                inner = sigma.inner_at(source)
            else:
                while sigma.target_index(source) <= previous or not self.decider.hterm_embeds(
                    element, part.summand(source)
                ):
                    source += 1
                inner = sigma.inner_at(source)
                if part.summand(source) != element:
                    inner = compose_reps(inner, self.decider.build_rep(element, part.summand(source)))
            previous = sigma.target_index(source)
            explicit.append((previous, inner))
        sigma = maps[-1]
        offset = 0
        while limit + offset < sigma.start or sigma.target_index(limit + offset) <= previous:
            offset += p
        periodic = tuple(sigma.entry(limit + offset + r) for r in range(sigma.period))
        return SumMap(tuple(explicit), periodic, sigma.stride)


def contains_copy(term: Term, spec: TermSpec) -> bool:
    return CopyService().contains_copy(term, spec)


def le_star(term: Term, left: TermSpec, right: TermSpec) -> Verdict:
    return CopyService().le_star(term, left, right)


def image_spec(term: Term, embedding: TermEmbedding) -> TermSpec:
    return CopyService().image_spec(term, embedding)

