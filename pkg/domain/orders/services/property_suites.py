"""Property suites checked case by case over a corpus of terms.

Each case is a term together with a partner term; the pairwise suites
compare the two. Every PropertySuites instance owns its decider, so memo
tables are never shared between cases.
"""

import logging
from dataclasses import dataclass
from typing import Callable, Dict, List, Sequence, Tuple

from domain.orders.entities.copy_results import Verdict
from domain.orders.entities.embedding_rep import WitnessMap
from domain.orders.entities.subset_spec import TermSpec
from domain.orders.exceptions.order_exceptions import OrderError
from domain.orders.services.block_service import (
    block_partition,
    blocks_tail_consistency_iterated,
    check_block_conditions,
    format_blocks,
)
from domain.orders.services.copy_service import CopyService, doubling_embedding
from domain.orders.services.embedding_service import (
    EmbeddingDecider,
    embed_witness,
    is_order_preserving,
)
from domain.orders.services.forcing_service import ForcingService
from domain.orders.services.hclass_service import HClassService
from domain.orders.services.spec_algebra import term_is_subset
from domain.orders.services.term_service import mirror, ord_value, truncate
from domain.orders.value_objects.term import Term, tower_depth

logger = logging.getLogger(__name__)

SUITES: Tuple[str, ...] = (
    "structure",
    "ordinal",
    "mirror",
    "witness",
    "disjoint",
    "separative",
    "fusion",
)


@dataclass(frozen=True)
class CaseReport:
    m: int
    bar_notation: str
    sq: str
    suites: Tuple[str, ...]
    problems: Tuple[str, ...]


def check_suites(suites: Sequence[str]) -> Tuple[str, ...]:
    unknown = [name for name in suites if name not in SUITES]
    if unknown:
        raise ValueError(f"Unknown suite(s): {', '.join(unknown)}; choose from {', '.join(SUITES)}")
    return tuple(suites)


class PropertySuites:
    """Runs the selected suites on one case with a fresh decider."""

    def __init__(self, witness_depth: int = 5, fusion_stages: int = 5) -> None:
        self.decider = EmbeddingDecider()
        self.hclass = HClassService(self.decider)
        self.copies = CopyService(self.decider)
        self.forcing = ForcingService(self.decider)
        self.witness_depth = witness_depth
        self.fusion_stages = fusion_stages
        self._suites: Dict[str, Callable[[Term, Term], List[str]]] = {
            "structure": self.structure,
            "ordinal": self.ordinal,
            "mirror": self.mirror_duality,
            "witness": self.witness,
            "disjoint": self.disjoint,
            "separative": self.separative,
            "fusion": self.fusion,
        }

    def check(self, term: Term, partner: Term, suites: Sequence[str] = SUITES) -> CaseReport:
        suites = check_suites(suites)
        decomposition = self.hclass.min_decomposition(term)
        bar_notation, expression = "", ""
        try:
            bar_notation = format_blocks(block_partition(decomposition.parts, self.hclass))
            expression = str(self.forcing.sq_of(term))
        except OrderError as error:
            logger.debug(f"No block summary for {term}: {error.message}")
        problems: List[str] = []
        for name in suites:
            try:
                found = self._suites[name](term, partner)
            except OrderError as error:
                found = [error.message]
            problems.extend(f"{name}: {problem}" for problem in found)
        return CaseReport(decomposition.m, bar_notation, expression, suites, tuple(problems))

    def structure(self, term: Term, partner: Term) -> List[str]:
        """Decomposition shape, block partition, tail consistency and mirror invariance."""
        problems: List[str] = []
        decomposition = self.hclass.min_decomposition(term)
        parts = decomposition.parts
        try:
            self.hclass.verify_decomposition(parts)
        except OrderError as error:
            problems.append(error.message)
        blocks = block_partition(parts, self.hclass)
        covered = [i for block in blocks for i in range(block.start, block.end)]
        if covered != list(range(len(parts))):
            problems.append("blocks do not partition the parts")
        problems.extend(check_block_conditions(parts, blocks))
        if not blocks_tail_consistency_iterated(parts, self.hclass):
            problems.append("tail partition differs from the remaining blocks")
        self.forcing.sq_of(term)
        if self.hclass.min_decomposition(mirror(term)).m != decomposition.m:
            problems.append("mirror has a different minimal decomposition size")
        if mirror(mirror(term)) != term:
            problems.append("mirror is not an involution")
        return problems

    def ordinal(self, term: Term, partner: Term) -> List[str]:
        """Embeddability of ordinal terms follows their ordinal values."""
        left, right = ord_value(term), ord_value(partner)
        if left is None or right is None:
            return []
        if self.decider.embeds(term, partner) != (left <= right):
            return [f"embeds({term}, {partner}) disagrees with {left} <= {right}"]
        return []

    def mirror_duality(self, term: Term, partner: Term) -> List[str]:
        forward = self.decider.embeds(term, partner)
        if forward != self.decider.embeds(mirror(term), mirror(partner)):
            return [f"embeds({term}, {partner}) = {forward} changes under mirror"]
        return []

    def witness(self, term: Term, partner: Term) -> List[str]:
        if not self.decider.embeds(term, partner):
            return []
        problems: List[str] = []
        for depth in range(1, self.witness_depth + 1):
            witness = embed_witness(term, partner, depth)
            if not isinstance(witness, WitnessMap):
                problems.append(f"no witness at depth {depth}: {witness.reason}")
            elif len(witness) != len(truncate(term, depth)):
                problems.append(f"witness at depth {depth} misses points")
            elif not is_order_preserving(witness, term, partner):
                problems.append(f"witness at depth {depth} is not order-preserving")
        return problems

    def disjoint(self, term: Term, partner: Term) -> List[str]:
        """Two copies meet exactly in the finite blocks and both contain a copy."""
        if term.is_finite:
            return []
        copies = self.copies.disjoint_copies(term)
        finite = self.copies.finite_block_spec(term)
        problems: List[str] = []
        if not (
            term_is_subset(term, copies.overlap, finite)
            and term_is_subset(term, finite, copies.overlap)
        ):
            problems.append("copies do not meet exactly in the finite blocks")
        for name, image in (("first", copies.first_image), ("second", copies.second_image)):
            if not self.copies.contains_copy(term, image):
                problems.append(f"{name} image contains no copy")
        return problems

    def exact_tier(self, term: Term) -> bool:
        """Every folded part is a single tower, where ≤* is decided exactly."""
        decomposition = self.hclass.min_decomposition(term)
        return all(
            end - start == 1 and tower_depth(term.parts[start]) is not None
            for start, end in decomposition.provenance
        )

    def separative(self, term: Term, partner: Term) -> List[str]:
        full = TermSpec.full(len(term))
        exact = self.exact_tier(term)
        verdict = self.copies.le_star(term, full, full)
        if verdict is Verdict.FALSE or (exact and verdict is not Verdict.TRUE):
            return [f"full spec is not below itself ({verdict})"]
        if not exact or term.is_finite:
            return []
        problems: List[str] = []
        image = self.copies.image_spec(term, doubling_embedding(term))
        if self.copies.le_star(term, image, full) is not Verdict.TRUE:
            problems.append("doubling image is not below the full spec")
        if self.copies.le_star(term, full, image) is not Verdict.FALSE:
            problems.append("full spec is below the doubling image")
        return problems

    def fusion(self, term: Term, partner: Term) -> List[str]:
        """Fusion of repeated doublings, on terms whose parts are towers."""
        if term.is_finite or not self.exact_tier(term):
            return []
        chain = [doubling_embedding(term)] * self.fusion_stages
        result = self.copies.fusion(term, chain, self.fusion_stages)
        if not result.verified:
            return [f"fusion of {self.fusion_stages} doublings is not verified"]
        return []
