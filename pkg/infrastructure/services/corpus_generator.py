"""Seeded generation of valid fragment terms and eventually periodic specs."""

import logging
import random
from dataclasses import dataclass
from typing import List, Optional

from domain.orders.entities.subset_spec import (
    EMPTY,
    FULL,
    NodeSpec,
    PeriodicTail,
    SumSpec,
    TermSpec,
)
from domain.orders.services.embedding_service import EmbeddingDecider
from domain.orders.value_objects.term import (
    SINGLETON,
    HTerm,
    OmegaStarSum,
    OmegaSum,
    Singleton,
    Term,
)
from infrastructure.config.settings import settings

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CorpusConfig:
    """Bounds for generated terms."""

    seed: int = settings.CORPUS_SEED
    count: int = settings.CORPUS_COUNT
    max_depth: int = settings.CORPUS_MAX_DEPTH
    max_pattern: int = settings.CORPUS_MAX_PATTERN
    max_head: int = settings.CORPUS_MAX_HEAD
    max_parts: int = settings.CORPUS_MAX_PARTS
    allow_star: bool = True

    def __post_init__(self) -> None:
        if self.count < 0:
            raise ValueError("Corpus count cannot be negative")
        if min(self.max_pattern, self.max_parts) < 1 or min(self.max_depth, self.max_head) < 0:
            raise ValueError("Corpus bounds must be positive")


class CorpusGenerator:
    """Deterministic for a fixed config; heads only use elements that embed into the pattern."""

    def __init__(self, config: Optional[CorpusConfig] = None, decider: Optional[EmbeddingDecider] = None):
        self.config = config or CorpusConfig()
        self._random = random.Random(self.config.seed)
        self._decider = decider or EmbeddingDecider()

    def hterm(self, depth: Optional[int] = None) -> HTerm:
        depth = self.config.max_depth if depth is None else depth
        if depth == 0 or self._random.random() < 0.25:
            return SINGLETON
        pattern = tuple(
            self.hterm(depth - 1) for _ in range(self._random.randint(1, self.config.max_pattern))
        )
        head = []
        for _ in range(self._random.randint(0, self.config.max_head)):
            candidate = self.hterm(depth - 1)
            if any(self._decider.hterm_embeds(candidate, q) for q in pattern):
                head.append(candidate)
        star = self.config.allow_star and self._random.random() < 0.4
        if star:
            return OmegaStarSum(pattern, tuple(head))
        return OmegaSum(tuple(head), pattern)

    def term(self) -> Term:
        count = self._random.randint(1, self.config.max_parts)
        return Term(tuple(self.hterm() for _ in range(count)))

    def infinite_term(self) -> Term:
        term = self.term()
        while term.is_finite:
            term = self.term()
        return term

    def terms(self, count: Optional[int] = None) -> List[Term]:
        count = self.config.count if count is None else count
        corpus = [self.term() for _ in range(count)]
        logger.debug(f"Generated {len(corpus)} term(s) with seed {self.config.seed}")
        return corpus

    def node_spec(self, term: HTerm, depth: int = 2) -> NodeSpec:
        roll = self._random.random()
        if isinstance(term, Singleton) or depth == 0 or roll < 0.3:
            return FULL if self._random.random() < 0.7 else EMPTY
        explicit = tuple(
            (index, self.node_spec(term.summand(index), depth - 1))
            for index in sorted(self._random.sample(range(6), self._random.randint(0, 3)))
        )
        tail_roll = self._random.random()
        if tail_roll < 0.3:
            tail = FULL
        elif tail_roll < 0.45:
            tail = EMPTY
        else:
            length = term.pattern_length * self._random.randint(1, 3)
            tail = PeriodicTail.of(
                [self.node_spec(term.summand(term.head_length + phase), depth - 1) for phase in range(length)]
            )
        return SumSpec(explicit, tail)

    def spec(self, term: Term) -> TermSpec:
        return TermSpec(tuple(self.node_spec(part) for part in term.parts))
