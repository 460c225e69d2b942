"""Results of copy analyses: separative-order verdicts, disjoint copies, fusions."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import groupby
from typing import Tuple

from domain.orders.entities.embedding_rep import TermEmbedding
from domain.orders.entities.subset_spec import TermSpec


class Verdict(str, Enum):
    """Three-valued answer of a tiered decision."""

    TRUE = "true"
    FALSE = "false"
    UNKNOWN = "unknown"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class DisjointCopies:
    """Two self-embeddings whose images meet only in the finite blocks."""

    first: TermEmbedding
    second: TermEmbedding
    first_image: TermSpec
    second_image: TermSpec
    overlap: TermSpec


@dataclass(frozen=True)
class StageRecord:
    """Stage `stage` of a fused embedding inside one part."""

    part: int
    stage: int
    footprint: int
    nested_in: Tuple[int, ...]
    required: int

    @property
    def nested(self) -> bool:
        return self.nested_in == tuple(range(self.required))


@dataclass(frozen=True)
class FusionResult:
    """Fused embedding with its stage-by-stage verification."""

    embedding: TermEmbedding
    image: TermSpec
    stages: Tuple[StageRecord, ...]
    image_contains_copy: bool

    def __post_init__(self) -> None:
        object.__setattr__(self, "stages", tuple(self.stages))

    @property
    def separated(self) -> bool:
        """Stage footprints strictly increase inside every part."""
        for _, records in groupby(self.stages, key=lambda record: record.part):
            footprints = [record.footprint for record in records]
            if any(b <= a for a, b in zip(footprints, footprints[1:])):
                return False
        return True

    @property
    def verified(self) -> bool:
        return self.image_contains_copy and self.separated and all(s.nested for s in self.stages)
