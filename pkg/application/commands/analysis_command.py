from dataclasses import dataclass
from typing import Optional, Tuple

from domain.orders.services.property_suites import SUITES, check_suites
from infrastructure.config.settings import settings


@dataclass(frozen=True)
class EmbedsCommand:
    """Command to decide embeddability, optionally with a witness."""
    source: str
    target: str
    depth: Optional[int] = None

    def __post_init__(self) -> None:
        if self.depth is not None and not 1 <= self.depth <= settings.MAX_WITNESS_DEPTH:
            raise ValueError(f"Depth must be between 1 and {settings.MAX_WITNESS_DEPTH}")


@dataclass(frozen=True)
class CopyCommand:
    """Command to test a spec file for a copy of the term."""
    term: str
    spec_path: str


@dataclass(frozen=True)
class LeStarCommand:
    """Command to compare two spec files in the separative order."""
    term: str
    a_path: str
    b_path: str


@dataclass(frozen=True)
class FusionCommand:
    """Command to fuse a chain of self-embeddings."""
    term: str
    chain_path: str
    stages: int = settings.DEFAULT_FUSION_STAGES

    def __post_init__(self) -> None:
        if not 1 <= self.stages <= settings.MAX_FUSION_STAGES:
            raise ValueError(f"Stages must be between 1 and {settings.MAX_FUSION_STAGES}")


@dataclass(frozen=True)
class CorpusCommand:
    """Command to run the selected property suites over a seeded corpus."""
    seed: int = settings.CORPUS_SEED
    count: int = settings.CORPUS_COUNT
    suites: Tuple[str, ...] = SUITES

    def __post_init__(self) -> None:
        if self.count < 0:
            raise ValueError("Count cannot be negative")
        object.__setattr__(self, "suites", check_suites(self.suites))
        if not self.suites:
            raise ValueError("Select at least one suite")
