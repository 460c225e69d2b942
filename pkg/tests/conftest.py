"""Pytest configuration and fixtures."""

import pytest
import os
import sys

# Add project root to path
project_root = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
sys.path.insert(0, project_root)

from domain.orders.services.copy_service import CopyService
from domain.orders.services.embedding_service import EmbeddingDecider
from domain.orders.services.forcing_service import ForcingService
from domain.orders.services.hclass_service import HClassService
from domain.orders.services.term_parser import parse_term
from application.use_cases.analysis_use_cases import AnalysisUseCases
from infrastructure.services.corpus_runner import CorpusRunner


@pytest.fixture(scope="session")
def decider() -> EmbeddingDecider:
    """Shared memoizing decider; all decisions are pure."""
    return EmbeddingDecider()


@pytest.fixture(scope="session")
def hclass_service(decider: EmbeddingDecider) -> HClassService:
    return HClassService(decider)


@pytest.fixture(scope="session")
def copy_service(decider: EmbeddingDecider) -> CopyService:
    return CopyService(decider)


@pytest.fixture(scope="session")
def forcing_service(decider: EmbeddingDecider) -> ForcingService:
    return ForcingService(decider)


@pytest.fixture
def use_cases(decider, hclass_service, copy_service, forcing_service) -> AnalysisUseCases:
    """Use cases with a sequential corpus runner."""
    return AnalysisUseCases(
        decider=decider,
        hclass_service=hclass_service,
        copy_service=copy_service,
        forcing_service=forcing_service,
        corpus_runner=CorpusRunner(max_workers=1),
    )


@pytest.fixture
def term():
    """Parse helper: term("w+1")."""
    return parse_term


@pytest.fixture
def write_json(tmp_path):
    """Write a JSON document to a temporary file and return its path."""
    import json

    def write(name: str, data) -> str:
        path = tmp_path / name
        path.write_text(json.dumps(data))
        return str(path)

    return write
