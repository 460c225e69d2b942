from functools import lru_cache

from infrastructure.config.settings import settings
from infrastructure.services.corpus_runner import CorpusRunner

# Domain services
from domain.orders.services.copy_service import CopyService
from domain.orders.services.embedding_service import EmbeddingDecider
from domain.orders.services.forcing_service import ForcingService
from domain.orders.services.hclass_service import HClassService

# Application layer
from application.use_cases.analysis_use_cases import AnalysisUseCases


@lru_cache()
def get_embedding_decider() -> EmbeddingDecider:
    """Get the shared, memoizing embedding decider."""
    return EmbeddingDecider()


@lru_cache()
def get_hclass_service() -> HClassService:
    return HClassService(get_embedding_decider())


@lru_cache()
def get_copy_service() -> CopyService:
    return CopyService(get_embedding_decider())


@lru_cache()
def get_forcing_service() -> ForcingService:
    return ForcingService(get_embedding_decider())


@lru_cache()
def get_corpus_runner() -> CorpusRunner:
    return CorpusRunner(max_workers=settings.CORPUS_MAX_WORKERS)


@lru_cache()
def get_analysis_use_cases() -> AnalysisUseCases:
    """Get analysis use cases wired with the shared domain services."""
    return AnalysisUseCases(
        decider=get_embedding_decider(),
        hclass_service=get_hclass_service(),
        copy_service=get_copy_service(),
        forcing_service=get_forcing_service(),
        corpus_runner=get_corpus_runner(),
    )
