"""Concurrent evaluation of independent corpus cases, reported in case order.

Case functions must not share mutable state across threads; the corpus
use case builds a fresh decider for every case.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, List, Sequence, TypeVar

from infrastructure.config.settings import settings

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


class CorpusRunner:
    """Maps a pure case function over a corpus with a thread pool."""

    def __init__(self, max_workers: int = settings.CORPUS_MAX_WORKERS) -> None:
        if max_workers < 1:
            raise ValueError("max_workers must be at least 1")
        self.max_workers = max_workers

    def run(self, cases: Sequence[T], evaluate: Callable[[int, T], R]) -> List[R]:
        if self.max_workers == 1 or len(cases) < 2:
            return [evaluate(index, case) for index, case in enumerate(cases)]
        with ThreadPoolExecutor(max_workers=self.max_workers) as pool:
            # map preserves submission order regardless of completion order
            results = list(pool.map(evaluate, range(len(cases)), cases))
        logger.info(f"Evaluated {len(results)} corpus case(s) on {self.max_workers} worker(s)")
        return results
