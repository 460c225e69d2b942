"""Corpus runner tests."""

import pytest

from infrastructure.services.corpus_runner import CorpusRunner


class TestCorpusRunner:
    """Test ordered evaluation of corpus cases."""

    def test_invalid_workers(self):
        with pytest.raises(ValueError, match="max_workers must be at least 1"):
            CorpusRunner(max_workers=0)

    def test_sequential(self, mocker):
        """Test one worker evaluates in place without a pool."""
        pool = mocker.patch("infrastructure.services.corpus_runner.ThreadPoolExecutor")
        evaluate = mocker.Mock(side_effect=lambda index, case: case.upper())

        results = CorpusRunner(max_workers=1).run(["a", "b"], evaluate)

        assert results == ["A", "B"]
        evaluate.assert_any_call(0, "a")
        evaluate.assert_any_call(1, "b")
        pool.assert_not_called()

    def test_threaded_order(self):
        """Test results come back in case order."""
        results = CorpusRunner(max_workers=4).run(list(range(12)), lambda index, case: (index, case * case))
        assert results == [(i, i * i) for i in range(12)]

    def test_empty_corpus(self):
        assert CorpusRunner(max_workers=3).run([], lambda index, case: case) == []
