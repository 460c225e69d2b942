"""Embedding representation entity tests."""

import pytest

from domain.orders.entities.embedding_rep import (
    IntoSummand,
    PartMap,
    PointMap,
    SumMap,
    TermEmbedding,
    WitnessFailure,
    WitnessMap,
)
from domain.orders.value_objects.address import Address

POINT = PointMap(())


class TestSumMap:
    """Test SumMap validation and periodic-affine lookup."""

    def test_entry_lookup(self):
        """Test explicit and periodic entries."""
        rep = SumMap(((0, POINT),), ((3, POINT), (4, POINT)), 5)
        assert rep.start == 1
        assert rep.period == 2
        assert rep.target_index(0) == 0
        assert rep.target_index(1) == 3
        assert rep.target_index(2) == 4
        assert rep.target_index(3) == 8
        assert rep.target_index(6) == 14
        assert rep.inner_at(6) == POINT

    def test_periodic_part_required(self):
        """Test that a sum map has a periodic part."""
        with pytest.raises(ValueError, match="Periodic part cannot be empty"):
            SumMap(((0, POINT),), (), 1)

    def test_strictly_increasing(self):
        """Test that targets increase strictly."""
        with pytest.raises(ValueError, match="strictly increasing"):
            SumMap(((2, POINT),), ((1, POINT),), 1)

    def test_stride_covers_offsets(self):
        """Test that the stride clears the periodic offsets."""
        with pytest.raises(ValueError, match="Stride too small"):
            SumMap((), ((0, POINT), (2, POINT)), 2)
        with pytest.raises(ValueError, match="Stride must be positive"):
            SumMap((), ((0, POINT),), 0)


class TestOtherMaps:
    """Test PointMap, IntoSummand and TermEmbedding."""

    def test_point_map_validation(self):
        """Test non-negative point targets."""
        with pytest.raises(ValueError, match="non-negative"):
            PointMap((-1,))

    def test_into_summand_validation(self):
        """Test non-negative summand index."""
        with pytest.raises(ValueError, match="non-negative"):
            IntoSummand(-1, POINT)

    def test_part_targets_non_decreasing(self):
        """Test that part maps preserve the part order."""
        with pytest.raises(ValueError, match="non-decreasing"):
            TermEmbedding((PartMap(1, POINT), PartMap(0, POINT)))


class TestWitness:
    """Test WitnessMap and WitnessFailure."""

    def test_witness_map(self):
        """Test accessors."""
        witness = WitnessMap(((Address((0,)), Address((1, 2))),))
        assert len(witness) == 1
        assert witness.sources == (Address((0,)),)
        assert witness.targets == (Address((1, 2)),)

    def test_failure_is_falsy(self):
        """Test that failures are negative values."""
        assert not WitnessFailure("no embedding")
