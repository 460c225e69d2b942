"""Decomposition and block entity tests."""

import pytest

from domain.orders.entities.decomposition import (
    Block,
    BlockKind,
    Decomposition,
    Placement,
    glyph,
)
from domain.orders.value_objects.term import OMEGA, OMEGA_STAR, SINGLETON


class TestPlacement:
    """Test Placement bookkeeping."""

    def test_base(self):
        """Test base placements of singletons and sums."""
        assert Placement.base(0, SINGLETON) == Placement(0, (), None)
        assert Placement.base(1, OMEGA) == Placement(1, (), 0)

    def test_nested_and_moved(self):
        """Test nesting under a new summand and moving outward."""
        placement = Placement(2, (), 0)
        assert placement.nested(0) == Placement(2, (0,), 0)
        assert placement.moved() == Placement(2, (), 1)
        assert Placement(2, (3, 1), None).moved() == Placement(2, (4, 1), None)

    def test_singleton_cannot_host(self):
        """Test that a bare singleton placement cannot move."""
        with pytest.raises(ValueError, match="cannot host a merge"):
            Placement(0).moved()


class TestDecomposition:
    """Test Decomposition."""

    def test_alignment(self):
        """Test parts, provenance and placements align."""
        with pytest.raises(ValueError, match="must align"):
            Decomposition((OMEGA,), ((0, 1), (1, 2)), ((Placement(0, (), 0),),))

    def test_m(self):
        """Test the part count."""
        decomposition = Decomposition((OMEGA,), ((0, 1),), ((Placement(0, (), 0),),))
        assert decomposition.m == 1


class TestBlock:
    """Test Block."""

    def test_printing(self):
        """Test block labels and glyphs."""
        block = Block(BlockKind.D, 3, 5, (OMEGA_STAR, OMEGA))
        assert str(block) == "D{3..4}"
        assert block.glyphs() == "w*w"
        assert block.size == 2
        assert block.shifted(2) == Block(BlockKind.D, 5, 7, (OMEGA_STAR, OMEGA))

    def test_glyph(self):
        """Test part glyphs."""
        assert [glyph(p) for p in (SINGLETON, OMEGA, OMEGA_STAR)] == ["1", "w", "w*"]
