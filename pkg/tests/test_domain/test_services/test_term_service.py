"""Term service tests."""

import pytest

from domain.orders.services.term_parser import parse_term
from domain.orders.services.term_service import (
    is_valid,
    mirror,
    ord_value,
    truncate,
)
from domain.orders.value_objects.cnf import CNF
from domain.orders.value_objects.term import OMEGA, SINGLETON, OmegaSum, Term


class TestValidity:
    """Test is_valid."""

    def test_valid_and_invalid_terms(self):
        """Test the head condition recursively."""
        assert is_valid(parse_term("w[1; w]"))
        assert not is_valid(Term.of(OmegaSum((OMEGA,), (SINGLETON,))))
        assert not is_valid(Term.of(OmegaSum((), (OmegaSum((OMEGA,), (SINGLETON,)),))))


class TestMirror:
    """Test mirror."""

    def test_mirror_reverses_parts_and_kinds(self):
        """Test mirror of a mixed term."""
        assert mirror(parse_term("1 + w")) == parse_term("w* + 1")
        assert mirror(parse_term("w[1; w]")) == parse_term("w*[w*; 1]")

    @pytest.mark.parametrize("text", ["w", "w* + w", "w[w, 1] + w*[w; 1]", "3 + w[w*]"])
    def test_involution(self, text):
        """Test mirror(mirror(t)) == t."""
        term = parse_term(text)
        assert mirror(mirror(term)) == term


class TestOrdValue:
    """Test ord_value."""

    @pytest.mark.parametrize(
        "text,expected",
        [
            ("1", "1"),
            ("3", "3"),
            ("w", "w"),
            ("1 + w", "w"),
            ("w + 1", "w + 1"),
            ("w + w", "w*2"),
            ("w[w]", "w^2"),
            ("w[1; w]", "w^2"),
            ("w[w, 1]", "w^2"),
            ("w[w] + w + 2", "w^2 + w + 2"),
        ],
    )
    def test_values(self, text, expected):
        """Test ordinal values of ω*-free terms."""
        assert ord_value(parse_term(text)) == CNF.from_string(expected)

    def test_reverse_sums_have_no_value(self):
        """Test that an ω*-sum anywhere gives None."""
        assert ord_value(parse_term("w*")) is None
        assert ord_value(parse_term("w[w*]")) is None


class TestTruncate:
    """Test truncate."""

    def test_omega_truncation(self):
        """Test depth counts pattern repetitions."""
        points = truncate(parse_term("w"), 3)
        assert [str(a) for a in points] == ["0.0", "0.1", "0.2"]

    def test_points_are_listed_in_order(self):
        """Test ω*-sums list their summands right to left."""
        points = truncate(parse_term("w* + 1"), 2)
        assert [str(a) for a in points] == ["0.1", "0.0", "1"]

    def test_nested_truncation(self):
        """Test head plus depth times pattern at every level."""
        assert len(truncate(parse_term("w[1; w]"), 2)) == 1 + 2 * 2

    def test_depth_must_be_positive(self):
        """Test depth validation."""
        with pytest.raises(ValueError, match="must be positive"):
            truncate(parse_term("w"), 0)
