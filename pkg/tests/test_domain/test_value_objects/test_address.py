"""Address value object tests."""

import pytest

from domain.orders.exceptions.order_exceptions import ShapeMismatchError
from domain.orders.value_objects.address import Address, compare, order_key
from domain.orders.value_objects.term import OMEGA, OMEGA_STAR, SINGLETON, Term


class TestAddress:
    """Test Address and point order."""

    def test_validation(self):
        """Test that paths are non-empty and non-negative."""
        with pytest.raises(ValueError, match="cannot be empty"):
            Address(())
        with pytest.raises(ValueError, match="non-negative"):
            Address((0, -1))

    def test_parts(self):
        """Test part and inner accessors and printing."""
        address = Address((1, 4, 2))
        assert address.part == 1
        assert address.inner == (4, 2)
        assert str(address) == "1.4.2"

    def test_order_inside_omega_star_is_reversed(self):
        """Test that larger outward indices lie further left in an ω*-sum."""
        term = Term.of(OMEGA_STAR, OMEGA)
        assert compare(term, Address((0, 3)), Address((0, 1))) == -1
        assert compare(term, Address((0, 0)), Address((1, 0))) == -1
        assert compare(term, Address((1, 2)), Address((1, 2))) == 0

    def test_path_must_reach_a_point(self):
        """Test shape errors for short and long paths."""
        term = Term.of(OMEGA, SINGLETON)
        with pytest.raises(ShapeMismatchError, match="stops before"):
            order_key(term, Address((0,)))
        with pytest.raises(ShapeMismatchError, match="continues past"):
            order_key(term, Address((1, 0)))
        with pytest.raises(ShapeMismatchError, match="No such part"):
            order_key(term, Address((2,)))
