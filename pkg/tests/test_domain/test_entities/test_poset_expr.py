"""Poset expression entity tests."""

import pytest

from domain.orders.entities.poset_expr import (
    FIN_TIMES_FIN_PLUS,
    P_FIN_PLUS,
    TRIVIAL,
    Opaque,
    Power,
    Product,
    ReducedPower,
)


class TestPosetExpr:
    """Test printing and validation of expression nodes."""

    def test_named_factors(self):
        """Test the named quotients."""
        assert str(P_FIN_PLUS) == "(P(w)/Fin)^+"
        assert str(FIN_TIMES_FIN_PLUS) == "(P(wxw)/(Fin x Fin))^+"

    def test_compound_printing(self):
        """Test products, powers and reduced powers."""
        assert str(Product((P_FIN_PLUS, FIN_TIMES_FIN_PLUS))) == "(P(w)/Fin)^+ x (P(wxw)/(Fin x Fin))^+"
        assert str(Power(P_FIN_PLUS, 2)) == "((P(w)/Fin)^+)^2"
        assert str(ReducedPower(P_FIN_PLUS, 3)) == "(rp^3(P(w)/Fin))^+"
        assert str(TRIVIAL) == "1"
        assert str(Opaque("D-block w*w")) == "Opaque[D-block w*w]"

    def test_validation(self):
        """Test exponent and iteration bounds."""
        with pytest.raises(ValueError, match="exponent must be positive"):
            Power(P_FIN_PLUS, 0)
        with pytest.raises(ValueError, match="cannot be negative"):
            ReducedPower(P_FIN_PLUS, -1)

    def test_properties(self):
        """Test every node carries the scattered-order properties."""
        for expr in (P_FIN_PLUS, Power(P_FIN_PLUS, 2), Opaque("x")):
            assert expr.properties.sigma_closed
            assert expr.properties.atomless
            assert expr.properties.size == "𝔠"
