"""Embedding algebra tests."""

import pytest

from domain.orders.entities.embedding_rep import (
    IntoSummand,
    PartMap,
    PointMap,
    SumMap,
    TermEmbedding,
)
from domain.orders.exceptions.order_exceptions import ShapeMismatchError
from domain.orders.services.embedding_algebra import (
    apply_rep,
    compose_embeddings,
    compose_reps,
    identity_embedding,
    identity_rep,
    shift_rep,
    validate_embedding,
    validate_rep,
)
from domain.orders.services.term_parser import parse_term
from domain.orders.value_objects.term import OMEGA, OMEGA_STAR, SINGLETON, OmegaSum, omega_tower

POINT = PointMap(())
DOUBLE = SumMap((), ((0, POINT),), 2)
SHIFT = SumMap((), ((1, POINT),), 1)


class TestApplyAndCompose:
    """Test apply_rep, shift_rep and compose_reps."""

    def test_identity(self):
        """Test the identity map on a nested sum."""
        term = OmegaSum((SINGLETON,), (OMEGA,))
        rep = identity_rep(term)
        assert apply_rep(rep, (0,)) == (0,)
        assert apply_rep(rep, (5, 3)) == (5, 3)

    def test_apply_periodic_affine(self):
        """Test σ(i) = 2i."""
        assert apply_rep(DOUBLE, (7,)) == (14,)
        assert apply_rep(IntoSummand(3, DOUBLE), (2,)) == (3, 4)

    def test_apply_shape_errors(self):
        """Test paths that do not fit the map."""
        with pytest.raises(ShapeMismatchError, match="non-singleton path"):
            apply_rep(POINT, (1,))
        with pytest.raises(ShapeMismatchError, match="empty path"):
            apply_rep(DOUBLE, ())

    def test_compose_applies_inner_first(self):
        """Test compose(outer, inner) = outer after inner."""
        assert compose_reps(DOUBLE, SHIFT) == SumMap((), ((2, POINT),), 2)
        assert apply_rep(compose_reps(SHIFT, DOUBLE), (5,)) == (11,)
        assert compose_reps(DOUBLE, DOUBLE) == SumMap((), ((0, POINT),), 4)

    def test_compose_with_points(self):
        """Test composition through point maps and summand maps."""
        assert compose_reps(DOUBLE, PointMap((3,))) == PointMap((6,))
        assert compose_reps(DOUBLE, IntoSummand(2, POINT)) == IntoSummand(4, POINT)

    def test_shift(self):
        """Test top-level target shifts."""
        assert shift_rep(DOUBLE, 3) == SumMap((), ((3, POINT),), 2)
        assert shift_rep(PointMap((1, 2)), 1) == PointMap((2, 2))
        with pytest.raises(ShapeMismatchError, match="Cannot shift"):
            shift_rep(POINT, 1)


class TestValidation:
    """Test validate_rep and validate_embedding."""

    def test_valid_maps(self):
        """Test well-formed maps pass."""
        validate_rep(DOUBLE, OMEGA, OMEGA)
        validate_rep(IntoSummand(0, identity_rep(OMEGA)), OMEGA, omega_tower(2))

    def test_kind_mismatch(self):
        """Test summand maps between sums of different kinds."""
        with pytest.raises(ShapeMismatchError, match="same kind"):
            validate_rep(DOUBLE, OMEGA, OMEGA_STAR)

    def test_point_for_sum(self):
        """Test an infinite sum cannot go to a point."""
        with pytest.raises(ShapeMismatchError, match="cannot be sent to a point"):
            validate_rep(PointMap((0,)), OMEGA, OMEGA)

    def test_stride_multiple_of_pattern(self):
        """Test strides respect the target pattern length."""
        target = OmegaSum((), (SINGLETON, SINGLETON))
        with pytest.raises(ShapeMismatchError, match="Stride must be a multiple"):
            validate_rep(SumMap((), ((0, POINT),), 1), OMEGA, target)

    def test_error_path(self):
        """Test errors name the offending position."""
        with pytest.raises(ShapeMismatchError) as info:
            validate_rep(SumMap((), ((0, PointMap((0,))),), 1), omega_tower(2), OMEGA)
        assert info.value.path == "map.periodic[0]"

    def test_overlapping_parts(self):
        """Test parts sharing a target part must be separated."""
        term = parse_term("w + w")
        clash = TermEmbedding((PartMap(1, identity_rep(OMEGA)), PartMap(1, identity_rep(OMEGA))))
        with pytest.raises(ShapeMismatchError, match="overlap"):
            validate_embedding(clash, term, term)

    def test_parts_sharing_a_summand(self):
        """Test two parts may share an outer summand when separated inside it."""
        source, target = parse_term("1 + w"), parse_term("w[w]")
        embedding = TermEmbedding((PartMap(0, PointMap((0, 0))), PartMap(0, IntoSummand(0, SHIFT))))
        validate_embedding(embedding, source, target)

        clash = TermEmbedding((PartMap(0, PointMap((0, 1))), PartMap(0, IntoSummand(0, SHIFT))))
        with pytest.raises(ShapeMismatchError, match="overlap"):
            validate_embedding(clash, source, target)

    def test_parts_sharing_a_reversed_summand(self):
        source, target = parse_term("w* + 1"), parse_term("w*[w*]")
        embedding = TermEmbedding((PartMap(0, IntoSummand(0, SHIFT)), PartMap(0, PointMap((0, 0)))))
        validate_embedding(embedding, source, target)

    def test_parts_out_of_order(self):
        term = parse_term("w + w")
        swapped = TermEmbedding((PartMap(1, identity_rep(OMEGA)), PartMap(0, identity_rep(OMEGA))))
        with pytest.raises(ShapeMismatchError, match="out of order"):
            validate_embedding(swapped, term, term)

    def test_identity_embedding(self):
        """Test identity embeddings validate and compose to themselves."""
        term = parse_term("1 + w* + w[w]")
        identity = identity_embedding(term)
        validate_embedding(identity, term, term)
        assert compose_embeddings(identity, identity) == identity
