"""Subset spec algebra tests."""

import pytest

from domain.orders.entities.subset_spec import EMPTY, FULL, PeriodicTail, SumSpec, TermSpec
from domain.orders.exceptions.order_exceptions import ShapeMismatchError
from domain.orders.services.spec_algebra import (
    check_shape,
    complement,
    in_tower_ideal,
    intersect,
    is_subset,
    normalize,
    restrict,
    union,
)
from domain.orders.services.term_parser import parse_term
from domain.orders.value_objects.term import OMEGA

EVENS = SumSpec((), PeriodicTail.of([FULL, EMPTY]))
ODDS = SumSpec((), PeriodicTail.of([EMPTY, FULL]))
FIRST_POINT_OF_EACH_COLUMN = SumSpec((), PeriodicTail(1, ((0, SumSpec.of({0: FULL})),), EMPTY))


class TestNormalize:
    """Test the canonical form."""

    def test_drops_fill_entries(self):
        assert normalize(OMEGA, EVENS) == SumSpec((), PeriodicTail(2, ((0, FULL),), EMPTY))

    def test_shortest_period(self):
        six = SumSpec((), PeriodicTail.of([FULL, FULL, EMPTY, FULL, FULL, EMPTY]))
        three = SumSpec((), PeriodicTail.of([FULL, FULL, EMPTY]))
        expected = SumSpec((), PeriodicTail(3, ((0, FULL), (1, FULL)), EMPTY))
        assert normalize(OMEGA, six) == expected
        assert normalize(OMEGA, three) == expected

    def test_uniform_collapse(self):
        assert normalize(OMEGA, SumSpec((), PeriodicTail.of([FULL, FULL]))) is FULL
        assert normalize(OMEGA, SumSpec(((3, EMPTY),), EMPTY)) is EMPTY


class TestSetOperations:
    """Test union, intersection and complement."""

    def test_evens_and_odds(self):
        assert union(OMEGA, EVENS, ODDS) is FULL
        assert intersect(OMEGA, EVENS, ODDS) is EMPTY

    def test_complement_of_point(self):
        assert complement(OMEGA, SumSpec.of({0: FULL})) == SumSpec(((0, EMPTY),), FULL)

    def test_subset(self):
        assert is_subset(OMEGA, SumSpec.of({2: FULL}), EVENS)
        assert not is_subset(OMEGA, SumSpec.of({1: FULL}), EVENS)


class TestCheckShape:
    """Test shape errors and their paths."""

    def test_tail_length(self):
        term = parse_term("w[1, w]")
        spec = TermSpec((SumSpec((), PeriodicTail(3, (), EMPTY)),))
        with pytest.raises(ShapeMismatchError, match="not a multiple") as info:
            check_shape(term, spec)
        assert info.value.path == "parts[0].tail"

    def test_singleton(self):
        with pytest.raises(ShapeMismatchError, match="admits only full or empty"):
            check_shape(parse_term("1"), TermSpec((SumSpec((), FULL),)))

    def test_part_count(self):
        with pytest.raises(ShapeMismatchError, match="Expected 1 part spec\\(s\\), got 2"):
            check_shape(parse_term("w"), TermSpec((FULL, FULL)))


class TestTowerIdeal:
    """Test iterated ideal membership."""

    def test_finite_sets(self):
        assert in_tower_ideal(SumSpec.of({0: FULL, 3: FULL}), 1)
        assert in_tower_ideal(EMPTY, 1)
        assert not in_tower_ideal(FULL, 1)

    def test_infinite_set(self):
        assert not in_tower_ideal(EVENS, 1)

    def test_depth_two(self):
        assert in_tower_ideal(FIRST_POINT_OF_EACH_COLUMN, 2)
        assert not in_tower_ideal(EVENS, 2)


class TestRestrict:
    """Test induced suborders."""

    @pytest.mark.parametrize(
        "text,spec,expected",
        [
            ("w", EVENS, "w"),
            ("w", SumSpec.of({0: FULL, 2: FULL}), "1 + 1"),
            ("w*", EVENS, "w*"),
            ("w[w]", FIRST_POINT_OF_EACH_COLUMN, "w"),
        ],
    )
    def test_suborders(self, text, spec, expected, decider):
        assert restrict(parse_term(text), TermSpec((spec,)), decider) == parse_term(expected)

    def test_empty_selection(self, decider):
        assert restrict(parse_term("w"), TermSpec((EMPTY,)), decider) is None
