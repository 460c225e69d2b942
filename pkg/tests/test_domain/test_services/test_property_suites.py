"""Per-case property suite tests."""

import pytest

from domain.orders.exceptions.order_exceptions import FiniteTermError
from domain.orders.services.property_suites import SUITES, PropertySuites, check_suites
from domain.orders.services.term_parser import parse_term


@pytest.fixture
def suites():
    return PropertySuites(witness_depth=3, fusion_stages=4)


class TestCheck:
    """Test running suites on one case."""

    def test_omega_against_its_square(self, suites):
        report = suites.check(parse_term("w"), parse_term("w[w]"))

        assert report.m == 1
        assert report.suites == SUITES
        assert report.problems == ()

    def test_square_against_omega(self, suites):
        """Test the pairwise suites agree on a non-embedding."""
        report = suites.check(parse_term("w[w]"), parse_term("w"))

        assert report.problems == ()

    def test_selected_suites_only(self, suites, mocker):
        structure = mocker.patch.object(suites, "structure", return_value=[])
        suites._suites["structure"] = structure

        report = suites.check(parse_term("w"), parse_term("w"), ("ordinal",))

        assert report.suites == ("ordinal",)
        structure.assert_not_called()

    def test_problems_are_prefixed(self, suites):
        suites._suites["mirror"] = lambda term, partner: ["changed"]

        report = suites.check(parse_term("w"), parse_term("w"), ("mirror",))

        assert report.problems == ("mirror: changed",)

    def test_order_error_is_reported(self, suites, mocker):
        mocker.patch.object(
            suites.copies, "disjoint_copies", side_effect=FiniteTermError("no copies here")
        )

        report = suites.check(parse_term("w"), parse_term("w"), ("disjoint",))

        assert report.problems == ("disjoint: no copies here",)

    def test_unknown_suite_raises_error(self, suites):
        with pytest.raises(ValueError, match="Unknown suite"):
            suites.check(parse_term("w"), parse_term("w"), ("speed",))

    def test_cases_do_not_share_deciders(self):
        assert PropertySuites().decider is not PropertySuites().decider


class TestOrdinal:
    """Test the ordinal oracle suite."""

    def test_agrees_with_ordinal_values(self, suites):
        assert suites.ordinal(parse_term("w"), parse_term("w + 1")) == []
        assert suites.ordinal(parse_term("w + 1"), parse_term("w")) == []

    def test_disagreement_is_reported(self, suites, mocker):
        mocker.patch.object(suites.decider, "embeds", return_value=False)

        problems = suites.ordinal(parse_term("w"), parse_term("w + 1"))

        assert len(problems) == 1
        assert "disagrees" in problems[0]

    def test_non_ordinals_are_skipped(self, suites, mocker):
        embeds = mocker.patch.object(suites.decider, "embeds")

        assert suites.ordinal(parse_term("w*"), parse_term("w")) == []
        embeds.assert_not_called()


class TestExactTier:
    @pytest.mark.parametrize(
        "text,expected",
        [("w", True), ("w[w]", True), ("w + 1", True), ("1 + w", False), ("w[1, w]", False)],
    )
    def test_exact_tier(self, suites, text, expected):
        assert suites.exact_tier(parse_term(text)) is expected


class TestTermSuites:
    """Test the single-term suites."""

    @pytest.mark.parametrize("text", ["w", "w*", "w[w]", "w + 1"])
    def test_separative_on_towers(self, suites, text):
        assert suites.separative(parse_term(text), parse_term(text)) == []

    def test_separative_outside_exact_tier(self, suites):
        assert suites.separative(parse_term("1 + w"), parse_term("w")) == []

    @pytest.mark.parametrize("text", ["w", "w*[w*]", "w + 1"])
    def test_fusion_of_doublings(self, suites, text):
        assert suites.fusion(parse_term(text), parse_term(text)) == []

    def test_fusion_skips_finite_terms(self, suites, mocker):
        fusion = mocker.patch.object(suites.copies, "fusion")

        assert suites.fusion(parse_term("3"), parse_term("3")) == []
        fusion.assert_not_called()

    @pytest.mark.parametrize("text", ["w + w", "w*[w] + 1 + w", "w*[1, w] + 1 + w"])
    def test_disjoint_copies(self, suites, text):
        assert suites.disjoint(parse_term(text), parse_term(text)) == []

    def test_witness_on_an_embedding(self, suites):
        assert suites.witness(parse_term("w* + w"), parse_term("w[w*, w]")) == []


class TestCheckSuites:
    def test_order_is_kept(self):
        assert check_suites(["fusion", "structure"]) == ("fusion", "structure")

    def test_unknown_names_are_listed(self):
        with pytest.raises(ValueError, match="speed, size"):
            check_suites(["speed", "ordinal", "size"])
