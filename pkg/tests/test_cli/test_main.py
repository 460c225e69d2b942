"""Command-line front end tests."""

import io
import json

import pytest

from cli.main import EXIT_NEGATIVE, EXIT_OK, EXIT_USAGE, flatten, run


@pytest.fixture
def cli(use_cases):
    """Run the CLI in-process; returns (exit code, stdout, stderr)."""

    def invoke(*argv):
        out, err = io.StringIO(), io.StringIO()
        code = run(list(argv), out=out, err=err, use_cases=use_cases)
        return code, out.getvalue(), err.getvalue()

    return invoke


class TestExitCodes:
    """Test the three exit codes."""

    def test_negative_answer_is_printed(self, cli):
        code, out, _ = cli("embeds", "w+1", "w")

        assert code == EXIT_NEGATIVE
        assert "embeds: false" in out

    def test_positive_answer(self, cli):
        code, out, _ = cli("embeds", "w", "w+1")

        assert code == EXIT_OK
        assert "embeds: true" in out

    def test_missing_argument(self, cli):
        code, _, err = cli("embeds", "w")

        assert code == EXIT_USAGE
        assert "usage:" in err
        assert "Term grammar" in err

    def test_unknown_command(self, cli):
        code, _, _ = cli("frobnicate", "w")
        assert code == EXIT_USAGE

    def test_syntax_error(self, cli):
        code, out, err = cli("parse", "w[1")

        assert code == EXIT_USAGE
        assert out == ""
        assert "Term grammar" in err

    def test_missing_spec_file(self, cli, tmp_path):
        code, _, err = cli("copy", "w", "--spec", str(tmp_path / "absent.json"))

        assert code == EXIT_USAGE
        assert err.startswith("error:")

    def test_bad_depth(self, cli):
        code, _, err = cli("witness", "w", "w", "--depth", "0")

        assert code == EXIT_USAGE
        assert "Depth must be between 1" in err

    def test_help(self, cli):
        code, _, _ = cli("--help")
        assert code == EXIT_OK


class TestCommands:
    """Test individual subcommands."""

    def test_sq(self, cli):
        code, out, _ = cli("sq", "w[w]")

        assert code == EXIT_OK
        assert "expression: (P(wxw)/(Fin x Fin))^+" in out

    def test_blocks(self, cli):
        code, out, _ = cli("blocks", "w*+w")

        assert code == EXIT_OK
        assert "bar_notation: w*w" in out

    def test_mdecomp(self, cli):
        code, out, _ = cli("mdecomp", "1 + w* + 1")

        assert code == EXIT_OK
        assert "m: 2" in out
        assert "parts: 1, w*[1; 1]" in out

    def test_machine_format(self, cli):
        code, out, _ = cli("parse", "1 + w", "--format", "machine")

        assert code == EXIT_OK
        data = json.loads(out)
        assert data["ordinal"] == "w"
        assert data["mirror"] == "w* + 1"

    def test_global_format(self, cli):
        code, out, _ = cli("--format", "machine", "ordinal", "w^2")

        assert code == EXIT_OK
        assert json.loads(out)["term"] == "w[w]"

    def test_copy(self, cli, write_json):
        path = write_json("evens.json", {"parts": [{"tail": {"periodic": ["full", "empty"]}}]})
        code, out, _ = cli("copy", "w", "--spec", path)

        assert code == EXIT_OK
        assert "contains_copy: true" in out

    def test_lestar_false(self, cli, write_json):
        evens = write_json("evens.json", [{"tail": {"periodic": ["full", "empty"]}}])
        full = write_json("full.json", ["full"])
        code, out, _ = cli("lestar", "w", "--a", full, "--b", evens)

        assert code == EXIT_NEGATIVE
        assert "verdict: false" in out

    def test_lestar_unknown_is_not_negative(self, cli, write_json):
        full = write_json("full.json", ["full", "full"])
        code, out, _ = cli("lestar", "1 + w", "--a", full, "--b", full)

        assert code == EXIT_OK
        assert "verdict: unknown" in out

    def test_witness(self, cli):
        code, out, _ = cli("witness", "w", "w + 1", "--depth", "2")

        assert code == EXIT_OK
        assert "witness.0: 0.0, 0.0" in out

    def test_corpus(self, cli):
        code, out, _ = cli("corpus", "--seed", "1", "--count", "3")

        assert code == EXIT_OK
        assert "failures: 0" in out

    def test_corpus_suite_selection(self, cli):
        code, out, _ = cli(
            "corpus", "--seed", "1", "--count", "2", "--suite", "ordinal", "--suite", "mirror"
        )

        assert code == EXIT_OK
        assert "cases.0.suites: ordinal, mirror" in out

    def test_corpus_unknown_suite(self, cli):
        code, _, err = cli("corpus", "--suite", "speed")

        assert code == EXIT_USAGE
        assert "invalid choice" in err


class TestFlatten:
    def test_nested_paths(self):
        data = {"a": {"b": [1, 2]}, "c": [{"d": True}], "e": None, "f": {}}
        assert list(flatten(data)) == [
            ("a.b", "1, 2"),
            ("c.0.d", "true"),
            ("e", "none"),
            ("f", "{}"),
        ]
