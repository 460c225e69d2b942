"""Command-line front end over the analysis use cases.

Exit codes: 0 on success, 1 when the analysis answers in the negative
(the negative is still printed), 2 on usage, parse and input errors.
"""

import argparse
import logging
import sys
from typing import Any, Callable, Dict, Iterator, Optional, Sequence, TextIO, Tuple

from pydantic import BaseModel

from application.commands.analysis_command import (
    CopyCommand,
    CorpusCommand,
    EmbedsCommand,
    FusionCommand,
    LeStarCommand,
)
from application.use_cases.analysis_use_cases import AnalysisUseCases, is_negative
from domain.orders.exceptions.order_exceptions import OrderError, TermSyntaxError
from domain.orders.services.property_suites import SUITES
from domain.orders.services.term_parser import GRAMMAR
from infrastructure.config.settings import settings
from infrastructure.dependencies.service_container import get_analysis_use_cases

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2

FORMATS = ["text", "machine"]


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """Raises instead of exiting so run() owns the exit code."""

    def error(self, message: str) -> None:  # type: ignore[override]
        raise _UsageError(message)


class _Commands:
    """Subcommand registry; every subcommand also accepts --format."""

    def __init__(self, action: Any, common: argparse.ArgumentParser) -> None:
        self._action = action
        self._common = common

    def add_parser(self, name: str, help: str) -> argparse.ArgumentParser:
        return self._action.add_parser(name, help=help, parents=[self._common])


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="scattered",
        description="Analyze terms denoting scattered linear orders.",
        epilog=f"Term grammar: {GRAMMAR}",
    )
    parser.add_argument("--format", choices=FORMATS, default=settings.OUTPUT_FORMAT)
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default=argparse.SUPPRESS)
    commands = _Commands(parser.add_subparsers(dest="command", required=True, parser_class=_Parser), common)

    commands.add_parser("parse", help="parse and print a term").add_argument("term")
    embeds = commands.add_parser("embeds", help="decide whether S embeds into T")
    embeds.add_argument("source")
    embeds.add_argument("target")
    witness = commands.add_parser("witness", help="witness map on a truncation of S")
    witness.add_argument("source")
    witness.add_argument("target")
    witness.add_argument("--depth", type=int, default=settings.DEFAULT_WITNESS_DEPTH)
    for name, help_text in (
        ("mdecomp", "minimal decomposition"),
        ("blocks", "block partition in bar notation"),
        ("sq", "separative quotient of the copy poset"),
        ("disjoint", "two copies meeting only in the finite blocks"),
    ):
        commands.add_parser(name, help=help_text).add_argument("term")
    commands.add_parser("ordinal", help="quotient of an ordinal in CNF").add_argument("cnf")
    copy = commands.add_parser("copy", help="does a spec contain a copy of T")
    copy.add_argument("term")
    copy.add_argument("--spec", required=True)
    lestar = commands.add_parser("lestar", help="separative order between two specs")
    lestar.add_argument("term")
    lestar.add_argument("--a", required=True)
    lestar.add_argument("--b", required=True)
    fusion = commands.add_parser("fusion", help="fuse a chain of self-embeddings")
    fusion.add_argument("term")
    fusion.add_argument("--chain", required=True)
    fusion.add_argument("--stages", type=int, default=settings.DEFAULT_FUSION_STAGES)
    corpus = commands.add_parser("corpus", help="property suites over a seeded corpus")
    corpus.add_argument("--seed", type=int, default=settings.CORPUS_SEED)
    corpus.add_argument("--count", type=int, default=settings.CORPUS_COUNT)
    corpus.add_argument(
        "--suite", action="append", choices=SUITES, help="run only this suite (repeatable)"
    )
    return parser


def _dispatch(use_cases: AnalysisUseCases, args: argparse.Namespace) -> BaseModel:
    handlers: Dict[str, Callable[[], BaseModel]] = {
        "parse": lambda: use_cases.parse(args.term),
        "embeds": lambda: use_cases.embeds(EmbedsCommand(args.source, args.target)),
        "witness": lambda: use_cases.witness(EmbedsCommand(args.source, args.target, args.depth)),
        "mdecomp": lambda: use_cases.mdecomp(args.term),
        "blocks": lambda: use_cases.blocks(args.term),
        "sq": lambda: use_cases.sq(args.term),
        "ordinal": lambda: use_cases.ordinal(args.cnf),
        "copy": lambda: use_cases.copy(CopyCommand(args.term, args.spec)),
        "lestar": lambda: use_cases.lestar(LeStarCommand(args.term, args.a, args.b)),
        "disjoint": lambda: use_cases.disjoint(args.term),
        "fusion": lambda: use_cases.fusion(FusionCommand(args.term, args.chain, args.stages)),
        "corpus": lambda: use_cases.corpus(
            CorpusCommand(args.seed, args.count, tuple(args.suite or SUITES))
        ),
    }
    return handlers[args.command]()


def _scalar(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return "none"
    return str(value)


def flatten(data: Any, prefix: str = "") -> Iterator[Tuple[str, str]]:
    """Dotted field paths with their printed values, in model field order."""
    if isinstance(data, dict):
        if not data and prefix:
            yield prefix, "{}"
        for key, value in data.items():
            yield from flatten(value, f"{prefix}.{key}" if prefix else str(key))
    elif isinstance(data, list):
        if all(not isinstance(item, (dict, list)) for item in data):
            yield prefix, ", ".join(_scalar(item) for item in data)
        else:
            for index, item in enumerate(data):
                yield from flatten(item, f"{prefix}.{index}")
    else:
        yield prefix, _scalar(data)


def render(response: BaseModel, output_format: str) -> str:
    if output_format == "machine":
        return response.model_dump_json(indent=2)
    return "\n".join(f"{key}: {value}" for key, value in flatten(response.model_dump()))


def run(
    argv: Optional[Sequence[str]] = None,
    out: Optional[TextIO] = None,
    err: Optional[TextIO] = None,
    use_cases: Optional[AnalysisUseCases] = None,
) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    logging.basicConfig(level=settings.LOG_LEVEL, format=settings.LOG_FORMAT, stream=err)
    parser = build_parser()
    try:
        args = parser.parse_args(list(sys.argv[1:] if argv is None else argv))
    except SystemExit as e:
        return int(e.code or 0)
    except _UsageError as e:
        print(f"error: {e}", file=err)
        print(parser.format_usage().rstrip(), file=err)
        print(f"Term grammar: {GRAMMAR}", file=err)
        return EXIT_USAGE

    try:
        response = _dispatch(use_cases or get_analysis_use_cases(), args)
    except TermSyntaxError as e:
        print(f"error: {e.message}", file=err)
        print(f"Term grammar: {GRAMMAR}", file=err)
        return EXIT_USAGE
    except (OrderError, ValueError, OSError) as e:
        message = e.message if isinstance(e, OrderError) else str(e)
        print(f"error: {message}", file=err)
        return EXIT_USAGE

    print(render(response, args.format), file=out)
    if is_negative(response):
        logger.info(f"{args.command}: negative answer")
        return EXIT_NEGATIVE
    return EXIT_OK


def main() -> None:
    sys.exit(run())
