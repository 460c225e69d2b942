import logging
from typing import Any, Dict, List, Optional, Tuple

from application.commands.analysis_command import (
    CopyCommand,
    CorpusCommand,
    EmbedsCommand,
    FusionCommand,
    LeStarCommand,
)
from application.dtos.report_dto import (
    BlockResponse,
    BlocksResponse,
    CopyResponse,
    CorpusCaseResponse,
    CorpusResponse,
    DecompositionResponse,
    DisjointCopiesResponse,
    EmbedsResponse,
    FusionResponse,
    LeStarResponse,
    OrdinalResponse,
    ParseResponse,
    ReportResponse,
    SqResponse,
    StageResponse,
)
from domain.orders.entities.copy_results import Verdict
from domain.orders.entities.embedding_rep import WitnessMap
from domain.orders.entities.poset_expr import SqAnalysis
from domain.orders.entities.subset_spec import TermSpec
from domain.orders.services.block_service import block_partition, format_blocks
from domain.orders.services.copy_service import CopyService
from domain.orders.services.embedding_service import EmbeddingDecider, embed_witness
from domain.orders.services.forcing_service import ForcingService, to_tree
from domain.orders.services.hclass_service import HClassService
from domain.orders.services.property_suites import PropertySuites
from domain.orders.services.spec_algebra import (
    check_shape,
    restrict,
    term_difference,
    term_is_empty,
)
from domain.orders.services.term_parser import format_term, parse_term
from domain.orders.services.term_service import mirror, ord_value
from domain.orders.value_objects.cnf import CNF
from domain.orders.value_objects.term import Term
from infrastructure.config.settings import settings
from infrastructure.serialization.spec_codec import (
    decode_spec,
    encode_embedding,
    encode_spec,
    load_chain,
    load_spec,
)
from infrastructure.services.corpus_generator import CorpusConfig, CorpusGenerator
from infrastructure.services.corpus_runner import CorpusRunner

logger = logging.getLogger(__name__)


class AnalysisUseCases:
    """Use cases for analyzing scattered order terms."""

    def __init__(
        self,
        decider: EmbeddingDecider,
        hclass_service: HClassService,
        copy_service: CopyService,
        forcing_service: ForcingService,
        corpus_runner: Optional[CorpusRunner] = None,
    ):
        self.decider = decider
        self.hclass_service = hclass_service
        self.copy_service = copy_service
        self.forcing_service = forcing_service
        self.corpus_runner = corpus_runner or CorpusRunner()

    def parse(self, text: str) -> ParseResponse:
        """Parse and validate a term, with its ordinal value and mirror."""
        term = parse_term(text)
        value = ord_value(term)
        return ParseResponse(
            term=format_term(term),
            parts=len(term),
            ordinal=str(value) if value is not None else None,
            mirror=format_term(mirror(term)),
        )

    def embeds(self, command: EmbedsCommand) -> EmbedsResponse:
        source, target = parse_term(command.source), parse_term(command.target)
        result = self.decider.embeds(source, target)
        witness = None
        if result and command.depth is not None:
            witness = self._witness_pairs(source, target, command.depth)
        logger.info(f"embeds({source}, {target}) = {result}")
        return EmbedsResponse(
            source=format_term(source), target=format_term(target), embeds=result, witness=witness
        )

    def witness(self, command: EmbedsCommand) -> EmbedsResponse:
        """Decide embeddability and certify a positive answer on a truncation."""
        depth = command.depth if command.depth is not None else settings.DEFAULT_WITNESS_DEPTH
        return self.embeds(EmbedsCommand(command.source, command.target, depth))

    def _witness_pairs(self, source: Term, target: Term, depth: int) -> Optional[List[List[str]]]:
        result = embed_witness(source, target, depth)
        if not isinstance(result, WitnessMap):
            return None
        return [[str(a), str(b)] for a, b in result.pairs]

    def mdecomp(self, text: str) -> DecompositionResponse:
        return self._decomposition(parse_term(text))

    def _decomposition(self, term: Term) -> DecompositionResponse:
        decomposition = self.hclass_service.min_decomposition(term)
        return DecompositionResponse(
            term=format_term(term),
            m=decomposition.m,
            parts=[str(part) for part in decomposition.parts],
            provenance=[[start, end - 1] for start, end in decomposition.provenance],
        )

    def blocks(self, text: str) -> BlocksResponse:
        term = parse_term(text)
        return self._blocks(term)

    def _blocks(self, term: Term) -> BlocksResponse:
        parts = self.hclass_service.min_decomposition(term).parts
        blocks = block_partition(parts, self.hclass_service)
        return BlocksResponse(
            term=format_term(term),
            bar_notation=format_blocks(blocks),
            blocks=[
                BlockResponse(
                    kind=block.kind.value,
                    first=block.start,
                    last=block.end - 1,
                    glyphs=block.glyphs(),
                )
                for block in blocks
            ],
        )

    def sq(self, text: str) -> SqResponse:
        term = parse_term(text)
        return self._sq(format_term(term), self.forcing_service.analyze(term))

    def _sq(self, subject: str, analysis: SqAnalysis) -> SqResponse:
        return SqResponse(
            subject=subject,
            expression=str(analysis.expression),
            tree=to_tree(analysis.expression),
            notes=list(analysis.notes),
        )

    def ordinal(self, text: str) -> OrdinalResponse:
        """Quotient of an ordinal given in Cantor normal form."""
        value = CNF.from_string(text)
        term = None if value.is_zero else format_term(value.to_term())
        return OrdinalResponse(
            ordinal=str(value),
            term=term,
            sq=self._sq(str(value), self.forcing_service.analyze_ordinal(value)),
        )

    def copy(self, command: CopyCommand) -> CopyResponse:
        term = parse_term(command.term)
        spec = load_spec(command.spec_path, term)
        return self._copy(term, spec)

    def _copy(self, term: Term, spec: TermSpec) -> CopyResponse:
        result = self.copy_service.contains_copy(term, spec)
        suborder = restrict(term, spec, self.decider)
        return CopyResponse(
            term=format_term(term),
            contains_copy=result,
            suborder=format_term(suborder) if suborder is not None else None,
        )

    def lestar(self, command: LeStarCommand) -> LeStarResponse:
        term = parse_term(command.term)
        left = load_spec(command.a_path, term)
        right = load_spec(command.b_path, term)
        verdict = self.copy_service.le_star(term, left, right)
        return LeStarResponse(term=format_term(term), verdict=verdict.value)

    def disjoint(self, text: str) -> DisjointCopiesResponse:
        term = parse_term(text)
        copies = self.copy_service.disjoint_copies(term)
        finite = self.copy_service.finite_block_spec(term)
        return DisjointCopiesResponse(
            term=format_term(term),
            first=encode_embedding(copies.first),
            second=encode_embedding(copies.second),
            first_image=encode_spec(copies.first_image),
            second_image=encode_spec(copies.second_image),
            overlap=encode_spec(copies.overlap),
            overlap_is_finite_blocks=self._same_points(term, copies.overlap, finite),
        )

    def _same_points(self, term: Term, left: TermSpec, right: TermSpec) -> bool:
        return term_is_empty(term, term_difference(term, left, right)) and term_is_empty(
            term, term_difference(term, right, left)
        )

    def fusion(self, command: FusionCommand) -> FusionResponse:
        term = parse_term(command.term)
        chain = load_chain(command.chain_path, term)
        result = self.copy_service.fusion(term, chain, command.stages)
        return FusionResponse(
            term=format_term(term),
            stages=command.stages,
            embedding=encode_embedding(result.embedding),
            image=encode_spec(result.image),
            stage_report=[
                StageResponse(
                    part=record.part,
                    stage=record.stage,
                    footprint=record.footprint,
                    nested_in=list(record.nested_in),
                    nested=record.nested,
                )
                for record in result.stages
            ],
            separated=result.separated,
            image_contains_copy=result.image_contains_copy,
            verified=result.verified,
        )

    def report(self, text: str, spec: Optional[Dict[str, Any]] = None) -> ReportResponse:
        """Full analysis of one term; a spec tree adds the copy result."""
        term = parse_term(text)
        value = ord_value(term)
        copy_result = None
        if spec is not None:
            decoded = decode_spec(spec)
            check_shape(term, decoded)
            copy_result = self._copy(term, decoded)
        logger.info(f"Built report for {term}")
        return ReportResponse(
            term=format_term(term),
            ordinal=str(value) if value is not None else None,
            mirror=format_term(mirror(term)),
            decomposition=self._decomposition(term),
            blocks=self._blocks(term),
            sq=self._sq(format_term(term), self.forcing_service.analyze(term)),
            copy_result=copy_result,
        )

    def corpus(self, command: CorpusCommand) -> CorpusResponse:
        """Run the selected property suites over a seeded corpus.

        Each term is paired with the next one (cyclically) for the pairwise
        suites: the ordinal oracle, mirror duality and witness soundness.
        The per-term suites check structure, disjoint copies, the separative
        order and fusion. Every case gets its own decider, so the runner's
        threads share no memo tables.
        """
        generator = CorpusGenerator(
            CorpusConfig(seed=command.seed, count=command.count), self.decider
        )
        terms = generator.terms(command.count)
        pairs = [(term, terms[(i + 1) % len(terms)]) for i, term in enumerate(terms)]

        def evaluate(index: int, pair: Tuple[Term, Term]) -> CorpusCaseResponse:
            return self._corpus_case(index, pair, command.suites)

        cases = self.corpus_runner.run(pairs, evaluate)
        failures = sum(1 for case in cases if case.problems)
        logger.info(f"Corpus seed={command.seed}: {failures} failing case(s) of {len(cases)}")
        return CorpusResponse(
            seed=command.seed, count=len(cases), failures=failures, cases=cases
        )

    def _corpus_case(
        self, index: int, pair: Tuple[Term, Term], suites: Tuple[str, ...]
    ) -> CorpusCaseResponse:
        term, partner = pair
        report = PropertySuites(
            witness_depth=settings.CORPUS_WITNESS_DEPTH,
            fusion_stages=settings.DEFAULT_FUSION_STAGES,
        ).check(term, partner, suites)
        return CorpusCaseResponse(
            index=index,
            term=format_term(term),
            partner=format_term(partner),
            m=report.m,
            bar_notation=report.bar_notation,
            sq=report.sq,
            suites=list(report.suites),
            problems=list(report.problems),
        )


def is_negative(response: Any) -> bool:
    """Mathematical negatives are reported with exit code 1."""
    if isinstance(response, EmbedsResponse):
        return not response.embeds
    if isinstance(response, CopyResponse):
        return not response.contains_copy
    if isinstance(response, LeStarResponse):
        return response.verdict == Verdict.FALSE.value
    if isinstance(response, FusionResponse):
        return not response.verified
    if isinstance(response, CorpusResponse):
        return response.failures > 0
    return False

