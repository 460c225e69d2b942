"""Symbolic separative quotients of posets of copies, per block of a term."""

import logging
from enum import Enum
from typing import Any, Dict, List, Optional, Tuple

from domain.orders.entities.decomposition import BlockKind
from domain.orders.entities.poset_expr import (
    FIN_TIMES_FIN_PLUS,
    P_FIN_PLUS,
    TRIVIAL,
    FinTimesFinPlus,
    Opaque,
    PFinPlus,
    PosetExpr,
    Power,
    Product,
    ReducedPower,
    SqAnalysis,
)
from domain.orders.entities.subset_spec import TermSpec
from domain.orders.services.block_service import block_partition
from domain.orders.services.embedding_service import EmbeddingDecider
from domain.orders.services.hclass_service import HClassService
from domain.orders.services.spec_algebra import check_shape, in_tower_ideal
from domain.orders.services.term_service import mirror, ord_value
from domain.orders.value_objects.cnf import CNF
from domain.orders.value_objects.term import OMEGA, OmegaSum, Term

logger = logging.getLogger(__name__)

SIGMA_CLOSED_NOTE = "sigma-closed: the separative modification of (P(L), ⊂) is sigma-closed for every countable scattered L"
HOMOGENEOUS_NOTE = "(P(L), ⊂) is homogeneous and atomless, of size 𝔠"
CH_NOTE = "under CH, forcing-equivalent to (P(w)/Fin)^+"
FRAGMENT_NOTE = "ordinals with transfinite exponents are outside the fragment; only exponents below w are computed"
TOWER_CLOSED_NOTE = "closure: every descending sequence shorter than the tower number t has a lower bound"
W1_CLOSED_NOTE = "closure: countable descending sequences have lower bounds, some of length w1 do not"
H_DISTRIBUTIVE_NOTE = "distributivity: h-distributive, provably in ZFC"
H_UNDECIDED_NOTE = "distributivity: h-distributivity is not a theorem of ZFC"


class Ideal(str, Enum):
    """Ideals with an exact membership test."""

    FIN = "Fin"
    FIN_TIMES_FIN = "FinxFin"

    @property
    def depth(self) -> int:
        return 1 if self is Ideal.FIN else 2

    @property
    def term(self) -> Term:
        return Term.of(OMEGA) if self is Ideal.FIN else Term.of(OmegaSum((), (OMEGA,)))


def reduced_iterations(factor: PosetExpr) -> Optional[int]:
    """Reduced-power depth of a named factor, None for anything else."""
    if isinstance(factor, PFinPlus):
        return 0
    if isinstance(factor, FinTimesFinPlus):
        return 1
    if isinstance(factor, ReducedPower) and isinstance(factor.base, PFinPlus):
        return factor.iterations
    return None


def _expand(expr: PosetExpr) -> List[Tuple[PosetExpr, int]]:
    if isinstance(expr, Product):
        return [item for factor in expr.factors for item in _expand(factor)]
    if isinstance(expr, Power):
        return [(base, count * expr.exponent) for base, count in _expand(expr.base)]
    if isinstance(expr, ReducedPower):
        base = normalize(expr.base)
        if isinstance(base, PFinPlus) and expr.iterations == 0:
            return [(P_FIN_PLUS, 1)]
        if isinstance(base, PFinPlus) and expr.iterations == 1:
            return [(FIN_TIMES_FIN_PLUS, 1)]
        return [(ReducedPower(base, expr.iterations), 1)]
    return [(expr, 1)]


def normalize(expr: PosetExpr) -> PosetExpr:
    """Flatten products, spell powers out as repeated factors, elide trivial wrappers."""
    factors = [base for base, count in _expand(expr) for _ in range(count)]
    if not factors:
        return TRIVIAL
    if len(factors) == 1:
        return factors[0]
    return Product(tuple(factors))


def factor_runs(expr: PosetExpr) -> List[Tuple[PosetExpr, int]]:
    """Maximal runs of equal adjacent factors, as (factor, multiplicity)."""
    runs: List[Tuple[PosetExpr, int]] = []
    for base, count in _expand(expr):
        if runs and runs[-1][0] == base:
            runs[-1] = (base, runs[-1][1] + count)
        else:
            runs.append((base, count))
    return runs


def factors_of(expr: PosetExpr) -> Tuple[PosetExpr, ...]:
    if isinstance(expr, Product):
        return expr.factors
    return (expr,)


def to_tree(expr: PosetExpr) -> Dict[str, Any]:
    """Structured rendering of an expression."""
    tree: Dict[str, Any] = {"kind": type(expr).__name__, "text": str(expr)}
    if isinstance(expr, Product):
        tree["factors"] = [to_tree(factor) for factor in expr.factors]
    elif isinstance(expr, Power):
        tree["base"] = to_tree(expr.base)
        tree["exponent"] = expr.exponent
    elif isinstance(expr, ReducedPower):
        tree["base"] = to_tree(expr.base)
        tree["iterations"] = expr.iterations
    elif isinstance(expr, Opaque):
        tree["label"] = expr.label
        tree["notes"] = list(expr.notes)
    tree["properties"] = {
        "sigma_closed": expr.properties.sigma_closed,
        "atomless": expr.properties.atomless,
        "size": expr.properties.size,
    }
    return tree


def _closure_notes(expr: PosetExpr) -> List[str]:
    factors = factors_of(expr)
    if expr == TRIVIAL:
        return ["finite order: the poset of copies is trivial"]
    bases = [factor.base if isinstance(factor, Power) else factor for factor in factors]
    if all(isinstance(base, PFinPlus) for base in bases):
        single = isinstance(expr, PFinPlus)
        return [TOWER_CLOSED_NOTE, H_DISTRIBUTIVE_NOTE if single else H_UNDECIDED_NOTE]
    if expr == FIN_TIMES_FIN_PLUS:
        return [W1_CLOSED_NOTE, H_UNDECIDED_NOTE]
    return []


class ForcingService:
    """Per-block identification of quotient factors."""

    def __init__(self, decider: Optional[EmbeddingDecider] = None) -> None:
        self.hclass = HClassService(decider or EmbeddingDecider())

    def sq_of_ordinal(self, value: CNF) -> PosetExpr:
        return self.analyze_ordinal(value).expression

    def analyze_ordinal(self, value: CNF) -> SqAnalysis:
        factors = [
            Power(ReducedPower(P_FIN_PLUS, exponent - 1), coefficient)
            for exponent, coefficient in value.terms
        ]
        notes = [FRAGMENT_NOTE]
        if value.remainder:
            notes.append(f"finite remainder {value.remainder} contributes no factor")
        return SqAnalysis(normalize(Product(tuple(factors))), tuple(notes))

    def analyze(self, term: Term) -> SqAnalysis:
        decomposition = self.hclass.min_decomposition(term)
        blocks = block_partition(decomposition.parts, self.hclass)
        factors: List[PosetExpr] = []
        notes: List[str] = []
        for block in blocks:
            label = f"{block.kind}-block {block.glyphs()}"
            if block.kind is BlockKind.A:
                notes.append(f"{label}: finite, contributes no factor")
                continue
            if block.kind is BlockKind.D:
                factors.append(
                    Opaque(label, notes=("sigma-closed, atomless, size 𝔠", CH_NOTE))
                )
                continue
            block_term = Term(block.parts)
            value = ord_value(block_term)
            if value is None:
                value = ord_value(mirror(block_term))
                if value is not None:
                    notes.append(f"{label}: by order reversal, as for {value}")
            if value is None:
                factors.append(Opaque(f"{label} {block_term}", notes=(CH_NOTE,)))
                continue
            factors.append(self.sq_of_ordinal(value))
        expression = normalize(Product(tuple(factors)))
        notes.extend(_closure_notes(expression))
        notes.extend([SIGMA_CLOSED_NOTE, HOMOGENEOUS_NOTE, CH_NOTE])
        logger.debug(f"sq of {term}: {expression}")
        return SqAnalysis(expression, tuple(notes))

    def sq_of(self, term: Term) -> PosetExpr:
        return self.analyze(term).expression

    def ideal_member(self, ideal: Ideal, spec: TermSpec) -> bool:
        check_shape(ideal.term, spec)
        return in_tower_ideal(spec.parts[0], ideal.depth)


def sq_of(term: Term) -> PosetExpr:
    return ForcingService().sq_of(term)


def sq_of_ordinal(value: CNF) -> PosetExpr:
    return ForcingService().sq_of_ordinal(value)


def ideal_member(ideal: Ideal, spec: TermSpec) -> bool:
    return ForcingService().ideal_member(ideal, spec)
