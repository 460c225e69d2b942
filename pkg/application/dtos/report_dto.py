from pydantic import BaseModel
from typing import Any, Dict, List, Optional


class DecompositionResponse(BaseModel):
    """Minimal decomposition of a term."""

    term: str
    m: int
    parts: List[str]
    provenance: List[List[int]]


class BlockResponse(BaseModel):
    """One typed block, with its inclusive part range."""

    kind: str
    first: int
    last: int
    glyphs: str


class BlocksResponse(BaseModel):
    term: str
    bar_notation: str
    blocks: List[BlockResponse]


class SqResponse(BaseModel):
    """Symbolic separative quotient with its annotations."""

    subject: str
    expression: str
    tree: Dict[str, Any]
    notes: List[str]


class ParseResponse(BaseModel):
    term: str
    parts: int
    ordinal: Optional[str] = None
    mirror: str


class EmbedsResponse(BaseModel):
    source: str
    target: str
    embeds: bool
    witness: Optional[List[List[str]]] = None


class CopyResponse(BaseModel):
    term: str
    contains_copy: bool
    suborder: Optional[str] = None


class LeStarResponse(BaseModel):
    term: str
    verdict: str


class DisjointCopiesResponse(BaseModel):
    term: str
    first: Dict[str, Any]
    second: Dict[str, Any]
    first_image: Dict[str, Any]
    second_image: Dict[str, Any]
    overlap: Dict[str, Any]
    overlap_is_finite_blocks: bool


class StageResponse(BaseModel):
    part: int
    stage: int
    footprint: int
    nested_in: List[int]
    nested: bool


class FusionResponse(BaseModel):
    term: str
    stages: int
    embedding: Dict[str, Any]
    image: Dict[str, Any]
    stage_report: List[StageResponse]
    separated: bool
    image_contains_copy: bool
    verified: bool


class OrdinalResponse(BaseModel):
    ordinal: str
    term: Optional[str] = None
    sq: SqResponse


class ReportResponse(BaseModel):
    """Complete analysis of one term."""

    term: str
    ordinal: Optional[str] = None
    mirror: str
    decomposition: DecompositionResponse
    blocks: BlocksResponse
    sq: SqResponse
    copy_result: Optional[CopyResponse] = None


class CorpusCaseResponse(BaseModel):
    index: int
    term: str
    partner: str
    m: int
    bar_notation: str
    sq: str
    suites: List[str]
    problems: List[str]


class CorpusResponse(BaseModel):
    seed: int
    count: int
    failures: int
    cases: List[CorpusCaseResponse]
