from pydantic import BaseModel, field_validator
from typing import Any, Dict, Optional

from infrastructure.config.settings import settings


def _not_blank(value: str, name: str) -> str:
    if not value or not value.strip():
        raise ValueError(f'{name} cannot be empty')
    return value.strip()


class TermRequest(BaseModel):
    """Request carrying one term expression."""

    term: str

    @field_validator('term')
    @classmethod
    def term_must_not_be_empty(cls, v: str) -> str:
        return _not_blank(v, 'Term')


class ReportRequest(TermRequest):
    """Full analysis request; the optional spec is a JSON spec tree over the term."""

    spec: Optional[Dict[str, Any]] = None


class EmbedsRequest(BaseModel):
    """Embeddability request with an optional witness depth."""

    source: str
    target: str
    depth: Optional[int] = None

    @field_validator('source', 'target')
    @classmethod
    def terms_must_not_be_empty(cls, v: str) -> str:
        return _not_blank(v, 'Term')

    @field_validator('depth')
    @classmethod
    def validate_depth(cls, v: Optional[int]) -> Optional[int]:
        if v is not None and not 1 <= v <= settings.MAX_WITNESS_DEPTH:
            raise ValueError(f'Depth must be between 1 and {settings.MAX_WITNESS_DEPTH}')
        return v
