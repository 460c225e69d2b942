import logging

from fastapi import APIRouter, Depends, HTTPException, status

from application.commands.analysis_command import EmbedsCommand
from application.dtos.report_dto import EmbedsResponse, ReportResponse, SqResponse
from application.dtos.spec_dto import EmbedsRequest, ReportRequest, TermRequest
from application.use_cases.analysis_use_cases import AnalysisUseCases
from domain.orders.exceptions.order_exceptions import (
    InvalidTermError,
    OrderError,
    ShapeMismatchError,
    TermSyntaxError,
)
from infrastructure.dependencies.service_container import get_analysis_use_cases
from infrastructure.serialization.spec_codec import SpecFormatError

logger = logging.getLogger(__name__)

router = APIRouter(prefix="/analysis", tags=["analysis"])


def _to_http_error(error: OrderError) -> HTTPException:
    """Malformed input is a 400; a well-formed request outside a precondition is a 422."""
    if isinstance(error, (TermSyntaxError, InvalidTermError, ShapeMismatchError, SpecFormatError)):
        code = status.HTTP_400_BAD_REQUEST
    else:
        code = 422
    logger.info(f"Analysis request rejected: {error.message}")
    return HTTPException(status_code=code, detail=error.message)


@router.post("/report", response_model=ReportResponse)
async def build_report(
    request: ReportRequest,
    use_cases: AnalysisUseCases = Depends(get_analysis_use_cases),
):
    """Full analysis of a term, with the copy check when a spec is given."""
    try:
        return use_cases.report(request.term, request.spec)
    except OrderError as e:
        raise _to_http_error(e)


@router.post("/embeds", response_model=EmbedsResponse)
async def decide_embeds(
    request: EmbedsRequest,
    use_cases: AnalysisUseCases = Depends(get_analysis_use_cases),
):
    """Decide embeddability; a depth asks for a witness."""
    try:
        return use_cases.embeds(EmbedsCommand(request.source, request.target, request.depth))
    except OrderError as e:
        raise _to_http_error(e)


@router.post("/sq", response_model=SqResponse)
async def separative_quotient(
    request: TermRequest,
    use_cases: AnalysisUseCases = Depends(get_analysis_use_cases),
):
    """Symbolic separative quotient of the copy poset of a term."""
    try:
        return use_cases.sq(request.term)
    except OrderError as e:
        raise _to_http_error(e)
