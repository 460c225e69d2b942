"""Block partition of a minimal decomposition and its declarative checks."""

import logging
from typing import List, Optional, Sequence

from domain.orders.entities.decomposition import Block, BlockKind
from domain.orders.exceptions.order_exceptions import (
    InvalidDecompositionError,
    PreconditionViolationError,
)
from domain.orders.services.hclass_service import HClassService
from domain.orders.value_objects.term import HTerm, OmegaStarSum, OmegaSum, Singleton

logger = logging.getLogger(__name__)

BAR = " | "


def _is_one(part: Optional[HTerm]) -> bool:
    return isinstance(part, Singleton)


def _is_omega(part: Optional[HTerm]) -> bool:
    return isinstance(part, OmegaSum)


def _is_star(part: Optional[HTerm]) -> bool:
    return isinstance(part, OmegaStarSum)


def _runs(parts: Sequence[HTerm]) -> List[List[int]]:
    runs: List[List[int]] = []
    for index, part in enumerate(parts):
        if runs and type(parts[runs[-1][-1]]) is type(part):
            runs[-1].append(index)
        else:
            runs.append([index])
    return runs


def block_partition(
    parts: Sequence[HTerm], service: Optional[HClassService] = None
) -> List[Block]:
    """Scan maximal runs; a ω*-run directly followed by a ω-run donates a D block."""
    if not parts:
        raise PreconditionViolationError("Cannot partition an empty decomposition")
    try:
        (service or HClassService()).verify_decomposition(parts)
    except InvalidDecompositionError as error:
        raise PreconditionViolationError(f"Not a minimal decomposition: {error.message}") from error

    blocks: List[Block] = []

    def emit(kind: BlockKind, indices: List[int]) -> None:
        if indices:
            start, end = indices[0], indices[-1] + 1
            blocks.append(Block(kind, start, end, tuple(parts[start:end])))

    runs = _runs(parts)
    consumed_first = False
    for position, run in enumerate(runs):
        first = parts[run[0]]
        if _is_one(first):
            emit(BlockKind.A, run)
        elif _is_omega(first):
            emit(BlockKind.B, run[1:] if consumed_first else run)
        else:
            following = runs[position + 1] if position + 1 < len(runs) else None
            if following is not None and _is_omega(parts[following[0]]):
                emit(BlockKind.C, run[:-1])
                emit(BlockKind.D, [run[-1], following[0]])
                consumed_first = True
                continue
            emit(BlockKind.C, run)
        consumed_first = False
    logger.debug(f"Block partition: {format_blocks(blocks)}")
    return blocks


def check_block_conditions(parts: Sequence[HTerm], blocks: Sequence[Block]) -> List[str]:
    """Violated block conditions, one message each; empty when the partition is sound."""
    m = len(parts)
    problems: List[str] = []

    def at(index: int) -> Optional[HTerm]:
        return parts[index] if 0 <= index < m else None

    covered = [index for block in blocks for index in range(block.start, block.end)]
    if covered != list(range(m)):
        problems.append("blocks do not partition the parts convexly")
    for block in blocks:
        i, last = block.start, block.end - 1
        members = [parts[j] for j in range(i, last + 1)]
        if tuple(members) != block.parts:
            problems.append(f"{block}: parts do not match the range")
        if block.kind is BlockKind.A:
            if not all(_is_one(p) for p in members):
                problems.append(f"{block}: non-singleton member")
            if not (i == 0 or not _is_one(at(i - 1))):
                problems.append(f"{block}: (i) fails")
            if not (last == m - 1 or not _is_one(at(last + 1))):
                problems.append(f"{block}: (ii) fails")
        elif block.kind is BlockKind.B:
            if not all(_is_omega(p) for p in members):
                problems.append(f"{block}: member is not an ω-sum")
            if not (i == 0 or (_is_omega(at(i - 1)) and _is_star(at(i - 2)))):
                problems.append(f"{block}: (iii) fails")
            if not (last == m - 1 or not _is_omega(at(last + 1))):
                problems.append(f"{block}: (iv) fails")
        elif block.kind is BlockKind.C:
            if not all(_is_star(p) for p in members):
                problems.append(f"{block}: member is not an ω*-sum")
            if not (i == 0 or not _is_star(at(i - 1))):
                problems.append(f"{block}: (v) fails")
            if not (last == m - 1 or (_is_star(at(last + 1)) and _is_omega(at(last + 2)))):
                problems.append(f"{block}: (vi) fails")
        elif not (block.size == 2 and _is_star(members[0]) and _is_omega(members[1])):
            problems.append(f"{block}: a D block is an ω*-sum followed by an ω-sum")
    return problems


def blocks_tail_consistency(
    parts: Sequence[HTerm], service: Optional[HClassService] = None
) -> bool:
    """Removing the first block leaves exactly the remaining blocks, shifted."""
    blocks = block_partition(parts, service)
    if len(blocks) < 2:
        return True
    offset = blocks[0].end
    tail = block_partition(parts[offset:], service)
    return [block.shifted(offset) for block in tail] == blocks[1:]


def blocks_tail_consistency_iterated(
    parts: Sequence[HTerm], service: Optional[HClassService] = None
) -> bool:
    remaining = list(parts)
    while remaining:
        if not blocks_tail_consistency(remaining, service):
            return False
        remaining = remaining[block_partition(remaining, service)[0].end :]
    return True


def format_blocks(blocks: Sequence[Block]) -> str:
    """Bar notation, e.g. ``111 | w*w* | w*w``."""
    return BAR.join(block.glyphs() for block in blocks)
