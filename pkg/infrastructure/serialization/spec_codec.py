"""JSON trees for subset specs, embeddings and chains of embeddings.

Node spec:   "full" | "empty" | {"explicit": {"<index>": node}, "tail": tail}
Tail:        "full" | "empty" | {"periodic": [node, ...]}
             | {"length": n, "entries": {"<phase>": node}, "fill": "full" | "empty"}
Term spec:   {"parts": [node, ...]} or a bare list of nodes
Map:         "identity" | {"point": [step, ...]} | {"into": index, "inner": map}
             | {"explicit": [[target, map], ...], "periodic": [[target, map], ...], "stride": n}
Embedding:   {"parts": [{"target": part, "map": map}, ...]} or a bare list
Chain:       {"chain": [embedding, ...]} or a bare list
"""

import json
from pathlib import Path
from typing import Any, Dict, List, Tuple, Union

from domain.orders.entities.embedding_rep import (
    IntoSummand,
    PartMap,
    PointMap,
    Rep,
    SumMap,
    TermEmbedding,
)
from domain.orders.entities.subset_spec import (
    NodeSpec,
    PeriodicTail,
    SumSpec,
    Tail,
    TermSpec,
    Uniform,
)
from domain.orders.exceptions.order_exceptions import OrderError
from domain.orders.services.embedding_algebra import identity_rep, validate_embedding
from domain.orders.services.spec_algebra import check_shape
from domain.orders.value_objects.term import HTerm, Singleton, Term


class SpecFormatError(OrderError):
    """Raised when a JSON tree does not follow the spec or map format."""

    def __init__(self, message: str, path: str = "$") -> None:
        self.path = path
        super().__init__(f"{message} at {path}")


def _uniform(data: Any, path: str) -> Uniform:
    try:
        return Uniform(data)
    except ValueError:
        raise SpecFormatError(f"Expected 'full' or 'empty', got {data!r}", path) from None


def _index(key: Any, path: str) -> int:
    try:
        value = int(key)
    except (TypeError, ValueError):
        raise SpecFormatError(f"Expected a non-negative integer, got {key!r}", path) from None
    if value < 0:
        raise SpecFormatError(f"Expected a non-negative integer, got {value}", path)
    return value


def _mapping(data: Any, path: str) -> Dict[str, Any]:
    if not isinstance(data, dict):
        raise SpecFormatError(f"Expected an object, got {type(data).__name__}", path)
    return data


def decode_node(data: Any, path: str = "$") -> NodeSpec:
    if isinstance(data, str):
        return _uniform(data, path)
    data = _mapping(data, path)
    unknown = set(data) - {"explicit", "tail"}
    if unknown:
        raise SpecFormatError(f"Unknown key(s) {sorted(unknown)}", path)
    explicit = _mapping(data.get("explicit", {}), f"{path}.explicit")
    entries = tuple(
        (_index(key, f"{path}.explicit"), decode_node(value, f"{path}.explicit[{key}]"))
        for key, value in explicit.items()
    )
    tail = decode_tail(data.get("tail", "empty"), f"{path}.tail")
    try:
        return SumSpec(entries, tail)
    except ValueError as error:
        raise SpecFormatError(str(error), path) from error


def decode_tail(data: Any, path: str) -> Tail:
    if isinstance(data, str):
        return _uniform(data, path)
    data = _mapping(data, path)
    try:
        if "periodic" in data:
            specs = data["periodic"]
            if not isinstance(specs, list) or not specs:
                raise SpecFormatError("Expected a non-empty list", f"{path}.periodic")
            return PeriodicTail.of([decode_node(s, f"{path}.periodic[{i}]") for i, s in enumerate(specs)])
        entries = _mapping(data.get("entries", {}), f"{path}.entries")
        return PeriodicTail(
            _index(data.get("length"), f"{path}.length"),
            tuple(
                (_index(key, f"{path}.entries"), decode_node(value, f"{path}.entries[{key}]"))
                for key, value in entries.items()
            ),
            _uniform(data.get("fill", "empty"), f"{path}.fill"),
        )
    except ValueError as error:
        raise SpecFormatError(str(error), path) from error


def decode_spec(data: Any) -> TermSpec:
    nodes = data.get("parts") if isinstance(data, dict) else data
    if not isinstance(nodes, list) or not nodes:
        raise SpecFormatError("Expected a non-empty list of part specs", "$.parts")
    return TermSpec(tuple(decode_node(node, f"$.parts[{i}]") for i, node in enumerate(nodes)))


def encode_node(spec: NodeSpec) -> Any:
    if isinstance(spec, Uniform):
        return spec.value
    return {"explicit": {str(i): encode_node(child) for i, child in spec.explicit}, "tail": encode_tail(spec.tail)}


def encode_tail(tail: Tail) -> Any:
    if isinstance(tail, Uniform):
        return tail.value
    return {
        "length": tail.length,
        "entries": {str(phase): encode_node(child) for phase, child in tail.entries},
        "fill": tail.fill.value,
    }


def encode_spec(spec: TermSpec) -> Dict[str, Any]:
    return {"parts": [encode_node(node) for node in spec.parts]}


def _pairs(data: Any, path: str) -> Tuple[Tuple[int, Any], ...]:
    if not isinstance(data, list):
        raise SpecFormatError("Expected a list of [target, map] pairs", path)
    pairs = []
    for position, item in enumerate(data):
        where = f"{path}[{position}]"
        if not isinstance(item, list) or len(item) != 2:
            raise SpecFormatError("Expected a [target, map] pair", where)
        pairs.append((_index(item[0], where), item[1]))
    return tuple(pairs)


def decode_rep(data: Any, source: HTerm, path: str = "$") -> Rep:
    """Decode a map whose source is the ha term `source`."""
    if data == "identity":
        return identity_rep(source)
    data = _mapping(data, path)
    try:
        if "point" in data:
            steps = data["point"]
            if not isinstance(steps, list):
                raise SpecFormatError("Expected a list of steps", f"{path}.point")
            return PointMap(tuple(_index(step, f"{path}.point") for step in steps))
        if isinstance(source, Singleton):
            raise SpecFormatError("A singleton must be sent by a point map", path)
        if "into" in data:
            return IntoSummand(_index(data["into"], f"{path}.into"), decode_rep(data.get("inner"), source, f"{path}.inner"))
        explicit = _pairs(data.get("explicit", []), f"{path}.explicit")
        periodic = _pairs(data.get("periodic"), f"{path}.periodic")
        start = len(explicit)
        return SumMap(
            tuple(
                (target, decode_rep(inner, source.summand(i), f"{path}.explicit[{i}][1]"))
                for i, (target, inner) in enumerate(explicit)
            ),
            tuple(
                (target, decode_rep(inner, source.summand(start + r), f"{path}.periodic[{r}][1]"))
                for r, (target, inner) in enumerate(periodic)
            ),
            _index(data.get("stride"), f"{path}.stride"),
        )
    except ValueError as error:
        raise SpecFormatError(str(error), path) from error


def encode_rep(rep: Rep) -> Any:
    if isinstance(rep, PointMap):
        return {"point": list(rep.target)}
    if isinstance(rep, IntoSummand):
        return {"into": rep.index, "inner": encode_rep(rep.inner)}
    return {
        "explicit": [[target, encode_rep(inner)] for target, inner in rep.explicit],
        "periodic": [[target, encode_rep(inner)] for target, inner in rep.periodic],
        "stride": rep.stride,
    }


def decode_embedding(data: Any, term: Term, path: str = "$") -> TermEmbedding:
    items = data.get("parts") if isinstance(data, dict) else data
    if not isinstance(items, list) or len(items) != len(term.parts):
        raise SpecFormatError(f"Expected a list of {len(term.parts)} part map(s)", f"{path}.parts")
    parts: List[PartMap] = []
    for index, (item, part) in enumerate(zip(items, term.parts)):
        where = f"{path}.parts[{index}]"
        item = _mapping(item, where)
        target = _index(item.get("target", index), f"{where}.target")
        parts.append(PartMap(target, decode_rep(item.get("map", "identity"), part, f"{where}.map")))
    try:
        embedding = TermEmbedding(tuple(parts))
    except ValueError as error:
        raise SpecFormatError(str(error), f"{path}.parts") from error
    validate_embedding(embedding, term, term)
    return embedding


def encode_embedding(embedding: TermEmbedding) -> Dict[str, Any]:
    return {"parts": [{"target": p.target_part, "map": encode_rep(p.rep)} for p in embedding.parts]}


def decode_chain(data: Any, term: Term) -> List[TermEmbedding]:
    items = data.get("chain") if isinstance(data, dict) else data
    if not isinstance(items, list) or not items:
        raise SpecFormatError("Expected a non-empty list of embeddings", "$.chain")
    return [decode_embedding(item, term, f"$.chain[{i}]") for i, item in enumerate(items)]


def load_json(source: Union[str, Path]) -> Any:
    try:
        return json.loads(Path(source).read_text(encoding="utf-8"))
    except json.JSONDecodeError as error:
        raise SpecFormatError(f"Invalid JSON ({error.msg}, line {error.lineno})") from error


def load_spec(source: Union[str, Path], term: Term) -> TermSpec:
    """Read a spec file and check it against term."""
    spec = decode_spec(load_json(source))
    check_shape(term, spec)
    return spec


def load_chain(source: Union[str, Path], term: Term) -> List[TermEmbedding]:
    return decode_chain(load_json(source), term)
