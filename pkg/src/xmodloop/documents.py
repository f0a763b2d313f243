"""JSON file format for finite crossed modules.

A document holds two group blocks (elements, full table, identity), the
boundary map keyed by M-element, and the action keyed by P-element then
M-element.  Serialization is canonical: fixed key order, two-space
indent, trailing newline; parse and serialize are mutually inverse on
canonical documents, byte for byte.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import (
    AxiomViolation,
    DocumentSyntaxError,
    UnknownIdentifier,
    XModError,
)
from .xmod import CrossedModule, XModCandidate, xmod_from_candidate


@dataclass(frozen=True)
class GroupBlock:
    elements: tuple
    table: tuple
    identity: str


@dataclass(frozen=True, eq=False)
class XModDocument:
    name: str | None
    p_block: GroupBlock
    m_block: GroupBlock
    delta: dict
    action: dict  # p -> {m -> m^p}


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise DocumentSyntaxError(message)


def _read_group_block(data, label: str) -> GroupBlock:
    _require(isinstance(data, dict), f"{label} must be an object")
    _require(set(data) == {"elements", "table", "identity"},
             f"{label} must have exactly the keys elements, table, identity")
    elements = data["elements"]
    _require(isinstance(elements, list) and elements, f"{label}.elements must be a non-empty array")
    _require(all(isinstance(e, str) for e in elements), f"{label}.elements must contain strings")
    _require(len(set(elements)) == len(elements), f"{label}.elements must be distinct")
    table = data["table"]
    n = len(elements)
    _require(isinstance(table, list) and len(table) == n, f"{label}.table must have {n} rows")
    known = set(elements)
    for i, row in enumerate(table):
        _require(isinstance(row, list) and len(row) == n, f"{label}.table row {i} must have {n} entries")
        for j, value in enumerate(row):
            _require(isinstance(value, str), f"{label}.table[{i}][{j}] must be a string")
            if value not in known:
                raise UnknownIdentifier(value, f"{label}.table[{i}][{j}]")
    identity = data["identity"]
    _require(isinstance(identity, str), f"{label}.identity must be a string")
    if identity not in known:
        raise UnknownIdentifier(identity, f"{label}.identity")
    return GroupBlock(tuple(elements), tuple(tuple(row) for row in table), identity)


def load_document(text: str) -> XModDocument:
    """Parse and structurally validate one document."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentSyntaxError(exc.msg, line=exc.lineno) from exc
    _require(isinstance(data, dict), "top level must be an object")
    keys = set(data)
    _require(keys - {"name"} == {"P", "M", "delta", "action"},
             "top level must have keys P, M, delta, action and optionally name")
    name = data.get("name")
    if name is not None:
        _require(isinstance(name, str), "name must be a string")
    p_block = _read_group_block(data["P"], "P")
    m_block = _read_group_block(data["M"], "M")

    delta = data["delta"]
    _require(isinstance(delta, dict), "delta must be an object")
    m_set, p_set = set(m_block.elements), set(p_block.elements)
    for key, value in delta.items():
        if key not in m_set:
            raise UnknownIdentifier(key, "delta")
        _require(isinstance(value, str), f"delta[{key!r}] must be a string")
        if value not in p_set:
            raise UnknownIdentifier(value, f"delta[{key!r}]")
    for m in m_block.elements:
        _require(m in delta, f"delta is missing an entry for {m!r}")

    action = data["action"]
    _require(isinstance(action, dict), "action must be an object")
    for p, row in action.items():
        if p not in p_set:
            raise UnknownIdentifier(p, "action")
        _require(isinstance(row, dict), f"action[{p!r}] must be an object")
        for m, value in row.items():
            if m not in m_set:
                raise UnknownIdentifier(m, f"action[{p!r}]")
            _require(isinstance(value, str), f"action[{p!r}][{m!r}] must be a string")
            if value not in m_set:
                raise UnknownIdentifier(value, f"action[{p!r}][{m!r}]")
    for p in p_block.elements:
        _require(p in action, f"action is missing entries for {p!r}")
        for m in m_block.elements:
            _require(m in action[p], f"action[{p!r}] is missing an entry for {m!r}")

    return XModDocument(name, p_block, m_block,
                        {m: delta[m] for m in m_block.elements},
                        {p: {m: action[p][m] for m in m_block.elements}
                         for p in p_block.elements})


def candidate_of_document(doc: XModDocument) -> XModCandidate:
    return XModCandidate(
        m_elements=list(doc.m_block.elements),
        m_table=[list(row) for row in doc.m_block.table],
        m_identity=doc.m_block.identity,
        p_elements=list(doc.p_block.elements),
        p_table=[list(row) for row in doc.p_block.table],
        p_identity=doc.p_block.identity,
        delta=dict(doc.delta),
        action={p: dict(row) for p, row in doc.action.items()},
        name=doc.name,
    )


def build_xmod(doc: XModDocument) -> CrossedModule:
    """Validate the document's content as a crossed module."""
    try:
        return xmod_from_candidate(candidate_of_document(doc))
    except XModError as exc:
        raise AxiomViolation(f"document is not a valid crossed module: {exc}",
                             exc.witness) from exc


def parse_xmod(text: str) -> CrossedModule:
    return build_xmod(load_document(text))


def document_of(x: CrossedModule, name: str | None = None) -> XModDocument:
    candidate = x.to_candidate()
    return XModDocument(
        name if name is not None else x.name,
        GroupBlock(tuple(candidate.p_elements),
                   tuple(tuple(row) for row in candidate.p_table),
                   candidate.p_identity),
        GroupBlock(tuple(candidate.m_elements),
                   tuple(tuple(row) for row in candidate.m_table),
                   candidate.m_identity),
        dict(candidate.delta),
        {p: dict(row) for p, row in candidate.action.items()},
    )


def serialize_document(doc: XModDocument) -> str:
    """Canonical text: fixed key order, canonical element order throughout."""
    payload: dict = {}
    if doc.name is not None:
        payload["name"] = doc.name
    payload["P"] = {
        "elements": list(doc.p_block.elements),
        "table": [list(row) for row in doc.p_block.table],
        "identity": doc.p_block.identity,
    }
    payload["M"] = {
        "elements": list(doc.m_block.elements),
        "table": [list(row) for row in doc.m_block.table],
        "identity": doc.m_block.identity,
    }
    payload["delta"] = {m: doc.delta[m] for m in doc.m_block.elements}
    payload["action"] = {p: {m: doc.action[p][m] for m in doc.m_block.elements}
                         for p in doc.p_block.elements}
    return json.dumps(payload, indent=2, ensure_ascii=False) + "\n"


def serialize_xmod(x: CrossedModule, name: str | None = None) -> str:
    return serialize_document(document_of(x, name=name))
