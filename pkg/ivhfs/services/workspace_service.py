"""Reading and writing workspace documents.

Intervals are validated and every hesitant element is canonicalized on
load; rendering writes the canonical form back with decimal-string
endpoints, so parse, render and parse again gives soft-equal sets.
"""
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Mapping, Tuple, Union

import structlog
from pydantic import ValidationError

from ivhfs.core.exceptions import ParseError, SchemaError, UnknownName
from ivhfs.models.hfe import Ivhfe
from ivhfs.models.interval import UnitInterval, format_endpoint, to_fraction
from ivhfs.models.softset import Context, SoftSet
from ivhfs.models.topology import ABSOLUTE, PHI, RESERVED_NAMES, Family
from ivhfs.schemas.output import SoftSetOut
from ivhfs.schemas.workspace import IntervalSpec, WorkspaceDocument
from ivhfs.services.hfe_ops import canonicalize
from ivhfs.services.softset_ops import absolute_set, null_set

logger = structlog.get_logger(__name__)


@dataclass(frozen=True)
class Workspace:
    """A context with named soft sets and named topologies (member-name lists)."""
    context: Context
    sets: Mapping[str, SoftSet] = field(default_factory=dict)
    topologies: Mapping[str, Tuple[str, ...]] = field(default_factory=dict)

    def resolve_set(self, name: str) -> SoftSet:
        if name == PHI:
            return null_set(self.context)
        if name == ABSOLUTE:
            return absolute_set(self.context)
        try:
            return self.sets[name]
        except KeyError:
            raise UnknownName(f"Unknown set: {name}", {"name": name, "known": sorted(self.sets)})

    def family(self, name: str) -> Family:
        try:
            members = self.topologies[name]
        except KeyError:
            raise UnknownName(f"Unknown topology: {name}", {"name": name, "known": sorted(self.topologies)})
        return Family(self.context, tuple((member, self.resolve_set(member)) for member in members))


def _reject_duplicate_keys(pairs: List[Tuple[str, Any]]) -> Dict[str, Any]:
    result: Dict[str, Any] = {}
    for key, value in pairs:
        if key in result:
            raise SchemaError(f"Duplicate name in document: {key}", {"name": key})
        result[key] = value
    return result


def _parse_endpoint(text: str, where: Dict[str, str]) -> Any:
    try:
        return to_fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"Endpoint is not a decimal number: {text!r}", dict(where, endpoint=text))


def _parse_interval(spec: IntervalSpec, where: Dict[str, str]) -> UnitInterval:
    # Out-of-range and inverted endpoints raise the interval errors unchanged
    if isinstance(spec, str):
        value = _parse_endpoint(spec, where)
        return UnitInterval(value, value)
    lower, upper = spec
    return UnitInterval(_parse_endpoint(lower, where), _parse_endpoint(upper, where))


def _build_set(name: str, rows: Mapping[str, Mapping[str, List[IntervalSpec]]], context: Context) -> SoftSet:
    if not rows:
        raise SchemaError(f"Set {name} has an empty support", {"set": name})
    cells = {}
    for parameter, row in rows.items():
        if parameter not in context.parameters:
            raise SchemaError(f"Unknown parameter {parameter} in set {name}", {"set": name, "parameter": parameter})
        for obj in row:
            if obj not in context.universe:
                raise SchemaError(f"Unknown object {obj} in set {name}", {"set": name, "object": obj})
        for obj in context.universe:
            if obj not in row:
                raise SchemaError(
                    f"Set {name} has no value for {obj} at {parameter}",
                    {"set": name, "parameter": parameter, "object": obj},
                )
            specs = row[obj]
            if not specs:
                raise SchemaError(
                    f"Empty hesitant element in set {name}",
                    {"set": name, "parameter": parameter, "object": obj},
                )
            where = {"set": name, "parameter": parameter, "object": obj}
            cells[(parameter, obj)] = canonicalize(_parse_interval(spec, where) for spec in specs)
    return SoftSet(context, tuple(rows), cells)


def build_workspace(document: WorkspaceDocument) -> Workspace:
    """Turn a schema-valid document into a workspace, checking every reference."""
    try:
        context = Context(tuple(document.universe), tuple(document.parameters))
    except ValueError as exc:
        raise SchemaError(str(exc), getattr(exc, "details", {}))

    sets: Dict[str, SoftSet] = {}
    for name, rows in document.sets.items():
        if name in RESERVED_NAMES:
            raise SchemaError(f"Reserved name cannot be redeclared: {name}", {"name": name})
        sets[name] = _build_set(name, rows, context)

    topologies: Dict[str, Tuple[str, ...]] = {}
    for name, members in document.topologies.items():
        for member in members:
            if member not in sets and member not in RESERVED_NAMES:
                raise SchemaError(
                    f"Topology {name} names an undeclared set: {member}",
                    {"topology": name, "member": member},
                )
        if len(set(members)) != len(members):
            raise SchemaError(f"Topology {name} lists a member twice", {"topology": name})
        topologies[name] = tuple(members)

    return Workspace(context, sets, topologies)


def parse_workspace(document: Union[str, bytes, Mapping[str, Any]]) -> Workspace:
    """Parse a JSON text or an already-decoded mapping into a Workspace."""
    if isinstance(document, (str, bytes)):
        try:
            raw = json.loads(document, object_pairs_hook=_reject_duplicate_keys)
        except json.JSONDecodeError as exc:
            raise ParseError(f"Malformed JSON: {exc.msg}", {"line": exc.lineno, "column": exc.colno})
    else:
        raw = document
    if not isinstance(raw, Mapping):
        raise ParseError("A workspace document must be a JSON object")
    try:
        parsed = WorkspaceDocument.model_validate(raw)
    except ValidationError as exc:
        raise SchemaError(
            "Document does not match the workspace schema",
            {"errors": [{"loc": ".".join(str(part) for part in error["loc"]), "msg": error["msg"]}
                        for error in exc.errors()]},
        )
    workspace = build_workspace(parsed)
    logger.debug("Workspace parsed", sets=len(workspace.sets), topologies=len(workspace.topologies))
    return workspace


def load_workspace(path: Union[str, Path]) -> Workspace:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"Cannot read workspace file: {path}", {"path": str(path), "reason": exc.strerror})
    workspace = parse_workspace(text)
    logger.info("Workspace loaded", path=str(path), sets=len(workspace.sets))
    return workspace


def render_hfe(value: Ivhfe) -> List[List[str]]:
    return [[format_endpoint(element.lower), format_endpoint(element.upper)] for element in value]


def render_soft_set(soft_set: SoftSet) -> SoftSetOut:
    return SoftSetOut(
        support=list(soft_set.support),
        cells={
            parameter: {obj: render_hfe(soft_set.cell(parameter, obj)) for obj in soft_set.context.universe}
            for parameter in soft_set.support
        },
    )


def render_workspace(workspace: Workspace) -> Dict[str, Any]:
    """Inverse of parse_workspace, in canonical order with decimal-string endpoints."""
    return {
        "universe": list(workspace.context.universe),
        "parameters": list(workspace.context.parameters),
        "sets": {name: render_soft_set(soft_set).cells for name, soft_set in workspace.sets.items()},
        "topologies": {name: list(members) for name, members in workspace.topologies.items()},
    }


def dump_workspace(workspace: Workspace) -> str:
    return json.dumps(render_workspace(workspace), indent=2) + "\n"
