"""Text format for describing multi-ring spaces, with bit-exact round-trips.

A description file is a JSON document:

    {
      "universe": ["a0", "a1", "b0"],
      "rings": [
        {"name": "Z2", "elements": ["a0", "a1"], "cyclic": 2},
        {"name": "R",  "elements": ["b0"], "add": [["b0"]], "mul": [["b0"]]}
      ]
    }

A ring either declares ``cyclic: n`` (integers mod n, elements in listed
order) or explicit ``add``/``mul`` tables written as n x n arrays of labels
(row x, column y holds x op y).  Unknown keys, duplicate labels and ragged
tables are rejected with the JSON-path of the offending field; serialization
emits a canonical byte layout, so parse(serialize(x)) == x.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional

from .errors import (
    DuplicateLabel,
    MalformedTable,
    SpecSyntaxError,
    TableShape,
    UnknownKey,
)
from .rings import FiniteRing, Universe, cyclic_ring_on, ring_on_universe
from .spaces import MultiRingSpace, build_multispace

_TOP_KEYS = {"universe", "rings"}
_RING_KEYS = {"name", "elements", "cyclic", "add", "mul"}


@dataclass(frozen=True)
class RingDescription:
    """One ring entry: either a cyclic shorthand or explicit label tables."""

    name: str
    elements: tuple[str, ...]
    cyclic: Optional[int] = None
    add: Optional[tuple[tuple[str, ...], ...]] = None
    mul: Optional[tuple[tuple[str, ...], ...]] = None


@dataclass(frozen=True)
class SpecDocument:
    """Parsed description: universe labels plus ring declarations."""

    universe: tuple[str, ...]
    rings: tuple[RingDescription, ...]


def parse_spec(text: str) -> SpecDocument:
    """Parse a description document, reporting locations on failure."""
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecSyntaxError(exc.msg, f"line {exc.lineno}, column {exc.colno}")
    if not isinstance(raw, dict):
        raise SpecSyntaxError("top level must be an object", "$")
    for key in raw:
        if key not in _TOP_KEYS:
            raise UnknownKey(f"unknown key {key!r}", "$")
    for key in _TOP_KEYS:
        if key not in raw:
            raise SpecSyntaxError(f"missing key {key!r}", "$")

    labels = raw["universe"]
    if (not isinstance(labels, list) or not labels
            or any(not isinstance(l, str) or not l for l in labels)):
        raise SpecSyntaxError("universe must be a non-empty list of labels",
                              "$.universe")
    seen: set[str] = set()
    for idx, label in enumerate(labels):
        if label in seen:
            raise DuplicateLabel(f"label {label!r} listed twice",
                                 f"$.universe[{idx}]")
        seen.add(label)

    rings_raw = raw["rings"]
    if not isinstance(rings_raw, list) or not rings_raw:
        raise SpecSyntaxError("rings must be a non-empty list", "$.rings")
    rings = tuple(_parse_ring(entry, i, seen) for i, entry in enumerate(rings_raw))
    return SpecDocument(universe=tuple(labels), rings=rings)


def _parse_ring(entry, idx: int, universe_labels: set[str]) -> RingDescription:
    where = f"$.rings[{idx}]"
    if not isinstance(entry, dict):
        raise SpecSyntaxError("ring entry must be an object", where)
    for key in entry:
        if key not in _RING_KEYS:
            raise UnknownKey(f"unknown key {key!r}", where)
    name = entry.get("name", f"R{idx + 1}")
    if not isinstance(name, str) or not name:
        raise SpecSyntaxError("ring name must be a non-empty string",
                              f"{where}.name")
    elements = entry.get("elements")
    if (not isinstance(elements, list) or not elements
            or any(not isinstance(l, str) for l in elements)):
        raise SpecSyntaxError("elements must be a non-empty list of labels",
                              f"{where}.elements")
    dup_seen: set[str] = set()
    for label in elements:
        if label in dup_seen:
            raise DuplicateLabel(f"label {label!r} listed twice",
                                 f"{where}.elements")
        dup_seen.add(label)
    for label in elements:
        if label not in universe_labels:
            raise MalformedTable(
                f"{where}.elements: label {label!r} not in universe")
    n = len(elements)

    has_cyclic = "cyclic" in entry
    has_tables = "add" in entry or "mul" in entry
    if has_cyclic == has_tables:
        raise SpecSyntaxError(
            "ring needs either 'cyclic' or both 'add' and 'mul'", where)
    if has_cyclic:
        size = entry["cyclic"]
        if not isinstance(size, int) or isinstance(size, bool) or size < 1:
            raise SpecSyntaxError("cyclic must be a positive integer",
                                  f"{where}.cyclic")
        if size != n:
            raise TableShape(
                f"cyclic size {size} does not match {n} elements",
                f"{where}.cyclic")
        return RingDescription(name=name, elements=tuple(elements), cyclic=size)

    if "add" not in entry or "mul" not in entry:
        raise SpecSyntaxError("explicit rings need both 'add' and 'mul'", where)
    tables = {}
    for key in ("add", "mul"):
        table = entry[key]
        path = f"{where}.{key}"
        if not isinstance(table, list) or len(table) != n:
            raise TableShape(f"table must have {n} rows", path)
        for r, row in enumerate(table):
            if not isinstance(row, list) or len(row) != n:
                raise TableShape(f"row {r} must have {n} entries", path)
            for v in row:
                if not isinstance(v, str):
                    raise TableShape(f"row {r} holds a non-label entry", path)
                if v not in universe_labels:
                    raise MalformedTable(f"{path}: label {v!r} not in universe")
        tables[key] = tuple(tuple(row) for row in table)
    return RingDescription(name=name, elements=tuple(elements),
                           add=tables["add"], mul=tables["mul"])


def build_space(doc: SpecDocument) -> MultiRingSpace:
    """Materialize a parsed document; validation errors propagate."""
    universe = Universe(doc.universe)
    rings: list[FiniteRing] = []
    for desc in doc.rings:
        ids = tuple(universe.id_of(l) for l in desc.elements)
        if desc.cyclic is not None:
            rings.append(cyclic_ring_on(universe, ids, desc.name))
        else:
            add = [[universe.id_of(v) for v in row] for row in desc.add]
            mul = [[universe.id_of(v) for v in row] for row in desc.mul]
            rings.append(ring_on_universe(desc.name, universe, ids, add, mul))
    return build_multispace(universe, rings)


def load_space(text: str) -> MultiRingSpace:
    """Parse and build in one step."""
    return build_space(parse_spec(text))


def document_for_space(space: MultiRingSpace) -> SpecDocument:
    """Describe an in-memory space with explicit tables (always exact)."""
    universe = space.universe
    rings = []
    for ring in space.rings:
        elements = tuple(universe.label(e) for e in ring.carrier)
        add = tuple(tuple(universe.label(e) for e in row)
                    for row in ring.add_table)
        mul = tuple(tuple(universe.label(e) for e in row)
                    for row in ring.mul_table)
        rings.append(RingDescription(name=ring.name, elements=elements,
                                     add=add, mul=mul))
    return SpecDocument(universe=universe.labels, rings=tuple(rings))


def serialize_spec(doc: SpecDocument | MultiRingSpace) -> str:
    """Canonical text for a document (or a space, via explicit tables)."""
    if isinstance(doc, MultiRingSpace):
        doc = document_for_space(doc)
    rings = []
    for desc in doc.rings:
        entry: dict = {"name": desc.name, "elements": list(desc.elements)}
        if desc.cyclic is not None:
            entry["cyclic"] = desc.cyclic
        else:
            entry["add"] = [list(row) for row in desc.add]
            entry["mul"] = [list(row) for row in desc.mul]
        rings.append(entry)
    payload = {"universe": list(doc.universe), "rings": rings}
    return json.dumps(payload, indent=2) + "\n"
