"""JSON interchange for groups, character tables, algebras, hypergroups and diagrams.

Every document carries ``"schema": "fusionkit/1"`` and a ``"kind"`` field.
Structure tensors are stored as sparse ``[i, j, k, a]`` triples; reals use
Python's shortest round-trip float repr, so output is byte-stable.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .characters import Character, CharacterTable
from .diagram import FrobeniusDiagram
from .errors import ParseError, SchemaMismatch
from .fusion import BasisLabel, FusionAlgebra, Hypergroup, Tag
from .groups import FiniteGroup, parse_group_spec

SCHEMA = "fusionkit/1"

EXTENSIONS = {"group": ".fkgroup.json", "algebra": ".fkalg.json", "diagram": ".dot"}


def _group_doc(G: FiniteGroup) -> dict:
    doc = {"name": G.name, "labels": list(G.labels), "cayley": G.cayley.tolist()}
    if G.factor_orders is not None:
        doc["factor_orders"] = list(G.factor_orders)
    return doc


def _basis_doc(basis) -> list:
    return [[b.tag.value, b.origin] for b in basis]


def _sparse(a: np.ndarray) -> list:
    return [[int(i), int(j), int(k), int(a[i, j, k])] for i, j, k in np.argwhere(a != 0)]


def _sparse_real(c: np.ndarray) -> list:
    return [[int(i), int(j), int(k), float(c[i, j, k])] for i, j, k in np.argwhere(c != 0)]


def to_document(entity) -> dict:
    if isinstance(entity, FiniteGroup):
        body = {"kind": "group", **_group_doc(entity)}
    elif isinstance(entity, CharacterTable):
        body = {"kind": "character_table", "group": _group_doc(entity.group),
                "values": [[[float(v.real), float(v.imag)] for v in chi.values] for chi in entity]}
    elif isinstance(entity, FusionAlgebra):
        body = {"kind": "algebra", "basis": _basis_doc(entity.basis),
                "involution": list(entity.involution), "structure": _sparse(entity.structure)}
    elif isinstance(entity, Hypergroup):
        body = {"kind": "hypergroup", "basis": _basis_doc(entity.basis),
                "involution": list(entity.involution),
                "weights": [float(w) for w in entity.weights],
                "coefficients": _sparse_real(entity.coefficients)}
    elif isinstance(entity, FrobeniusDiagram):
        body = {"kind": "diagram", "index": entity.index,
                "circle_nodes": [list(n) for n in entity.circle_nodes],
                "bullet_nodes": [list(n) for n in entity.bullet_nodes],
                "edges": [list(e) for e in entity.edges]}
    else:
        raise TypeError(f"cannot serialize {type(entity).__name__}")
    return {"schema": SCHEMA, **body}


def _dump(value) -> str:
    return json.dumps(value, ensure_ascii=False, separators=(", ", ": "))


def serialize(entity) -> str:
    """One key per line; lists of lists (rows, triples, edges) get one item per line."""
    doc = to_document(entity)
    parts = []
    for key, value in doc.items():
        if isinstance(value, dict):
            text = serialize_dict(value, "  ")
        elif isinstance(value, list) and value and all(isinstance(v, list) for v in value):
            text = "[\n" + ",\n".join("    " + _dump(v) for v in value) + "\n  ]"
        else:
            text = _dump(value)
        parts.append(f"  {_dump(key)}: {text}")
    return "{\n" + ",\n".join(parts) + "\n}\n"


def serialize_dict(doc: dict, indent: str) -> str:
    inner = indent + "  "
    parts = []
    for key, value in doc.items():
        if isinstance(value, list) and value and all(isinstance(v, list) for v in value):
            text = "[\n" + ",\n".join(inner + "  " + _dump(v) for v in value) + "\n" + inner + "]"
        else:
            text = _dump(value)
        parts.append(f"{inner}{_dump(key)}: {text}")
    return "{\n" + ",\n".join(parts) + "\n" + indent + "}"


# ---------------------------------------------------------------------------


def _field(doc: dict, key: str):
    try:
        return doc[key]
    except KeyError:
        raise ParseError(f"missing field {key!r}", 1, 1) from None


def _load_group(doc: dict) -> FiniteGroup:
    G = FiniteGroup(_field(doc, "cayley"), _field(doc, "labels"), doc.get("name", ""))
    if "factor_orders" in doc:
        G.factor_orders = tuple(doc["factor_orders"])
    if G.name:
        try:
            G.spec = parse_group_spec(G.name)
        except Exception:
            pass
    return G


def _load_basis(items) -> list[BasisLabel]:
    out = []
    for tag, origin in items:
        try:
            out.append(BasisLabel(Tag(tag), origin))
        except ValueError:
            raise ParseError(f"unknown basis tag {tag!r}", 1, 1) from None
    return out


def _dense(n: int, triples, dtype) -> np.ndarray:
    a = np.zeros((n, n, n), dtype=dtype)
    for t in triples:
        if len(t) != 4:
            raise ParseError(f"tensor entries must be [i, j, k, a], got {t!r}", 1, 1)
        i, j, k, v = t
        if not all(isinstance(x, int) and 0 <= x < n for x in (i, j, k)):
            raise ParseError(f"tensor index out of range in {t!r}", 1, 1)
        if v < 0:
            raise ParseError(f"negative structure constant at ({i},{j},{k}): F2 violated", 1, 1)
        a[i, j, k] = v
    return a


def from_document(doc: dict):
    if not isinstance(doc, dict):
        raise ParseError("top level must be a JSON object", 1, 1)
    schema = doc.get("schema")
    if schema != SCHEMA:
        raise SchemaMismatch(f"expected schema {SCHEMA!r}, got {schema!r}")
    kind = _field(doc, "kind")
    if kind == "group":
        return _load_group(doc)
    if kind == "character_table":
        G = _load_group(_field(doc, "group"))
        rows = [Character(G, np.array([complex(re, im) for re, im in row]), irreducible=True)
                for row in _field(doc, "values")]
        return CharacterTable(G, tuple(rows))
    if kind == "algebra":
        basis = _load_basis(_field(doc, "basis"))
        for t in _field(doc, "structure"):
            if len(t) == 4 and not isinstance(t[3], int):
                raise ParseError(f"structure constants must be integers, got {t[3]!r}", 1, 1)
        a = _dense(len(basis), doc["structure"], np.int64)
        return FusionAlgebra(basis, _field(doc, "involution"), a)
    if kind == "hypergroup":
        basis = _load_basis(_field(doc, "basis"))
        c = _dense(len(basis), _field(doc, "coefficients"), np.float64)
        return Hypergroup(basis, _field(doc, "involution"), c, _field(doc, "weights"))
    if kind == "diagram":
        return FrobeniusDiagram(tuple(tuple(n) for n in _field(doc, "circle_nodes")),
                                tuple(tuple(n) for n in _field(doc, "bullet_nodes")),
                                tuple(tuple(e) for e in _field(doc, "edges")),
                                doc.get("index", 1))
    raise SchemaMismatch(f"unknown document kind {kind!r}")


def deserialize(text: str):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    return from_document(doc)


def save(entity, path: str | Path) -> None:
    Path(path).write_text(serialize(entity), encoding="utf-8")


def load(path: str | Path):
    return deserialize(Path(path).read_text(encoding="utf-8"))
