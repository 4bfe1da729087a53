"""JSON wire formats for matrices, objects, morphisms, pairs and squares.

Integers serialize as JSON numbers (arbitrary precision is fine in JSON);
rationals as ``"p/q"`` strings in lowest terms, or plain numbers when the
denominator is one.  Parsing accepts numbers and decimal/fraction strings.
Rendering is canonical so equal values always produce identical bytes.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .core import ConstraintError, ExactCatError, Mor, Obj, get_instance
from .integral import IntMatrix
from .rational import RatMatrix


class SchemaError(ExactCatError):
    """Malformed or inconsistent wire data; names the offending field."""

    def __init__(self, field: str, message: str):
        super().__init__(f"{field}: {message}")
        self.field = field
        self.message = message


def scalar_to_json(x):
    if isinstance(x, Fraction):
        if x.denominator == 1:
            return x.numerator
        return f"{x.numerator}/{x.denominator}"
    return int(x)


def matrix_data(m) -> list:
    return [[scalar_to_json(x) for x in row] for row in m.entries()]


def matrix_to_json(m) -> dict:
    return {"rows": m.rows, "cols": m.cols, "data": matrix_data(m)}


def _parse_table(data, field: str) -> list:
    if not isinstance(data, list) or any(not isinstance(r, list) for r in data):
        raise SchemaError(field, "expected a list of rows")
    return data


def parse_matrix_data(data, rows: int, cols: int, ring: str, field: str):
    table = _parse_table(data, field)
    cls = RatMatrix if ring == "Q" else IntMatrix
    try:
        return cls(rows, cols, table)
    except (TypeError, ValueError) as exc:
        raise SchemaError(field, str(exc)) from None


def parse_matrix(doc, ring: str, field: str = "matrix"):
    if not isinstance(doc, dict) or not {"rows", "cols", "data"} <= set(doc):
        raise SchemaError(field, 'expected {"rows": ..., "cols": ..., "data": [[...]]}')
    return parse_matrix_data(doc["data"], doc["rows"], doc["cols"], ring, field + ".data")


def obj_to_json(x: Obj) -> dict:
    if x.category == "LatticeZ":
        return {"rank": x.dim}
    if x.sub is not None:
        return {"dim": x.dim, "sub": matrix_data(x.sub)}
    return {"dim": x.dim}


def parse_obj(category: str, doc, field: str) -> Obj:
    if not isinstance(doc, dict):
        raise SchemaError(field, "expected an object document")
    inst = _instance(category, field)
    try:
        if category == "LatticeZ":
            if "rank" not in doc:
                raise SchemaError(f"{field}.rank", "missing")
            return inst.object(int(doc["rank"]))
        if "dim" not in doc:
            raise SchemaError(f"{field}.dim", "missing")
        dim = int(doc["dim"])
        if category == "MonoPairsQ":
            sub_data = doc.get("sub", [])
            table = _parse_table(sub_data, f"{field}.sub")
            cols = len(table[0]) if table and table[0] else 0
            sub = parse_matrix_data(table, dim, cols, "Q", f"{field}.sub") if table else None
            return inst.object(dim, sub)
        return inst.object(dim)
    except ConstraintError as exc:
        raise SchemaError(field, str(exc)) from None
    except (TypeError, ValueError) as exc:
        raise SchemaError(field, str(exc)) from None


def _instance(category, field):
    try:
        return get_instance(category)
    except ConstraintError as exc:
        raise SchemaError(f"{field}.category" if field else "category", str(exc)) from None


def mor_to_json(f: Mor) -> dict:
    return {
        "category": f.category,
        "dom": obj_to_json(f.dom),
        "cod": obj_to_json(f.cod),
        "matrix": matrix_data(f.matrix),
    }


def parse_mor(doc, field: str = "") -> Mor:
    prefix = field + "." if field else ""
    if not isinstance(doc, dict):
        raise SchemaError(field or "morphism", "expected a morphism document")
    for key in ("category", "dom", "cod", "matrix"):
        if key not in doc:
            raise SchemaError(prefix + key, "missing")
    category = doc["category"]
    inst = _instance(category, field)
    dom = parse_obj(category, doc["dom"], prefix + "dom")
    cod = parse_obj(category, doc["cod"], prefix + "cod")
    payload = parse_matrix_data(doc["matrix"], cod.dim, dom.dim, inst.ring, prefix + "matrix")
    try:
        return inst.morphism(dom, cod, payload)
    except ConstraintError as exc:
        raise SchemaError(prefix + "matrix", str(exc)) from None


def pair_to_json(pair) -> dict:
    return {"f": mor_to_json(pair.f), "g": mor_to_json(pair.g)}


def parse_pair(doc, field: str = ""):
    from .engine.verdicts import ExactPair, PairError

    prefix = field + "." if field else ""
    if not isinstance(doc, dict) or "f" not in doc or "g" not in doc:
        raise SchemaError(field or "pair", 'expected {"f": ..., "g": ...}')
    f = parse_mor(doc["f"], prefix + "f")
    g = parse_mor(doc["g"], prefix + "g")
    try:
        return ExactPair(f=f, g=g)
    except (PairError, ExactCatError) as exc:
        raise SchemaError(field or "pair", str(exc)) from None


def pullback_to_json(sq) -> dict:
    return {
        "kind": "pullback",
        "g": mor_to_json(sq.g),
        "t": mor_to_json(sq.t),
        "P": obj_to_json(sq.obj),
        "p_Y": mor_to_json(sq.p_Y),
        "p_T": mor_to_json(sq.p_T),
    }


def pushout_to_json(sq) -> dict:
    return {
        "kind": "pushout",
        "f": mor_to_json(sq.f),
        "t": mor_to_json(sq.t),
        "S": obj_to_json(sq.obj),
        "s_Y": mor_to_json(sq.s_Y),
        "s_T": mor_to_json(sq.s_T),
    }


def canonical_json(doc) -> str:
    """Byte-deterministic rendering: sorted keys, no whitespace drift."""
    return json.dumps(doc, sort_keys=True, separators=(",", ":"), ensure_ascii=True)
