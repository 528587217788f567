"""Versioned JSON documents for every diagram value.

One document per file: an envelope {"version", "base", "kind", "body"}
wrapping integer tables. All tables are 0-based arrays; dictionaries
with composite keys are stored as arrays of rows, key fields first.
Decoding validates eagerly and reports the offending field path, then
hands the decoded value to the constructors, so the structural
validators stay the single source of truth.
"""

from __future__ import annotations

import json

from .base import (
    BASES,
    FiniteFunction,
    FiniteGraph,
    FiniteSet,
    GraphHom,
)
from .cospans import Cospan, CospanMap
from .double import Cylinder, DoubleCell, DoubleCospan
from .errors import DiagramError, ParseError
from .extraction import BicatPresentation, DoubleCatPresentation

FORMAT_VERSION = 1

# envelope shape produced by to_document and accepted by from_document
DiagramDocument = dict

KINDS = (
    "cospan",
    "cospan_map",
    "double_cospan",
    "cylinder",
    "double_cell",
    "bicat_presentation",
    "doublecat_presentation",
)


# ---------------------------------------------------------------------------
# encoding


def _enc_object(x):
    if isinstance(x, FiniteSet):
        return x.size
    return {
        "vertices": x.vertices,
        "edges": x.edges,
        "src": list(x.src),
        "tgt": list(x.tgt),
    }


def _enc_map(f):
    if isinstance(f, FiniteFunction):
        return {
            "dom": _enc_object(f.dom),
            "cod": _enc_object(f.cod),
            "table": list(f.table),
        }
    return {
        "dom": _enc_object(f.dom),
        "cod": _enc_object(f.cod),
        "vmap": list(f.vmap),
        "emap": list(f.emap),
    }


def _enc_cospan(c: Cospan):
    return {"left": _enc_map(c.left_leg), "right": _enc_map(c.right_leg)}


def _enc_cospan_map(a: CospanMap):
    return {
        "source": _enc_cospan(a.source),
        "target": _enc_cospan(a.target),
        "map": _enc_map(a.map),
    }


def _enc_square(d: DoubleCospan):
    return {
        "top": _enc_cospan(d.top),
        "bottom": _enc_cospan(d.bottom),
        "left": _enc_cospan(d.left),
        "right": _enc_cospan(d.right),
        "center": _enc_object(d.center),
        "from_top": _enc_map(d.from_top),
        "from_bottom": _enc_map(d.from_bottom),
        "from_left": _enc_map(d.from_left),
        "from_right": _enc_map(d.from_right),
    }


def _enc_cylinder(c: Cylinder):
    return {
        "orientation": c.orientation,
        "source": _enc_square(c.source),
        "target": _enc_square(c.target),
        "bigon1": _enc_cospan_map(c.bigon1),
        "bigon2": _enc_cospan_map(c.bigon2),
        "core": _enc_map(c.core),
    }


def _enc_cell(c: DoubleCell):
    return {
        "row1": _enc_cylinder(c.row1),
        "row2": _enc_cylinder(c.row2),
        "col1": _enc_cylinder(c.col1),
        "col2": _enc_cylinder(c.col2),
    }


def _rows(d, arity):
    # composite-keyed dict -> sorted list of [key..., value] rows
    out = []
    for k, v in d.items():
        key = list(k) if arity > 1 else [k]
        out.append(key + [v])
    out.sort(key=lambda row: tuple(map(str, row)))
    return out


def _enc_bicat(p: BicatPresentation):
    return {
        "objects": sorted(p.objects, key=str),
        "mor_src": _rows(p.mor_src, 1),
        "mor_tgt": _rows(p.mor_tgt, 1),
        "cell_src": _rows(p.cell_src, 1),
        "cell_tgt": _rows(p.cell_tgt, 1),
        "id_mor": _rows(p.id_mor, 1),
        "id_cell": _rows(p.id_cell, 1),
        "comp_mor": _rows(p.comp_mor, 2),
        "vcomp_cell": _rows(p.vcomp_cell, 2),
        "hcomp_cell": _rows(p.hcomp_cell, 2),
        "assoc": _rows(p.assoc, 3),
        "lunit": _rows(p.lunit, 1),
        "runit": _rows(p.runit, 1),
        "inv_cell": _rows(p.inv_cell, 1),
    }


def _enc_doublecat(p: DoubleCatPresentation):
    return {
        "objects": sorted(p.objects, key=str),
        "hmor_src": _rows(p.hmor_src, 1),
        "hmor_tgt": _rows(p.hmor_tgt, 1),
        "vmor_src": _rows(p.vmor_src, 1),
        "vmor_tgt": _rows(p.vmor_tgt, 1),
        "h_id": _rows(p.h_id, 1),
        "v_id": _rows(p.v_id, 1),
        "hcomp_mor": _rows(p.hcomp_mor, 2),
        "vcomp_mor": _rows(p.vcomp_mor, 2),
        "squares": _rows({k: list(v) for k, v in p.squares.items()}, 1),
    }


_ENCODERS = [
    (Cospan, "cospan", _enc_cospan),
    (CospanMap, "cospan_map", _enc_cospan_map),
    (DoubleCospan, "double_cospan", _enc_square),
    (Cylinder, "cylinder", _enc_cylinder),
    (DoubleCell, "double_cell", _enc_cell),
    (BicatPresentation, "bicat_presentation", _enc_bicat),
    (DoubleCatPresentation, "doublecat_presentation", _enc_doublecat),
]


def _base_tag(value) -> str:
    probe = value
    while True:
        if isinstance(probe, (Cylinder, DoubleCell)):
            probe = probe.row1 if isinstance(probe, DoubleCell) else probe.source
            continue
        if isinstance(probe, CospanMap):
            probe = probe.source
            continue
        if isinstance(probe, (Cospan, DoubleCospan)):
            return probe.base.name if isinstance(probe, Cospan) else (
                "finset" if isinstance(probe.center, FiniteSet) else "fingraph"
            )
        return "finset"


def to_document(value) -> dict:
    """Wrap any supported diagram value in a versioned envelope."""
    for cls, kind, enc in _ENCODERS:
        if isinstance(value, cls):
            return {
                "version": FORMAT_VERSION,
                "base": _base_tag(value),
                "kind": kind,
                "body": enc(value),
            }
    raise ParseError(f"no document encoding for {type(value).__name__}")


# ---------------------------------------------------------------------------
# decoding, with field paths on every complaint


def _fail(path, msg):
    raise ParseError(f"{path}: {msg}")


def _want(body, path, field, types):
    if not isinstance(body, dict):
        _fail(path, "expected an object")
    if field not in body:
        _fail(path, f"missing field '{field}'")
    v = body[field]
    if types is not None and not isinstance(v, types):
        _fail(f"{path}.{field}", f"expected {types[0].__name__}")
    return v


def _int_list(body, path, field):
    v = _want(body, path, field, (list,))
    for i, x in enumerate(v):
        if not isinstance(x, int) or isinstance(x, bool):
            _fail(f"{path}.{field}[{i}]", "expected an integer")
    return tuple(v)


def _dec_object(data, path, base):
    if base == "finset":
        if not isinstance(data, int) or isinstance(data, bool) or data < 0:
            _fail(path, "expected a nonnegative integer size")
        return FiniteSet(data)
    v = _want(data, path, "vertices", (int,))
    e = _want(data, path, "edges", (int,))
    src = _int_list(data, path, "src")
    tgt = _int_list(data, path, "tgt")
    if len(src) != e or len(tgt) != e:
        _fail(path, f"endpoint tables must have length {e}")
    for i, (s, t) in enumerate(zip(src, tgt)):
        if not (0 <= s < v):
            _fail(f"{path}.src[{i}]", f"vertex {s} out of range 0..{v - 1}")
        if not (0 <= t < v):
            _fail(f"{path}.tgt[{i}]", f"vertex {t} out of range 0..{v - 1}")
    return FiniteGraph(v, e, src, tgt)


def _dec_map(data, path, base):
    dom = _dec_object(_want(data, path, "dom", None), f"{path}.dom", base)
    cod = _dec_object(_want(data, path, "cod", None), f"{path}.cod", base)
    if base == "finset":
        table = _int_list(data, path, "table")
        for i, x in enumerate(table):
            if not (0 <= x < cod.size):
                _fail(f"{path}.table[{i}]", f"value {x} out of range")
        try:
            return FiniteFunction(dom, cod, table)
        except DiagramError as exc:
            _fail(path, str(exc))
    vmap = _int_list(data, path, "vmap")
    emap = _int_list(data, path, "emap")
    for i, x in enumerate(vmap):
        if not (0 <= x < cod.vertices):
            _fail(f"{path}.vmap[{i}]", f"vertex {x} out of range")
    for i, x in enumerate(emap):
        if not (0 <= x < cod.edges):
            _fail(f"{path}.emap[{i}]", f"edge {x} out of range")
    try:
        return GraphHom(dom, cod, vmap, emap)
    except DiagramError as exc:
        _fail(path, str(exc))


def _dec_cospan(data, path, base):
    left = _dec_map(_want(data, path, "left", None), f"{path}.left", base)
    right = _dec_map(_want(data, path, "right", None), f"{path}.right", base)
    try:
        return Cospan(left, right)
    except DiagramError as exc:
        _fail(path, str(exc))


def _dec_cospan_map(data, path, base):
    src = _dec_cospan(_want(data, path, "source", None), f"{path}.source", base)
    tgt = _dec_cospan(_want(data, path, "target", None), f"{path}.target", base)
    m = _dec_map(_want(data, path, "map", None), f"{path}.map", base)
    try:
        return CospanMap(src, tgt, m)
    except DiagramError as exc:
        _fail(path, str(exc))


def _dec_square(data, path, base):
    kw = {}
    for field in ("top", "bottom", "left", "right"):
        kw[field] = _dec_cospan(
            _want(data, path, field, None), f"{path}.{field}", base
        )
    kw["center"] = _dec_object(
        _want(data, path, "center", None), f"{path}.center", base
    )
    for field in ("from_top", "from_bottom", "from_left", "from_right"):
        kw[field] = _dec_map(
            _want(data, path, field, None), f"{path}.{field}", base
        )
    try:
        return DoubleCospan(**kw)
    except DiagramError as exc:
        _fail(path, str(exc))


def _dec_cylinder(data, path, base):
    orientation = _want(data, path, "orientation", (str,))
    src = _dec_square(_want(data, path, "source", None), f"{path}.source", base)
    tgt = _dec_square(_want(data, path, "target", None), f"{path}.target", base)
    b1 = _dec_cospan_map(_want(data, path, "bigon1", None), f"{path}.bigon1", base)
    b2 = _dec_cospan_map(_want(data, path, "bigon2", None), f"{path}.bigon2", base)
    core = _dec_map(_want(data, path, "core", None), f"{path}.core", base)
    try:
        return Cylinder(orientation, src, tgt, b1, b2, core)
    except DiagramError as exc:
        _fail(path, str(exc))


def _dec_cell(data, path, base):
    cyls = {
        f: _dec_cylinder(_want(data, path, f, None), f"{path}.{f}", base)
        for f in ("row1", "row2", "col1", "col2")
    }
    try:
        return DoubleCell(**cyls)
    except DiagramError as exc:
        _fail(path, str(exc))


def _key(x, path):
    if isinstance(x, bool) or not isinstance(x, (int, str)):
        _fail(path, "keys must be integers or strings")
    return x


def _dict_rows(data, path, field, arity):
    rows = _want(data, path, field, (list,))
    out = {}
    for i, row in enumerate(rows):
        rp = f"{path}.{field}[{i}]"
        if not isinstance(row, list) or len(row) != arity + 1:
            _fail(rp, f"expected a row of {arity + 1} entries")
        key = tuple(_key(x, rp) for x in row[:arity])
        if arity == 1:
            key = key[0]
        if key in out:
            _fail(rp, "duplicate key")
        out[key] = _key(row[arity], rp)
    return out


def _dec_bicat(data, path, base):
    objs = _want(data, path, "objects", (list,))
    kw = {"objects": tuple(_key(x, f"{path}.objects") for x in objs)}
    for field, arity in (
        ("mor_src", 1),
        ("mor_tgt", 1),
        ("cell_src", 1),
        ("cell_tgt", 1),
        ("id_mor", 1),
        ("id_cell", 1),
        ("comp_mor", 2),
        ("vcomp_cell", 2),
        ("hcomp_cell", 2),
        ("assoc", 3),
        ("lunit", 1),
        ("runit", 1),
        ("inv_cell", 1),
    ):
        kw[field] = _dict_rows(data, path, field, arity)
    try:
        return BicatPresentation(**kw)
    except DiagramError as exc:
        _fail(path, str(exc))


def _dec_doublecat(data, path, base):
    objs = _want(data, path, "objects", (list,))
    kw = {"objects": tuple(_key(x, f"{path}.objects") for x in objs)}
    for field, arity in (
        ("hmor_src", 1),
        ("hmor_tgt", 1),
        ("vmor_src", 1),
        ("vmor_tgt", 1),
        ("h_id", 1),
        ("v_id", 1),
        ("hcomp_mor", 2),
        ("vcomp_mor", 2),
    ):
        kw[field] = _dict_rows(data, path, field, arity)
    squares = {}
    rows = _want(data, path, "squares", (list,))
    for i, row in enumerate(rows):
        rp = f"{path}.squares[{i}]"
        if not isinstance(row, list) or len(row) != 2 or not isinstance(row[1], list):
            _fail(rp, "expected [id, [top, bottom, left, right]]")
        if len(row[1]) != 4:
            _fail(rp, "expected four boundary entries")
        squares[_key(row[0], rp)] = tuple(_key(x, rp) for x in row[1])
    kw["squares"] = squares
    try:
        return DoubleCatPresentation(**kw)
    except DiagramError as exc:
        _fail(path, str(exc))


_DECODERS = {
    "cospan": _dec_cospan,
    "cospan_map": _dec_cospan_map,
    "double_cospan": _dec_square,
    "cylinder": _dec_cylinder,
    "double_cell": _dec_cell,
    "bicat_presentation": _dec_bicat,
    "doublecat_presentation": _dec_doublecat,
}


def from_document(doc) -> object:
    if not isinstance(doc, dict):
        raise ParseError("document: expected a JSON object")
    version = doc.get("version")
    if version != FORMAT_VERSION:
        raise ParseError(f"version: unsupported value {version!r}")
    base = doc.get("base")
    if base not in BASES:
        raise ParseError(f"base: expected one of {sorted(BASES)}, got {base!r}")
    kind = doc.get("kind")
    if kind not in _DECODERS:
        raise ParseError(f"kind: unknown kind {kind!r}")
    if "body" not in doc:
        raise ParseError("body: missing")
    return _DECODERS[kind](doc["body"], "body", base)


def dumps(value) -> str:
    return json.dumps(to_document(value), indent=2, sort_keys=True)


def loads(text: str) -> object:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON at line {exc.lineno}: {exc.msg}") from exc
    return from_document(doc)


def save(value, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(value))
        fh.write("\n")


def load(path) -> object:
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())
