"""JSON model documents.

One self-describing format covers every representation::

    {
      "representation": "dh" | "poe" | "rpyxyz" | "gjd",
      "name": "...",
      "units": {"angle": "rad", "length": "m"},
      ...payload
    }

Payloads:

* ``dh``: ``base`` = [a, d, alpha, theta], ``rows`` = [[a, d, alpha, theta, kind], ...],
  ``tool`` = 16 row-major numbers (optional, identity by default)
* ``poe``: ``m`` = 16 row-major numbers, ``screws`` = [[wx, wy, wz, vx, vy, vz], ...]
* ``rpyxyz``: ``rows`` = [[roll, pitch, yaw, x, y, z], ...] (n + 2 rows), ``kinds``
* ``gjd``: ``frames`` = [16 numbers, ...], ``kinds``, ``tool`` = 16 numbers
"""

from __future__ import annotations

import json
import math
import os
import tempfile
from dataclasses import dataclass
from typing import Any, List

import numpy as np

from kinconv import se3
from kinconv.model import (
    DHModel,
    DHRow,
    GJDModel,
    JointKind,
    Model,
    ModelError,
    PoEModel,
    RpyXyzModel,
    validate,
)
from kinconv.se3 import Screw

REPRESENTATIONS = ("dh", "poe", "rpyxyz", "gjd")
UNITS = {"angle": "rad", "length": "m"}


class DocumentError(ValueError):
    """Malformed document; the message names the file and offending field."""


@dataclass(frozen=True)
class ModelDocument:
    representation: str
    name: str
    model: Model


def _fail(source: str, where: str, msg: str):
    raise DocumentError(f"{source}: {where}: {msg}")


def _numbers(source: str, where: str, value: Any, count: int = None) -> List[float]:
    if not isinstance(value, list):
        _fail(source, where, "expected a list of numbers")
    if count is not None and len(value) != count:
        _fail(source, where, f"expected {count} numbers, got {len(value)}")
    out = []
    for i, v in enumerate(value):
        if isinstance(v, bool) or not isinstance(v, (int, float)):
            _fail(source, f"{where}[{i}]", f"expected a number, got {v!r}")
        if not math.isfinite(v):
            _fail(source, f"{where}[{i}]", "number must be finite")
        out.append(float(v))
    return out


def _matrix(source: str, where: str, value: Any) -> np.ndarray:
    return np.array(_numbers(source, where, value, 16)).reshape(4, 4)


def _kind(source: str, where: str, value: Any) -> JointKind:
    try:
        return JointKind.parse(value)
    except ValueError as exc:
        _fail(source, where, str(exc))


def _list(source: str, where: str, value: Any) -> list:
    if not isinstance(value, list):
        _fail(source, where, "expected a list")
    return value


def _require(doc: dict, key: str, source: str):
    if key not in doc:
        _fail(source, key, "missing field")
    return doc[key]


def _screw(source: str, where: str, value: Any) -> Screw:
    if isinstance(value, list) and len(value) != 6:
        _fail(source, where, f"screw must have 6 components, got {len(value)}")
    return Screw.from_vector(_numbers(source, where, value, 6))


def parse_document(doc: Any, source: str = "<document>") -> ModelDocument:
    """Build a model from already-decoded JSON without checking invariants."""
    if not isinstance(doc, dict):
        _fail(source, "document", "top level must be an object")
    rep = _require(doc, "representation", source)
    if rep not in REPRESENTATIONS:
        _fail(source, "representation", f"unknown tag {rep!r}; expected one of {REPRESENTATIONS}")
    name = doc.get("name", "")
    if not isinstance(name, str):
        _fail(source, "name", "expected text")
    units = doc.get("units", UNITS)
    if units != UNITS:
        _fail(source, "units", f"only {UNITS} is supported")

    if rep == "dh":
        base = _numbers(source, "base", doc.get("base", [0, 0, 0, 0]), 4)
        rows = []
        for i, row in enumerate(_list(source, "rows", _require(doc, "rows", source))):
            where = f"rows[{i}]"
            if not isinstance(row, list) or len(row) != 5:
                _fail(source, where, "expected [a, d, alpha, theta, kind]")
            a, d, alpha, theta = _numbers(source, where, row[:4], 4)
            rows.append(DHRow(a, d, alpha, theta, _kind(source, f"{where}[4]", row[4])))
        tool = _matrix(source, "tool", doc["tool"]) if "tool" in doc else np.eye(4)
        model = DHModel(rows, base=DHRow(*base, kind=None), tool=tool)
    elif rep == "poe":
        m = _matrix(source, "m", _require(doc, "m", source))
        screws = [
            _screw(source, f"screws[{i}]", s)
            for i, s in enumerate(_list(source, "screws", _require(doc, "screws", source)))
        ]
        model = PoEModel(m, screws)
    elif rep == "rpyxyz":
        rows = [
            _numbers(source, f"rows[{i}]", r, 6)
            for i, r in enumerate(_list(source, "rows", _require(doc, "rows", source)))
        ]
        kinds = [
            _kind(source, f"kinds[{i}]", k)
            for i, k in enumerate(_list(source, "kinds", _require(doc, "kinds", source)))
        ]
        model = RpyXyzModel(rows, kinds)
    else:
        frames = [
            _matrix(source, f"frames[{i}]", f)
            for i, f in enumerate(_list(source, "frames", _require(doc, "frames", source)))
        ]
        kinds = [
            _kind(source, f"kinds[{i}]", k)
            for i, k in enumerate(_list(source, "kinds", _require(doc, "kinds", source)))
        ]
        model = GJDModel(frames, kinds, _matrix(source, "tool", _require(doc, "tool", source)))
    return ModelDocument(rep, name, model)


def read_document(path, check: bool = True, tol: float = se3.VALID_TOL) -> ModelDocument:
    """Read and parse ``path``; with ``check`` the model must also be valid."""
    source = os.fspath(path)
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(
            f"{source}: line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from None
    parsed = parse_document(doc, source)
    if check:
        diagnostics = validate(parsed.model, tol)
        if diagnostics:
            raise ModelError([f"{source}: {d}" for d in diagnostics])
    return parsed


def load_model(path, tol: float = se3.VALID_TOL) -> Model:
    return read_document(path, tol=tol).model


def representation_of(model: Model) -> str:
    for tag, cls in (("dh", DHModel), ("poe", PoEModel), ("rpyxyz", RpyXyzModel), ("gjd", GJDModel)):
        if isinstance(model, cls):
            return tag
    raise TypeError(f"unsupported model type {type(model).__name__}")


def _flat(t) -> List[float]:
    return [float(v) for v in np.asarray(t).reshape(-1)]


def to_document(model: Model, name: str = "") -> dict:
    rep = representation_of(model)
    doc = {"representation": rep, "name": name, "units": dict(UNITS)}
    if rep == "dh":
        doc["base"] = [float(v) for v in model.base.params()]
        doc["rows"] = [
            [float(v) for v in r.params()] + [r.kind.value] for r in model.rows
        ]
        doc["tool"] = _flat(model.tool)
    elif rep == "poe":
        doc["m"] = _flat(model.m)
        doc["screws"] = [_flat(s.as_vector()) for s in model.screws]
    elif rep == "rpyxyz":
        doc["rows"] = [[float(v) for v in r.values()] for r in model.rows]
        doc["kinds"] = [k.value for k in model.kinds]
    else:
        doc["frames"] = [_flat(f) for f in model.joint_frames]
        doc["kinds"] = [k.value for k in model.kinds]
        doc["tool"] = _flat(model.tool_frame)
    return doc


def dumps(doc: dict) -> str:
    """Serialize with one table row per line; floats keep full precision."""
    lines = ["{"]
    items = list(doc.items())
    for i, (key, value) in enumerate(items):
        comma = "," if i < len(items) - 1 else ""
        if isinstance(value, list) and value and isinstance(value[0], list):
            lines.append(f"  {json.dumps(key)}: [")
            for j, row in enumerate(value):
                sep = "," if j < len(value) - 1 else ""
                lines.append(f"    {json.dumps(row)}{sep}")
            lines.append(f"  ]{comma}")
        else:
            lines.append(f"  {json.dumps(key)}: {json.dumps(value)}{comma}")
    lines.append("}")
    return "\n".join(lines) + "\n"


def write_text_atomic(path, text: str):
    """Write via a temporary file so a failure never leaves a partial file."""
    path = os.fspath(path)
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".kinconv-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def save_model(model: Model, path, name: str = ""):
    diagnostics = validate(model)
    if diagnostics:
        raise ModelError(diagnostics)
    write_text_atomic(path, dumps(to_document(model, name)))
