"""Mappings between representations, all routed through :class:`GJDModel`.

Frame placement options shared by the PoE and DH legs:

``normal``
    ``"backward"`` (default) points a joint frame's x axis from the current
    joint axis back towards the previous one, and uses ``z_i x z_{i-1}``
    for intersecting axes. ``"forward"`` reverses both choices. The two
    differ only in the signs of a, alpha and theta; the kinematics are
    identical.

``frames`` (PoE input only)
    ``"dh"`` (default) places each joint frame on the common normal with
    its predecessor so the hub is already DH-structured. ``"axis"`` puts
    each revolute frame at the axis point closest to the base origin, with
    y along the screw moment; the DH leg re-frames such hubs on its own.
"""

from __future__ import annotations

import math
from typing import List, Optional

import numpy as np

from kinconv import se3
from kinconv.lines import (
    LINE_TOL,
    Line,
    LineRelation,
    classify_pair,
    common_perpendicular,
    intersection_point,
    screw_line,
)
from kinconv.model import (
    DHModel,
    DHRow,
    GJDModel,
    JointKind,
    Model,
    PoEModel,
    RpyXyzModel,
    RpyXyzRow,
    require_valid,
)
from kinconv.se3 import Screw

NORMALS = ("backward", "forward")
PLACEMENTS = ("dh", "axis")
TARGETS = ("dh", "poe", "rpyxyz", "gjd")

DH_TOL = 1e-9


class ConversionError(ValueError):
    """A conversion has no well-defined result for the given input."""


def _frame(x, z, origin) -> np.ndarray:
    z = se3.unit(z)
    x = se3.unit(np.asarray(x, dtype=float) - (np.dot(x, z)) * z)
    return se3.from_rt(np.column_stack([x, np.cross(z, x), z]), origin)


def place_frame(prev: np.ndarray, line: Line, normal: str = "backward",
                tol: float = LINE_TOL) -> np.ndarray:
    """DH-conventional frame on ``line`` given the previously placed frame.

    Coincident axes reuse ``prev``; opposite coincident axes flip it about
    x; intersecting axes put the origin at the intersection; skew and
    parallel axes put it at the foot of the common normal.
    """
    if normal not in NORMALS:
        raise ValueError(f"normal must be one of {NORMALS}, got {normal!r}")
    prev_line = Line.z_axis_of(prev)
    relation = classify_pair(prev_line, line, tol)
    if relation is LineRelation.COINCIDENT:
        return np.array(prev, dtype=float)
    if relation is LineRelation.COINCIDENT_OPPOSITE:
        return prev @ se3.rot_x(math.pi)
    z_prev, z = prev_line.direction, line.direction
    if relation is LineRelation.INTERSECTING:
        origin = line.foot_of(intersection_point(prev_line, line, tol))
        x = np.cross(z_prev, z) if normal == "forward" else np.cross(z, z_prev)
    else:
        p1, origin = common_perpendicular(prev_line, line, tol)
        x = origin - p1 if normal == "forward" else p1 - origin
    return _frame(x, z, origin)


def _axis_frame(direction, origin, moment, tol: float) -> np.ndarray:
    z = se3.unit(direction)
    y = np.asarray(moment, dtype=float)
    y = y - (y @ z) * z
    if np.linalg.norm(y) < tol:
        y = np.array([0.0, 1.0, 0.0])
        if np.linalg.norm(np.cross(y, z)) < tol:
            y = np.array([0.0, 0.0, 1.0])
    x = np.cross(y, z)
    return _frame(x, z, origin)


def dh_to_gjd(dh: DHModel) -> GJDModel:
    require_valid(dh)
    t = dh.base.transform()
    frames = []
    for row in dh.rows:
        frames.append(t)
        t = t @ row.transform()
    return GJDModel(frames, dh.kinds, t @ dh.tool)


def poe_to_gjd(poe: PoEModel, frames: str = "dh", normal: str = "backward",
               tol: float = LINE_TOL) -> GJDModel:
    """Place one frame per screw axis; a prismatic axis passes through the
    previous joint origin since its screw carries no position."""
    require_valid(poe)
    if frames not in PLACEMENTS:
        raise ValueError(f"frames must be one of {PLACEMENTS}, got {frames!r}")
    prev = np.eye(4)
    out = []
    for s in poe.screws:
        if s.is_prismatic:
            line = Line(prev[:3, 3], s.v)
        else:
            line = screw_line(s)
        if frames == "dh":
            prev = place_frame(prev, line, normal, tol)
        else:
            moment = np.zeros(3) if s.is_prismatic else s.v
            prev = _axis_frame(line.direction, line.point, moment, tol)
        out.append(prev)
    return GJDModel(out, poe.kinds, np.array(poe.m))


def rpyxyz_to_gjd(r: RpyXyzModel) -> GJDModel:
    require_valid(r)
    t = r.rows[0].transform()
    frames = []
    for row in r.rows[1:-1]:
        t = t @ row.transform()
        frames.append(t)
    return GJDModel(frames, r.kinds, t @ r.rows[-1].transform())


def gjd_to_rpyxyz(g: GJDModel) -> RpyXyzModel:
    require_valid(g)
    rows = [RpyXyzRow()]
    prev = np.eye(4)
    for frame in list(g.joint_frames) + [g.tool_frame]:
        rows.append(RpyXyzRow.from_transform(se3.inverse(prev) @ frame))
        prev = frame
    return RpyXyzModel(rows, g.kinds)


def is_dh_reachable(prev: np.ndarray, frame: np.ndarray, tol: float = DH_TOL) -> bool:
    """True if ``frame = prev @ Rz(theta) Tz(d) Tx(a) Rx(alpha)`` for some row."""
    a = se3.inverse(prev) @ frame
    if abs(a[2, 0]) >= tol:
        return False
    return abs(a[0, 3] * a[1, 0] - a[1, 3] * a[0, 0]) < tol


def extract_dh(a: np.ndarray, kind: Optional[JointKind]) -> DHRow:
    """Closed-form DH parameters of a DH-structured relative transform."""
    theta = math.atan2(a[1, 0], a[0, 0])
    alpha = math.atan2(a[2, 1], a[2, 2])
    length = a[0, 3] * math.cos(theta) + a[1, 3] * math.sin(theta)
    return DHRow(
        a=float(length),
        d=float(a[2, 3]),
        alpha=se3.normalize_angle(alpha),
        theta=se3.normalize_angle(theta),
        kind=kind,
    )


def gjd_to_dh(g: GJDModel, normal: str = "backward", tol: float = DH_TOL) -> DHModel:
    """Extract a standard DH table plus residual tool transform.

    Frames that already follow from their predecessor by a DH row are kept
    as they are; any other frame is re-placed on its axis line. The tool is
    reached by one more DH row when possible, otherwise by the DH frame
    placed on the tool z axis and the remaining offset goes to ``tool``.
    """
    require_valid(g)
    chain = [np.eye(4)]
    for frame in g.joint_frames:
        if not is_dh_reachable(chain[-1], frame, tol):
            frame = place_frame(chain[-1], Line.z_axis_of(frame), normal, tol)
        chain.append(np.asarray(frame))
    tool = np.asarray(g.tool_frame)
    if is_dh_reachable(chain[-1], tool, tol):
        reached = tool
    else:
        reached = place_frame(chain[-1], Line.z_axis_of(tool), normal, tol)
    chain.append(reached)

    kinds: List[Optional[JointKind]] = [None] + list(g.kinds)
    rows = [
        extract_dh(se3.inverse(chain[i]) @ chain[i + 1], kinds[i])
        for i in range(len(chain) - 1)
    ]
    tool_offset = se3.inverse(reached) @ tool
    return DHModel(rows[1:], base=rows[0], tool=tool_offset)


def gjd_to_poe(g: GJDModel) -> PoEModel:
    require_valid(g)
    screws = []
    for frame, kind in zip(g.joint_frames, g.kinds):
        z = frame[:3, 2]
        if kind is JointKind.PRISMATIC:
            screws.append(Screw(np.zeros(3), z))
        else:
            screws.append(Screw(z, -np.cross(z, frame[:3, 3])))
    return PoEModel(np.array(g.tool_frame), screws)


def to_gjd(model: Model, frames: str = "dh", normal: str = "backward") -> GJDModel:
    if isinstance(model, GJDModel):
        return require_valid(model)
    if isinstance(model, DHModel):
        return dh_to_gjd(model)
    if isinstance(model, PoEModel):
        return poe_to_gjd(model, frames=frames, normal=normal)
    if isinstance(model, RpyXyzModel):
        return rpyxyz_to_gjd(model)
    raise TypeError(f"unsupported model type {type(model).__name__}")


def from_gjd(g: GJDModel, target: str, normal: str = "backward") -> Model:
    if target == "gjd":
        return g
    if target == "dh":
        return gjd_to_dh(g, normal=normal)
    if target == "poe":
        return gjd_to_poe(g)
    if target == "rpyxyz":
        return gjd_to_rpyxyz(g)
    raise ValueError(f"unknown target representation {target!r}; expected one of {TARGETS}")


def convert(model: Model, target: str, frames: str = "dh",
            normal: str = "backward") -> Model:
    """Convert ``model`` to ``target`` ("dh", "poe", "rpyxyz" or "gjd") via the hub."""
    if target not in TARGETS:
        raise ValueError(f"unknown target representation {target!r}; expected one of {TARGETS}")
    return from_gjd(to_gjd(model, frames=frames, normal=normal), target, normal=normal)
