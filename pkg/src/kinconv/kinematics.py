"""Forward kinematics for every representation.

``q`` is always the displacement of each joint from its home value, in
radians for revolute and meters for prismatic joints. Converted models of
the same robot must return the same pose for the same ``q``.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from kinconv import se3
from kinconv.model import (
    DHModel,
    GJDModel,
    Model,
    PoEModel,
    RpyXyzModel,
    joint_motion,
)


def _displacements(q: Sequence[float], n: int) -> np.ndarray:
    q = np.asarray(q, dtype=float).reshape(-1)
    if q.size != n:
        raise ValueError(f"expected {n} joint displacements, got {q.size}")
    if not np.all(np.isfinite(q)):
        raise ValueError("joint displacements must be finite")
    return q


def fk_dh(dh: DHModel, q: Sequence[float]) -> np.ndarray:
    q = _displacements(q, dh.n)
    t = dh.base.transform()
    for row, qi in zip(dh.rows, q):
        t = t @ row.transform(qi)
    return t @ dh.tool


def fk_poe(poe: PoEModel, q: Sequence[float]) -> np.ndarray:
    q = _displacements(q, poe.n)
    t = np.eye(4)
    for s, qi in zip(poe.screws, q):
        t = t @ se3.twist_exp(s, qi)
    return t @ poe.m


def fk_rpyxyz(r: RpyXyzModel, q: Sequence[float]) -> np.ndarray:
    q = _displacements(q, r.n)
    t = r.rows[0].transform()
    for row, kind, qi in zip(r.rows[1:-1], r.kinds, q):
        t = t @ row.transform() @ joint_motion(kind, qi)
    return t @ r.rows[-1].transform()


def fk_gjd(g: GJDModel, q: Sequence[float]) -> np.ndarray:
    q = _displacements(q, g.n)
    t = np.eye(4)
    prev = np.eye(4)
    for frame, kind, qi in zip(g.joint_frames, g.kinds, q):
        t = t @ se3.inverse(prev) @ frame @ joint_motion(kind, qi)
        prev = frame
    return t @ se3.inverse(prev) @ g.tool_frame


def fk(model: Model, q: Sequence[float]) -> np.ndarray:
    if isinstance(model, DHModel):
        return fk_dh(model, q)
    if isinstance(model, PoEModel):
        return fk_poe(model, q)
    if isinstance(model, RpyXyzModel):
        return fk_rpyxyz(model, q)
    if isinstance(model, GJDModel):
        return fk_gjd(model, q)
    raise TypeError(f"unsupported model type {type(model).__name__}")
