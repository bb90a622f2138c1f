"""Spatial lines and the pairwise relations used to place joint frames."""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from kinconv.se3 import Screw, unit

LINE_TOL = 1e-9


class GeometryError(ValueError):
    """Raised when a geometric construction has no unique answer."""


class LineRelation(enum.Enum):
    SKEW = "skew"
    PARALLEL = "parallel"
    COINCIDENT = "coincident"
    COINCIDENT_OPPOSITE = "coincident_opposite"
    INTERSECTING = "intersecting"


@dataclass(frozen=True, eq=False)
class Line:
    """Directed line through ``point`` with unit ``direction``."""

    point: np.ndarray
    direction: np.ndarray

    def __post_init__(self):
        p = np.array(self.point, dtype=float).reshape(3)
        d = unit(np.array(self.direction, dtype=float).reshape(3))
        if not np.all(np.isfinite(p)):
            raise ValueError("line point must be finite")
        p.setflags(write=False)
        d.setflags(write=False)
        object.__setattr__(self, "point", p)
        object.__setattr__(self, "direction", d)

    @classmethod
    def z_axis_of(cls, frame: np.ndarray) -> "Line":
        return cls(frame[:3, 3], frame[:3, 2])

    def distance_to(self, p) -> float:
        w = np.asarray(p, dtype=float) - self.point
        return float(np.linalg.norm(w - (w @ self.direction) * self.direction))

    def foot_of(self, p) -> np.ndarray:
        """Orthogonal projection of ``p`` onto the line."""
        w = np.asarray(p, dtype=float) - self.point
        return self.point + (w @ self.direction) * self.direction

    def __repr__(self):
        return f"Line(point={self.point.tolist()}, direction={self.direction.tolist()})"


def classify_pair(l1: Line, l2: Line, tol: float = LINE_TOL) -> LineRelation:
    cross = np.cross(l1.direction, l2.direction)
    sin_angle = np.linalg.norm(cross)
    if sin_angle < tol:
        if l1.distance_to(l2.point) < tol:
            if l1.direction @ l2.direction > 0:
                return LineRelation.COINCIDENT
            return LineRelation.COINCIDENT_OPPOSITE
        return LineRelation.PARALLEL
    gap = abs((l2.point - l1.point) @ cross) / sin_angle
    if gap < tol:
        return LineRelation.INTERSECTING
    return LineRelation.SKEW


def _closest_parameters(l1: Line, l2: Line):
    w0 = l1.point - l2.point
    b = l1.direction @ l2.direction
    d = l1.direction @ w0
    e = l2.direction @ w0
    denom = 1.0 - b * b
    return (b * e - d) / denom, (e - b * d) / denom


def common_perpendicular(l1: Line, l2: Line, tol: float = LINE_TOL):
    """Feet ``(p1, p2)`` of the common normal on ``l1`` and ``l2``.

    For parallel lines the normal is anchored at ``l1.point``.
    """
    relation = classify_pair(l1, l2, tol)
    if relation is LineRelation.PARALLEL:
        p1 = l1.point.copy()
        return p1, l2.foot_of(p1)
    if relation is not LineRelation.SKEW:
        raise GeometryError(f"no unique common normal for {relation.value} lines")
    s, t = _closest_parameters(l1, l2)
    return l1.point + s * l1.direction, l2.point + t * l2.direction


def intersection_point(l1: Line, l2: Line, tol: float = LINE_TOL) -> np.ndarray:
    relation = classify_pair(l1, l2, tol)
    if relation is not LineRelation.INTERSECTING:
        raise GeometryError(f"lines do not intersect at an angle ({relation.value})")
    s, t = _closest_parameters(l1, l2)
    return 0.5 * ((l1.point + s * l1.direction) + (l2.point + t * l2.direction))


def screw_axis_point(s: Screw) -> np.ndarray:
    """Point of a revolute screw axis closest to the origin, ``omega x v``."""
    if s.is_prismatic:
        raise GeometryError("a prismatic screw carries no axis position")
    return np.cross(s.omega, s.v)


def screw_line(s: Screw) -> Line:
    return Line(screw_axis_point(s), s.omega)
