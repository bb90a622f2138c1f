"""Rigid-body transform and twist algebra.

Transforms are plain 4x4 ``numpy`` arrays with bottom row ``[0, 0, 0, 1]``.
Every function returns a new array; inputs are never modified.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Tuple

import numpy as np

VALID_TOL = 1e-9
ALGEBRA_TOL = 1e-12

_AXES = {"x": 0, "y": 1, "z": 2}


def normalize_angle(angle: float) -> float:
    """Wrap an angle to the half-open interval (-pi, pi]."""
    wrapped = math.remainder(angle, 2.0 * math.pi)
    if wrapped <= -math.pi:
        wrapped += 2.0 * math.pi
    return wrapped


def identity() -> np.ndarray:
    return np.eye(4)


def rot_x(angle: float) -> np.ndarray:
    c, s = math.cos(angle), math.sin(angle)
    t = np.eye(4)
    t[1, 1], t[1, 2] = c, -s
    t[2, 1], t[2, 2] = s, c
    return t


def rot_y(angle: float) -> np.ndarray:
    c, s = math.cos(angle), math.sin(angle)
    t = np.eye(4)
    t[0, 0], t[0, 2] = c, s
    t[2, 0], t[2, 2] = -s, c
    return t


def rot_z(angle: float) -> np.ndarray:
    c, s = math.cos(angle), math.sin(angle)
    t = np.eye(4)
    t[0, 0], t[0, 1] = c, -s
    t[1, 0], t[1, 1] = s, c
    return t


def trans_axis(axis: str, d: float) -> np.ndarray:
    """Pure translation by ``d`` along ``axis`` (one of ``"x"``, ``"y"``, ``"z"``)."""
    t = np.eye(4)
    t[_AXES[axis], 3] = d
    return t


def trans(x: float, y: float, z: float) -> np.ndarray:
    t = np.eye(4)
    t[:3, 3] = (x, y, z)
    return t


def from_rt(rotation: np.ndarray, translation: Iterable[float]) -> np.ndarray:
    t = np.eye(4)
    t[:3, :3] = rotation
    t[:3, 3] = np.asarray(list(translation), dtype=float)
    return t


def compose(*transforms: np.ndarray) -> np.ndarray:
    """Left-to-right product; each transform is expressed in the previous one's frame."""
    out = np.eye(4)
    for t in transforms:
        out = out @ t
    return out


def inverse(t: np.ndarray) -> np.ndarray:
    r = t[:3, :3]
    out = np.eye(4)
    out[:3, :3] = r.T
    out[:3, 3] = -r.T @ t[:3, 3]
    return out


def is_valid_se3(m, tol: float = VALID_TOL) -> bool:
    """Check shape, finiteness, bottom row, orthonormality and det = +1."""
    m = np.asarray(m, dtype=float)
    if m.shape != (4, 4) or not np.all(np.isfinite(m)):
        return False
    if not np.allclose(m[3], (0.0, 0.0, 0.0, 1.0), rtol=0.0, atol=tol):
        return False
    r = m[:3, :3]
    if not np.allclose(r.T @ r, np.eye(3), rtol=0.0, atol=tol):
        return False
    return abs(np.linalg.det(r) - 1.0) <= tol


def se3_problem(m, tol: float = VALID_TOL) -> Optional[str]:
    """Describe why ``m`` is not a valid transform, or return None."""
    m = np.asarray(m, dtype=float)
    if m.shape != (4, 4):
        return f"expected a 4x4 matrix, got shape {m.shape}"
    if not np.all(np.isfinite(m)):
        return "non-finite entries"
    if not np.allclose(m[3], (0.0, 0.0, 0.0, 1.0), rtol=0.0, atol=tol):
        return "bottom row is not [0, 0, 0, 1]"
    r = m[:3, :3]
    if not np.allclose(r.T @ r, np.eye(3), rtol=0.0, atol=tol):
        return "rotation is not orthonormal"
    if abs(np.linalg.det(r) - 1.0) > tol:
        return "improper rotation (det != +1)"
    return None


def nearest_se3(m) -> np.ndarray:
    """Project an approximately rigid 4x4 matrix onto SE(3).

    Useful for matrices printed with a few decimals; the rotation block is
    replaced by its closest proper rotation in the Frobenius sense.
    """
    m = np.asarray(m, dtype=float)
    u, _, vt = np.linalg.svd(m[:3, :3])
    r = u @ vt
    if np.linalg.det(r) < 0:
        u[:, -1] *= -1
        r = u @ vt
    return from_rt(r, m[:3, 3])


def rpy_to_rotation(roll: float, pitch: float, yaw: float) -> np.ndarray:
    """Fixed-axis XYZ rotation ``Rz(yaw) @ Ry(pitch) @ Rx(roll)`` (URDF ``rpy``)."""
    return (rot_z(yaw) @ rot_y(pitch) @ rot_x(roll))[:3, :3]


def rotation_to_rpy(r, tol: float = VALID_TOL) -> Tuple[float, float, float]:
    """Inverse of :func:`rpy_to_rotation` with pitch in [-pi/2, pi/2].

    At gimbal lock roll is set to zero and yaw carries the free angle.
    """
    r = np.asarray(r, dtype=float)
    cos_pitch = math.hypot(r[0, 0], r[1, 0])
    pitch = math.atan2(-r[2, 0], cos_pitch)
    if cos_pitch < tol:
        roll = 0.0
        yaw = math.atan2(-r[0, 1], r[1, 1])
    else:
        roll = math.atan2(r[2, 1], r[2, 2])
        yaw = math.atan2(r[1, 0], r[0, 0])
    # + 0.0 turns -0.0 into 0.0
    return normalize_angle(roll) + 0.0, pitch + 0.0, normalize_angle(yaw) + 0.0


def rpy_xyz_to_transform(roll, pitch, yaw, x, y, z) -> np.ndarray:
    return from_rt(rpy_to_rotation(roll, pitch, yaw), (x, y, z))


def transform_to_rpy_xyz(t) -> Tuple[float, float, float, float, float, float]:
    roll, pitch, yaw = rotation_to_rpy(t[:3, :3])
    x, y, z = (float(v) for v in t[:3, 3])
    return roll, pitch, yaw, x, y, z


def skew(w) -> np.ndarray:
    wx, wy, wz = w
    return np.array([[0.0, -wz, wy], [wz, 0.0, -wx], [-wy, wx, 0.0]])


def unit(v) -> np.ndarray:
    v = np.asarray(v, dtype=float)
    n = np.linalg.norm(v)
    if n == 0.0:
        raise ValueError("cannot normalize a zero vector")
    return v / n


@dataclass(frozen=True, eq=False)
class Screw:
    """Normalized joint twist ``(omega, v)`` expressed in the base frame.

    A revolute screw has a unit ``omega`` and ``v = -omega x q`` for any
    point ``q`` on the axis. A prismatic screw has ``omega = 0`` and a unit
    ``v`` along the direction of travel. Construction does not enforce this;
    call :meth:`problem` or :meth:`check` before use.
    """

    omega: np.ndarray
    v: np.ndarray

    def __post_init__(self):
        for name in ("omega", "v"):
            arr = np.array(getattr(self, name), dtype=float).reshape(3)
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)

    @classmethod
    def from_vector(cls, s: Sequence[float]) -> "Screw":
        s = list(s)
        if len(s) != 6:
            raise ValueError(f"screw must have 6 components, got {len(s)}")
        return cls(s[:3], s[3:])

    @classmethod
    def revolute(cls, direction, point) -> "Screw":
        w = unit(direction)
        return cls(w, -np.cross(w, np.asarray(point, dtype=float)))

    @classmethod
    def prismatic(cls, direction) -> "Screw":
        return cls(np.zeros(3), unit(direction))

    @property
    def is_prismatic(self) -> bool:
        return not np.any(self.omega)

    def as_vector(self) -> np.ndarray:
        return np.concatenate([self.omega, self.v])

    def problem(self, tol: float = VALID_TOL) -> Optional[str]:
        if not (np.all(np.isfinite(self.omega)) and np.all(np.isfinite(self.v))):
            return "screw has non-finite components"
        if self.is_prismatic:
            if abs(np.linalg.norm(self.v) - 1.0) > tol:
                return "screw neither unit-revolute nor prismatic"
            return None
        if abs(np.linalg.norm(self.omega) - 1.0) > tol:
            return "screw neither unit-revolute nor prismatic"
        if abs(float(self.omega @ self.v)) > tol:
            return "revolute screw has nonzero pitch (omega . v != 0)"
        return None

    def check(self, tol: float = VALID_TOL) -> "Screw":
        msg = self.problem(tol)
        if msg is not None:
            raise ValueError(msg)
        return self

    def __repr__(self):
        return f"Screw(omega={self.omega.tolist()}, v={self.v.tolist()})"


def twist_exp(s: Screw, q: float) -> np.ndarray:
    """Matrix exponential of the twist ``s`` scaled by ``q`` (rad or m)."""
    s.check()
    t = np.eye(4)
    if s.is_prismatic:
        t[:3, 3] = q * s.v
        return t
    w = skew(s.omega)
    w2 = w @ w
    sq, cq = math.sin(q), math.cos(q)
    t[:3, :3] = np.eye(3) + sq * w + (1.0 - cq) * w2
    t[:3, 3] = (q * np.eye(3) + (1.0 - cq) * w + (q - sq) * w2) @ s.v
    return t
