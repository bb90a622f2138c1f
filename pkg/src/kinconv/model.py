"""Data models for the supported kinematic representations.

All models are frozen dataclasses. Transforms stored inside them are
read-only 4x4 arrays. Joint variables are always displacements from the
home configuration; any home offset lives inside the model itself.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np

from kinconv import se3
from kinconv.se3 import Screw


class ModelError(ValueError):
    """A model violates one of its invariants."""

    def __init__(self, diagnostics: Sequence[str]):
        self.diagnostics = list(diagnostics)
        super().__init__("; ".join(self.diagnostics))


class JointKind(enum.Enum):
    REVOLUTE = "revolute"
    PRISMATIC = "prismatic"

    @classmethod
    def parse(cls, value: Union[str, "JointKind"]) -> "JointKind":
        if isinstance(value, cls):
            return value
        key = str(value).strip().lower()
        if key in ("r", "revolute"):
            return cls.REVOLUTE
        if key in ("p", "prismatic"):
            return cls.PRISMATIC
        raise ValueError(f"unknown joint kind {value!r} (expected revolute or prismatic)")


R = JointKind.REVOLUTE
P = JointKind.PRISMATIC


def _frozen_transform(t) -> np.ndarray:
    arr = np.array(t, dtype=float)
    arr.setflags(write=False)
    return arr


def joint_motion(kind: JointKind, q: float) -> np.ndarray:
    """Motion of a joint about/along its local z axis."""
    if kind is JointKind.PRISMATIC:
        return se3.trans_axis("z", q)
    return se3.rot_z(q)


@dataclass(frozen=True)
class DHRow:
    """Standard DH row ``Rz(theta) Tz(d) Tx(a) Rx(alpha)``.

    ``kind`` selects the variable: theta for revolute, d for prismatic. The
    stored value of the variable is its home offset. ``kind=None`` marks a
    fixed row such as the base row.
    """

    a: float = 0.0
    d: float = 0.0
    alpha: float = 0.0
    theta: float = 0.0
    kind: Optional[JointKind] = JointKind.REVOLUTE

    @property
    def offset(self) -> float:
        if self.kind is JointKind.PRISMATIC:
            return self.d
        if self.kind is JointKind.REVOLUTE:
            return self.theta
        return 0.0

    def transform(self, q: float = 0.0) -> np.ndarray:
        theta, d = self.theta, self.d
        if self.kind is JointKind.REVOLUTE:
            theta += q
        elif self.kind is JointKind.PRISMATIC:
            d += q
        elif q != 0.0:
            raise ValueError("a fixed DH row has no joint variable")
        c, s = math.cos(theta), math.sin(theta)
        ca, sa = math.cos(self.alpha), math.sin(self.alpha)
        return np.array(
            [
                [c, -s * ca, s * sa, self.a * c],
                [s, c * ca, -c * sa, self.a * s],
                [0.0, sa, ca, d],
                [0.0, 0.0, 0.0, 1.0],
            ]
        )

    def params(self) -> Tuple[float, float, float, float]:
        return (self.a, self.d, self.alpha, self.theta)


FIXED_ZERO_ROW = DHRow(kind=None)


@dataclass(frozen=True)
class DHModel:
    rows: Tuple[DHRow, ...]
    base: DHRow = FIXED_ZERO_ROW
    tool: np.ndarray = field(default_factory=np.eye(4).copy)

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(self.rows))
        object.__setattr__(self, "tool", _frozen_transform(self.tool))

    @property
    def n(self) -> int:
        return len(self.rows)

    @property
    def kinds(self) -> Tuple[JointKind, ...]:
        return tuple(r.kind for r in self.rows)


@dataclass(frozen=True)
class PoEModel:
    """Space-frame screws plus the home pose ``m`` of the tool."""

    m: np.ndarray
    screws: Tuple[Screw, ...]

    def __post_init__(self):
        object.__setattr__(self, "m", _frozen_transform(self.m))
        object.__setattr__(
            self,
            "screws",
            tuple(s if isinstance(s, Screw) else Screw.from_vector(s) for s in self.screws),
        )

    @property
    def n(self) -> int:
        return len(self.screws)

    @property
    def kinds(self) -> Tuple[JointKind, ...]:
        return tuple(P if s.is_prismatic else R for s in self.screws)


@dataclass(frozen=True)
class RpyXyzRow:
    roll: float = 0.0
    pitch: float = 0.0
    yaw: float = 0.0
    x: float = 0.0
    y: float = 0.0
    z: float = 0.0

    def transform(self) -> np.ndarray:
        return se3.rpy_xyz_to_transform(*self.values())

    def values(self) -> Tuple[float, ...]:
        return (self.roll, self.pitch, self.yaw, self.x, self.y, self.z)

    @classmethod
    def from_transform(cls, t) -> "RpyXyzRow":
        return cls(*se3.transform_to_rpy_xyz(t))


@dataclass(frozen=True)
class RpyXyzModel:
    """Chain of partial transforms: base row, one row per joint, tool row."""

    rows: Tuple[RpyXyzRow, ...]
    kinds: Tuple[JointKind, ...]

    def __post_init__(self):
        object.__setattr__(
            self,
            "rows",
            tuple(r if isinstance(r, RpyXyzRow) else RpyXyzRow(*r) for r in self.rows),
        )
        object.__setattr__(self, "kinds", tuple(JointKind.parse(k) for k in self.kinds))

    @property
    def n(self) -> int:
        return len(self.kinds)


@dataclass(frozen=True)
class GJDModel:
    """Absolute joint frames in the base frame at home, z along each joint axis."""

    joint_frames: Tuple[np.ndarray, ...]
    kinds: Tuple[JointKind, ...]
    tool_frame: np.ndarray = field(default_factory=np.eye(4).copy)

    def __post_init__(self):
        object.__setattr__(
            self, "joint_frames", tuple(_frozen_transform(f) for f in self.joint_frames)
        )
        object.__setattr__(self, "kinds", tuple(JointKind.parse(k) for k in self.kinds))
        object.__setattr__(self, "tool_frame", _frozen_transform(self.tool_frame))

    @property
    def n(self) -> int:
        return len(self.kinds)


Model = Union[DHModel, PoEModel, RpyXyzModel, GJDModel]


def _finite(name: str, values, out: List[str]):
    if not all(math.isfinite(v) for v in values):
        out.append(f"{name}: non-finite value")


def _check_transform(name: str, t, tol: float, out: List[str]):
    msg = se3.se3_problem(t, tol)
    if msg is not None:
        out.append(f"{name}: {msg}")


def _check_dh_row(name: str, row: DHRow, fixed: bool, out: List[str]):
    _finite(name, row.params(), out)
    if fixed and row.kind is not None:
        out.append(f"{name}: base row must not carry a joint variable")
    if not fixed and not isinstance(row.kind, JointKind):
        out.append(f"{name}: joint kind must be revolute or prismatic")


def validate(model: Model, tol: float = se3.VALID_TOL) -> List[str]:
    """Return diagnostics for every violated invariant; empty means valid."""
    out: List[str] = []
    if isinstance(model, DHModel):
        _check_dh_row("base", model.base, True, out)
        for i, row in enumerate(model.rows):
            _check_dh_row(f"rows[{i}]", row, False, out)
        _check_transform("tool", model.tool, tol, out)
    elif isinstance(model, PoEModel):
        _check_transform("m", model.m, tol, out)
        for i, s in enumerate(model.screws):
            msg = s.problem(tol)
            if msg is not None:
                out.append(f"screws[{i}]: {msg}")
    elif isinstance(model, RpyXyzModel):
        if len(model.rows) != model.n + 2:
            out.append(
                f"rows: expected {model.n + 2} rows (base, {model.n} joints, tool), "
                f"got {len(model.rows)}"
            )
        for i, row in enumerate(model.rows):
            _finite(f"rows[{i}]", row.values(), out)
    elif isinstance(model, GJDModel):
        if len(model.joint_frames) != len(model.kinds):
            out.append(
                f"joint_frames: {len(model.joint_frames)} frames for {len(model.kinds)} kinds"
            )
        for i, f in enumerate(model.joint_frames):
            _check_transform(f"joint_frames[{i}]", f, tol, out)
        _check_transform("tool_frame", model.tool_frame, tol, out)
    else:
        out.append(f"unsupported model type {type(model).__name__}")
    return out


def require_valid(model: Model, tol: float = se3.VALID_TOL) -> Model:
    diagnostics = validate(model, tol)
    if diagnostics:
        raise ModelError(diagnostics)
    return model
