"""Two reference robots used by the scripts and tests.

``rrpr_*`` is a planar-ish RRPR arm with orthogonal and parallel axes.
``three_r_poe`` is a 3R arm with arbitrarily placed axes whose screws and
home pose are only known to three decimals; they are cleaned up (unit
axes, zero pitch, proper rotation) before use.
"""

from __future__ import annotations

import math

import numpy as np

from kinconv.model import DHModel, DHRow, P, PoEModel, R, RpyXyzModel
from kinconv.se3 import Screw, nearest_se3, unit

RRPR_M = np.array(
    [
        [1.0, 0.0, 0.0, 0.3],
        [0.0, 0.0, -1.0, 0.0],
        [0.0, 1.0, 0.0, 0.5],
        [0.0, 0.0, 0.0, 1.0],
    ]
)

RRPR_SCREWS = (
    (0.0, 0.0, 1.0, 0.0, 0.0, 0.0),
    (0.0, 1.0, 0.0, -0.2, 0.0, 0.0),
    (0.0, 0.0, 0.0, 0.0, 1.0, 0.0),
    (0.0, -1.0, 0.0, 0.5, 0.0, -0.2),
)

RRPR_RPYXYZ_ROWS = (
    (0.0, 0.0, 0.0, 0.0, 0.0, 0.0),
    (0.0, 0.0, 0.0, 0.0, 0.0, 0.0),
    (-math.pi / 2, 0.0, 0.0, 0.0, 0.0, 0.2),
    (0.0, 0.0, -math.pi / 2, 0.0, -0.3, 0.0),
    (math.pi, 0.0, math.pi / 2, 0.0, 0.2, 0.0),
    (0.0, 0.0, 0.0, 0.1, 0.0, 0.0),
)

RRPR_KINDS = (R, R, P, R)

THREE_R_M = np.array(
    [
        [0.826, -0.073, -0.558, 0.05],
        [-0.373, -0.814, -0.444, -0.4],
        [-0.422, 0.576, -0.699, 0.4],
        [0.0, 0.0, 0.0, 1.0],
    ]
)

THREE_R_SCREWS = (
    (-0.549, -0.099, 0.829, 0.0, 0.0, 0.0),
    (-0.635, 0.495, 0.592, -0.057, -0.182, 0.090),
    (-0.280, 0.790, 0.544, -0.117, -0.206, 0.238),
)


def rrpr_poe() -> PoEModel:
    return PoEModel(RRPR_M, RRPR_SCREWS)


def rrpr_rpyxyz() -> RpyXyzModel:
    return RpyXyzModel(RRPR_RPYXYZ_ROWS, RRPR_KINDS)


def rrpr_dh() -> DHModel:
    """DH table of the RRPR arm whose frames match :func:`rrpr_rpyxyz`."""
    return DHModel(
        rows=[
            DHRow(a=0.0, d=0.2, alpha=-math.pi / 2, theta=0.0, kind=R),
            DHRow(a=0.3, d=0.0, alpha=0.0, theta=-math.pi / 2, kind=R),
            DHRow(a=0.2, d=0.0, alpha=math.pi, theta=math.pi / 2, kind=P),
            DHRow(a=0.1, d=0.0, alpha=0.0, theta=0.0, kind=R),
        ]
    )


def rounded_screw(values) -> Screw:
    """Revolute screw from a rounded 6-vector: unit axis, zero pitch."""
    values = np.asarray(values, dtype=float)
    scale = np.linalg.norm(values[:3])
    w = unit(values[:3])
    point = np.cross(w, values[3:] / scale)
    return Screw.revolute(w, point)


def three_r_poe() -> PoEModel:
    return PoEModel(nearest_se3(THREE_R_M), [rounded_screw(s) for s in THREE_R_SCREWS])
