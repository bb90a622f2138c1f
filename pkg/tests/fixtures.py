"""Printed reference values for the two example robots (3-4 decimals)."""

import math

import numpy as np

from kinconv.model import DHModel, DHRow, P, R

PI = math.pi

# DH table of the RRPR arm as printed; it does not reproduce the arm's
# screws or home pose and is only used by the inconsistency guard.
RRPR_DH_PRINTED = DHModel(
    rows=[
        DHRow(0.0, 0.2, -PI / 4, 0.0, R),
        DHRow(0.3, 0.0, 0.0, -PI / 4, R),
        DHRow(0.2, 0.0, PI, PI / 4, P),
        DHRow(0.1, 0.0, 0.0, 0.0, R),
    ]
)

# DH table recovered from the RRPR screws, rows 1..4 as (a, d, alpha, theta).
RRPR_DH_ALTERED = (
    (0.0, 0.2, -PI / 4, 0.0),
    (0.0, 0.0, 0.0, 0.0),
    (-0.361, 0.0, PI, 2.159),
    (0.1, 0.0, 0.0, 2.159),
)

THREE_R_DH_BASE = (0.0, 0.0, -0.592, 1.7502)
THREE_R_DH_ROWS = (
    (-0.204, 0.088, 0.658, 1.758),
    (-0.078, -0.325, 0.467, -0.866),
    (-0.515, 0.314, -2.184, -1.743),
)
THREE_R_TOOL = np.array(
    [
        [0.651, -0.438, -0.619, 0.105],
        [0.653, 0.739, 0.163, 0.394],
        [0.386, -0.511, 0.767, -0.121],
        [0.0, 0.0, 0.0, 1.0],
    ]
)

THREE_R_RPYXYZ = (
    (0.0, 0.0, 0.0, 0.0, 0.0, 0.0),
    (0.0998, -0.5851, 0.0, 0.0, 0.0, 0.0),
    (0.6423, 0.1577, -3.0111, 0.2071, 0.0272, 0.0332),
    (0.3616, -0.3037, 0.0622, -0.1089, -0.0199, -0.1006),
    (-2.6489, 0.8582, -2.5611, 0.1168, 0.5115, -0.1124),
)


def three_r_dh_printed(tool=THREE_R_TOOL):
    return DHModel(
        rows=[DHRow(*r, kind=R) for r in THREE_R_DH_ROWS],
        base=DHRow(*THREE_R_DH_BASE, kind=None),
        tool=tool,
    )
