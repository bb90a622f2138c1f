"""Conversion between serial-manipulator kinematic representations.

Every representation (standard DH table, product-of-exponentials screws,
RPY-XYZ frame chain) is mapped to and from a hub made of absolute joint
frames expressed in the robot base at home configuration.
"""

from kinconv.model import (
    DHModel,
    DHRow,
    GJDModel,
    JointKind,
    ModelError,
    PoEModel,
    RpyXyzModel,
    RpyXyzRow,
    validate,
)
from kinconv.se3 import Screw
from kinconv.convert import (
    convert,
    dh_to_gjd,
    gjd_to_dh,
    gjd_to_poe,
    gjd_to_rpyxyz,
    poe_to_gjd,
    rpyxyz_to_gjd,
    to_gjd,
)
from kinconv.kinematics import fk, fk_dh, fk_gjd, fk_poe, fk_rpyxyz
from kinconv.urdf import export_urdf

__all__ = [
    "DHModel",
    "DHRow",
    "GJDModel",
    "JointKind",
    "ModelError",
    "PoEModel",
    "RpyXyzModel",
    "RpyXyzRow",
    "Screw",
    "convert",
    "dh_to_gjd",
    "export_urdf",
    "fk",
    "fk_dh",
    "fk_gjd",
    "fk_poe",
    "fk_rpyxyz",
    "gjd_to_dh",
    "gjd_to_poe",
    "gjd_to_rpyxyz",
    "poe_to_gjd",
    "rpyxyz_to_gjd",
    "to_gjd",
    "validate",
]

__version__ = "0.1.0"
