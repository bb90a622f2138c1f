"""Minimal URDF export from an RPY-XYZ chain.

Links are ``base_link``, ``link_1`` .. ``link_n`` and ``tool_link``. The
base row is folded into the origin of the first joint (or of the tool
joint when there are no movable joints). No inertial, visual or collision
elements are written.
"""

from __future__ import annotations

import math
import xml.etree.ElementTree as ET
from dataclasses import dataclass

from kinconv import se3
from kinconv.model import JointKind, RpyXyzModel, RpyXyzRow, require_valid

REVOLUTE_LIMIT = 2.0 * math.pi
PRISMATIC_LIMIT = 1.0


@dataclass(frozen=True)
class UrdfDocument:
    name: str
    xml: str

    def __str__(self):
        return self.xml


def format_number(value: float) -> str:
    """Shortest decimal that round-trips to the same double."""
    value = float(value)
    if value == 0.0:
        return "0"
    return repr(value)


def _origin(parent: ET.Element, row: RpyXyzRow):
    ET.SubElement(
        parent,
        "origin",
        xyz=" ".join(format_number(v) for v in (row.x, row.y, row.z)),
        rpy=" ".join(format_number(v) for v in (row.roll, row.pitch, row.yaw)),
    )


def export_urdf(r: RpyXyzModel, name: str = "robot") -> UrdfDocument:
    require_valid(r)
    robot = ET.Element("robot", name=name)
    links = ["base_link"] + [f"link_{i}" for i in range(1, r.n + 1)] + ["tool_link"]
    for link in links:
        ET.SubElement(robot, "link", name=link)

    # base row folded into the first joint origin
    first = r.rows[1]
    if any(r.rows[0].values()):
        first = RpyXyzRow.from_transform(r.rows[0].transform() @ first.transform())
    origins = [first] + list(r.rows[2:])

    for i, kind in enumerate(r.kinds, start=1):
        joint = ET.SubElement(robot, "joint", name=f"joint_{i}", type=kind.value)
        ET.SubElement(joint, "parent", link=links[i - 1])
        ET.SubElement(joint, "child", link=links[i])
        _origin(joint, origins[i - 1])
        ET.SubElement(joint, "axis", xyz="0 0 1")
        bound = PRISMATIC_LIMIT if kind is JointKind.PRISMATIC else REVOLUTE_LIMIT
        ET.SubElement(
            joint,
            "limit",
            lower=format_number(-bound),
            upper=format_number(bound),
            effort="0",
            velocity="0",
        )

    tool = ET.SubElement(robot, "joint", name="tool_fixed", type="fixed")
    ET.SubElement(tool, "parent", link=links[-2])
    ET.SubElement(tool, "child", link="tool_link")
    _origin(tool, origins[-1])

    ET.indent(robot, space="  ")
    body = ET.tostring(robot, encoding="unicode")
    return UrdfDocument(name, '<?xml version="1.0"?>\n' + body + "\n")


def origin_transform(origin: ET.Element):
    """4x4 transform of a URDF ``origin`` element (missing attributes are zero)."""
    xyz = [float(v) for v in origin.get("xyz", "0 0 0").split()]
    rpy = [float(v) for v in origin.get("rpy", "0 0 0").split()]
    return se3.rpy_xyz_to_transform(*rpy, *xyz)
