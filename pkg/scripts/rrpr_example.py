"""Convert the RRPR arm between representations and compare FK.

Usage: python3 scripts/rrpr_example.py [--normal {backward,forward}]
"""

import argparse
import math

import numpy as np

from kinconv import convert, fk
from kinconv.samples import rrpr_dh, rrpr_poe, rrpr_rpyxyz
from kinconv.urdf import export_urdf


def print_dh(dh):
    print(f"{'i':>2} {'a':>10} {'d':>10} {'alpha':>10} {'theta':>10}  kind")
    for i, row in enumerate((dh.base,) + dh.rows):
        kind = row.kind.value if row.kind else "fixed"
        print(f"{i:>2} " + " ".join(f"{v:>10.4f}" for v in row.params()) + f"  {kind}")


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--normal", choices=("backward", "forward"), default="backward")
    parser.add_argument("--urdf", action="store_true", help="also print the URDF")
    args = parser.parse_args()

    poe = rrpr_poe()
    print("DH table recovered from the screws:")
    dh = convert(poe, "dh", normal=args.normal)
    print_dh(dh)

    print("\nRPY-XYZ rows recovered from the screws:")
    for row in convert(poe, "rpyxyz", normal=args.normal).rows:
        print(" ".join(f"{v:>8.4f}" for v in row.values()))

    q = [3 * math.pi / 4, -math.pi / 4, 0.3, -3 * math.pi / 4]
    poses = {
        "dh (hand)": fk(rrpr_dh(), q),
        "dh (from poe)": fk(dh, q),
        "poe": fk(poe, q),
        "rpyxyz": fk(rrpr_rpyxyz(), q),
    }
    ref = poses["poe"]
    print(f"\nFK at q = {np.round(q, 4).tolist()}")
    for name, pose in poses.items():
        print(f"  {name:<14} max |diff| vs poe = {np.max(np.abs(pose - ref)):.2e}")
    print(np.array2string(ref, precision=6, suppress_small=True))

    if args.urdf:
        print(export_urdf(rrpr_rpyxyz(), "rrpr").xml)


if __name__ == "__main__":
    main()
