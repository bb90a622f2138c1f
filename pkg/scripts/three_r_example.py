"""Convert the arbitrary 3R arm and report the residual tool transform."""

import argparse

import numpy as np

from kinconv import convert, fk
from kinconv.samples import three_r_poe


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--frames", choices=("dh", "axis"), default="axis",
                        help="frame placement used for the RPY-XYZ output")
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    poe = three_r_poe()
    dh = convert(poe, "dh")
    print("DH table (row 0 is the fixed base row):")
    for i, row in enumerate((dh.base,) + dh.rows):
        print(f"  {i}: " + "  ".join(f"{v:8.4f}" for v in row.params()))
    print("tool offset:")
    print(np.array2string(dh.tool, precision=4, suppress_small=True))

    print(f"\nRPY-XYZ rows (frames={args.frames}):")
    for row in convert(poe, "rpyxyz", frames=args.frames).rows:
        print("  " + "  ".join(f"{v:8.4f}" for v in row.values()))

    rng = np.random.default_rng(args.seed)
    worst = max(
        np.max(np.abs(fk(dh, q) - fk(poe, q)))
        for q in rng.uniform(-np.pi, np.pi, (100, 3))
    )
    print(f"\nmax FK difference DH vs PoE over 100 samples: {worst:.2e}")


if __name__ == "__main__":
    main()
