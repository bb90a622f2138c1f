"""Random chains through every conversion path; reports worst FK error."""

import argparse
import time

import numpy as np

from kinconv import DHModel, DHRow, GJDModel, JointKind, convert, fk
from kinconv.se3 import from_rt

SOURCES = ("dh", "poe", "rpyxyz")


def random_rotation(rng):
    q = rng.normal(size=4)
    w, x, y, z = q / np.linalg.norm(q)
    return np.array([
        [1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y)],
        [2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x)],
        [2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y)],
    ])


def random_chain(rng, n, dh_valid):
    kinds = [JointKind.REVOLUTE if rng.random() < 0.6 else JointKind.PRISMATIC
             for _ in range(n)]
    tool = from_rt(random_rotation(rng), rng.uniform(-1, 1, 3))
    if dh_valid:
        rows = [DHRow(*rng.uniform(-1, 1, 2), *rng.uniform(-np.pi, np.pi, 2), kind=k)
                for k in kinds]
        return convert(DHModel(rows, tool=tool), "gjd")
    frames = [from_rt(random_rotation(rng), rng.uniform(-1, 1, 3)) for _ in kinds]
    return GJDModel(frames, kinds, tool)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--chains", type=int, default=200)
    parser.add_argument("--samples", type=int, default=10)
    parser.add_argument("--seed", type=int, default=1)
    args = parser.parse_args()

    rng = np.random.default_rng(args.seed)
    start = time.perf_counter()
    worst = {}
    for k in range(args.chains):
        g = random_chain(rng, int(rng.integers(1, 9)), k % 2 == 0)
        models = {s: convert(g, s) for s in SOURCES}
        for src in SOURCES:
            for dst in SOURCES:
                if src == dst:
                    continue
                out = convert(models[src], dst)
                for _ in range(args.samples):
                    q = rng.uniform(-1, 1, g.n) * np.where(
                        [kd is JointKind.REVOLUTE for kd in g.kinds], np.pi, 1.0)
                    e = np.max(np.abs(fk(out, q) - fk(models[src], q)))
                    worst[(src, dst)] = max(worst.get((src, dst), 0.0), e)
    for (src, dst), e in sorted(worst.items()):
        print(f"{src:>7} -> {dst:<7} worst FK error {e:.2e}")
    print(f"{args.chains} chains in {time.perf_counter() - start:.1f} s")


if __name__ == "__main__":
    main()
