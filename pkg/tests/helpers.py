import math

import numpy as np
from scipy.spatial.transform import Rotation

from kinconv.model import DHModel, DHRow, GJDModel, P, R


def random_transform(rng, scale=1.0):
    t = np.eye(4)
    t[:3, :3] = Rotation.random(random_state=rng).as_matrix()
    t[:3, 3] = rng.uniform(-scale, scale, 3)
    return t


def random_kinds(rng, n):
    return [R if rng.random() < 0.6 else P for _ in range(n)]


def random_dh(rng, n):
    def row(kind):
        return DHRow(
            a=rng.uniform(-1, 1),
            d=rng.uniform(-1, 1),
            alpha=rng.uniform(-math.pi, math.pi),
            theta=rng.uniform(-math.pi, math.pi),
            kind=kind,
        )

    return DHModel([row(k) for k in random_kinds(rng, n)], base=row(None),
                   tool=random_transform(rng))


def random_gjd(rng, n):
    return GJDModel([random_transform(rng) for _ in range(n)], random_kinds(rng, n),
                    random_transform(rng))


def random_q(rng, kinds):
    return np.array([rng.uniform(-math.pi, math.pi) if k is R else rng.uniform(-1, 1)
                     for k in kinds])
