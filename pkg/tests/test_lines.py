import math

import numpy as np
import pytest
from hypothesis import assume, given, strategies as st
from numpy.testing import assert_allclose
from scipy.optimize import minimize

from kinconv.lines import (
    GeometryError,
    Line,
    LineRelation,
    classify_pair,
    common_perpendicular,
    intersection_point,
    screw_axis_point,
)
from kinconv.se3 import Screw

X, Y, Z = np.eye(3)
O = np.zeros(3)

coord = st.floats(-3, 3, allow_nan=False)
vec3 = st.tuples(coord, coord, coord)
direction = vec3.filter(lambda v: np.linalg.norm(v) > 1e-2)


def closest_points_oracle(l1, l2):
    """Numerically minimize the squared distance between the two lines."""
    def f(st_):
        s, t = st_
        diff = (l1.point + s * l1.direction) - (l2.point + t * l2.direction)
        return diff @ diff

    res = minimize(f, [0.0, 0.0], method="BFGS", options={"gtol": 1e-12})
    s, t = res.x
    return l1.point + s * l1.direction, l2.point + t * l2.direction


@pytest.mark.parametrize(
    "l1,l2,expected",
    [
        (Line(O, Z), Line(O, Z), LineRelation.COINCIDENT),
        (Line(O, Z), Line((0, 0, 0.2), Y), LineRelation.INTERSECTING),
        (Line((0, 0, 0.2), Y), Line((0.2, 0, 0.5), -Y), LineRelation.PARALLEL),
        (Line(O, Z), Line(O, -Z), LineRelation.COINCIDENT_OPPOSITE),
        (Line(O, Z), Line((1, 0, 0), Y), LineRelation.SKEW),
        (Line(O, Z), Line((0, 0, 5), Z), LineRelation.COINCIDENT),
    ],
)
def test_classify_pair_examples(l1, l2, expected):
    assert classify_pair(l1, l2) is expected


@given(vec3, direction, vec3, direction)
def test_classify_pair_symmetry(p1, d1, p2, d2):
    l1, l2 = Line(p1, d1), Line(p2, d2)
    forward, backward = classify_pair(l1, l2), classify_pair(l2, l1)
    assert forward is backward
    flipped = classify_pair(l1, Line(p2, -np.asarray(d2)))
    swap = {
        LineRelation.COINCIDENT: LineRelation.COINCIDENT_OPPOSITE,
        LineRelation.COINCIDENT_OPPOSITE: LineRelation.COINCIDENT,
    }
    assert flipped is swap.get(forward, forward)


def test_common_perpendicular_skew():
    p1, p2 = common_perpendicular(Line(O, Z), Line((1, 0, 0.2), Y))
    assert_allclose(p1, (0, 0, 0.2), atol=1e-12)
    assert_allclose(p2, (1, 0, 0.2), atol=1e-12)


def test_common_perpendicular_parallel_is_anchored_at_first_point():
    p1, p2 = common_perpendicular(Line((0, 0, 0.2), Y), Line((0.2, 0, 0.5), -Y))
    assert_allclose(p1, (0, 0, 0.2))
    assert_allclose(p2, (0.2, 0, 0.5), atol=1e-15)
    assert np.linalg.norm(p2 - p1) == pytest.approx(math.sqrt(0.13), abs=1e-12)
    assert np.linalg.norm(p2 - p1) == pytest.approx(0.361, abs=1e-3)


def test_common_perpendicular_parallel_normal_is_planar():
    p1, p2 = common_perpendicular(Line((0, 0, 3), Z), Line((5, 0, 0), Z))
    assert (p2 - p1)[2] == pytest.approx(0.0, abs=1e-12)


@pytest.mark.parametrize(
    "l2", [Line(O, Z), Line((0, 0, 1), X), Line(O, -Z)]
)
def test_common_perpendicular_rejects_degenerate_pairs(l2):
    with pytest.raises(GeometryError):
        common_perpendicular(Line(O, Z), l2)


@given(vec3, direction, vec3, direction)
def test_common_perpendicular_properties(p1, d1, p2, d2):
    l1, l2 = Line(p1, d1), Line(p2, d2)
    relation = classify_pair(l1, l2)
    assume(relation in (LineRelation.SKEW, LineRelation.PARALLEL))
    f1, f2 = common_perpendicular(l1, l2)
    normal = f2 - f1
    assert abs(normal @ l1.direction) < 1e-9
    assert abs(normal @ l2.direction) < 1e-9
    assert l1.distance_to(f1) < 1e-9 and l2.distance_to(f2) < 1e-9
    if relation is LineRelation.SKEW and np.linalg.norm(np.cross(d1, d2)) > 0.1:
        o1, o2 = closest_points_oracle(l1, l2)
        assert_allclose(f1, o1, atol=1e-5)
        assert_allclose(f2, o2, atol=1e-5)


def test_intersection_point_examples():
    assert_allclose(intersection_point(Line(O, Z), Line((0, 0, 0.2), Y)), (0, 0, 0.2))
    assert_allclose(intersection_point(Line(O, X), Line(O, Y)), O)
    with pytest.raises(GeometryError):
        intersection_point(Line(O, Z), Line((1, 0, 0), Y))


@given(vec3, direction, direction, st.floats(-2, 2), st.floats(-2, 2))
def test_intersection_point_lies_on_both_lines(p, d1, d2, s, t):
    assume(np.linalg.norm(np.cross(Line(O, d1).direction, Line(O, d2).direction)) > 1e-3)
    l1 = Line(np.asarray(p) + s * np.asarray(d1), d1)
    l2 = Line(np.asarray(p) + t * np.asarray(d2), d2)
    x = intersection_point(l1, l2)
    assert l1.distance_to(x) < 1e-9 and l2.distance_to(x) < 1e-9


@pytest.mark.parametrize(
    "screw,expected",
    [
        ((0, 1, 0, -0.2, 0, 0), (0, 0, 0.2)),
        ((0, 0, 1, 0, 0, 0), (0, 0, 0)),
        ((0, -1, 0, 0.5, 0, -0.2), (0.2, 0, 0.5)),
    ],
)
def test_screw_axis_point_examples(screw, expected):
    assert_allclose(screw_axis_point(Screw.from_vector(screw)), expected, atol=1e-15)


def test_screw_axis_point_rejects_prismatic():
    with pytest.raises(GeometryError):
        screw_axis_point(Screw.prismatic(Y))


@given(direction, vec3)
def test_screw_axis_point_reconstructs_moment(d, p):
    s = Screw.revolute(d, p)
    q = screw_axis_point(s)
    assert_allclose(-np.cross(s.omega, q), s.v, atol=1e-9)
    assert abs(q @ s.omega) < 1e-9
