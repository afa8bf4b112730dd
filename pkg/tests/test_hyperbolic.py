import math

import pytest
from hypothesis import assume, given

from midtri import (
    HypMidpoints,
    HypPoint,
    HypTriangle,
    NotOnHyperboloid,
    NotRealizable,
    hyp_area_corners,
    hyp_area_from_midpoints,
    hyp_midpoint,
    hyp_midpoints_of,
    hyp_reconstruct,
    hyp_side_length,
    hyp_sine_half_area,
)
from midtri.linalg import E3, Vec3, dot_l, max_abs_diff
from midtri.oracle import excess_area
from strategies import hyperboloid_points

R3 = math.sqrt(3.0)
A, B, C = E3, Vec3(R3, 0.0, 2.0), Vec3(0.0, R3, 2.0)
MIDS = (
    Vec3(R3 / math.sqrt(10), R3 / math.sqrt(10), 4 / math.sqrt(10)),
    Vec3(0.0, R3 / math.sqrt(6), 3 / math.sqrt(6)),
    Vec3(R3 / math.sqrt(6), 0.0, 3 / math.sqrt(6)),
)
SH, CH = math.sinh(1.0), math.cosh(1.0)
UNREALIZABLE = HypMidpoints(Vec3(SH, 0.0, CH), Vec3(0.0, SH, CH), E3)


def close(u, v, tol=1e-12):
    return max_abs_diff(u, v) < tol


def test_point_membership():
    with pytest.raises(NotOnHyperboloid):
        HypPoint(Vec3(0.0, 0.0, -1.0))
    with pytest.raises(NotOnHyperboloid):
        HypPoint(Vec3(1.0, 0.0, 1.0))
    far = HypPoint(Vec3(100.0, 0.0, math.sqrt(10001.0) * (1 + 1e-13)))
    assert dot_l(far.ambient, far.ambient) == pytest.approx(1.0, abs=1e-10)


@given(hyperboloid_points())
def test_polar_and_disk_roundtrip(v):
    p = HypPoint(v)
    theta, phi = p.polar
    assert close(HypPoint.from_polar(theta, phi).ambient, v, 1e-9 * v[2])
    assert abs(p.disk) < 1
    assert close(HypPoint.from_disk(p.disk).ambient, v, 1e-9 * v[2] * v[2])


def test_midpoint_and_length_examples():
    assert close(hyp_midpoint(A, B).ambient, Vec3(R3 / math.sqrt(6), 0.0, 3 / math.sqrt(6)))
    assert close(hyp_midpoint(B, B).ambient, B)
    assert close(hyp_midpoint(Vec3(SH, 0, CH), Vec3(-SH, 0, CH)).ambient, E3)
    assert hyp_side_length(B, B) == 0
    assert hyp_side_length(A, B) == pytest.approx(math.acosh(2.0), abs=1e-12)


def test_midpoints_of_example():
    m = hyp_midpoints_of(HypTriangle(A, B, C))
    assert all(close(x, y) for x, y in zip(m.vectors, MIDS))
    assert all(close(v, B) for v in hyp_midpoints_of(HypTriangle(B, B, B)).vectors)


def test_area_examples():
    assert hyp_area_corners(A, B, C).value == pytest.approx(2 * math.atan(1 / 3), abs=1e-12)
    assert hyp_area_corners(A, C, B).value == pytest.approx(-2 * math.atan(1 / 3), abs=1e-12)
    assert hyp_area_corners(A, A, C).value == 0
    assert hyp_sine_half_area(A, B, C) == pytest.approx(1 / math.sqrt(10), abs=1e-12)
    assert hyp_sine_half_area(A, A, C) == 0
    assert HypMidpoints(*MIDS).det3() == pytest.approx(1 / math.sqrt(10), abs=1e-12)
    assert excess_area("hyperbolic", A, B, C) == pytest.approx(2 * math.atan(1 / 3), abs=1e-10)


def test_area_from_midpoints_examples():
    assert hyp_area_from_midpoints(HypMidpoints(*MIDS)).value == pytest.approx(2 * math.atan(1 / 3), abs=1e-12)
    assert hyp_area_from_midpoints(HypMidpoints(E3, E3, E3)).value == 0
    assert UNREALIZABLE.det3() == pytest.approx(SH * SH)
    assert not UNREALIZABLE.is_realizable()
    with pytest.raises(NotRealizable):
        hyp_area_from_midpoints(UNREALIZABLE)


@pytest.mark.parametrize("sign, realizable", [(-1, True), (1, False)])
def test_realizability_boundary(sign, realizable):
    # gamma at the pole, alpha and beta at distance s along orthogonal rays: d = sinh(s)^2
    sh = math.sqrt(1 + sign * 1e-3)
    ch = math.sqrt(1 + sh * sh)
    m = HypMidpoints(Vec3(sh, 0.0, ch), Vec3(0.0, sh, ch), E3)
    assert m.is_realizable() is realizable
    if realizable:
        t = hyp_reconstruct(m)
        assert all(close(p, q, 1e-9) for p, q in zip(hyp_midpoints_of(t).vectors, m.vectors))
    else:
        with pytest.raises(NotRealizable):
            hyp_reconstruct(m)


def test_reconstruct_examples():
    t = hyp_reconstruct(HypMidpoints(*MIDS))
    assert all(close(p, q, 1e-10) for p, q in zip(t.corners, (A, B, C)))
    t = hyp_reconstruct(HypMidpoints(E3, E3, E3))
    assert t.corners == (E3, E3, E3)
    with pytest.raises(NotRealizable):
        hyp_reconstruct(UNREALIZABLE)


@given(hyperboloid_points(), hyperboloid_points(), hyperboloid_points())
def test_area_properties(a, b, c):
    w = hyp_area_corners(a, b, c).value
    assert abs(w) < math.pi
    assert hyp_area_corners(b, c, a).value == pytest.approx(w, abs=1e-12)
    assert hyp_area_corners(b, a, c).value == pytest.approx(-w, abs=1e-12)
    d = hyp_midpoints_of(HypTriangle(a, b, c)).det3()
    assert abs(d) < 1
    assert d == pytest.approx(math.sin(w / 2), abs=1e-10)


@given(hyperboloid_points(), hyperboloid_points(), hyperboloid_points())
def test_reconstruct_roundtrip(a, b, c):
    t = HypTriangle(a, b, c)
    m = hyp_midpoints_of(t)
    assume(m.is_realizable(1e-6))
    back = hyp_reconstruct(m)
    assert all(close(p, q, 1e-9 * max(1.0, q[2])) for p, q in zip(back.corners, t.corners))
