import math

import pytest
from hypothesis import given

from midtri.errors import IdentityRotation, InvalidInput, NotOnHyperboloid, NotUnit, ZeroAxis
from midtri.linalg import (
    E1,
    E2,
    E3,
    IDENTITY,
    LorentzMap,
    Rotation,
    Vec3,
    as_vector,
    boost_to_north,
    cross,
    det3,
    dot_e,
    dot_l,
    frobenius_distance,
    max_abs_diff,
    neg,
    point_reflection,
    rotate_to_north,
    rotation_axis,
)
from strategies import hyperboloid_points, unit_vectors, vectors

R3 = math.sqrt(3.0)


def close(u, v, tol=1e-12):
    return max_abs_diff(u, v) < tol


def test_dot_products():
    assert dot_e(E1, E1) == 1
    assert dot_e(E1, E2) == 0
    assert dot_e(Vec3(1, 2, 3), Vec3(4, 5, 6)) == 32
    assert dot_l(E3, E3) == 1
    assert dot_l(Vec3(R3, 0, 2), Vec3(0, R3, 2)) == pytest.approx(4)
    assert dot_l(Vec3(R3, 0, 2), Vec3(R3, 0, 2)) == pytest.approx(1)


def test_det3_and_cross_examples():
    assert det3(E1, E2, E3) == 1
    assert det3(E2, E1, E3) == -1
    u = Vec3(0.3, -1.2, 2.0)
    assert det3(u, u, E3) == 0
    assert cross(E1, E2) == E3
    assert cross(u, u) == Vec3(0, 0, 0)
    assert cross(E2, E1) == neg(E3)


@given(vectors, vectors, vectors)
def test_det3_symmetries(u, v, w):
    d = det3(u, v, w)
    tol = 1e-12 * (1 + abs(d) + 1e3)
    assert det3(v, w, u) == pytest.approx(d, abs=tol)
    assert det3(v, u, w) == pytest.approx(-d, abs=tol)
    assert dot_e(cross(u, v), w) == pytest.approx(d, abs=tol)


@given(vectors, vectors)
def test_cross_is_orthogonal(u, v):
    c = cross(u, v)
    assert dot_e(c, u) == pytest.approx(0, abs=1e-10)
    assert dot_e(c, v) == pytest.approx(0, abs=1e-10)


def test_as_vector_rejects_bad_input():
    with pytest.raises(InvalidInput):
        as_vector([1.0, float("nan"), 0.0])
    with pytest.raises(InvalidInput):
        as_vector([1.0, 2.0])
    with pytest.raises(InvalidInput):
        as_vector(Vec3(float("inf"), 0.0, 0.0))
    assert as_vector([1, 2, 3]) == Vec3(1.0, 2.0, 3.0)


def test_point_reflection_examples():
    assert close(point_reflection(E3, E1), neg(E1))
    v = Vec3(0.6, 0.0, 0.8)
    assert close(point_reflection(v, v), v)
    s = 1 / math.sqrt(2)
    assert close(point_reflection(Vec3(0, s, s), E2), E3)
    with pytest.raises(ZeroAxis):
        point_reflection(Vec3(0, 0, 0), E1)


@given(unit_vectors(), vectors)
def test_half_turn_matches_point_reflection(axis, p):
    assert close(Rotation.half_turn(axis)(p), point_reflection(axis, p), 1e-12)


def test_rotation_axis_examples():
    half_z = Rotation(((-1.0, 0.0, 0.0), (0.0, -1.0, 0.0), (0.0, 0.0, 1.0)))
    assert set(rotation_axis(half_z)) == {E3, neg(E3)}
    with pytest.raises(IdentityRotation):
        rotation_axis(Rotation.identity())
    b, nb = rotation_axis(Rotation.half_turn(E1) @ Rotation.half_turn(E2))
    assert close(b, E3) or close(b, neg(E3))
    assert close(nb, neg(b))


@given(unit_vectors(), unit_vectors(), unit_vectors())
def test_rotation_axis_is_fixed(p, q, r):
    rot = Rotation.half_turn(r) @ Rotation.half_turn(q) @ Rotation.half_turn(p)
    if frobenius_distance(rot.matrix, IDENTITY) < 1e-6:
        return
    b, _ = rotation_axis(rot)
    assert dot_e(b, b) == pytest.approx(1.0, abs=1e-12)
    assert close(rot(b), b, 1e-8)


def test_rotate_to_north_examples():
    assert close(rotate_to_north(E3)(E3), E3)
    assert frobenius_distance(rotate_to_north(E3).matrix, IDENTITY) < 1e-15
    assert close(rotate_to_north(E1)(E1), E3)
    assert close(rotate_to_north(neg(E3))(neg(E3)), E3)
    with pytest.raises(NotUnit):
        rotate_to_north(Vec3(1.0, 1.0, 0.0))


@given(unit_vectors(), unit_vectors())
def test_rotate_to_north_is_a_rotation(p, q):
    rot = rotate_to_north(p)
    assert close(rot(p), E3, 1e-12)
    assert dot_e(rot(q), rot(p)) == pytest.approx(dot_e(q, p), abs=1e-12)
    Rotation.from_matrix(rot.matrix)
    assert close(rot.inverse()(rot(q)), q, 1e-12)


def test_boost_to_north_example():
    assert close(boost_to_north(E3)(E3), E3)
    assert close(boost_to_north(Vec3(R3, 0, 2))(Vec3(R3, 0, 2)), E3)
    with pytest.raises(NotOnHyperboloid):
        boost_to_north(Vec3(1.0, 0.0, 1.0))


@given(hyperboloid_points(2.0), hyperboloid_points(2.0), hyperboloid_points(2.0))
def test_boost_preserves_lorentz_product(p, q, r):
    boost = boost_to_north(p)
    assert close(boost(p), E3, 1e-9 * p.h)
    assert dot_l(boost(q), boost(r)) == pytest.approx(dot_l(q, r), abs=1e-10)
    LorentzMap.from_matrix(boost.matrix, tol=1e-6)
    assert close(boost.inverse()(boost(q)), q, 1e-9 * p.h * p.h * q.h)


def test_matrix_validation():
    with pytest.raises(InvalidInput):
        Rotation.from_matrix(((1, 0, 0), (0, 1, 0), (0, 0, -1)))
    with pytest.raises(InvalidInput):
        Rotation.from_matrix(((2, 0, 0), (0, 1, 0), (0, 0, 1)))
    with pytest.raises(InvalidInput):
        LorentzMap.from_matrix(((1, 0, 0), (0, 1, 0), (0, 0, -1)))
