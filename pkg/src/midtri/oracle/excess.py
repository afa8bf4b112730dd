"""Oriented area from the interior angles (angle excess / deficit)."""

from __future__ import annotations

import math
from typing import Optional

from ..area import Geometry
from ..errors import DegenerateTriangle
from ..linalg import Vec3, det3, dot_e, dot_l, neg, scale, sub

DEGENERATE_TOL = 1e-10


def _tangent(geometry: Geometry, p: Vec3, q: Vec3) -> Vec3:
    # component of q orthogonal to p for the geometry's product
    if geometry is Geometry.SPHERE:
        return sub(q, scale(dot_e(p, q), p))
    return sub(q, scale(dot_l(p, q), p))


def _metric(geometry: Geometry, s: Vec3, t: Vec3) -> float:
    # on tangent vectors of the hyperboloid the Riemannian metric is -<.,.>_L
    return dot_e(s, t) if geometry is Geometry.SPHERE else -dot_l(s, t)


def corner_angle(geometry: Geometry, p: Vec3, q: Vec3, r: Vec3, reverse_q: bool = False) -> float:
    """Unsigned angle at ``p`` between the geodesics toward ``q`` and ``r``.

    ``reverse_q`` follows the other arc toward ``q`` (sphere only).
    """
    tq = _tangent(geometry, p, q)
    tr = _tangent(geometry, p, r)
    if reverse_q:
        tq = neg(tq)
    # det(p, tq, tr) = |tq| |tr| sin(angle) for unit p in both models
    return math.atan2(abs(det3(p, tq, tr)), _metric(geometry, tq, tr))


def _check_distinct(geometry: Geometry, a: Vec3, b: Vec3, c: Vec3, tol: float) -> None:
    for p, q in ((a, b), (b, c), (c, a)):
        d = sub(p, q)
        if math.sqrt(dot_e(d, d)) < tol:
            raise DegenerateTriangle("two corners coincide")


def excess_area(
    geometry: Geometry,
    a: Vec3,
    b: Vec3,
    c: Vec3,
    major_arc: Optional[str] = None,
    tol: float = DEGENERATE_TOL,
) -> float:
    """Signed area from the three interior angles.

    Sphere: ``sign * (A + B + C - pi)``; hyperbolic: ``sign * (pi - A - B - C)``,
    with ``sign = sign(det(a, b, c))``.  On the sphere ``major_arc`` (``"bc"``,
    ``"ca"`` or ``"ab"``) selects the triangle whose flagged side is the major
    arc; that triangle is the rest of the hemisphere cut out by the flagged
    side's great circle and has the opposite orientation.
    """
    geometry = Geometry(geometry)
    _check_distinct(geometry, a, b, c, tol)
    s = math.copysign(1.0, det3(a, b, c))
    if geometry is Geometry.HYPERBOLIC:
        total = corner_angle(geometry, a, b, c) + corner_angle(geometry, b, c, a) + corner_angle(geometry, c, a, b)
        return s * (math.pi - total)
    if major_arc is None:
        total = corner_angle(geometry, a, b, c) + corner_angle(geometry, b, c, a) + corner_angle(geometry, c, a, b)
        return s * (total - math.pi)
    # relabel so the major side is ab; the relabelling is cyclic, so det keeps its sign
    if major_arc == "bc":
        a, b, c = b, c, a
    elif major_arc == "ca":
        a, b, c = c, a, b
    elif major_arc != "ab":
        raise ValueError(f"unknown side {major_arc!r}")
    angle_a = corner_angle(geometry, a, b, c, reverse_q=True)
    angle_b = corner_angle(geometry, b, a, c, reverse_q=True)
    angle_c = 2.0 * math.pi - corner_angle(geometry, c, a, b)
    return -s * (angle_a + angle_b + angle_c - math.pi)
