"""Euclidean baseline and the maps between a small cap and the plane.

Lifting ``(u, v)`` to the ray through ``(u, v, 1)`` is the gnomonic chart on
the sphere and the Klein chart on the hyperboloid.  Both send geodesics to
straight lines, so a lifted triangle differs from the planar one only
through the area element, which is ``1 + O(r^2)`` near the pole.
"""

from __future__ import annotations

import math
from typing import NamedTuple

from ..errors import InvalidInput
from ..linalg import Vec3


class PlanarPoint(NamedTuple):
    u: float
    v: float


def det2(p: PlanarPoint, q: PlanarPoint) -> float:
    return p[0] * q[1] - p[1] * q[0]


def _sub(p, q) -> PlanarPoint:
    return PlanarPoint(p[0] - q[0], p[1] - q[1])


def planar_area(a: PlanarPoint, b: PlanarPoint, c: PlanarPoint) -> float:
    """Signed area ``det(b - a, c - a) / 2``."""
    return 0.5 * det2(_sub(b, a), _sub(c, a))


def planar_area_from_midpoints(alpha: PlanarPoint, beta: PlanarPoint, gamma: PlanarPoint) -> float:
    return 2.0 * det2(_sub(beta, alpha), _sub(gamma, alpha))


def planar_midpoints(a: PlanarPoint, b: PlanarPoint, c: PlanarPoint) -> tuple[PlanarPoint, PlanarPoint, PlanarPoint]:
    def mid(p, q):
        return PlanarPoint(0.5 * (p[0] + q[0]), 0.5 * (p[1] + q[1]))

    return mid(b, c), mid(c, a), mid(a, b)


def planar_reconstruct(alpha: PlanarPoint, beta: PlanarPoint, gamma: PlanarPoint) -> tuple[PlanarPoint, PlanarPoint, PlanarPoint]:
    def comb(p, q, r):
        return PlanarPoint(p[0] + q[0] - r[0], p[1] + q[1] - r[1])

    return comb(beta, gamma, alpha), comb(gamma, alpha, beta), comb(alpha, beta, gamma)


def lift_to_sphere(p: PlanarPoint) -> Vec3:
    n = math.sqrt(p[0] * p[0] + p[1] * p[1] + 1.0)
    return Vec3(p[0] / n, p[1] / n, 1.0 / n)


def lift_to_hyperboloid(p: PlanarPoint) -> Vec3:
    r2 = p[0] * p[0] + p[1] * p[1]
    if r2 >= 1.0:
        raise InvalidInput(f"{tuple(p)} lies outside the Klein disk")
    n = math.sqrt(1.0 - r2)
    return Vec3(p[0] / n, p[1] / n, 1.0 / n)


def central_projection(v: Vec3) -> PlanarPoint:
    """Inverse of both lifts: ``(x / z, y / z)``."""
    return PlanarPoint(v[0] / v[2], v[1] / v[2])
