"""Geodesic triangles on the hyperbolic plane (hyperboloid model).

The plane is the upper sheet ``h^2 - |w|^2 = 1, h > 0`` with the Lorentzian
product of :func:`midtri.linalg.dot_l`.  Two points are joined by exactly one
geodesic, so unlike the sphere there is no arc choice; instead not every
triple of points is a midpoint triple.  A triple is realizable exactly when
``|det(alpha, beta, gamma)| < 1``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

from .area import Geometry, OrientedArea
from .errors import InvalidInput, NotOnHyperboloid, NotRealizable
from .linalg import (
    UNIT_TOL,
    Vec3,
    VectorLike,
    add,
    as_vector,
    boost_to_north,
    det3,
    dot_l,
    scale,
    sub,
)

REALIZABLE_TOL = 1e-12
_NORMALIZED = 1e-14


@dataclass(frozen=True)
class HypPoint:
    """A point of the upper sheet.

    Vectors whose Lorentzian square is within ``UNIT_TOL`` (relative to the
    vector's size) of 1 are moved onto the sheet by recomputing ``h`` from
    ``w``.  Rescaling the whole vector instead would shift far-out points by
    roughly ``h^2`` times the defect.
    """

    ambient: Vec3

    def __post_init__(self):
        v = as_vector(self.ambient)
        q = dot_l(v, v)
        size = max(1.0, v[2] * v[2])
        if v[2] <= 0.0 or abs(q - 1.0) > UNIT_TOL * size:
            raise NotOnHyperboloid(f"{tuple(v)} is not on the upper sheet (<v,v>_L = {q!r})")
        if abs(q - 1.0) > _NORMALIZED * size:
            v = Vec3(v[0], v[1], math.sqrt(1.0 + v[0] * v[0] + v[1] * v[1]))
        object.__setattr__(self, "ambient", v)

    @classmethod
    def from_polar(cls, theta: float, phi: float) -> "HypPoint":
        s = math.sinh(theta)
        x, y = s * math.cos(phi), s * math.sin(phi)
        return cls(Vec3(x, y, math.sqrt(1.0 + x * x + y * y)))

    @classmethod
    def from_disk(cls, z: complex) -> "HypPoint":
        r2 = abs(z) ** 2
        if r2 >= 1.0:
            raise InvalidInput(f"disk coordinate {z} is not inside the unit disk")
        w = 2.0 * z / (1.0 - r2)
        return cls(Vec3(w.real, w.imag, (1.0 + r2) / (1.0 - r2)))

    @property
    def w(self) -> complex:
        return complex(self.ambient[0], self.ambient[1])

    @property
    def h(self) -> float:
        return self.ambient[2]

    @property
    def polar(self) -> tuple[float, float]:
        x, y, h = self.ambient
        return math.asinh(math.hypot(x, y)), math.atan2(y, x)

    @property
    def disk(self) -> complex:
        """Poincare disk coordinate ``w / (1 + h)``."""
        return self.w / (1.0 + self.h)


PointLike = Union[HypPoint, VectorLike]


def hyp_point(p: PointLike) -> HypPoint:
    return p if isinstance(p, HypPoint) else HypPoint(as_vector(p))


def _vec(p: PointLike) -> Vec3:
    if isinstance(p, HypPoint):
        return p.ambient
    v = as_vector(p)
    if v[2] > 0.0 and abs(dot_l(v, v) - 1.0) <= _NORMALIZED * max(1.0, v[2] * v[2]):
        return v
    return HypPoint(v).ambient


@dataclass(frozen=True)
class HypTriangle:
    a: HypPoint
    b: HypPoint
    c: HypPoint

    def __post_init__(self):
        for name in "abc":
            object.__setattr__(self, name, hyp_point(getattr(self, name)))

    @property
    def corners(self) -> tuple[Vec3, Vec3, Vec3]:
        return self.a.ambient, self.b.ambient, self.c.ambient


@dataclass(frozen=True)
class HypMidpoints:
    alpha: HypPoint
    beta: HypPoint
    gamma: HypPoint

    def __post_init__(self):
        for name in ("alpha", "beta", "gamma"):
            object.__setattr__(self, name, hyp_point(getattr(self, name)))

    @property
    def vectors(self) -> tuple[Vec3, Vec3, Vec3]:
        return self.alpha.ambient, self.beta.ambient, self.gamma.ambient

    def det3(self) -> float:
        return det3(*self.vectors)

    def is_realizable(self, tol: float = REALIZABLE_TOL) -> bool:
        d = self.det3()
        return 1.0 - d * d >= tol


def hyp_midpoint(p: PointLike, q: PointLike) -> HypPoint:
    """Normalized average ``(p + q) / sqrt(<p + q, p + q>_L)``."""
    s = add(_vec(p), _vec(q))
    return HypPoint(scale(1.0 / math.sqrt(dot_l(s, s)), s))


def hyp_side_length(p: PointLike, q: PointLike) -> float:
    """Geodesic distance, from the Lorentzian chord (acosh loses half the digits near 0)."""
    d = sub(_vec(p), _vec(q))
    return 2.0 * math.asinh(0.5 * math.sqrt(max(0.0, -dot_l(d, d))))


def hyp_midpoints_of(t: HypTriangle) -> HypMidpoints:
    return HypMidpoints(hyp_midpoint(t.b, t.c), hyp_midpoint(t.c, t.a), hyp_midpoint(t.a, t.b))


def hyp_area_corners(a: PointLike, b: PointLike, c: PointLike) -> OrientedArea:
    """``2 arg(1 + <a,b>_L + <b,c>_L + <a,c>_L + i det(a, b, c))``.

    The real part is at least 4, so the result lies in (-pi, pi).
    """
    a, b, c = _vec(a), _vec(b), _vec(c)
    re = 1.0 + dot_l(a, b) + dot_l(b, c) + dot_l(c, a)
    return OrientedArea(2.0 * math.atan2(det3(a, b, c), re), Geometry.HYPERBOLIC)


def hyp_sine_half_area(a: PointLike, b: PointLike, c: PointLike) -> float:
    a, b, c = _vec(a), _vec(b), _vec(c)
    prod = (1.0 + dot_l(a, b)) * (1.0 + dot_l(b, c)) * (1.0 + dot_l(c, a))
    return det3(a, b, c) / math.sqrt(2.0 * prod)


def hyp_area_from_midpoints(m: HypMidpoints, tol: float = REALIZABLE_TOL) -> OrientedArea:
    d = m.det3()
    radicand = 1.0 - d * d
    if radicand < tol:
        raise NotRealizable(f"|det(alpha, beta, gamma)| = {abs(d):.17g} is not below 1")
    return OrientedArea(2.0 * math.atan2(d, math.sqrt(radicand)), Geometry.HYPERBOLIC)


def hyp_reconstruct(m: HypMidpoints, tol: float = REALIZABLE_TOL) -> HypTriangle:
    """Unique triangle with the given side midpoints.

    ``gamma`` is boosted to the north pole, where the corners have explicit
    expressions in the remaining two midpoints; the result is boosted back.
    """
    al, be, ga = m.vectors
    boost = boost_to_north(ga)
    w_al, h_al = _wh(boost(al))
    w_be, h_be = _wh(boost(be))
    x = w_be * w_al.conjugate()
    radicand = 1.0 - x.imag * x.imag
    if radicand <= tol:
        raise NotRealizable(f"|det(alpha, beta, gamma)| = {abs(x.imag):.17g} is not below 1")
    k = 1.0 / math.sqrt(radicand)
    h_b = k * (h_al * h_be - x.real)
    h_c = k * (h_al * h_be + x.real)
    w_b = k * (w_al * h_be - w_be * h_al)
    w_c = k * (w_be * h_al + w_al * h_be)
    back = boost.inverse()
    return HypTriangle(
        back(Vec3.from_wh(-w_b, h_b)),
        back(Vec3.from_wh(w_b, h_b)),
        back(Vec3.from_wh(w_c, h_c)),
    )


def _wh(v: Vec3) -> tuple[complex, float]:
    return complex(v[0], v[1]), v[2]
