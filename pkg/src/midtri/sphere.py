"""Geodesic triangles on the unit sphere and their side midpoints.

Three points with no antipodal pair bound four candidate triangles: the one
whose sides are all minor arcs, and three more in which exactly one side is
the complementary major arc.  A :class:`SphereTriangle` records the choice
with an optional ``major_arc`` side label.  The midpoint of each side pins
down which arc is meant, so the midpoint triple determines the triangle
except on a small singular set (see :func:`sphere_classify_midpoints`).

Midpoints follow the fixed convention ``alpha <-> bc``, ``beta <-> ca``,
``gamma <-> ab``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Union

from .area import OrientedArea
from .errors import (
    AntipodalCorners,
    AntipodalPair,
    DegenerateArg,
    IdentityRotation,
    InvalidInput,
    NotUnit,
    SingularMidpoints,
    Undetermined,
)
from .linalg import (
    IDENTITY_TOL,
    UNIT_TOL,
    Rotation,
    Vec3,
    VectorLike,
    add,
    as_vector,
    cross,
    det3,
    dot_e,
    neg,
    norm_e,
    rotate_to_north,
    rotation_axis,
    scale,
)

ZERO_TOL = 1e-8
ANTIPODAL_TOL = 1e-8
# below this deviation from |v| = 1 a vector is left untouched, which keeps
# re-ingestion of already normalized points bit-exact
_NORMALIZED = 1e-14


class Side(str, Enum):
    BC = "bc"
    CA = "ca"
    AB = "ab"


@dataclass(frozen=True)
class SpherePoint:
    """A point of the unit sphere.

    Vectors within ``UNIT_TOL`` of unit length are renormalized on
    construction; anything further off raises :class:`NotUnit`.
    """

    ambient: Vec3

    def __post_init__(self):
        v = as_vector(self.ambient)
        n2 = dot_e(v, v)
        if abs(n2 - 1.0) <= _NORMALIZED:
            object.__setattr__(self, "ambient", v)
            return
        dev = abs(math.sqrt(n2) - 1.0)
        if dev > UNIT_TOL:
            raise NotUnit(f"{tuple(v)} is not on the unit sphere (|v| - 1 = {dev:.3g})")
        if abs(n2 - 1.0) > _NORMALIZED:
            v = scale(1.0 / math.sqrt(n2), v)
        object.__setattr__(self, "ambient", v)

    @classmethod
    def from_polar(cls, theta: float, phi: float) -> "SpherePoint":
        s = math.sin(theta)
        return cls(Vec3(s * math.cos(phi), s * math.sin(phi), math.cos(theta)))

    @classmethod
    def from_stereographic(cls, z: complex) -> "SpherePoint":
        r2 = abs(z) ** 2
        w = 2.0 * z / (r2 + 1.0)
        return cls(Vec3(w.real, w.imag, (r2 - 1.0) / (r2 + 1.0)))

    @property
    def w(self) -> complex:
        return complex(self.ambient[0], self.ambient[1])

    @property
    def h(self) -> float:
        return self.ambient[2]

    @property
    def polar(self) -> tuple[float, float]:
        """``(theta, phi)`` with theta in [0, pi] and phi in (-pi, pi]."""
        x, y, z = self.ambient
        phi = math.atan2(y, x)
        if phi == -math.pi:
            phi = math.pi
        return math.atan2(math.hypot(x, y), z), phi

    @property
    def stereographic(self) -> complex:
        """Projection from the north pole, ``z = w / (1 - h)``."""
        w, h = self.w, self.h
        if w == 0 and h > 0:
            raise InvalidInput("stereographic coordinate is undefined at the north pole")
        if h > 0:
            # same value, without the cancellation in 1 - h
            return (1.0 + h) / w.conjugate()
        return w / (1.0 - h)


PointLike = Union[SpherePoint, VectorLike]


def sphere_point(p: PointLike) -> SpherePoint:
    return p if isinstance(p, SpherePoint) else SpherePoint(as_vector(p))


def _vec(p: PointLike) -> Vec3:
    if isinstance(p, SpherePoint):
        return p.ambient
    v = as_vector(p)
    return v if abs(dot_e(v, v) - 1.0) <= _NORMALIZED else SpherePoint(v).ambient


@dataclass(frozen=True)
class SphereTriangle:
    a: SpherePoint
    b: SpherePoint
    c: SpherePoint
    major_arc: Optional[Side] = None

    def __post_init__(self):
        for name in "abc":
            object.__setattr__(self, name, sphere_point(getattr(self, name)))
        if self.major_arc is not None:
            object.__setattr__(self, "major_arc", Side(self.major_arc))
        for side, (p, q) in self.sides().items():
            if dot_e(p.ambient, q.ambient) < -1.0 + ANTIPODAL_TOL:
                raise AntipodalCorners(f"corners of side {side.value} are antipodal")

    def sides(self) -> dict[Side, tuple[SpherePoint, SpherePoint]]:
        return {Side.BC: (self.b, self.c), Side.CA: (self.c, self.a), Side.AB: (self.a, self.b)}

    @property
    def corners(self) -> tuple[Vec3, Vec3, Vec3]:
        return self.a.ambient, self.b.ambient, self.c.ambient


@dataclass(frozen=True)
class SphereMidpoints:
    alpha: SpherePoint
    beta: SpherePoint
    gamma: SpherePoint

    def __post_init__(self):
        for name in ("alpha", "beta", "gamma"):
            object.__setattr__(self, name, sphere_point(getattr(self, name)))

    @property
    def vectors(self) -> tuple[Vec3, Vec3, Vec3]:
        return self.alpha.ambient, self.beta.ambient, self.gamma.ambient

    def det3(self) -> float:
        return det3(*self.vectors)


class MidpointKind(str, Enum):
    REGULAR = "regular"
    ONE_ZERO = "one_zero"
    TWO_ZERO = "two_zero"
    ORTHONORMAL = "orthonormal"


@dataclass(frozen=True)
class MidpointClass:
    """Classification of a midpoint triple.

    ``products`` holds ``(<alpha,beta>, <beta,gamma>, <gamma,alpha>)``;
    ``eta`` is the majority sign and is only set for ``REGULAR``.
    """

    kind: MidpointKind
    products: tuple[float, float, float]
    eta: Optional[int] = None


# -- forward maps -------------------------------------------------------------


def sphere_midpoint(p: PointLike, q: PointLike, tol: float = ANTIPODAL_TOL) -> SpherePoint:
    """Midpoint of the minor arc from ``p`` to ``q``."""
    s = add(_vec(p), _vec(q))
    n = norm_e(s)
    if n < tol:
        raise AntipodalPair("midpoint of an antipodal pair is not unique")
    return SpherePoint(scale(1.0 / n, s))


def sphere_side_length(p: PointLike, q: PointLike) -> float:
    """Length of the minor arc, in [0, pi]."""
    p, q = _vec(p), _vec(q)
    return math.atan2(norm_e(cross(p, q)), dot_e(p, q))


def sphere_midpoints_of(t: SphereTriangle, tol: float = ANTIPODAL_TOL) -> SphereMidpoints:
    """Side midpoints; a side flagged as major arc gets the antipode of the
    minor-arc midpoint."""
    mids = []
    for side, (p, q) in t.sides().items():
        m = sphere_midpoint(p, q, tol)
        mids.append(SpherePoint(neg(m.ambient)) if side is t.major_arc else m)
    return SphereMidpoints(*mids)


# -- areas ---------------------------------------------------------------------


def sphere_area_corners(a: PointLike, b: PointLike, c: PointLike, tol: float = ANTIPODAL_TOL) -> OrientedArea:
    """Oriented area of the triangle on ``a, b, c`` whose sides are all minor arcs.

    ``2 arg(1 + <a,b> + <b,c> + <c,a> + i det(a, b, c))``, in (-2pi, 2pi].
    """
    a, b, c = _vec(a), _vec(b), _vec(c)
    ab, bc, ca = dot_e(a, b), dot_e(b, c), dot_e(c, a)
    if min(ab, bc, ca) < -1.0 + tol:
        raise AntipodalCorners("triangle has an antipodal pair of corners")
    re = 1.0 + ab + bc + ca
    im = det3(a, b, c)
    if math.hypot(re, im) < tol:
        raise DegenerateArg("area argument vanishes")
    return OrientedArea.sphere(2.0 * math.atan2(im, re))


def sphere_sine_half_area(a: PointLike, b: PointLike, c: PointLike, tol: float = ANTIPODAL_TOL) -> float:
    a, b, c = _vec(a), _vec(b), _vec(c)
    prod = (1.0 + dot_e(a, b)) * (1.0 + dot_e(b, c)) * (1.0 + dot_e(c, a))
    if min(1.0 + dot_e(a, b), 1.0 + dot_e(b, c), 1.0 + dot_e(c, a)) < tol:
        raise AntipodalCorners("triangle has an antipodal pair of corners")
    return det3(a, b, c) / math.sqrt(2.0 * prod)


def sphere_area(t: SphereTriangle) -> OrientedArea:
    """Area of a triangle that may carry one major-arc side.

    The flagged side is split at its midpoint into two triangles with only
    minor sides, and their areas are summed.
    """
    if t.major_arc is None:
        return sphere_area_corners(t.a, t.b, t.c)
    a, b, c = t.corners
    # rotate labels so the major side is ab
    if t.major_arc is Side.BC:
        a, b, c = b, c, a
    elif t.major_arc is Side.CA:
        a, b, c = c, a, b
    m = neg(sphere_midpoint(a, b).ambient)
    return OrientedArea.sphere(
        sphere_area_corners(a, m, c).value + sphere_area_corners(m, b, c).value
    )


def sphere_classify_midpoints(m: SphereMidpoints, zero_tol: float = ZERO_TOL) -> MidpointClass:
    al, be, ga = m.vectors
    products = (dot_e(al, be), dot_e(be, ga), dot_e(ga, al))
    zeros = sum(abs(p) < zero_tol for p in products)
    if zeros == 0:
        positive = sum(p > 0 for p in products)
        return MidpointClass(MidpointKind.REGULAR, products, 1 if positive >= 2 else -1)
    kind = {1: MidpointKind.ONE_ZERO, 2: MidpointKind.TWO_ZERO, 3: MidpointKind.ORTHONORMAL}[zeros]
    return MidpointClass(kind, products)


def sphere_area_from_midpoints(m: SphereMidpoints, zero_tol: float = ZERO_TOL) -> OrientedArea:
    """Area from the midpoint triple: ``exp(i Omega/2) = eta sqrt(1 - d^2) + i d``."""
    cls = sphere_classify_midpoints(m, zero_tol)
    d = m.det3()
    if cls.kind is MidpointKind.ORTHONORMAL:
        return OrientedArea.sphere(math.copysign(math.pi, d))
    if cls.kind is not MidpointKind.REGULAR:
        raise SingularMidpoints(f"midpoints are singular ({cls.kind.value}); the area is not determined")
    return OrientedArea.sphere(2.0 * math.atan2(d, cls.eta * math.sqrt(max(0.0, 1.0 - d * d))))


# -- reconstruction --------------------------------------------------------------


def _major_sides(a: Vec3, b: Vec3, c: Vec3, m: SphereMidpoints, tol: float) -> list[Side]:
    """Sides whose midpoint is the antipode of the minor-arc midpoint."""
    majors = []
    for side, (p, q), mid in zip(Side, ((b, c), (c, a), (a, b)), m.vectors):
        s = add(p, q)
        if norm_e(s) < tol:
            raise SingularMidpoints(f"reconstructed corners of side {side.value} are antipodal")
        if dot_e(s, mid) < 0.0:
            majors.append(side)
    return majors


def _require_regular(m: SphereMidpoints, zero_tol: float) -> MidpointClass:
    cls = sphere_classify_midpoints(m, zero_tol)
    if cls.kind is MidpointKind.ORTHONORMAL:
        raise Undetermined("midpoints form an orthonormal frame; the corners are undetermined")
    if cls.kind is not MidpointKind.REGULAR:
        raise SingularMidpoints(f"midpoints are singular ({cls.kind.value}); two corners are antipodal")
    return cls


def sphere_reconstruct(
    m: SphereMidpoints,
    zero_tol: float = ZERO_TOL,
    identity_tol: float = IDENTITY_TOL,
    antipodal_tol: float = ANTIPODAL_TOL,
) -> SphereTriangle:
    """Recover the corners from the midpoints via composed half-turns.

    ``b`` is fixed by ``H_gamma H_beta H_alpha`` (``H_v`` the half-turn about
    ``v``).  Of its two antipodal fixed points exactly one yields a triangle
    with at most one major arc.
    """
    _require_regular(m, zero_tol)
    al, be, ga = m.vectors
    h_al, h_be, h_ga = Rotation.half_turn(al), Rotation.half_turn(be), Rotation.half_turn(ga)
    try:
        fixed = rotation_axis(h_ga @ h_be @ h_al, identity_tol)
    except IdentityRotation as exc:
        raise Undetermined(str(exc)) from exc
    for b in fixed:
        c = h_al(b)
        a = h_ga(b)
        majors = _major_sides(a, b, c, m, antipodal_tol)
        if len(majors) <= 1:
            return SphereTriangle(_unit(a), b, _unit(c), majors[0] if majors else None)
    raise SingularMidpoints("no candidate triangle has at most one major side")


def sphere_reconstruct_closed_form(
    m: SphereMidpoints,
    zero_tol: float = ZERO_TOL,
    antipodal_tol: float = ANTIPODAL_TOL,
    tol: float = 1e-12,
) -> SphereTriangle:
    """Recover the corners by the explicit inversion with one midpoint at the pole.

    The pole midpoint is the one whose two inner products carry the majority
    sign: the other two sides are then minor arcs, which the inversion
    requires.
    """
    cls = sphere_classify_midpoints(m, zero_tol)
    if cls.kind is not MidpointKind.REGULAR:
        raise SingularMidpoints(f"midpoints are singular ({cls.kind.value})")
    eta = cls.eta
    al, be, ga = m.vectors
    p_ab, p_bc, p_ca = cls.products
    # relabel cyclically so that the pole midpoint plays gamma
    if (p_bc > 0) != (eta > 0):
        shift = 1  # alpha at the pole: corners (b, c, a), midpoints (beta, gamma, alpha)
        al, be, ga = be, ga, al
    elif (p_ca > 0) != (eta > 0):
        shift = 2  # beta at the pole: corners (c, a, b), midpoints (gamma, alpha, beta)
        al, be, ga = ga, al, be
    else:
        shift = 0
    rot = rotate_to_north(ga)
    w_al, h_al = _wh(rot(al))
    w_be, h_be = _wh(rot(be))
    x = w_be * w_al.conjugate()
    radicand = 1.0 - x.imag * x.imag
    if radicand < tol:
        raise SingularMidpoints("inversion radicand vanishes (h_alpha = h_beta = 0)")
    k = eta / math.sqrt(radicand)
    h_b = k * (h_al * h_be + x.real)
    h_c = k * (h_al * h_be - x.real)
    w_b = k * (w_al * h_be - w_be * h_al)
    w_c = k * (w_be * h_al + w_al * h_be)
    back = rot.inverse()
    a = back(Vec3.from_wh(-w_b, h_b))
    b = back(Vec3.from_wh(w_b, h_b))
    c = back(Vec3.from_wh(w_c, h_c))
    if shift == 1:
        a, b, c = c, a, b
    elif shift == 2:
        a, b, c = b, c, a
    majors = _major_sides(a, b, c, m, antipodal_tol)
    if len(majors) > 1:
        raise SingularMidpoints("inversion produced more than one major side")
    return SphereTriangle(_unit(a), _unit(b), _unit(c), majors[0] if majors else None)


def _unit(v: Vec3) -> SpherePoint:
    return SpherePoint(scale(1.0 / norm_e(v), v))


def _wh(v: Vec3) -> tuple[complex, float]:
    return complex(v[0], v[1]), v[2]
