"""Vector algebra in ambient three-space.

Points of the unit sphere and of the hyperboloid both live in R^3.  A vector
``(x, y, z)`` is also read as the pair ``(w, h)`` with ``w = x + iy`` and
``h = z``; the north pole is ``(0, 0, 1)`` in both geometries.

Everything here works on plain floats so that the large property suites stay
cheap; matrices are row tuples of :class:`Vec3`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Sequence, Tuple, Union

from .errors import (
    IdentityRotation,
    InvalidInput,
    NotOnHyperboloid,
    NotUnit,
    ZeroAxis,
)

IDENTITY_TOL = 1e-8
UNIT_TOL = 1e-9
AXIS_TOL = 1e-12


class Vec3(NamedTuple):
    x: float
    y: float
    z: float

    @property
    def w(self) -> complex:
        return complex(self.x, self.y)

    @property
    def h(self) -> float:
        return self.z

    @classmethod
    def from_wh(cls, w: complex, h: float) -> "Vec3":
        return cls(w.real, w.imag, h)


Mat3 = Tuple[Vec3, Vec3, Vec3]
VectorLike = Union[Vec3, Sequence[float]]

NORTH = Vec3(0.0, 0.0, 1.0)
ZERO = Vec3(0.0, 0.0, 0.0)
E1 = Vec3(1.0, 0.0, 0.0)
E2 = Vec3(0.0, 1.0, 0.0)
E3 = NORTH


def as_vector(v: VectorLike) -> Vec3:
    """Coerce a length-3 sequence to a :class:`Vec3`, rejecting non-finite input."""
    if isinstance(v, Vec3):
        # 0 * inf and 0 * nan are nan; 0 * finite is 0
        if math.isfinite(0.0 * v[0] + 0.0 * v[1] + 0.0 * v[2]):
            return v
        x, y, z = v
    else:
        try:
            x, y, z = (float(c) for c in v)
        except (TypeError, ValueError) as exc:
            raise InvalidInput(f"expected three real components, got {v!r}") from exc
    if not (math.isfinite(x) and math.isfinite(y) and math.isfinite(z)):
        raise InvalidInput(f"non-finite component in {v!r}")
    return Vec3(x, y, z)


def add(u: Vec3, v: Vec3) -> Vec3:
    return Vec3(u[0] + v[0], u[1] + v[1], u[2] + v[2])


def sub(u: Vec3, v: Vec3) -> Vec3:
    return Vec3(u[0] - v[0], u[1] - v[1], u[2] - v[2])


def scale(s: float, v: Vec3) -> Vec3:
    return Vec3(s * v[0], s * v[1], s * v[2])


def neg(v: Vec3) -> Vec3:
    return Vec3(-v[0], -v[1], -v[2])


def dot_e(u: Vec3, v: Vec3) -> float:
    """Euclidean scalar product."""
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


def dot_l(u: Vec3, v: Vec3) -> float:
    """Lorentzian scalar product ``h h' - Re(conj(w) w')``."""
    return u[2] * v[2] - u[0] * v[0] - u[1] * v[1]


def norm_e(v: Vec3) -> float:
    return math.sqrt(dot_e(v, v))


def max_abs_diff(u: Vec3, v: Vec3) -> float:
    return max(abs(u[0] - v[0]), abs(u[1] - v[1]), abs(u[2] - v[2]))


def cross(u: Vec3, v: Vec3) -> Vec3:
    return Vec3(
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def det3(u: Vec3, v: Vec3, w: Vec3) -> float:
    """Determinant of the matrix whose columns are ``u, v, w``."""
    return (
        u[0] * (v[1] * w[2] - v[2] * w[1])
        - v[0] * (u[1] * w[2] - u[2] * w[1])
        + w[0] * (u[1] * v[2] - u[2] * v[1])
    )


def point_reflection(axis: Vec3, p: Vec3, tol: float = AXIS_TOL) -> Vec3:
    """Rotate ``p`` by a half-turn about ``axis``."""
    n = norm_e(axis)
    if n < tol:
        raise ZeroAxis(f"half-turn axis has norm {n:.3g}")
    a = scale(1.0 / n, axis)
    s = 2.0 * dot_e(p, a)
    return Vec3(s * a[0] - p[0], s * a[1] - p[1], s * a[2] - p[2])


# -- matrices -----------------------------------------------------------------


def matvec(m: Mat3, v: Vec3) -> Vec3:
    return Vec3(dot_e(m[0], v), dot_e(m[1], v), dot_e(m[2], v))


def transpose(m: Mat3) -> Mat3:
    return (
        Vec3(m[0][0], m[1][0], m[2][0]),
        Vec3(m[0][1], m[1][1], m[2][1]),
        Vec3(m[0][2], m[1][2], m[2][2]),
    )


def matmul(m: Mat3, n: Mat3) -> Mat3:
    cols = transpose(n)
    return tuple(Vec3(dot_e(r, cols[0]), dot_e(r, cols[1]), dot_e(r, cols[2])) for r in m)  # type: ignore[return-value]


def _as_matrix(m) -> Mat3:
    rows = tuple(as_vector(r) for r in m)
    if len(rows) != 3:
        raise InvalidInput("expected a 3x3 matrix")
    return rows  # type: ignore[return-value]


def frobenius_distance(m: Mat3, n: Mat3) -> float:
    return math.sqrt(sum((m[i][j] - n[i][j]) ** 2 for i in range(3) for j in range(3)))


IDENTITY: Mat3 = (E1, E2, E3)
_LORENTZ_SIGNS = (-1.0, -1.0, 1.0)


@dataclass(frozen=True)
class Rotation:
    """A proper rotation of R^3.

    The constructor trusts its argument; use :meth:`from_matrix` for
    external data.  ``R @ v`` applies the rotation, ``R @ S`` composes.
    """

    matrix: Mat3

    @classmethod
    def from_matrix(cls, m, tol: float = 1e-9) -> "Rotation":
        mat = _as_matrix(m)
        if frobenius_distance(matmul(transpose(mat), mat), IDENTITY) > tol:
            raise InvalidInput("matrix is not orthogonal")
        if abs(det3(*transpose(mat)) - 1.0) > tol:
            raise InvalidInput("matrix is not orientation preserving")
        return cls(mat)

    @classmethod
    def identity(cls) -> "Rotation":
        return cls(IDENTITY)

    @classmethod
    def half_turn(cls, axis: Vec3, tol: float = AXIS_TOL) -> "Rotation":
        """Rotation by pi about ``axis``: ``2 a a^T - I``."""
        n = norm_e(axis)
        if n < tol:
            raise ZeroAxis(f"half-turn axis has norm {n:.3g}")
        a = scale(1.0 / n, axis)
        return cls(
            tuple(
                Vec3(*(2.0 * a[i] * a[j] - (1.0 if i == j else 0.0) for j in range(3)))
                for i in range(3)
            )
        )

    def inverse(self) -> "Rotation":
        return Rotation(transpose(self.matrix))

    def __call__(self, v: Vec3) -> Vec3:
        return matvec(self.matrix, v)

    def __matmul__(self, other):
        if isinstance(other, Rotation):
            return Rotation(matmul(self.matrix, other.matrix))
        return matvec(self.matrix, other)


@dataclass(frozen=True)
class LorentzMap:
    """A linear map preserving :func:`dot_l` and the upper sheet."""

    matrix: Mat3

    @classmethod
    def from_matrix(cls, m, tol: float = 1e-9) -> "LorentzMap":
        mat = _as_matrix(m)
        j = _LORENTZ_SIGNS
        cols = transpose(mat)
        for i in range(3):
            for k in range(3):
                g = dot_l(cols[i], cols[k])
                if abs(g - (j[i] if i == k else 0.0)) > tol * max(1.0, abs(mat[2][2]) ** 2):
                    raise InvalidInput("matrix does not preserve the Lorentzian product")
        if mat[2][2] < 1.0 - tol:
            raise InvalidInput("matrix does not preserve the upper sheet")
        return cls(mat)

    @classmethod
    def identity(cls) -> "LorentzMap":
        return cls(IDENTITY)

    def inverse(self) -> "LorentzMap":
        # J M^T J with J = diag(-1, -1, 1)
        t = transpose(self.matrix)
        j = _LORENTZ_SIGNS
        return LorentzMap(
            tuple(Vec3(*(j[r] * t[r][c] * j[c] for c in range(3))) for r in range(3))
        )

    def __call__(self, v: Vec3) -> Vec3:
        return matvec(self.matrix, v)

    def __matmul__(self, other):
        if isinstance(other, LorentzMap):
            return LorentzMap(matmul(self.matrix, other.matrix))
        return matvec(self.matrix, other)


def rotation_axis(r: Rotation, identity_tol: float = IDENTITY_TOL) -> tuple[Vec3, Vec3]:
    """Return the two antipodal unit fixed points ``(b, -b)`` of ``r``.

    Raises :class:`IdentityRotation` when ``r`` is the identity to within
    ``identity_tol`` (Frobenius), since every point is then fixed.
    """
    m = r.matrix
    if frobenius_distance(m, IDENTITY) < identity_tol:
        raise IdentityRotation("rotation is the identity; its axis is undetermined")
    cos_angle = 0.5 * (m[0][0] + m[1][1] + m[2][2] - 1.0)
    if cos_angle >= 0.0:
        # antisymmetric part is 2 sin(angle) [axis]_x, well conditioned here
        v = Vec3(m[2][1] - m[1][2], m[0][2] - m[2][0], m[1][0] - m[0][1])
    else:
        # symmetric part minus cos(angle) I is (1 - cos(angle)) axis axis^T
        s = [[0.5 * (m[i][j] + m[j][i]) - (cos_angle if i == j else 0.0) for j in range(3)] for i in range(3)]
        k = max(range(3), key=lambda i: s[i][i])
        v = Vec3(*s[k])
    n = norm_e(v)
    if n == 0.0:
        raise IdentityRotation("rotation axis could not be resolved")
    b = scale(1.0 / n, v)
    return b, neg(b)


def _check_unit(p: Vec3, tol: float) -> None:
    if abs(norm_e(p) - 1.0) > tol:
        raise NotUnit(f"{tuple(p)} is not a unit vector")


def rotate_to_north(p: Vec3, tol: float = UNIT_TOL) -> Rotation:
    """Rotation taking the unit vector ``p`` to the north pole.

    Uses the minimal rotation about ``p x e3``; for the southern hemisphere a
    half-turn about the x axis is applied first so the formula never divides
    by a small ``1 + h``.
    """
    p = as_vector(p)
    _check_unit(p, tol)
    if p[2] >= 0.0:
        return Rotation(_align_north(p))
    flip = Rotation((E1, Vec3(0.0, -1.0, 0.0), Vec3(0.0, 0.0, -1.0)))
    return Rotation(_align_north(flip(p))) @ flip


def _align_north(p: Vec3) -> Mat3:
    x, y, h = p
    k = 1.0 / (1.0 + h)
    return (
        Vec3(1.0 - k * x * x, -k * x * y, -x),
        Vec3(-k * x * y, 1.0 - k * y * y, -y),
        Vec3(x, y, h),
    )


def boost_to_north(p: Vec3, tol: float = UNIT_TOL) -> LorentzMap:
    """Pure Lorentz boost taking ``p`` on the upper sheet to the north pole."""
    p = as_vector(p)
    x, y, h = p
    if h <= 0.0 or abs(dot_l(p, p) - 1.0) > tol * max(1.0, h * h):
        raise NotOnHyperboloid(f"{tuple(p)} is not on the upper sheet of the hyperboloid")
    k = 1.0 / (1.0 + h)
    return LorentzMap(
        (
            Vec3(1.0 + k * x * x, k * x * y, -x),
            Vec3(k * x * y, 1.0 + k * y * y, -y),
            Vec3(-x, -y, h),
        )
    )
