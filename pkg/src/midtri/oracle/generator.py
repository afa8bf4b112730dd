"""Seeded triangle generators.

The random stream is SplitMix64 (Steele, Lea & Flood 2014): the state
advances by ``0x9E3779B97F4A7C15`` modulo 2**64 and each output is the
finalizer

    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB
    z =  z ^ (z >> 31)

of the new state.  A double in [0, 1) is ``(z >> 11) * 2**-53``.  The state
is a value: drawing returns the output together with the next state, so
streams can be replayed or forked freely.

Draw order per triangle attempt:

* sphere -- for each corner ``u, v`` give ``z = 2u - 1`` and
  ``phi = 2 pi v``; then, if ``major_arc_probability > 0``, one draw ``p``
  decides a flag (``p < probability``) and a second picks the side
  ``bc, ca, ab`` as ``floor(3 q)``;
* hyperbolic -- for each corner ``u, v`` give ``theta = theta_max u`` and
  ``phi = 2 pi v``;
* planar (unit disk) -- for each corner ``u, v`` give ``r = sqrt(u)`` and
  ``phi = 2 pi v``.

Attempts that violate the margin are discarded and the stream continues.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Union

from ..area import Geometry
from ..hyperbolic import HypPoint, HypTriangle, hyp_midpoints_of, hyp_sine_half_area
from ..linalg import Vec3, det3, dot_e, dot_l
from ..sphere import ZERO_TOL, Side, SpherePoint, SphereTriangle
from .planar import PlanarPoint, planar_area

MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15
_MAX_ATTEMPTS = 10_000
_INV_2_53 = 1.0 / (1 << 53)


@dataclass(frozen=True)
class SplitMix64:
    state: int

    def next_u64(self) -> tuple[int, "SplitMix64"]:
        s = (self.state + _GOLDEN) & MASK64
        z = s
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31), SplitMix64(s)

    def next_float(self) -> tuple[float, "SplitMix64"]:
        z, rng = self.next_u64()
        return (z >> 11) * _INV_2_53, rng


@dataclass(frozen=True)
class GeneratorConfig:
    """Parameters of a triangle stream.

    ``margin`` keeps samples away from singular configurations: corners are
    at least that far (in inner product) from coinciding or being antipodal,
    ``|sin(Omega/2)|`` stays inside ``(margin, 1 - margin)`` and, on the
    sphere, every midpoint inner product exceeds ``margin`` in size.
    """

    seed: int
    geometry: Geometry = Geometry.SPHERE
    margin: float = 1e-3
    theta_max: float = 5.0
    major_arc_probability: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "geometry", Geometry(self.geometry))
        if not -(1 << 63) <= self.seed <= MASK64:
            raise ValueError("seed must fit in 64 bits")
        if not self.theta_max > 0:
            raise ValueError("theta_max must be positive")
        if not self.margin >= 0:
            raise ValueError("margin must be non-negative")
        if not 0.0 <= self.major_arc_probability <= 1.0:
            raise ValueError("major_arc_probability must lie in [0, 1]")

    def rng(self) -> SplitMix64:
        return SplitMix64(self.seed & MASK64)


Triangle = Union[SphereTriangle, HypTriangle, tuple]


def _uniforms(rng: SplitMix64, n: int) -> tuple[list[float], SplitMix64]:
    # inlined SplitMix64.next_float
    s = rng.state
    out = []
    for _ in range(n):
        s = (s + _GOLDEN) & MASK64
        z = ((s ^ (s >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        out.append(((z ^ (z >> 31)) >> 11) * _INV_2_53)
    return out, SplitMix64(s)


def _sphere_attempt(cfg: GeneratorConfig, rng: SplitMix64):
    us, rng = _uniforms(rng, 6)
    pts = []
    for u, v in zip(us[0::2], us[1::2]):
        z = 2.0 * u - 1.0
        r = math.sqrt(max(0.0, 1.0 - z * z))
        phi = 2.0 * math.pi * v
        pts.append(Vec3(r * math.cos(phi), r * math.sin(phi), z))
    side = None
    if cfg.major_arc_probability > 0.0:
        (p, q), rng = _uniforms(rng, 2)
        if p < cfg.major_arc_probability:
            side = list(Side)[min(2, int(3.0 * q))]
    m = cfg.margin
    a, b, c = pts
    ab, bc, ca = dot_e(a, b), dot_e(b, c), dot_e(c, a)
    if not (-1.0 + m < ab < 1.0 - m and -1.0 + m < bc < 1.0 - m and -1.0 + m < ca < 1.0 - m):
        return None, rng
    if not m < abs(det3(a, b, c) / math.sqrt(2.0 * (1.0 + ab) * (1.0 + bc) * (1.0 + ca))) < 1.0 - m:
        return None, rng
    # <b+c, c+a> = <c+a, a+b> = <a+b, b+c> = 1 + ab + bc + ca
    num = 1.0 + ab + bc + ca
    n_al, n_be, n_ga = (math.sqrt(2.0 + 2.0 * x) for x in (bc, ca, ab))
    s_al, s_be, s_ga = (-1.0 if side is k else 1.0 for k in Side)
    products = (
        s_al * s_be * num / (n_al * n_be),
        s_be * s_ga * num / (n_be * n_ga),
        s_ga * s_al * num / (n_ga * n_al),
    )
    if min(abs(x) for x in products) <= max(m, ZERO_TOL):
        return None, rng
    return SphereTriangle(SpherePoint(a), SpherePoint(b), SpherePoint(c), side), rng


def _hyperbolic_attempt(cfg: GeneratorConfig, rng: SplitMix64):
    us, rng = _uniforms(rng, 6)
    pts = [HypPoint.from_polar(cfg.theta_max * u, 2.0 * math.pi * v) for u, v in zip(us[0::2], us[1::2])]
    m = cfg.margin
    vs = [p.ambient for p in pts]
    if any(dot_l(x, y) < 1.0 + m for x, y in ((vs[0], vs[1]), (vs[1], vs[2]), (vs[2], vs[0]))):
        return None, rng
    if not abs(hyp_sine_half_area(*vs)) > m:
        return None, rng
    return HypTriangle(*pts), rng


def _planar_attempt(cfg: GeneratorConfig, rng: SplitMix64):
    us, rng = _uniforms(rng, 6)
    pts = []
    for u, v in zip(us[0::2], us[1::2]):
        r, phi = math.sqrt(u), 2.0 * math.pi * v
        pts.append(PlanarPoint(r * math.cos(phi), r * math.sin(phi)))
    if abs(planar_area(*pts)) <= cfg.margin:
        return None, rng
    return tuple(pts), rng


_ATTEMPTS = {
    Geometry.SPHERE: _sphere_attempt,
    Geometry.HYPERBOLIC: _hyperbolic_attempt,
    Geometry.PLANAR: _planar_attempt,
}


def draw_triangle(cfg: GeneratorConfig, rng: SplitMix64) -> tuple[Triangle, SplitMix64]:
    """Next triangle meeting the margin, and the advanced stream state.

    Planar triangles are triples of :class:`PlanarPoint` in the unit disk.
    """
    attempt = _ATTEMPTS[cfg.geometry]
    for _ in range(_MAX_ATTEMPTS):
        tri, rng = attempt(cfg, rng)
        if tri is not None:
            return tri, rng
    raise RuntimeError(f"no triangle met margin {cfg.margin} in {_MAX_ATTEMPTS} attempts")


def random_triangle(cfg: GeneratorConfig) -> Triangle:
    """First triangle of the stream for ``cfg.seed``."""
    return draw_triangle(cfg, cfg.rng())[0]


def triangle_stream(cfg: GeneratorConfig) -> Iterator[Triangle]:
    rng = cfg.rng()
    while True:
        tri, rng = draw_triangle(cfg, rng)
        yield tri
