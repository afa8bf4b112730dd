"""Area by direct integration of the area element.

With corner ``a`` moved to the north pole the triangle is swept by the
rays from the pole to the side ``bc``, and the radial part of the area
element integrates in closed form: ``1 - cos(theta)`` on the sphere,
``cosh(theta) - 1`` on the hyperboloid.  Two parametrizations of the
remaining one-dimensional integral are offered.

``"longitude"`` integrates over the longitude ``phi`` between ``b`` and ``c``,
the side being given by the linear chord relation

    k(phi) = (sin(phi_c - phi) k_b + sin(phi - phi_b) k_c) / sin(Phi),

with ``k = cot(theta) = h / |w|`` on the sphere and ``k = coth(theta)`` (the
same ratio) on the hyperboloid.

``"arclength"`` integrates over arc length ``t`` along ``bc``.  Since the side
is ``g(t) = (b S(L - t) + c S(t)) / S(L)`` with ``S = sin`` or ``sinh`` and
``L`` its length, ``r^2 dphi/dt = (b x c)_z / S(L)`` is constant, and the
integrand collapses to

    (b x c)_z / S(L) * 1 / (1 + h(t)).

The two forms agree, but far from the pole the hyperbolic longitude form
evaluates ``cosh(theta)`` from ``coth(theta) - 1 ~ 1e-9`` and its noise stalls
the quadrature; the arclength form is bounded by ``1/2`` and is the default.
"""

from __future__ import annotations

import math
from typing import Callable

from ..area import Geometry
from ..errors import DegenerateTriangle, QuadratureFailure
from ..linalg import Vec3, boost_to_north, cross, dot_e, dot_l, norm_e, rotate_to_north, sub

MAX_EVALS = 100_000


def adaptive_simpson(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    tol: float = 1e-10,
    max_evals: int = MAX_EVALS,
    max_depth: int = 60,
) -> float:
    """Integrate ``f`` over ``[lo, hi]`` to absolute tolerance ``tol``.

    Intervals are bisected until the two-panel Simpson estimate agrees with
    the one-panel estimate to ``15 * tol_i``; accepted panels carry the
    Richardson correction.  Raises :class:`QuadratureFailure` when the
    evaluation budget or the depth limit is exhausted.
    """
    if lo == hi:
        return 0.0
    f_lo, f_hi = f(lo), f(hi)
    mid = 0.5 * (lo + hi)
    f_mid = f(mid)
    evals = 3
    stack = [(lo, hi, f_lo, f_mid, f_hi, (hi - lo) / 6.0 * (f_lo + 4.0 * f_mid + f_hi), tol, 0)]
    pieces = []
    while stack:
        a, b, fa, fm, fb, whole, eps, depth = stack.pop()
        m = 0.5 * (a + b)
        lm, rm = 0.5 * (a + m), 0.5 * (m + b)
        flm, frm = f(lm), f(rm)
        evals += 2
        if evals > max_evals:
            raise QuadratureFailure(f"evaluation budget of {max_evals} exhausted")
        left = (m - a) / 6.0 * (fa + 4.0 * flm + fm)
        right = (b - m) / 6.0 * (fm + 4.0 * frm + fb)
        delta = left + right - whole
        # a few forced levels guard against a lucky agreement on the first panel
        if depth >= 4 and abs(delta) <= 15.0 * eps:
            pieces.append(left + right + delta / 15.0)
        elif depth >= max_depth:
            raise QuadratureFailure(f"no convergence on [{a}, {b}] at depth {depth}")
        else:
            stack.append((m, b, fm, frm, fb, right, 0.5 * eps, depth + 1))
            stack.append((a, m, fa, flm, fm, left, 0.5 * eps, depth + 1))
    return math.fsum(pieces)


def _polar(v: Vec3) -> tuple[float, float, float]:
    """``(|w|, h, phi)``."""
    return math.hypot(v[0], v[1]), v[2], math.atan2(v[1], v[0])


def quadrature_area(
    geometry: Geometry,
    a: Vec3,
    b: Vec3,
    c: Vec3,
    tol: float = 1e-8,
    variable: str = "arclength",
    degenerate_tol: float = 1e-10,
    max_evals: int = MAX_EVALS,
) -> float:
    """Signed area of the triangle ``abc`` (all sides minor on the sphere)."""
    geometry = Geometry(geometry)
    move = rotate_to_north(a) if geometry is Geometry.SPHERE else boost_to_north(a)
    b, c = move(b), move(c)
    r_b, h_b, phi_b = _polar(b)
    r_c, h_c, phi_c = _polar(c)
    if r_b < degenerate_tol or r_c < degenerate_tol:
        raise DegenerateTriangle("a second corner coincides with the first (or its antipode)")
    big_phi = math.remainder(phi_c - phi_b, 2.0 * math.pi)
    if abs(math.sin(big_phi)) < degenerate_tol:
        raise DegenerateTriangle("the three corners lie on one geodesic")
    if variable == "arclength":
        return _arclength_integral(geometry, b, c, tol, max_evals)
    if variable == "longitude":
        return _longitude_integral(geometry, h_b / r_b, h_c / r_c, phi_b, big_phi, tol, max_evals)
    raise ValueError(f"unknown integration variable {variable!r}")


def _longitude_integral(geometry, k_b, k_c, phi_b, big_phi, tol, max_evals):
    sin_big = math.sin(big_phi)

    def chord(phi: float) -> float:
        return (math.sin(phi_b + big_phi - phi) * k_b + math.sin(phi - phi_b) * k_c) / sin_big

    if geometry is Geometry.SPHERE:

        def radial(phi: float) -> float:
            k = chord(phi)
            s = math.sqrt(1.0 + k * k)
            # 1 - cos(theta) with cos(theta) = k / s, cancellation-free for k > 0
            return 1.0 / (s * (s + k)) if k > 0 else 1.0 - k / s

    else:

        def radial(phi: float) -> float:
            k = chord(phi)
            s = math.sqrt(k * k - 1.0)
            # cosh(theta) - 1 with cosh(theta) = k / s
            return 1.0 / (s * (k + s))

    return adaptive_simpson(radial, phi_b, phi_b + big_phi, tol, max_evals)


def _arclength_integral(geometry, b: Vec3, c: Vec3, tol, max_evals):
    d = sub(b, c)
    if geometry is Geometry.SPHERE:
        length = math.atan2(norm_e(cross(b, c)), dot_e(b, c))
        trig = math.sin
    else:
        length = 2.0 * math.asinh(0.5 * math.sqrt(max(0.0, -dot_l(d, d))))
        trig = math.sinh
    s_len = trig(length)
    h_b, h_c = b[2], c[2]
    prefactor = cross(b, c)[2] / s_len

    def integrand(t: float) -> float:
        h = (h_b * trig(length - t) + h_c * trig(t)) / s_len
        return 1.0 / (1.0 + h)

    # scale the tolerance to the integral proper, not the prefactor
    return prefactor * adaptive_simpson(integrand, 0.0, length, tol / max(abs(prefactor), 1e-300), max_evals)
