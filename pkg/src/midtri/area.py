"""Signed triangle area tagged with its geometry."""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

TWO_PI = 2.0 * math.pi
FOUR_PI = 4.0 * math.pi


class Geometry(str, Enum):
    SPHERE = "sphere"
    HYPERBOLIC = "hyperbolic"
    PLANAR = "planar"


def canonical_sphere_area(value: float) -> float:
    """Representative of ``value`` modulo 4*pi in ``(-2*pi, 2*pi]``."""
    r = math.remainder(value, FOUR_PI)
    return TWO_PI if r <= -TWO_PI else r


def sphere_area_distance(x: float, y: float) -> float:
    """Distance between two sphere areas on the circle R / 4*pi."""
    return abs(math.remainder(x - y, FOUR_PI))


@dataclass(frozen=True)
class OrientedArea:
    """Oriented area in steradians.

    On the sphere the value is only meaningful modulo 4*pi and is stored in
    ``(-2*pi, 2*pi]``; hyperbolic areas lie in ``(-pi, pi)``.
    """

    value: float
    geometry: Geometry

    def __post_init__(self):
        object.__setattr__(self, "geometry", Geometry(self.geometry))
        if not math.isfinite(self.value):
            raise ValueError("area must be finite")
        if self.geometry is Geometry.SPHERE and not -TWO_PI < self.value <= TWO_PI:
            raise ValueError(f"sphere area {self.value} outside (-2pi, 2pi]")
        if self.geometry is Geometry.HYPERBOLIC and not abs(self.value) < math.pi:
            raise ValueError(f"hyperbolic area {self.value} outside (-pi, pi)")

    @classmethod
    def sphere(cls, value: float) -> "OrientedArea":
        return cls(canonical_sphere_area(value), Geometry.SPHERE)

    def __float__(self) -> float:
        return self.value

    def distance(self, other: float) -> float:
        """Absolute difference, taken modulo 4*pi on the sphere."""
        if self.geometry is Geometry.SPHERE:
            return sphere_area_distance(self.value, float(other))
        return abs(self.value - float(other))
