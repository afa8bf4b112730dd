"""Independent reference computations used to check the closed forms."""

from .excess import corner_angle, excess_area
from .generator import GeneratorConfig, SplitMix64, draw_triangle, random_triangle, triangle_stream
from .planar import (
    PlanarPoint,
    central_projection,
    lift_to_hyperboloid,
    lift_to_sphere,
    planar_area,
    planar_area_from_midpoints,
    planar_midpoints,
    planar_reconstruct,
)
from .quadrature import adaptive_simpson, quadrature_area

__all__ = [
    "GeneratorConfig",
    "PlanarPoint",
    "SplitMix64",
    "adaptive_simpson",
    "central_projection",
    "corner_angle",
    "draw_triangle",
    "excess_area",
    "lift_to_hyperboloid",
    "lift_to_sphere",
    "planar_area",
    "planar_area_from_midpoints",
    "planar_midpoints",
    "planar_reconstruct",
    "quadrature_area",
    "random_triangle",
    "triangle_stream",
]
