"""Oriented areas of geodesic triangles on the sphere and the hyperbolic
plane, and the correspondence between a triangle's corners and its side
midpoints."""

from .area import FOUR_PI, TWO_PI, Geometry, OrientedArea, canonical_sphere_area, sphere_area_distance
from .errors import (
    AntipodalCorners,
    AntipodalPair,
    DegenerateArg,
    DegenerateTriangle,
    GeometryError,
    IdentityRotation,
    InvalidInput,
    NotOnHyperboloid,
    NotRealizable,
    NotUnit,
    QuadratureFailure,
    SingularConfiguration,
    SingularMidpoints,
    Undetermined,
    ZeroAxis,
)
from .hyperbolic import (
    HypMidpoints,
    HypPoint,
    HypTriangle,
    hyp_area_corners,
    hyp_area_from_midpoints,
    hyp_midpoint,
    hyp_midpoints_of,
    hyp_reconstruct,
    hyp_side_length,
    hyp_sine_half_area,
)
from .linalg import LorentzMap, Rotation, Vec3, boost_to_north, det3, dot_e, dot_l, rotate_to_north, rotation_axis
from .sphere import (
    MidpointClass,
    MidpointKind,
    Side,
    SphereMidpoints,
    SpherePoint,
    SphereTriangle,
    sphere_area,
    sphere_area_corners,
    sphere_area_from_midpoints,
    sphere_classify_midpoints,
    sphere_midpoint,
    sphere_midpoints_of,
    sphere_reconstruct,
    sphere_reconstruct_closed_form,
    sphere_side_length,
    sphere_sine_half_area,
)

__version__ = "0.1.0"
