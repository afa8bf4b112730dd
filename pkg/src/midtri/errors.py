"""Exception hierarchy.

Three families matter to callers (and map onto CLI exit codes):

* :class:`InvalidInput` -- malformed data or a violated membership constraint.
* :class:`SingularConfiguration` -- the inputs are well formed but sit on a
  configuration where the requested quantity is undefined or ambiguous.
* :class:`NotRealizable` -- a hyperbolic triple that is not the midpoint triple
  of any triangle.
"""


class GeometryError(Exception):
    """Base class for every error raised by this package."""


class InvalidInput(GeometryError, ValueError):
    pass


class NotUnit(InvalidInput):
    pass


class NotOnHyperboloid(InvalidInput):
    pass


class ZeroAxis(InvalidInput):
    pass


class SingularConfiguration(GeometryError):
    pass


class AntipodalPair(SingularConfiguration):
    pass


class AntipodalCorners(AntipodalPair):
    pass


class DegenerateArg(SingularConfiguration):
    pass


class DegenerateTriangle(SingularConfiguration):
    pass


class IdentityRotation(SingularConfiguration):
    pass


class SingularMidpoints(SingularConfiguration):
    pass


class Undetermined(SingularMidpoints):
    """The composed half-turn is the identity; any corner b works."""


class NotRealizable(GeometryError):
    pass


class QuadratureFailure(GeometryError, ArithmeticError):
    pass
