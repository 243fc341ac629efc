"""Error taxonomy shared across the package.

Everything raised deliberately derives from CurvescopeError so the CLI can
map failures onto its exit-code contract (2 for errors, 1 for violated
checks, 0 otherwise).
"""


class CurvescopeError(Exception):
    """Base class for all deliberate failures."""


class InvalidSurface(CurvescopeError):
    """Triangulation data does not describe a surface of the claimed type."""


class InvalidCoordinates(CurvescopeError):
    """A weight vector violates the per-triangle matching conditions."""


class NonFlippableEdge(CurvescopeError):
    """Edge is on the boundary or both sides lie in one triangle."""


class Timeout(CurvescopeError):
    """An iteration budget was exhausted before the computation settled."""


class EmptyProjection(CurvescopeError):
    """A projection that the caller required to be non-empty came back empty."""


class SearchExhausted(CurvescopeError):
    """A bounded search ended without finding the object it promised."""


class UnsupportedSurface(CurvescopeError):
    """The requested operation is not defined for this surface."""


class FormatError(CurvescopeError):
    """A curvescope-format document failed to parse."""
