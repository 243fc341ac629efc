"""Curves and arcs on triangulated surfaces, and the graphs they generate."""

from .errors import (CurvescopeError, InvalidSurface, InvalidCoordinates,
                     NonFlippableEdge, Timeout, EmptyProjection,
                     SearchExhausted, UnsupportedSurface)
from .surface import (SurfaceSpec, Surface, build_surface, from_spec,
                      complexity, modified_complexity)
from .coords import NormalCoords, trace, components
from .moves import (FlipPath, transport, shorten_curve, intersection_number,
                    disjoint, fills, dehn_twist, slide_arc,
                    canonicalize_arc, is_essential_arc, thin_arc)
from .projection import (DistanceInterval, SlopeFrame, Subsurface,
                         annular_diameter, annular_distance_interval,
                         annular_windings, curve_distance_interval,
                         farey_distance, overlaps, subsurface_projection)

__all__ = [
    "CurvescopeError", "InvalidSurface", "InvalidCoordinates",
    "NonFlippableEdge", "Timeout", "EmptyProjection", "SearchExhausted",
    "UnsupportedSurface",
    "SurfaceSpec", "Surface", "build_surface", "from_spec",
    "complexity", "modified_complexity",
    "NormalCoords", "trace", "components",
    "FlipPath", "transport", "shorten_curve", "intersection_number",
    "disjoint", "fills", "dehn_twist", "slide_arc", "canonicalize_arc",
    "is_essential_arc", "thin_arc",
    "DistanceInterval", "SlopeFrame", "Subsurface",
    "annular_diameter", "annular_distance_interval", "annular_windings",
    "curve_distance_interval", "farey_distance", "overlaps",
    "subsurface_projection",
]
