import pytest

from curvescope.surface import (SurfaceSpec, build_surface, complexity,
                                modified_complexity)
from curvescope.errors import InvalidSurface, NonFlippableEdge, UnsupportedSurface


# (genus, boundary) -> (edges, triangles)
EXPECTED_SIZES = {
    (1, 1): (5, 3),
    (0, 2): (4, 2),
    (0, 3): (9, 5),
    (1, 2): (10, 6),
    (0, 4): (14, 8),
    (0, 5): (19, 11),
    (2, 1): (11, 7),
    (2, 0): (9, 6),
}


def test_builder_sizes():
    for (g, b), (ne, nt) in EXPECTED_SIZES.items():
        surf = build_surface(g, b)
        assert surf.num_edges == ne, (g, b)
        assert surf.num_triangles == nt, (g, b)


def test_builder_topology():
    for (g, b) in EXPECTED_SIZES:
        surf = build_surface(g, b)
        assert surf.genus() == g
        assert surf.num_boundary_components() == b
        assert surf.euler_characteristic() == 2 - 2 * g - b


def test_boundary_model():
    """Every vertex is on the boundary; one loop edge per component."""
    for (g, b) in EXPECTED_SIZES:
        if b == 0:
            continue
        surf = build_surface(g, b)
        assert len(surf.vertices) == b
        assert len(surf.boundary) == b
        for e in surf.boundary:
            va, vb = surf.edge_vertices(e)
            assert va == vb


def test_closed_builder():
    surf = build_surface(2, 0)
    assert len(surf.vertices) == 1
    assert surf.boundary == {}


def test_unbuildable_surfaces():
    with pytest.raises(UnsupportedSurface):
        build_surface(0, 0)
    with pytest.raises(UnsupportedSurface):
        build_surface(0, 1)


def test_gluing_involution():
    surf = build_surface(1, 2)
    for slot, partner in surf.glue.items():
        assert surf.glue[partner] == slot
        assert slot != partner


def test_complexity_values():
    assert complexity(1, 1) == 1 and modified_complexity(1, 1) == 2
    assert complexity(0, 4) == 1 and modified_complexity(0, 4) == 1
    assert complexity(2, 0) == 3 and modified_complexity(2, 0) == 5


def test_spec_validation():
    spec = SurfaceSpec(1, 2, (0, 1))
    assert spec.complexity == 2
    assert spec.modified_complexity == 3
    with pytest.raises(InvalidSurface):
        SurfaceSpec(-1, 1)
    with pytest.raises(InvalidSurface):
        SurfaceSpec(1, 1, (1,))


def test_flip_rejects_bad_edges():
    surf = build_surface(1, 1)
    boundary_edge = next(iter(surf.boundary))
    with pytest.raises(NonFlippableEdge):
        surf.flipped(boundary_edge)


def test_flip_keeps_type():
    surf = build_surface(1, 2)
    for e in surf.interior_edges():
        try:
            flipped, info = surf.flipped(e)
        except NonFlippableEdge:
            continue
        assert flipped.genus() == 1
        assert flipped.num_boundary_components() == 2
        assert flipped.num_edges == surf.num_edges


def test_vertex_fans_cover_corners():
    surf = build_surface(1, 1)
    seen = set()
    for vid in range(len(surf.vertices)):
        fan = surf.vertex_fan(vid)
        seen.update(fan)
    assert len(seen) == 3 * surf.num_triangles
