import pytest

from curvescope.surface import build_surface
from curvescope.coords import (NormalCoords, corner_counts, trace, components,
                               cancel_pieces, vector_of_strands)
from curvescope.catalog import admissible_vectors
from curvescope.errors import InvalidCoordinates


def test_admissibility_accepts_known_curves():
    surf = build_surface(1, 1)
    for w in [(1, 0, 0, 1, 0), (0, 1, 0, 1, 1), (1, 1, 0, 0, 1),
              (2, 2, 0, 2, 2)]:
        NormalCoords(w).check(surf)


def test_admissibility_rejects_parity_and_triangle_violations():
    surf = build_surface(1, 1)
    with pytest.raises(InvalidCoordinates):
        NormalCoords((1, 0, 0, 0, 0)).check(surf)   # odd triangle sum
    with pytest.raises(InvalidCoordinates):
        NormalCoords((2, 0, 0, 0, 0)).check(surf)   # triangle inequality
    with pytest.raises(InvalidCoordinates):
        NormalCoords((0, 0, 1, 0, 0)).check(surf)   # weight on the boundary
    with pytest.raises(InvalidCoordinates):
        NormalCoords((0, 0, 0, 0, 0), (0, 1, 0, 0, 0)).check(surf)


def test_corner_counts_are_piece_counts():
    surf = build_surface(1, 1)
    coords = NormalCoords((0, 1, 0, 1, 1), (0, 0, 2, 0, 0))
    for t in range(surf.num_triangles):
        n = corner_counts(surf, coords, t)
        assert all(k >= 0 for k in n)
        x = [coords.total(e) for e in surf.tri[t]]
        for c in range(3):
            assert n[c] == (x[(c + 1) % 3] + x[(c + 2) % 3] - x[c]) // 2


def test_trace_reconstructs_every_admissible_vector():
    """Tracing and recounting must reproduce the vector exactly."""
    surf = build_surface(1, 1)
    vectors = admissible_vectors(surf, cap=3, end_cap=2)
    assert len(vectors) > 50
    for vec in vectors:
        strands = trace(surf, vec)
        assert vector_of_strands(surf, strands) == vec
        arcs = sum(1 for s in strands if s.kind == 'arc')
        assert 2 * arcs == vec.num_endpoints()


def test_components_report_multiplicity():
    surf = build_surface(1, 1)
    one = NormalCoords((1, 0, 0, 1, 0))
    comps = components(surf, one * 3)
    assert len(comps) == 1
    vec, kind, mult = comps[0]
    assert vec == one and kind == 'closed' and mult == 3


def test_components_mixed_system():
    from curvescope import disjoint
    from curvescope.catalog import arc_classes
    surf = build_surface(1, 1)
    curve = NormalCoords((1, 0, 0, 1, 0))
    arc = next(x for x in arc_classes(surf, cap=3)
               if disjoint(surf, curve, x))
    comps = components(surf, curve + arc)
    kinds = sorted(kind for _, kind, _ in comps)
    assert kinds == ['arc', 'closed']


def test_cancel_pieces_removes_backtracks():
    # closed strand with one U-turn collapses onto the shorter loop
    pieces = [((0, 0), (0, 1)), ((1, 2), (1, 2)), ((0, 1), (0, 0))]
    out = cancel_pieces('closed', pieces)
    assert ((1, 2), (1, 2)) not in out


def test_cancel_pieces_arc_end_degeneration_raises():
    with pytest.raises(InvalidCoordinates):
        cancel_pieces('arc', [((2, 1), (2, 1))])
