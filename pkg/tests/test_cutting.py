"""Cut engine: golden piece types, cross-validation, passengers."""

import pytest

from curvescope import (InvalidCoordinates, NormalCoords, build_surface,
                        disjoint, is_essential_arc)
from curvescope.catalog import arc_classes, curve_classes
from curvescope.cutting import (cut_along, cut_system, complement_types,
                                positioned_strands, split_indices)
from curvescope.moves import is_peripheral_curve, peripheral_vector

A = NormalCoords([1, 0, 0, 1, 0])


@pytest.fixture(scope='module')
def torus():
    return build_surface(1, 1)


def test_nonseparating_curve_leaves_three_holed_sphere(torus):
    assert complement_types(torus, A) == [(0, 3)]


def test_census_curves_cut_types_match_peripherality(torus):
    for c in curve_classes(torus, cap=4):
        types = complement_types(torus, c)
        if is_peripheral_curve(torus, c):
            assert types == [(0, 2), (1, 1)]
        else:
            assert types == [(0, 3)]


def test_essential_arcs_leave_annulus(torus):
    for arc in arc_classes(torus, cap=3):
        assert complement_types(torus, arc) == [(0, 2)]


def test_boundary_parallel_arc_cuts_off_disk(torus):
    trivial = NormalCoords([2, 2, 0, 2, 2], ends=[0, 0, 2, 0, 0])
    assert complement_types(torus, trivial) == [(0, 1), (1, 1)]


def test_disk_pieces_agree_with_arc_essentiality(torus):
    trivial = NormalCoords([2, 2, 0, 2, 2], ends=[0, 0, 2, 0, 0])
    for arc in arc_classes(torus, cap=3) + [trivial]:
        no_disk = all(p.topological_type() != (0, 1)
                      for p in cut_along(torus, arc).pieces)
        assert no_disk == is_essential_arc(torus, arc)


def test_peripheral_curve_cuts_off_annulus(torus):
    per = peripheral_vector(torus, 0)
    res = cut_along(torus, per)
    assert res.types() == [(0, 2), (1, 1)]
    annulus = next(p for p in res.pieces if p.topological_type() == (0, 2))
    assert annulus.touches_component(0)
    assert annulus.touches_strand(0)
    other = next(p for p in res.pieces if p.topological_type() == (1, 1))
    assert not other.touches_component(0)


def test_empty_cut_returns_whole_surface(torus):
    assert complement_types(torus, NormalCoords.zero(torus)) == [(1, 1)]
    closed = build_surface(2, 0)
    assert complement_types(closed, NormalCoords.zero(closed)) == [(2, 0)]


def test_parallel_copies_cut_off_annuli(torus):
    assert complement_types(torus, 3 * A) == [(0, 2), (0, 2), (0, 3)]


def test_closed_genus_two_nonseparating():
    surf = build_surface(2, 0)
    c = NormalCoords([0, 0, 0, 1, 0, 0, 0, 0, 1])
    assert complement_types(surf, c) == [(1, 2)]


def test_closed_genus_two_separating():
    surf = build_surface(2, 0)
    for w in [(0, 0, 2, 2, 0, 0, 0, 2, 2), (2, 2, 0, 0, 2, 2, 0, 0, 0)]:
        assert complement_types(surf, NormalCoords(list(w))) == [
            (1, 1), (1, 1)]


def test_separating_needs_even_crossings():
    """A separating curve pairs evenly with every edge loop, so every
    census curve with an odd entry must be nonseparating."""
    surf = build_surface(2, 0)
    for c in curve_classes(surf, cap=2)[:20]:
        if any(x % 2 for x in c.w):
            assert complement_types(surf, c) == [(1, 2)]


def test_two_holed_torus_arc_shapes():
    surf = build_surface(1, 2)
    shapes = set()
    for arc in arc_classes(surf, cap=2, sample=400):
        shapes.add(tuple(complement_types(surf, arc)))
    assert shapes == {((1, 1),), ((0, 3),), ((0, 2), (1, 1))}


def test_euler_numbers_add_up(torus):
    surf = build_surface(1, 2)
    for arc in arc_classes(surf, cap=2, sample=100)[:10]:
        res = cut_along(surf, arc)
        assert sum(p.euler for p in res.pieces) == (
            surf.euler_characteristic() + 1)
    res = cut_along(torus, A)
    assert sum(p.euler for p in res.pieces) == torus.euler_characteristic()


def test_passenger_rides_in_one_piece(torus):
    arcs = arc_classes(torus, cap=3)
    rider = next(x for x in arcs if disjoint(torus, x, A))
    res = cut_system(torus, A, rider)
    assert res.types() == [(0, 3)]
    passenger_idx = [i for i in range(len(res.strands))
                     if i not in res.cut_indices]
    assert len(passenger_idx) == 1
    assert res.piece_of(passenger_idx[0]) == 0


def test_passenger_must_be_disjoint(torus):
    b = NormalCoords([0, 1, 0, 1, 1])
    with pytest.raises(InvalidCoordinates):
        cut_system(torus, A, b)


def test_split_indices_finds_the_partition(torus):
    per = peripheral_vector(torus, 0)
    both = A + per
    strands = positioned_strands(torus, both)
    picks = split_indices(torus, strands, A)
    total = NormalCoords.zero(torus)
    for i in picks:
        total = total + strands[i].vector(torus)
    assert total == A


def test_positioned_strands_match_plain_trace(torus):
    from curvescope.coords import trace
    for vec in (A, 3 * A, peripheral_vector(torus, 0)):
        pos = positioned_strands(torus, vec)
        plain = trace(torus, vec)
        assert len(pos) == len(plain)
        for ps, st in zip(pos, plain):
            assert ps.kind == st.kind
            assert ps.vector(torus) == st.vector(torus)


def test_cut_rejects_bad_strand_index(torus):
    with pytest.raises(InvalidCoordinates):
        cut_along(torus, A, cut_indices=[5])
