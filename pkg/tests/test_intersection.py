"""Intersection numbers against the slope determinant model.

On the one-holed torus, isotopy classes of essential curves carried by
small weights biject with slopes p/q, and geometric intersection numbers
equal |p1*q2 - p2*q1|.  On the four-holed sphere the same holds with
every count doubled.  Both facts give an independent arithmetic oracle
for the flip-and-count engine over a complete small census.
"""

from math import gcd

import pytest

from curvescope import (NormalCoords, build_surface, dehn_twist, disjoint,
                        intersection_number)
from curvescope.catalog import curve_classes
from curvescope.moves import peripheral_vector

TORUS_A = (1, 0, 0, 1, 0)   # slope 1/0
TORUS_B = (0, 1, 0, 1, 1)   # slope 0/1
TORUS_C = (1, 1, 0, 0, 1)   # slope 1/1, the twist of B along A


def slope(surface, coords, base_a, base_b, base_c, unit=1):
    """(p, q) with q >= 0 from counts against three reference curves.

    q comes from the 1/0 curve, p from the 0/1 curve; the 1/1 curve
    breaks the sign ambiguity, since |p - q| < p + q for p, q > 0.
    """
    q = intersection_number(surface, coords, base_a) // unit
    p = intersection_number(surface, coords, base_b) // unit
    if p == 0:
        return (0, 1)
    if q == 0:
        return (1, 0)
    r = intersection_number(surface, coords, base_c) // unit
    if r == abs(p - q):
        return (p, q)
    assert r == p + q, (p, q, r)
    return (-p, q)


def det(s1, s2):
    return abs(s1[0] * s2[1] - s2[0] * s1[1])


@pytest.fixture(scope='module')
def torus():
    surf = build_surface(1, 1)
    classes = curve_classes(surf, cap=4)
    a = NormalCoords(list(TORUS_A))
    b = NormalCoords(list(TORUS_B))
    c = NormalCoords(list(TORUS_C))
    return surf, classes, a, b, c


def test_torus_census_size(torus):
    surf, classes, a, b, c = torus
    assert len(classes) == 18


def test_torus_base_curves_have_unit_pairings(torus):
    surf, classes, a, b, c = torus
    assert intersection_number(surf, a, b) == 1
    assert intersection_number(surf, b, c) == 1
    assert intersection_number(surf, a, c) == 1
    assert dehn_twist(surf, b, a, 1) == c


def test_torus_slopes_are_primitive_and_injective(torus):
    surf, classes, a, b, c = torus
    slopes = [slope(surf, x, a, b, c) for x in classes]
    assert len(set(slopes)) == len(classes)
    for p, q in slopes:
        assert gcd(p, q) == 1
    assert slope(surf, a, a, b, c) == (1, 0)
    assert slope(surf, b, a, b, c) == (0, 1)
    assert slope(surf, c, a, b, c) == (1, 1)


def test_torus_intersections_match_determinants(torus):
    surf, classes, a, b, c = torus
    slopes = [slope(surf, x, a, b, c) for x in classes]
    pairs = 0
    for i in range(len(classes)):
        for j in range(i, len(classes)):
            got = intersection_number(surf, classes[i], classes[j])
            assert got == det(slopes[i], slopes[j]), (slopes[i], slopes[j])
            pairs += 1
    assert pairs == 18 * 19 // 2


def test_four_holed_sphere_doubled_determinants():
    surf = build_surface(0, 4)
    classes = curve_classes(surf, cap=3)
    assert len(classes) == 4
    # pick a pair meeting in two points as the 1/0 and 0/1 axes, then a
    # resolving curve meeting both in two points as 1/1.
    a = b = c = None
    for i in range(len(classes)):
        for j in range(len(classes)):
            if i != j and intersection_number(
                    surf, classes[i], classes[j]) == 2:
                a, b = classes[i], classes[j]
                break
        if a is not None:
            break
    assert a is not None
    for x in classes:
        if x in (a, b):
            continue
        if (intersection_number(surf, x, a) == 2
                and intersection_number(surf, x, b) == 2):
            c = x
            break
    assert c is not None
    slopes = [slope(surf, x, a, b, c, unit=2) for x in classes]
    assert len(set(slopes)) == 4
    for i in range(4):
        for j in range(i, 4):
            got = intersection_number(surf, classes[i], classes[j])
            assert got == 2 * det(slopes[i], slopes[j])
    # the full twist along the 1/0 curve acts on slopes by a double shear
    for x, s in zip(classes, slopes):
        turned = dehn_twist(surf, x, a, 1)
        expect = (1, 0) if s[1] == 0 else (s[0] + 2 * s[1], s[1])
        assert slope(surf, turned, a, b, c, unit=2) == expect


def test_self_intersection_and_symmetry(torus):
    surf, classes, a, b, c = torus
    for x in classes[:6]:
        assert intersection_number(surf, x, x) == 0
        assert disjoint(surf, x, x)
    for x in classes[:4]:
        for y in classes[:4]:
            assert (intersection_number(surf, x, y)
                    == intersection_number(surf, y, x))


def test_multiplicity_scales_counts(torus):
    surf, classes, a, b, c = torus
    assert intersection_number(surf, 3 * a, b) == 3
    assert intersection_number(surf, a, 3 * b) == 3
    assert intersection_number(surf, 2 * a, 2 * b) == 4


def test_peripheral_curves_meet_nothing(torus):
    surf, classes, a, b, c = torus
    per = peripheral_vector(surf, 0)
    for x in classes[:6]:
        assert intersection_number(surf, per, x) == 0
    assert intersection_number(surf, per, per) == 0


def test_arc_curve_counts_follow_determinants(torus):
    surf, classes, a, b, c = torus
    from curvescope.catalog import arc_classes
    arcs = arc_classes(surf, cap=3)
    assert len(arcs) == 12
    curve_slopes = [slope(surf, x, a, b, c) for x in classes]
    for arc in arcs:
        s = slope(surf, arc, a, b, c)
        for x, t in zip(classes, curve_slopes):
            assert intersection_number(surf, x, arc) == det(s, t), (s, t)
