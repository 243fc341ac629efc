"""Enumeration of small curve and arc classes on a triangulated surface.

Coordinate vectors are enumerated by a depth-first search over the edges
with triangle-by-triangle admissibility pruning, then filtered down to
connected classes.  Weight caps keep the searches at desk scale.
"""

from .coords import NormalCoords, components
from .errors import InvalidCoordinates, Timeout, UnsupportedSurface
from .moves import canonicalize_arc, is_peripheral_curve


def admissible_vectors(surface, cap, end_cap=0, total_cap=None):
    """All nonzero admissible vectors with per-edge weight at most cap.

    Interior edges carry weights 0..cap; boundary edges carry endpoint
    counts 0..end_cap.  total_cap, when given, bounds the sum of all
    weights and endpoint counts.
    """
    ne = surface.num_edges
    on_boundary = [e in surface.boundary for e in range(ne)]
    complete_at = {}
    for t, tr in enumerate(surface.tri):
        complete_at.setdefault(max(tr), []).append(t)
    w = [0] * ne
    ends = [0] * ne
    out = []

    def admissible_triangle(t):
        a, b, c = (w[e] + ends[e] for e in surface.tri[t])
        if (a + b + c) % 2:
            return False
        return a <= b + c and b <= a + c and c <= a + b

    def walk(e, used):
        if e == ne:
            vec = NormalCoords(tuple(w), tuple(ends))
            if not vec.is_zero():
                out.append(vec)
            return
        if on_boundary[e]:
            choices = [(0, k) for k in range(end_cap + 1)]
        else:
            choices = [(k, 0) for k in range(cap + 1)]
        for we, ee in choices:
            if total_cap is not None and used + we + ee > total_cap:
                break
            w[e], ends[e] = we, ee
            if all(admissible_triangle(t) for t in complete_at.get(e, ())):
                walk(e + 1, used + we + ee)
        w[e], ends[e] = 0, 0

    walk(0, 0)
    return out


def _connected(surface, coords, kind):
    comps = components(surface, coords)
    if len(comps) != 1 or comps[0][2] != 1:
        return False
    return comps[0][1] == kind


def curve_classes(surface, cap, total_cap=None, budget=10 ** 6):
    """Connected essential non-peripheral curve classes up to the caps."""
    out = []
    for vec in admissible_vectors(surface, cap, total_cap=total_cap):
        if not _connected(surface, coords=vec, kind='closed'):
            continue
        if is_peripheral_curve(surface, vec, budget):
            continue
        out.append(vec)
    return out


def arc_classes(surface, cap, end_cap=2, total_cap=None, sample=None):
    """Connected single-arc classes up to the caps, one vector per class.

    Each class is reported by its canonical slide representative.  sample,
    when given, is an upper bound on the number of vectors inspected.
    """
    seen = set()
    out = []
    vectors = admissible_vectors(surface, cap, end_cap=end_cap,
                                 total_cap=total_cap)
    if sample is not None:
        vectors = vectors[:sample]
    for vec in vectors:
        if vec.num_endpoints() != 2:
            continue
        if not _connected(surface, coords=vec, kind='arc'):
            continue
        try:
            canonical = canonicalize_arc(surface, vec)
        except (Timeout, InvalidCoordinates):
            # trivial arcs degenerate under slides; skip them
            continue
        if canonical not in seen:
            seen.add(canonical)
            out.append(canonical)
    return out
