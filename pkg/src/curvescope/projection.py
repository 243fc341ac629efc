"""Subsurface projections and the distances between them.

Cutting a surface along an essential curve leaves complementary pieces,
and each piece is a place curves and arcs can be projected to: the part
of a system crossing the piece is surgered along the boundary into a
small set of closed curves living inside it.  The annulus around the
curve itself is the other kind of target; there a projection is a list
of signed winding counts rather than a set of curves.

Distances between projected sets are measured inside the receiving
piece.  Four-holed-sphere and one-holed-torus pieces carry slope frames
(three reference curves that pin down Farey coordinates, where graph
distance has an exact continued-fraction answer); other receivers fall
back to breadth-first search through a census of small curves.
"""

from math import gcd, inf

from .catalog import curve_classes
from .coords import components, strand_from_pieces, trace
from .cutting import cut_along, cut_system
from .errors import (EmptyProjection, InvalidCoordinates, SearchExhausted,
                     Timeout, UnsupportedSurface)
from .moves import (disjoint, fills, intersection_number,
                    is_peripheral_curve, shorten_curve)
from .surface import modified_complexity


# ---------------------------------------------------------------------------
# distance intervals


class DistanceInterval:
    """Integer interval [lo, hi] bracketing a graph distance.

    An open upper end (no explicit path found) is recorded as
    ``hi = math.inf``."""

    __slots__ = ('lo', 'hi')

    def __init__(self, lo, hi):
        if lo < 0 or hi < lo:
            raise InvalidCoordinates("bad distance interval [%r, %r]"
                                     % (lo, hi))
        self.lo = int(lo)
        self.hi = hi if hi == inf else int(hi)

    @classmethod
    def exact(cls, d):
        return cls(d, d)

    def contains(self, d):
        return self.lo <= d <= self.hi

    @property
    def width(self):
        return self.hi - self.lo

    def hull(self, other):
        return DistanceInterval(min(self.lo, other.lo),
                                max(self.hi, other.hi))

    def __key(self):
        return (self.lo, self.hi)

    def __eq__(self, other):
        if not isinstance(other, DistanceInterval):
            return NotImplemented
        return self.__key() == other.__key()

    def __hash__(self):
        return hash(self.__key())

    def __repr__(self):
        return "DistanceInterval(%r, %r)" % (self.lo, self.hi)


# ---------------------------------------------------------------------------
# Farey distance between slopes


def normalize_slope(slope):
    """Reduce a (p, q) slope to lowest terms with q > 0, or (1, 0)."""
    p, q = slope
    if p == 0 and q == 0:
        raise InvalidCoordinates("slope 0/0 is not a slope")
    g = gcd(abs(p), abs(q))
    p, q = p // g, q // g
    if q < 0 or (q == 0 and p < 0):
        p, q = -p, -q
    return p, q


def _bezout(p, q):
    """Integers (a, b) with a*p + b*q = 1 for coprime p, q."""
    r0, r1 = p, q
    a0, b0, a1, b1 = 1, 0, 0, 1
    while r1:
        k = r0 // r1
        r0, r1 = r1, r0 - k * r1
        a0, a1 = a1, a0 - k * a1
        b0, b1 = b1, b0 - k * b1
    if r0 == -1:
        r0, a0, b0 = 1, -a0, -b0
    if r0 != 1:
        raise InvalidCoordinates("slope %r is not reduced" % ((p, q),))
    return a0, b0


def _distance_to_infinity(p, q, memo):
    if q < 0:
        p, q = -p, -q
    if q == 0:
        return 0
    if q == 1:
        return 1
    key = (p, q)
    if key in memo:
        return memo[key]
    n0 = p // q
    best = None
    for n in (n0, n0 + 1):
        d = _distance_to_infinity(-q, p - n * q, memo)
        if best is None or d < best:
            best = d
    memo[key] = 1 + best
    return memo[key]


def farey_distance(first, second):
    """Distance between two slopes in the Farey graph.

    Vertices are reduced slopes p/q (with 1/0 allowed); p/q and r/s are
    adjacent when |ps - qr| = 1.  A geodesic from one endpoint can be
    funneled through the two integer translates bracketing the other, so
    after moving the first slope to 1/0 the distance follows by
    recursing on the bracketing pivots, each step shrinking the
    denominator like a continued-fraction expansion.
    """
    p1, q1 = normalize_slope(first)
    p2, q2 = normalize_slope(second)
    if (p1, q1) == (p2, q2):
        return 0
    a, b = _bezout(p1, q1)
    p = a * p2 + b * q2
    q = -q1 * p2 + p1 * q2
    return _distance_to_infinity(p, q, {})


# ---------------------------------------------------------------------------
# subsurfaces


def _check_core(surface, coords, budget=10 ** 6):
    coords.check(surface)
    if not coords.is_curve_like():
        raise InvalidCoordinates("subsurface core must be a closed curve")
    if coords.is_zero():
        raise InvalidCoordinates("subsurface core is empty")
    comps = components(surface, coords)
    if len(comps) != 1 or comps[0][2] != 1:
        raise InvalidCoordinates("subsurface core must be connected and "
                                 "primitive")
    if is_peripheral_curve(surface, coords, budget):
        raise InvalidCoordinates("subsurface core is boundary-parallel")


class Subsurface:
    """A projection target: the whole surface, a complementary piece of
    an essential curve, or the annulus around one."""

    __slots__ = ('kind', 'surface', 'gamma', 'piece_type')

    def __init__(self, kind, surface, gamma, piece_type):
        self.kind = kind
        self.surface = surface
        self.gamma = gamma
        self.piece_type = piece_type

    @classmethod
    def whole(cls, surface):
        return cls('whole', surface, None, None)

    @classmethod
    def annulus(cls, surface, core, budget=10 ** 6):
        _check_core(surface, core, budget)
        return cls('annular', surface, core, None)

    @classmethod
    def complement_piece(cls, surface, core, piece_type=None,
                         budget=10 ** 6):
        """The complementary piece of the core with the given (genus,
        boundary) type, which must pick out exactly one piece."""
        _check_core(surface, core, budget)
        res = cut_system(surface, core)
        types = [p.topological_type() for p in res.pieces]
        if piece_type is None:
            if len(types) != 1:
                raise InvalidCoordinates(
                    "the core has %d complementary pieces; name one of %s"
                    % (len(types), sorted(types)))
            piece_type = types[0]
        piece_type = tuple(piece_type)
        if types.count(piece_type) != 1:
            raise UnsupportedSurface(
                "complement has %d pieces of type %r"
                % (types.count(piece_type), piece_type))
        return cls('piece', surface, core, piece_type)

    def __key(self):
        return (self.kind, self.surface, self.gamma, self.piece_type)

    def __eq__(self, other):
        if not isinstance(other, Subsurface):
            return NotImplemented
        return self.__key() == other.__key()

    def __hash__(self):
        return hash(self.__key())

    def __repr__(self):
        if self.kind == 'whole':
            return "Subsurface(whole)"
        if self.kind == 'annular':
            return "Subsurface(annulus around %r)" % (self.gamma,)
        return "Subsurface(%r piece of %r)" % (self.piece_type, self.gamma)

    def topological_type(self):
        """(genus, boundary-circle count) of the subsurface itself."""
        if self.kind == 'whole':
            return (self.surface.genus(),
                    self.surface.num_boundary_components())
        if self.kind == 'annular':
            return (0, 2)
        return self.piece_type

    def modified_complexity(self):
        g, b = self.topological_type()
        return modified_complexity(g, b)

    # -- membership --------------------------------------------------------

    def piece_index_in(self, res):
        """Index of this subsurface's piece inside a cut result along
        the core."""
        hits = [i for i, p in enumerate(res.pieces)
                if p.topological_type() == self.piece_type]
        if len(hits) != 1:
            raise UnsupportedSurface("piece type %r is not unique in the "
                                     "cut" % (self.piece_type,))
        return hits[0]

    def admits(self, coords, budget=10 ** 6):
        """True when every component of the system has an essential
        representative inside this subsurface."""
        coords.check(self.surface)
        if coords.is_zero():
            return True
        if self.kind == 'annular':
            return coords == self.gamma
        for vec, kind, _ in components(self.surface, coords):
            if kind == 'closed' and is_peripheral_curve(self.surface, vec,
                                                        budget):
                return False
        if self.kind == 'whole':
            return True
        if coords == self.gamma:
            return False
        try:
            res = cut_system(self.surface, self.gamma, passenger=coords)
        except InvalidCoordinates:
            return False
        target = self.piece_index_in(res)
        cut_set = set(res.cut_indices)
        for si in range(len(res.strands)):
            if si not in cut_set and res.piece_of(si) != target:
                return False
        return True


def _system_cuts(surface, coords, sub, budget):
    """True when some component of the system meets the subsurface in an
    essential way — crossing its boundary or living inside it."""
    for vec, _, _ in components(surface, coords):
        if sub.kind == 'whole':
            return True
        if not disjoint(surface, vec, sub.gamma):
            return True
        if sub.kind == 'piece' and sub.admits(vec, budget):
            return True
    return False


def overlaps(first, second, budget=10 ** 6):
    """True when each subsurface's bounding system essentially meets the
    other, so projections are defined in both directions.

    Isotopic subsurfaces and nested or disjoint ones do not overlap."""
    if first.surface != second.surface:
        raise InvalidCoordinates("the subsurfaces live on different "
                                 "surfaces")
    if first == second:
        return False
    if first.kind == 'whole' or second.kind == 'whole':
        return False
    surface = first.surface
    return (_system_cuts(surface, first.gamma, second, budget)
            and _system_cuts(surface, second.gamma, first, budget))


# ---------------------------------------------------------------------------
# slope frames


def _thin_formable(surface, coords, budget=10 ** 6):
    """True when greedy descent brings the curve to a two-triangle
    annulus position, the form every pairing count runs through."""
    try:
        shorten_curve(surface, coords, budget)
    except Timeout:
        return False
    return True


class SlopeFrame:
    """Slope coordinates on a one-holed torus or a four-holed sphere,
    pinned by three reference curves.

    Pairings count unit times |det| of the slopes: unit is 1 on the
    torus and 2 on the sphere.  The curves a and b sit at slopes (1, 0)
    and (0, 1); the pairings q = i(x, a)/unit and p = i(x, b)/unit
    determine a slope up to the mirror (p, q) <-> (-p, q), and the
    resolver c, declared to sit at a positive slope off both axes,
    breaks the tie."""

    __slots__ = ('surface', 'a', 'b', 'c', 'c_slope', 'unit', 'budget')

    def __init__(self, surface, a, b, c, unit, c_slope=(1, 1),
                 budget=10 ** 6):
        self.surface = surface
        self.a, self.b, self.c = a, b, c
        self.unit = unit
        self.c_slope = (int(c_slope[0]), int(c_slope[1]))
        self.budget = budget
        pc, qc = self.c_slope
        if pc <= 0 or qc <= 0 or gcd(pc, qc) != 1:
            raise InvalidCoordinates("resolver slope %r must be positive "
                                     "and reduced" % (self.c_slope,))
        for first, second, want in ((a, b, unit), (c, a, qc * unit),
                                    (c, b, pc * unit)):
            got = intersection_number(surface, first, second, budget)
            if got != want:
                raise InvalidCoordinates(
                    "frame curves pair to %d, want %d" % (got, want))

    def _pairing(self, coords, against):
        n = intersection_number(self.surface, against, coords, self.budget)
        if n % self.unit:
            raise InvalidCoordinates(
                "pairing %d is not a multiple of the unit %d"
                % (n, self.unit))
        return n // self.unit

    def slope_of(self, coords):
        """Slope of a curve carried by the frame's piece."""
        q = self._pairing(coords, self.a)
        p = self._pairing(coords, self.b)
        if p == 0 and q == 0:
            raise InvalidCoordinates("curve pairs to zero against the frame")
        if p == 0:
            return (0, 1)
        if q == 0:
            return (1, 0)
        pc, qc = self.c_slope
        r = self._pairing(coords, self.c)
        if r == abs(p * qc - q * pc):
            return (p, q)
        if r == p * qc + q * pc:
            return (-p, q)
        raise InvalidCoordinates(
            "resolver pairing %d fits neither mirror of slope (%d, %d)"
            % (r, p, q))

    def distance(self, first, second):
        return farey_distance(self.slope_of(first), self.slope_of(second))

    def diameter(self, curves):
        vecs = list(curves)
        slopes = [self.slope_of(v) for v in vecs]
        best = 0
        for i in range(len(slopes)):
            for j in range(i + 1, len(slopes)):
                best = max(best, farey_distance(slopes[i], slopes[j]))
        return best

    @classmethod
    def search(cls, surface, sub=None, cap=3, verify=10, budget=10 ** 6):
        """Find a frame among small curves carried by the subsurface.

        Frame material is restricted to curves with a reachable thin
        position, so every later pairing against the frame can be
        counted.  The first minimally-pairing pair in census order
        becomes (a, b), the first curve pairing off both axes becomes
        the resolver, and the determinant law i = unit * |det| is
        checked across a sample before the frame is returned."""
        if sub is None:
            sub = Subsurface.whole(surface)
        if sub.kind == 'piece':
            gb = sub.piece_type
        else:
            gb = (surface.genus(), surface.num_boundary_components())
        if gb == (1, 1):
            unit = 1
        elif gb == (0, 4):
            unit = 2
        else:
            raise UnsupportedSurface("no slope frame on a %r piece"
                                     % (gb,))
        pool = [v for v in curve_classes(surface, cap, budget=budget)
                if sub.admits(v, budget) and _thin_formable(surface, v,
                                                            budget)]
        pool.sort(key=lambda v: (v.weight(), tuple(v.w)))
        pair = None
        for i in range(len(pool)):
            for j in range(i + 1, len(pool)):
                if intersection_number(surface, pool[i], pool[j],
                                       budget) == unit:
                    pair = (pool[i], pool[j])
                    break
            if pair:
                break
        if pair is None:
            raise SearchExhausted("no minimally-pairing pair among %d "
                                  "carried curves" % len(pool))
        a, b = pair
        resolver = None
        for v in pool:
            if v in (a, b):
                continue
            qc, rem_q = divmod(intersection_number(surface, v, a, budget),
                               unit)
            pc, rem_p = divmod(intersection_number(surface, v, b, budget),
                               unit)
            if rem_q or rem_p or qc == 0 or pc == 0 or gcd(pc, qc) != 1:
                continue
            resolver = (v, (pc, qc))
            break
        if resolver is None:
            raise SearchExhausted("no resolver curve for the frame pair")
        frame = cls(surface, a, b, resolver[0], unit, resolver[1], budget)
        sample = pool[:verify]
        slopes = [frame.slope_of(v) for v in sample]
        for i in range(len(sample)):
            for j in range(i + 1, len(sample)):
                (p1, q1), (p2, q2) = slopes[i], slopes[j]
                want = unit * abs(p1 * q2 - p2 * q1)
                got = intersection_number(surface, sample[i], sample[j],
                                          budget)
                if got != want:
                    raise SearchExhausted(
                        "frame fails the determinant law on census curves "
                        "%d, %d" % (i, j))
        return frame


# ---------------------------------------------------------------------------
# surgery into a piece


def _reversed_pieces(pieces):
    return [(b, a) for (a, b) in reversed(pieces)]


def _fuse_closed(surface, pieces):
    """Merge same-face junctions of a spliced cyclic piece path.

    A junction whose exit face equals the next entry face is a turn
    inside one triangle, not a crossing; the two pieces fuse.  Returns
    the fused list, or None when everything fuses away."""
    pieces = list(pieces)
    changed = True
    while changed and len(pieces) > 1:
        changed = False
        m = len(pieces)
        for i in range(m):
            j = (i + 1) % m
            if pieces[i][1] == pieces[j][0]:
                merged = (pieces[i][0], pieces[j][1])
                if j:
                    pieces = pieces[:i] + [merged] + pieces[j + 1:]
                else:
                    pieces = [merged] + pieces[1:i]
                changed = True
                break
    if len(pieces) == 1 and pieces[0][0] == pieces[0][1]:
        return None
    for i in range(len(pieces)):
        exit_face = tuple(pieces[i][1])
        entry = tuple(pieces[(i + 1) % len(pieces)][0])
        if tuple(surface.glue.get(exit_face, ())) != entry:
            raise InvalidCoordinates("spliced path does not close up")
    return pieces


class _AnchorKit:
    """Closure paths for surgered chains: wraps around the annulus
    gates and hugs around boundary circles."""

    def __init__(self, surface, form=None):
        self.surface = surface
        self.gate_wraps = {}
        if form is not None:
            t1, t2 = form.t1, form.t2

            def slot(t, e):
                return next(s for s in range(3)
                            if surface.tri[t][s] == e)

            se1, sf1, sg1 = (slot(t1, form.e), slot(t1, form.f),
                             slot(t1, form.g1))
            se2, sf2, sg2 = (slot(t2, form.e), slot(t2, form.f),
                             slot(t2, form.g2))
            self.gate_wraps[form.g1] = [
                [((t1, sg1), (t1, se1)), ((t2, se2), (t2, sf2)),
                 ((t1, sf1), (t1, sg1))],
                [((t1, sg1), (t1, sf1)), ((t2, sf2), (t2, se2)),
                 ((t1, se1), (t1, sg1))],
            ]
            self.gate_wraps[form.g2] = [
                [((t2, sg2), (t2, se2)), ((t1, se1), (t1, sf1)),
                 ((t2, sf2), (t2, sg2))],
                [((t2, sg2), (t2, sf2)), ((t1, sf1), (t1, se1)),
                 ((t2, se2), (t2, sg2))],
            ]
        self._hugs = {}

    def wraps_for(self, face):
        t, s = face
        e = self.surface.tri[t][s]
        if e in self.gate_wraps:
            return self.gate_wraps[e]
        if self.surface.is_boundary_edge(e):
            if e not in self._hugs:
                vid = self.surface.edge_vertices(e)[0]
                fan = self.surface.vertex_fan(vid)
                hug = [((t2, (c + 1) % 3), (t2, (c + 2) % 3))
                       for (t2, c) in fan]
                self._hugs[e] = [hug]
            return self._hugs[e]
        raise InvalidCoordinates("chain ends on interior edge %d away "
                                 "from the gates" % e)


def _chain_candidates(kit, kind, pieces):
    """Spliced closed piece paths for one chain of a system inside the
    target piece: the chain closed onto the short side of its anchor,
    plus the chain run along each full closure of its anchor circles."""
    if kind == 'cyclic':
        return [list(pieces)]
    out = []
    surface = kit.surface
    start_face = pieces[0][0]
    end_face = pieces[-1][1]
    start_edge = surface.tri[start_face[0]][start_face[1]]
    end_edge = surface.tri[end_face[0]][end_face[1]]
    if start_edge == end_edge:
        out.append(list(pieces))
        for wrap in kit.wraps_for(end_face):
            out.append(list(pieces) + wrap)
    else:
        back = _reversed_pieces(pieces)
        for wrap_end in kit.wraps_for(end_face):
            for wrap_start in kit.wraps_for(start_face):
                out.append(list(pieces) + wrap_end + back + wrap_start)
    return out


def _segments(flags, pieces):
    """Split a linear piece list into maximal runs by the inside flag."""
    segs = []
    for flag, piece in zip(flags, pieces):
        if segs and segs[-1][0] == flag:
            segs[-1][1].append(piece)
        else:
            segs.append((flag, [piece]))
    return segs


def _annulus_chains(surface, strand, inside, gate_edges):
    """Chains of a strand outside the annulus, dips folded in.

    Returns (kind, pieces) entries: runs between consecutive essential
    passages, joined across inessential dips; a strand that never
    crosses essentially comes back as one cyclic chain (or linear, for
    an arc)."""
    pieces = [(tuple(a), tuple(b)) for a, b in strand.pieces]
    flags = [p[0][0] in inside for p in pieces]
    if all(flags):
        return []
    closed = strand.kind == 'closed'
    if closed and any(flags):
        n = len(pieces)
        start = next(i for i in range(n)
                     if not flags[i] and flags[i - 1])
        pieces = pieces[start:] + pieces[:start]
        flags = flags[start:] + flags[:start]
    segs = _segments(flags, pieces)

    def is_through(run):
        entry = run[0][0]
        exit_ = run[-1][1]
        e_in = surface.tri[entry[0]][entry[1]]
        e_out = surface.tri[exit_[0]][exit_[1]]
        if e_in not in gate_edges or e_out not in gate_edges:
            raise InvalidCoordinates("annulus visit through a non-gate "
                                     "edge")
        return e_in != e_out

    if not closed:
        chains = []
        current = []
        for flag, run in segs:
            if not flag:
                current.extend(run)
            elif is_through(run):
                chains.append(('linear', current))
                current = []
        chains.append(('linear', current))
        return [c for c in chains if c[1]]

    if not any(flags):
        return [('cyclic', pieces)]
    # segments now alternate outside, inside, ..., ending inside
    runs = [run for flag, run in segs if not flag]
    visits = [run for flag, run in segs if flag]
    through = [is_through(v) for v in visits]
    if not any(through):
        merged = []
        for run in runs:
            merged.extend(run)
        return [('cyclic', merged)]
    k = len(runs)
    first = next(i for i in range(k) if through[i])
    chains = []
    current = []
    for step in range(1, k + 1):
        i = (first + step) % k
        current.extend(runs[i])
        if through[i]:
            chains.append(('linear', current))
            current = []
    return chains


def _finish_candidate(surface, pieces):
    fused = _fuse_closed(surface, pieces)
    if fused is None:
        return None
    strand = strand_from_pieces(surface, 'closed', fused)
    if strand is None:
        return None
    return strand.vector(surface)


def _surviving(surface, sub, raw, budget):
    """Filter raw surgery outputs down to essential curves of the
    piece, keeping one primitive vector per class."""
    out = set()
    for cand in raw:
        if cand is None or cand.is_zero():
            continue
        try:
            cand.check(surface)
        except InvalidCoordinates:
            continue
        comps = components(surface, cand)
        if len(comps) != 1 or comps[0][1] != 'closed':
            continue
        root = comps[0][0]
        if not sub.admits(root, budget):
            continue
        out.add(root)
    return out


def subsurface_projection(surface, sub, coords, budget=10 ** 6):
    """Project a system into a non-annular subsurface.

    Closed components of the system lying in the piece are emitted
    directly; each strand crossing the piece is closed up around the
    boundary circles its ends meet, emitting the essential boundary
    classes of a neighborhood of the strand and those circles.  The
    emitted set sits at diameter at most 2 in the piece's curve graph.
    An empty set means the system misses the piece."""
    coords.check(surface)
    if coords.is_zero():
        raise InvalidCoordinates("cannot project an empty system")
    if sub.kind == 'annular':
        raise UnsupportedSurface("the annular projection is winding "
                                 "data; use annular_windings")

    raw = []
    had_chains = False

    if sub.kind == 'piece' and not disjoint(surface, coords, sub.gamma):
        path, thin, form = shorten_curve(surface, sub.gamma, budget)
        inner = path.surface
        moved = path.push(coords)
        res = cut_along(inner, thin)
        target = sub.piece_index_in(res)
        inside = {form.t1, form.t2}
        gate_edges = {form.g1, form.g2}
        kit = _AnchorKit(inner, form)
        for strand in trace(inner, moved):
            for kind, pieces in _annulus_chains(inner, strand, inside,
                                                gate_edges):
                if res.triangle_piece(pieces[0][0][0]) != target:
                    continue
                had_chains = True
                for cand in _chain_candidates(kit, kind, pieces):
                    vec = _finish_candidate(inner, cand)
                    if vec is not None:
                        raw.append(path.pull(vec))
    else:
        if sub.kind == 'piece':
            if coords == sub.gamma:
                return frozenset()
            res = cut_system(surface, sub.gamma, passenger=coords)
            target = sub.piece_index_in(res)
            cut_set = set(res.cut_indices)
            strands = [res.strands[si] for si in range(len(res.strands))
                       if si not in cut_set
                       and res.piece_of(si) == target]
            strands = [(st.kind, [((t, s_in), (t, s_out))
                                  for t, s_in, _, s_out, _ in st.steps])
                       for st in strands]
        else:
            strands = [(st.kind, [(tuple(a), tuple(b))
                                  for a, b in st.pieces])
                       for st in trace(surface, coords)]
        kit = _AnchorKit(surface)
        for kind, pieces in strands:
            had_chains = True
            if kind == 'closed':
                raw.append(_finish_candidate(surface, list(pieces)))
                continue
            for cand in _chain_candidates(kit, 'linear', pieces):
                vec = _finish_candidate(surface, cand)
                if vec is not None:
                    raw.append(vec)

    out = _surviving(surface, sub, raw, budget)
    if had_chains and not out:
        raise EmptyProjection("surgery left no essential curve in the "
                              "piece")
    return frozenset(out)


# ---------------------------------------------------------------------------
# annular projections


def annular_windings(surface, core, coords, budget=10 ** 6):
    """Signed wrap counts of a system through the annulus around a
    curve, one per essential passage, sorted.

    Unrolling the annulus, a passage crossing the interior edges L
    times lands L half-periods away from where it entered, signed by
    which interior edge it crosses first; the count recorded is the
    whole-period part.  Counts are relative — only their differences
    mean anything — but twisting the system n times around the core
    shifts every count by exactly n, and two passages of a single
    system differ by at most one."""
    _check_core(surface, core, budget)
    coords.check(surface)
    if coords == core:
        return ()
    path, thin, form = shorten_curve(surface, core, budget)
    inner = path.surface
    moved = path.push(coords)
    inside = {form.t1, form.t2}
    out = []
    for strand in trace(inner, moved):
        pieces = [(tuple(a), tuple(b)) for a, b in strand.pieces]
        flags = [p[0][0] in inside for p in pieces]
        if all(flags) or not any(flags):
            continue
        if strand.kind == 'closed':
            n = len(pieces)
            start = next(i for i in range(n)
                         if not flags[i] and flags[i - 1])
            pieces = pieces[start:] + pieces[:start]
            flags = flags[start:] + flags[:start]
        for flag, run in _segments(flags, pieces):
            if not flag:
                continue
            entry = run[0][0]
            exit_ = run[-1][1]
            e_in = inner.tri[entry[0]][entry[1]]
            e_out = inner.tri[exit_[0]][exit_[1]]
            if e_in == e_out:
                continue
            seq = [inner.tri[a[0]][a[1]] for _, a in run[:-1]]
            if len(seq) % 2 == 0:
                raise InvalidCoordinates("through passage with an even "
                                         "crossing count")
            core_edges = {form.e, form.f}
            for i in range(len(seq)):
                if seq[i] not in core_edges:
                    raise InvalidCoordinates("annulus passage crossing a "
                                             "non-core edge")
                if i and seq[i] == seq[i - 1]:
                    raise InvalidCoordinates("annulus passage doubling "
                                             "back on a core edge")
            if e_in == form.g2:
                seq.reverse()
            disp = len(seq) if seq[0] == form.e else -len(seq)
            out.append((disp - 1) // 2)
    return tuple(sorted(out))


def annular_diameter(surface, core, coords, budget=10 ** 6):
    """Spread of one system's winding counts around the core: how far
    apart its own passages sit in the annulus graph."""
    ms = annular_windings(surface, core, coords, budget)
    if len(ms) <= 1:
        return 0
    return ms[-1] - ms[0]


def annular_distance_interval(surface, core, first, second,
                              budget=10 ** 6):
    """Bracket the annular-graph distance between two systems through
    their winding counts: twisting n times moves the counts by n, and
    the graph distance is the spread plus a bounded correction."""
    if first == second:
        return DistanceInterval(0, 0)
    ws1 = annular_windings(surface, core, first, budget)
    ws2 = annular_windings(surface, core, second, budget)
    if not ws1 or not ws2:
        raise EmptyProjection("a system misses the annulus core")
    t = max(abs(a - b) for a in ws1 for b in ws2)
    return DistanceInterval(max(1, t), t + 2)


# ---------------------------------------------------------------------------
# curve-graph distance by census search


def _check_vertex(surface, coords, budget):
    coords.check(surface)
    if not coords.is_curve_like() or coords.is_zero():
        raise InvalidCoordinates("curve-graph vertices are closed curves")
    comps = components(surface, coords)
    if len(comps) != 1 or comps[0][2] != 1:
        raise InvalidCoordinates("curve-graph vertices are connected")
    if is_peripheral_curve(surface, coords, budget):
        raise InvalidCoordinates("boundary-parallel curves are not "
                                 "curve-graph vertices")


_FRAME_CACHE = {}


def curve_distance_interval(surface, first, second, cap=4, census=None,
                            budget=10 ** 6, max_depth=8):
    """Bracket the curve-graph distance between two essential curves.

    On a one-holed torus or four-holed sphere the answer is the exact
    Farey distance of their slopes.  Elsewhere, crossing curves are at
    distance at least 2, rising to 3 when the filling certificate shows
    no essential curve misses both; breadth-first search through a
    census of small curves supplies an explicit path for the upper
    bound, and with no path found the upper end stays open at
    infinity."""
    _check_vertex(surface, first, budget)
    _check_vertex(surface, second, budget)
    if first == second:
        return DistanceInterval(0, 0)
    if disjoint(surface, first, second):
        return DistanceInterval(1, 1)
    gb = (surface.genus(), surface.num_boundary_components())
    if gb in ((1, 1), (0, 4)):
        if surface not in _FRAME_CACHE:
            _FRAME_CACHE[surface] = SlopeFrame.search(surface,
                                                      budget=budget)
        frame = _FRAME_CACHE[surface]
        return DistanceInterval.exact(frame.distance(first, second))
    lo = 3 if fills(surface, first, second, budget) else 2
    if census is None:
        census = curve_classes(surface, cap, budget=budget)
    census = sorted(census, key=lambda v: (v.weight(), tuple(v.w)))
    frontier = [v for v in census if disjoint(surface, v, first)]
    seen = set(frontier)
    depth = 1
    hi = inf
    while frontier and depth < max_depth:
        if any(disjoint(surface, v, second) for v in frontier):
            hi = depth + 1
            break
        nxt = []
        for v in census:
            if v in seen:
                continue
            if any(disjoint(surface, v, w) for w in frontier):
                nxt.append(v)
                seen.add(v)
        frontier = nxt
        depth += 1
    return DistanceInterval(lo, hi)
