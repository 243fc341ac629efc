"""Flips, shortening, intersection numbers, twists and endpoint slides.

Weight transport under a flip only needs the edge ids of the square, which
flips preserve, so a vector is carried backwards along a flip path by
replaying the recorded squares in reverse with the same rule.

A connected closed curve is shortened by weight-decreasing flips (with a
breadth-first search across equal-weight plateaus) until it sits as k
parallel cores of an embedded annulus made of two triangles: exactly two
support edges e, f, each crossed k times, whose four slots fill triangles
t1, t2; the free sides g1, g2 are the annulus boundary.  Intersection
numbers are then counted from through-passages of the other system across
that annulus, which is exact because a bigon between two taut systems
would have to contain a vertex and every vertex lies on the boundary.
"""

import heapq

from .errors import (InvalidCoordinates, NonFlippableEdge, Timeout,
                     UnsupportedSurface)
from .coords import (NormalCoords, Strand, trace, components, cancel_pieces,
                     vector_of_strands)
from .surface import FlipInfo


# ---------------------------------------------------------------------------
# transport


def flipped_total(coords, info):
    """Crossing count of info.edge after flipping its square."""
    ta, tb, tc, td = (coords.total(e) for e in info.sides)
    return max(ta + tc, tb + td) - coords.total(info.edge)


def transport(coords, info):
    """Carry a vector through the flip described by info."""
    new = flipped_total(coords, info)
    if new < 0:
        raise InvalidCoordinates("flip transport went negative")
    w = list(coords.w)
    w[info.edge] = new
    return NormalCoords(w, coords.ends)


class FlipPath:
    """A base surface together with a sequence of flips applied to it."""

    __slots__ = ('base', 'surface', 'steps')

    def __init__(self, base, surface=None, steps=()):
        self.base = base
        self.surface = base if surface is None else surface
        self.steps = tuple(steps)

    def flip(self, e):
        surf, info = self.surface.flipped(e)
        return FlipPath(self.base, surf, self.steps + (info,))

    def push(self, coords):
        """Vector on the base surface -> vector on the current surface."""
        for info in self.steps:
            coords = transport(coords, info)
        return coords

    def pull(self, coords):
        """Vector on the current surface -> vector on the base surface.

        The transport rule is symmetric in the two opposite-side pair
        sums, so the same formula inverts each step.
        """
        for info in reversed(self.steps):
            coords = transport(coords, info)
        return coords

    def __len__(self):
        return len(self.steps)


# ---------------------------------------------------------------------------
# shortening closed curves


class AnnulusForm:
    """A curve sitting as k parallel cores of a two-triangle annulus."""

    __slots__ = ('t1', 't2', 'e', 'f', 'g1', 'g2', 'k', 'peripheral')

    def __init__(self, t1, t2, e, f, g1, g2, k, peripheral):
        self.t1, self.t2 = t1, t2
        self.e, self.f = e, f
        self.g1, self.g2 = g1, g2
        self.k = k
        self.peripheral = peripheral

    def __repr__(self):
        return ("AnnulusForm(t1=%d, t2=%d, e=%d, f=%d, g1=%d, g2=%d, k=%d%s)"
                % (self.t1, self.t2, self.e, self.f, self.g1, self.g2,
                   self.k, ", peripheral" if self.peripheral else ""))

    def g_slots(self, surface):
        g1_slot = g2_slot = None
        for s in range(3):
            if surface.tri[self.t1][s] == self.g1:
                g1_slot = (self.t1, s)
            if surface.tri[self.t2][s] == self.g2:
                g2_slot = (self.t2, s)
        return g1_slot, g2_slot


class PeripheralForm:
    """A curve recognized as k parallel copies of a boundary circle."""

    __slots__ = ('component', 'k')
    peripheral = True

    def __init__(self, component, k):
        self.component = component
        self.k = k

    def __repr__(self):
        return "PeripheralForm(component=%d, k=%d)" % (self.component, self.k)


def peripheral_vector(surface, component):
    """Taut vector of the curve parallel to one boundary circle: it
    crosses each edge once per germ the edge has at that vertex."""
    for e, comp in surface.boundary.items():
        if comp == component:
            vid = surface.edge_vertices(e)[0]
            break
    else:
        raise InvalidCoordinates("no boundary component %d" % component)
    w = [0] * surface.num_edges
    fan = surface.vertex_fan(vid)
    for i in range(len(fan) - 1):
        t, c = fan[i]
        w[surface.tri[t][(c + 2) % 3]] += 1
    return NormalCoords(w)


def detect_peripheral(surface, coords):
    if not coords.is_curve_like() or coords.is_zero():
        return None
    for comp in surface.boundary_components():
        base = peripheral_vector(surface, comp)
        e0 = next(e for e in range(surface.num_edges) if base.w[e])
        if coords.w[e0] and coords.w[e0] % base.w[e0] == 0:
            k = coords.w[e0] // base.w[e0]
            if k * base == coords:
                return PeripheralForm(comp, k)
    return None


def detect_annulus(surface, coords):
    """Recognize the two-triangle annular core form, or return None.

    Expects a curve-like vector (no endpoints) whose support is exactly
    two interior edges with equal weight k filling two triangles.
    """
    support = [e for e in range(surface.num_edges) if coords.w[e] > 0]
    if any(coords.ends):
        return None
    if len(support) != 2:
        return None
    e, f = support
    if coords.w[e] != coords.w[f]:
        return None
    k = coords.w[e]
    tris = set(t for t, _ in surface.edge_slots[e])
    tris |= set(t for t, _ in surface.edge_slots[f])
    if len(tris) != 2:
        return None
    t1, t2 = sorted(tris)
    slots = {}
    for t in (t1, t2):
        held = [surface.tri[t][s] for s in range(3)]
        if held.count(e) != 1 or held.count(f) != 1:
            return None
        free = [s for s in range(3) if held[s] not in (e, f)]
        slots[t] = held[free[0]]
    g1, g2 = slots[t1], slots[t2]
    if g1 == g2:
        raise UnsupportedSurface("annulus closes up onto itself")
    peripheral = g1 in surface.boundary or g2 in surface.boundary
    return AnnulusForm(t1, t2, e, f, g1, g2, k, peripheral)


def flip_square(surface, e):
    """FlipInfo for edge e without building the flipped surface."""
    (t1, s1), (t2, s2) = surface.edge_slots[e]
    if t1 == t2:
        raise NonFlippableEdge("edge %d has both sides on one triangle" % e)
    ea = surface.tri[t1][(s1 + 2) % 3]
    eb = surface.tri[t2][(s2 + 1) % 3]
    ec = surface.tri[t2][(s2 + 2) % 3]
    ed = surface.tri[t1][(s1 + 1) % 3]
    return FlipInfo(e, (ea, eb, ec, ed))


def _flip_deltas(surface, coords):
    """(delta, edge) for every flippable edge, sorted."""
    out = []
    for e in surface.interior_edges():
        (ta, _), (tb, _) = surface.edge_slots[e]
        if ta == tb:
            continue
        info = flip_square(surface, e)
        out.append((flipped_total(coords, info) - coords.total(e), e))
    out.sort()
    return out


def shorten_curve(surface, coords, budget=10 ** 6, plateau_cap=4000):
    """Flip a connected closed curve into annular core form.

    Returns (FlipPath, coords-on-final-surface, AnnulusForm).  Raises
    Timeout when the budget runs out without reaching the form.
    """
    coords.check(surface)
    if not coords.is_curve_like():
        raise InvalidCoordinates("shorten_curve needs a closed system")
    path = FlipPath(surface)
    cur = coords
    spent = 0
    while True:
        form = detect_peripheral(path.surface, cur)
        if form is not None:
            return path, cur, form
        form = detect_annulus(path.surface, cur)
        if form is not None:
            return path, cur, form
        deltas = _flip_deltas(path.surface, cur)
        if not deltas:
            raise UnsupportedSurface("no flippable edges")
        best, e = deltas[0]
        if best < 0:
            path = path.flip(e)
            cur = transport(cur, path.steps[-1])
            spent += 1
            if spent > budget:
                raise Timeout("flip budget exhausted while shortening")
            continue
        # plateau search across zero-cost flips
        found = _plateau_search(path, cur, plateau_cap)
        if found is None:
            raise Timeout("no descent found on weight plateau")
        spent += len(found[0].steps) - len(path.steps)
        path, cur = found
        if spent > budget:
            raise Timeout("flip budget exhausted while shortening")


def _plateau_search(path, cur, cap):
    """Breadth-first over zero-cost flips until the annulus form appears
    or a strictly decreasing flip becomes available."""
    from collections import deque
    seen = {(path.surface, cur)}
    queue = deque([(path, cur)])
    visits = 0
    while queue:
        p, v = queue.popleft()
        visits += 1
        if visits > cap:
            break
        for d, e in _flip_deltas(p.surface, v):
            if d > 0:
                break
            p2 = p.flip(e)
            v2 = transport(v, p2.steps[-1])
            if d < 0:
                return p2, v2
            if detect_annulus(p2.surface, v2) is not None:
                return p2, v2
            key = (p2.surface, v2)
            if key not in seen:
                seen.add(key)
                queue.append((p2, v2))
    return None


# ---------------------------------------------------------------------------
# passages across an annulus


def annulus_passages(surface, form, strand):
    """Classify how a strand meets the annulus.

    Returns a list of (entry_side, exit_side) pairs with sides 1 (= g1)
    and 2 (= g2); a strand living entirely inside (or entirely outside)
    the annulus gives [].  For closed strands the piece list is rotated
    so no passage wraps around the end.
    """
    g1_slot, g2_slot = form.g_slots(surface)
    gates = {g1_slot: 1, g2_slot: 2}
    pieces = list(strand.pieces)
    if strand.kind == 'closed':
        start = next((i for i, (a, _) in enumerate(pieces) if a in gates), None)
        if start is None:
            return []
        pieces = pieces[start:] + pieces[:start]
    out = []
    open_side = None
    for entry, exit_ in pieces:
        if entry in gates:
            open_side = gates[entry]
        if exit_ in gates:
            if open_side is not None:
                out.append((open_side, gates[exit_]))
            open_side = None
    return out


def count_through(surface, form, strands):
    n = 0
    for strand in strands:
        for a, b in annulus_passages(surface, form, strand):
            if a != b:
                n += 1
    return n


# ---------------------------------------------------------------------------
# intersection numbers


def is_peripheral_curve(surface, coords, budget=10 ** 6):
    """True when every component of the closed system is parallel to a
    boundary component.

    A connected curve is boundary-parallel exactly when cutting along it
    leaves an annulus piece; working with one primitive component at a
    time keeps annuli between parallel copies from entering the test.
    """
    from .cutting import cut_along
    coords.check(surface)
    if not coords.is_curve_like() or coords.is_zero():
        raise InvalidCoordinates("peripherality is asked of nonempty "
                                 "closed systems")
    for vec, _, _ in components(surface, coords):
        pieces = cut_along(surface, vec).pieces
        if all(p.topological_type() != (0, 2) for p in pieces):
            return False
    return True


def _count_intersections(surface, first, second, budget):
    total = 0
    for vec, kind, mult in components(surface, first):
        path, thin, form = shorten_curve(surface, vec, budget)
        if form.peripheral:
            continue
        moved = path.push(second)
        strands = trace(path.surface, moved)
        total += mult * form.k * count_through(path.surface, form, strands)
    return total


def intersection_number(surface, first, second, budget=10 ** 6):
    """Geometric intersection number of two systems.

    At least one argument must be closed (curve-like); its components
    are brought to thin position and through-passages of the other
    system are counted.  When a component has no reachable thin form
    the sides are swapped, so only a pair of such systems fails.
    Peripheral components meet every class in zero points.
    """
    first.check(surface)
    second.check(surface)
    if not first.is_curve_like():
        if not second.is_curve_like():
            raise UnsupportedSurface(
                "need a closed system on one side to count intersections")
        first, second = second, first
    try:
        return _count_intersections(surface, first, second, budget)
    except Timeout:
        if not second.is_curve_like():
            raise
        return _count_intersections(surface, second, first, budget)


def disjoint(surface, first, second):
    """Exact test for i = 0, valid for arcs as well as curves.

    Two classes are disjoint exactly when the strands of the summed
    vector split into one part summing to each input.
    """
    first.check(surface)
    second.check(surface)
    both = first + second
    strands = trace(surface, both)
    vectors = [st.vector(surface) for st in strands]
    target = first
    n = len(vectors)
    from itertools import combinations
    for r in range(n + 1):
        for pick in combinations(range(n), r):
            tot = NormalCoords.zero(surface)
            for i in pick:
                tot = tot + vectors[i]
            if tot == target:
                return True
    return False


def fills(surface, first, second, budget=10 ** 6):
    """Certificate that every essential curve crosses one of two systems.

    A curve missing both classes can be pushed off their summed system,
    so it survives into a piece of the cut along the sum.  In a piece of
    type (0, 2) or (0, 3) every carried curve is parallel to a boundary
    circle, whose class is read off the strand the circle runs along and
    tested directly.  A piece with genus, or with four or more boundary
    circles, can hide other curves, so the test answers False there
    without deciding: True is always a certificate, False may only mean
    the pair could not be certified.
    """
    from .cutting import cut_along
    first.check(surface)
    second.check(surface)
    if not (first.is_curve_like() and second.is_curve_like()):
        raise InvalidCoordinates("filling certificates compare closed "
                                 "systems")
    if first.is_zero() or second.is_zero():
        raise InvalidCoordinates("filling is asked of nonempty systems")
    cut = cut_along(surface, first + second)
    circle_strands = set()
    for piece in cut.pieces:
        if piece.genus or piece.boundary_count > 3:
            return False
        for _, sids in piece.cycles:
            circle_strands.update(sids)
    for si in sorted(circle_strands):
        vec = cut.strands[si].vector(surface)
        if is_peripheral_curve(surface, vec, budget):
            continue
        if disjoint(surface, vec, first) and disjoint(surface, vec, second):
            return False
    return True


# ---------------------------------------------------------------------------
# Dehn twists


def _winding_faces(surface, form):
    faces = {}
    for t in (form.t1, form.t2):
        for s in range(3):
            e = surface.tri[t][s]
            if e == form.e:
                faces[('e', t)] = (t, s)
            elif e == form.f:
                faces[('f', t)] = (t, s)
    return faces


def _insert_windings(surface, form, pieces, kind, n):
    """Give every through-passage |n| windings around the annulus core.

    Positive n winds along the orientation t1 -> e -> t2 -> f -> t1 as a
    direction on the annulus itself.  Along the traversal of a strand this
    appears as that rotation for passages entering through the free side of
    t1 and as the opposite rotation for passages entering through the free
    side of t2, because the two gates sit on opposite boundary circles of
    the annulus.
    """
    g1_slot, g2_slot = form.g_slots(surface)
    gates = {g1_slot: 1, g2_slot: 2}
    faces = _winding_faces(surface, form)
    pieces = list(pieces)
    if kind == 'closed':
        start = next((i for i, (a, _) in enumerate(pieces) if a in gates), None)
        if start is None:
            return pieces
        pieces = pieces[start:] + pieces[:start]
    jobs = []
    open_at = None
    for i, (entry, exit_) in enumerate(pieces):
        if entry in gates:
            open_at = (i, gates[entry])
        if exit_ in gates and open_at is not None:
            if open_at[1] != gates[exit_]:
                jobs.append(open_at[0])
            open_at = None
    e1 = faces[('e', form.t1)]
    e2 = faces[('e', form.t2)]
    f1 = faces[('f', form.t1)]
    f2 = faces[('f', form.t2)]
    for i in reversed(jobs):
        entry, exit_ = pieces[i]
        t_in = entry[0]
        forward = n > 0
        if t_in == form.t1:
            first, hop, back = (e1, (e2, f2), f1) if forward else (f1, (f2, e2), e1)
        else:
            first, hop, back = (e2, (e1, f1), f2) if forward else (f2, (f1, e1), e2)
        block = [(entry, first)]
        for _ in range(abs(n) - 1):
            block.append(hop)
            block.append((back, first))
        block.append(hop)
        block.append((back, exit_))
        pieces[i:i + 1] = block
    return pieces


def dehn_twist(surface, coords, curve, power, budget=10 ** 6):
    """Image of a system under the twist along an essential simple curve.

    The curve must be connected and primitive; power may be any integer.
    """
    if power == 0:
        return coords
    coords.check(surface)
    curve.check(surface)
    if not curve.is_curve_like():
        raise InvalidCoordinates("can only twist along a closed curve")
    comps = components(surface, curve)
    if len(comps) != 1 or comps[0][2] != 1:
        raise InvalidCoordinates("twisting curve must be connected")
    path, thin, form = shorten_curve(surface, curve, budget)
    if form.k != 1:
        raise InvalidCoordinates("twisting curve must be primitive")
    if form.peripheral:
        # A twist along a boundary-parallel curve moves nothing: closed
        # curves can be isotoped off a collar of the boundary, and arc
        # endpoints are free to slide back around it.
        return coords
    moved = path.push(coords)
    out = []
    for strand in trace(path.surface, moved):
        pieces = _insert_windings(path.surface, form, strand.pieces,
                                  strand.kind, power)
        reduced = cancel_pieces(strand.kind, pieces)
        if reduced:
            out.append(Strand(strand.kind, reduced))
    result = vector_of_strands(path.surface, out)
    result.check(path.surface)
    return path.pull(result)


# ---------------------------------------------------------------------------
# endpoint slides and arc canonical form


def _reversed_pieces(pieces):
    return [(b, a) for a, b in reversed(pieces)]


def _slide_start(surface, pieces, toward):
    """Slide the arc's starting endpoint past the adjacent vertex.

    toward = 'to' sweeps the endpoint past the to-corner of its boundary
    slot, 'from' past the from-corner.  Returns new pieces (uncancelled).
    """
    (tb, sb) = pieces[0][0]
    fan = surface.vertex_fan(surface.vertex_of_corner(
        tb, (sb + 2) % 3 if toward == 'to' else (sb + 1) % 3))
    out = list(pieces)
    if toward == 'to':
        # fan[0] is the to-corner (tb, sb+2); sweep arrives from the far
        # germ, hugging the vertex through every fan triangle.
        sweep = [((tb, sb), (fan[-1][0], (fan[-1][1] + 1) % 3))]
        for t, c in reversed(fan[1:-1]):
            sweep.append(((t, (c + 2) % 3), (t, (c + 1) % 3)))
        new_entry = (fan[0][0], (fan[0][1] + 2) % 3)
    else:
        sweep = [((tb, sb), (fan[0][0], (fan[0][1] + 2) % 3))]
        for t, c in fan[1:-1]:
            sweep.append(((t, (c + 1) % 3), (t, (c + 2) % 3)))
        new_entry = (fan[-1][0], (fan[-1][1] + 1) % 3)
    out[0] = (new_entry, out[0][1])
    return sweep + out


def slide_arc(surface, coords, end, toward):
    """Slide one endpoint (end = 'start' or 'end') of a lone arc.

    Only the extreme endpoint on its boundary edge can pass the vertex;
    returns None when the move is blocked by the arc's other endpoint.
    """
    strands = trace(surface, coords)
    if len(strands) != 1 or strands[0].kind != 'arc':
        raise InvalidCoordinates("slides need a single arc")
    strand = strands[0]
    pieces = list(strand.pieces)
    if end == 'end':
        pieces = _reversed_pieces(pieces)
    (tb, sb) = pieces[0][0]
    edge = surface.tri[tb][sb]
    if coords.ends[edge] > 1:
        # both endpoints on one edge: position decides which move is free.
        # A palindromic arc matches from either end; its two slides agree,
        # so any matching position may authorize the move.
        positions = _start_positions(surface, coords, pieces)
        total = coords.total(edge)
        if toward == 'to' and (total - 1) not in positions:
            return None
        if toward == 'from' and 0 not in positions:
            return None
    new_pieces = _slide_start(surface, pieces, toward)
    try:
        new_pieces = cancel_pieces('arc', new_pieces)
    except InvalidCoordinates:
        # Slides of an essential arc always land on a normal position; a
        # slide can only cancel down to an end U-turn when the arc was
        # parallel into the boundary all along.
        raise InvalidCoordinates("arc is parallel into the boundary")
    if end == 'end':
        new_pieces = _reversed_pieces(new_pieces)
    out = Strand('arc', new_pieces).vector(surface)
    out.check(surface)
    return out


def _start_positions(surface, coords, pieces):
    """Boundary positions whose trace reproduces this piece list."""
    (tb, sb) = pieces[0][0]
    edge = surface.tri[tb][sb]
    out = []
    for p in range(coords.total(edge)):
        strand = _trace_single_from(surface, coords, (tb, sb, p))
        if strand is not None and list(strand.pieces) == list(pieces):
            out.append(p)
    if not out:
        raise InvalidCoordinates("could not locate arc start position")
    return out


def _trace_single_from(surface, coords, state):
    from .coords import _follow
    try:
        return _follow(surface, coords, state, set())
    except Exception:
        return None


def canonicalize_arc(surface, coords, cap=500):
    """Least slide-equivalent vector of a lone arc.

    Searches the slide graph: strictly lighter vectors restart the
    search, the minimum-weight plateau is explored exhaustively (up to
    cap visits) and the lexicographically least vector wins.
    """
    from collections import deque
    coords.check(surface)
    best_weight = coords.weight()
    frontier = deque([coords])
    seen = {coords}
    plateau = {coords}
    visits = 0
    while frontier:
        cur = frontier.popleft()
        visits += 1
        if visits > cap:
            raise Timeout("slide search exceeded %d visits" % cap)
        for end in ('start', 'end'):
            for toward in ('to', 'from'):
                nxt = slide_arc(surface, cur, end, toward)
                if nxt is None or nxt in seen:
                    continue
                seen.add(nxt)
                wt = nxt.weight()
                if wt < best_weight:
                    best_weight = wt
                    plateau = {nxt}
                    frontier = deque([nxt])
                    break
                if wt == best_weight:
                    plateau.add(nxt)
                if wt <= best_weight:
                    frontier.append(nxt)
            else:
                continue
            break
    return min(plateau, key=lambda v: (v.weight(), v.w, v.ends))


def is_essential_arc(surface, coords, cap=500):
    """True when the lone arc is not parallel into the boundary.

    A boundary-parallel arc admits normal positions, but its slide orbit
    degenerates: some slide unwinds it past its last edge crossing.  The
    orbit of an essential arc never does.
    """
    try:
        canonicalize_arc(surface, coords, cap)
    except InvalidCoordinates:
        return False
    return True


# ---------------------------------------------------------------------------
# arcs parallel to an edge


def h_parallel_pieces(surface, h):
    """Pieces of the arc that runs once alongside interior edge h.

    Starts on the boundary edge of one endpoint of h, hugs that vertex,
    crosses the triangle next to h parallel to it, and hugs the far
    vertex out to its boundary edge.
    """
    if h in surface.boundary:
        raise InvalidCoordinates("edge %d is on the boundary" % h)
    u = min(surface.edge_vertices(h))
    b = None
    for e, comp in surface.boundary.items():
        if surface.edge_vertices(e)[0] == u:
            b = e
            break
    if b is None:
        raise InvalidCoordinates("vertex carries no boundary edge")
    (t, s), = surface.edge_slots[b]
    pieces = []
    traversed = False
    guard = 4 * surface.num_triangles + 4
    while True:
        guard -= 1
        if guard < 0:
            raise InvalidCoordinates("runaway walk building parallel arc")
        if not traversed and surface.tri[t][(s + 1) % 3] == h:
            exit_face = (t, (s + 2) % 3)
            traversed = True
        else:
            exit_face = (t, (s + 1) % 3)
        pieces.append(((t, s), exit_face))
        nxt = surface.glue.get(exit_face)
        if nxt is None:
            break
        t, s = nxt
    if not traversed:
        raise InvalidCoordinates("edge %d does not touch the start vertex" % h)
    return pieces


def h_parallel_vector(surface, h):
    return Strand('arc', h_parallel_pieces(surface, h)).vector(surface)


def thin_arc(surface, coords, budget=10 ** 5, plateau_cap=2000):
    """Flip and slide a lone essential arc until it runs parallel to an
    edge of the current triangulation.

    Returns (FlipPath, vector-on-final-surface, h).
    """
    coords.check(surface)
    if coords.num_endpoints() != 2:
        raise InvalidCoordinates("thin_arc needs a single arc")
    path = FlipPath(surface)
    cur = canonicalize_arc(surface, coords)
    spent = 0
    while True:
        h = _match_parallel(path.surface, cur)
        if h is not None:
            return path, cur, h
        deltas = _flip_deltas(path.surface, cur)
        stepped = False
        if deltas and deltas[0][0] < 0:
            path = path.flip(deltas[0][1])
            cur = canonicalize_arc(path.surface, transport(cur, path.steps[-1]))
            stepped = True
        else:
            found = _arc_plateau(path, cur, plateau_cap)
            if found is None:
                raise Timeout("arc did not straighten within the budget")
            path, cur = found
            stepped = True
        spent += 1
        if spent > budget:
            raise Timeout("flip budget exhausted while thinning arc")


_PARALLEL_CACHE = {}


def _match_parallel(surface, canonical):
    table = _PARALLEL_CACHE.get(surface)
    if table is None:
        table = {}
        for h in surface.interior_edges():
            cand = canonicalize_arc(surface, h_parallel_vector(surface, h))
            table.setdefault(cand, h)
        if len(_PARALLEL_CACHE) > 512:
            _PARALLEL_CACHE.clear()
        _PARALLEL_CACHE[surface] = table
    return table.get(canonical)


def _arc_plateau(path, cur, cap):
    from collections import deque
    seen = {(path.surface, cur)}
    queue = deque([(path, cur)])
    visits = 0
    while queue:
        p, v = queue.popleft()
        visits += 1
        if visits > cap:
            break
        for d, e in _flip_deltas(p.surface, v):
            if d > 0:
                break
            p2 = p.flip(e)
            v2 = canonicalize_arc(p2.surface, transport(v, p2.steps[-1]))
            if v2.weight() < v.weight():
                return p2, v2
            if _match_parallel(p2.surface, v2) is not None:
                return p2, v2
            key = (p2.surface, v2)
            if key not in seen:
                seen.add(key)
                queue.append((p2, v2))
    return None
