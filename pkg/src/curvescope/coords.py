"""Normal coordinates for curve and arc systems, and the strand tracer.

A system is recorded by its crossing count on every edge plus, on boundary
edges, the number of arc endpoints lying in the edge's interior.  Inside
each triangle the system decomposes into corner pieces; the counts must
therefore satisfy, for slot totals (x0, x1, x2), evenness of x0 + x1 + x2
and the three triangle inequalities.  Admissible vectors are exactly the
embedded normal systems, and on our triangulations (no interior vertices)
a normal system can have no bigon with an edge, so a vector is already a
minimal-position representative of its class.

The tracer recovers the individual strands of a vector as lists of pieces,
where a piece is an (entry side, exit side) pair inside one triangle.
Moves that edit strands (endpoint slides, twisting) work on piece lists and
then recount; `cancel_pieces` removes the U-turns such edits can create.
"""

from .errors import InvalidCoordinates


class NormalCoords:
    """Edge crossing counts plus boundary endpoint counters."""

    __slots__ = ('w', 'ends')

    def __init__(self, w, ends=None):
        self.w = tuple(int(x) for x in w)
        if ends is None:
            self.ends = (0,) * len(self.w)
        else:
            self.ends = tuple(int(x) for x in ends)
        if len(self.ends) != len(self.w):
            raise InvalidCoordinates("ends and weights have different lengths")

    @classmethod
    def zero(cls, surface):
        return cls((0,) * surface.num_edges)

    def total(self, e):
        return self.w[e] + self.ends[e]

    def weight(self):
        return sum(self.w) + sum(self.ends)

    def num_endpoints(self):
        return sum(self.ends)

    def is_zero(self):
        return not any(self.w) and not any(self.ends)

    def is_curve_like(self):
        return not any(self.ends)

    def __add__(self, other):
        return NormalCoords([a + b for a, b in zip(self.w, other.w)],
                            [a + b for a, b in zip(self.ends, other.ends)])

    def __mul__(self, k):
        return NormalCoords([k * a for a in self.w], [k * a for a in self.ends])

    __rmul__ = __mul__

    def __key(self):
        return (self.w, self.ends)

    def __eq__(self, other):
        return isinstance(other, NormalCoords) and self.__key() == other.__key()

    def __hash__(self):
        return hash(self.__key())

    def __repr__(self):
        if any(self.ends):
            return "NormalCoords(%r, ends=%r)" % (list(self.w), list(self.ends))
        return "NormalCoords(%r)" % (list(self.w),)

    # -- admissibility -----------------------------------------------------

    def check(self, surface):
        if len(self.w) != surface.num_edges:
            raise InvalidCoordinates("wrong number of edges")
        for e in range(surface.num_edges):
            if self.w[e] < 0 or self.ends[e] < 0:
                raise InvalidCoordinates("negative count on edge %d" % e)
            if self.ends[e] and e not in surface.boundary:
                raise InvalidCoordinates("endpoints on interior edge %d" % e)
            if self.w[e] and e in surface.boundary:
                raise InvalidCoordinates("crossings on boundary edge %d" % e)
        for t in range(surface.num_triangles):
            x = [self.total(surface.tri[t][s]) for s in range(3)]
            if sum(x) % 2:
                raise InvalidCoordinates("odd corner sum in triangle %d" % t)
            for s in range(3):
                if x[s] > x[(s + 1) % 3] + x[(s + 2) % 3]:
                    raise InvalidCoordinates("side %d of triangle %d too heavy" % (s, t))

    def is_admissible(self, surface):
        try:
            self.check(surface)
        except InvalidCoordinates:
            return False
        return True


def corner_counts(surface, coords, t):
    """Corner piece counts (n0, n1, n2) of triangle t, n_c opposite side c."""
    x = [coords.total(surface.tri[t][s]) for s in range(3)]
    out = []
    for c in range(3):
        n = x[(c + 1) % 3] + x[(c + 2) % 3] - x[c]
        if n < 0 or n % 2:
            raise InvalidCoordinates("bad corner count in triangle %d" % t)
        out.append(n // 2)
    return tuple(out)


# ---------------------------------------------------------------------------
# tracer


def piece_through(surface, coords, t, s, p):
    """Follow the piece entered at side s, position p, to its exit side.

    Positions run along the side direction (from-corner to to-corner).
    Returns (t, s_out, p_out).
    """
    n = corner_counts(surface, coords, t)
    x = [coords.total(surface.tri[t][k]) for k in range(3)]
    n_from = n[(s + 1) % 3]
    if p < n_from:
        s_out = (s + 2) % 3
        return t, s_out, x[s_out] - 1 - p
    s_out = (s + 1) % 3
    return t, s_out, x[s] - 1 - p


def cross_face(surface, coords, t, s, p):
    """Cross the edge under face (t, s) at position p.

    Returns the entering state (t2, s2, p2) on the far side, or None when
    the edge is on the boundary (the strand ends there).
    """
    partner = surface.glue.get((t, s))
    if partner is None:
        return None
    e = surface.tri[t][s]
    return partner[0], partner[1], coords.total(e) - 1 - p


class Strand:
    """One component of a traced normal system.

    kind is 'arc' or 'closed'; pieces is a tuple of (entry_face, exit_face)
    slot pairs.  For an arc the first entry face and the last exit face are
    boundary slots holding its endpoints.
    """

    __slots__ = ('kind', 'pieces')

    def __init__(self, kind, pieces):
        self.kind = kind
        self.pieces = tuple((tuple(a), tuple(b)) for a, b in pieces)

    def __repr__(self):
        return "Strand(%r, %d pieces)" % (self.kind, len(self.pieces))

    def crossing_edges(self, surface):
        """Edges crossed between consecutive pieces, in order."""
        pieces = self.pieces
        last = len(pieces) - 1 if self.kind == 'arc' else len(pieces)
        return [surface.tri[pieces[i][1][0]][pieces[i][1][1]]
                for i in range(last)]

    def vector(self, surface):
        w = [0] * surface.num_edges
        ends = [0] * surface.num_edges
        for e in self.crossing_edges(surface):
            w[e] += 1
        if self.kind == 'arc':
            (t0, s0), _ = self.pieces[0]
            _, (tm, sm) = self.pieces[-1]
            ends[surface.tri[t0][s0]] += 1
            ends[surface.tri[tm][sm]] += 1
        return NormalCoords(w, ends)


def _follow(surface, coords, state, visited):
    """Walk from an entering state until a boundary face or a loop closes."""
    pieces = []
    start = state
    while True:
        t, s, p = state
        visited.add(state)
        t2, s_out, p_out = piece_through(surface, coords, t, s, p)
        pieces.append(((t, s), (t2, s_out)))
        visited.add((t2, s_out, p_out))
        nxt = cross_face(surface, coords, t2, s_out, p_out)
        if nxt is None:
            return Strand('arc', pieces)
        if nxt == start:
            return Strand('closed', pieces)
        state = nxt


def trace(surface, coords):
    """Decompose a vector into its strands.

    Arcs are traced from their endpoints on boundary edges, closed strands
    from any leftover crossing.  The multiset of per-strand vectors sums to
    the input.
    """
    coords.check(surface)
    visited = set()
    strands = []
    for e, comp in sorted(surface.boundary.items()):
        (t, s), = surface.edge_slots[e]
        for p in range(coords.ends[e]):
            if (t, s, p) in visited:
                continue
            strand = _follow(surface, coords, (t, s, p), visited)
            if strand.kind != 'arc':
                raise InvalidCoordinates("boundary point on a closed strand")
            strands.append(strand)
    for e in sorted(surface.edge_slots):
        if e in surface.boundary:
            continue
        (t, s), _ = surface.edge_slots[e]
        for p in range(coords.w[e]):
            if (t, s, p) in visited:
                continue
            strand = _follow(surface, coords, (t, s, p), visited)
            if strand.kind != 'closed':
                raise InvalidCoordinates("open strand with no boundary point")
            strands.append(strand)
    return strands


def components(surface, coords):
    """Distinct component classes with multiplicities.

    Returns a list of (NormalCoords, kind, count); within one admissible
    vector, strands with equal sub-vectors are parallel copies.
    """
    grouped = {}
    order = []
    for strand in trace(surface, coords):
        key = strand.vector(surface)
        if (key, strand.kind) not in grouped:
            grouped[(key, strand.kind)] = 0
            order.append((key, strand.kind))
        grouped[(key, strand.kind)] += 1
    return [(vec, kind, grouped[(vec, kind)]) for vec, kind in order]


# ---------------------------------------------------------------------------
# piece-list editing


def cancel_pieces(kind, pieces):
    """Remove U-turn pieces (entry face == exit face) with their crossings.

    Removing piece i lets its neighbours merge into a single piece; this
    cascades.  Returns the reduced list; a closed strand that cancels away
    entirely comes back empty.
    """
    pieces = list(pieces)
    changed = True
    while changed:
        changed = False
        for i, (a, b) in enumerate(pieces):
            if a != b:
                continue
            m = len(pieces)
            if kind == 'arc' and (i == 0 or i == m - 1):
                raise InvalidCoordinates("arc degenerated to a boundary U-turn")
            if m == 1:
                return []
            j = (i - 1) % m
            k = (i + 1) % m
            if j == k:
                entry, exit_ = pieces[j]
                if entry == exit_:
                    return []
                merged = [(entry, exit_)]
                pieces = merged
                changed = True
                break
            merged = (pieces[j][0], pieces[k][1])
            rebuilt = []
            for x in range(m):
                if x == j:
                    rebuilt.append(merged)
                elif x in (i, k):
                    continue
                else:
                    rebuilt.append(pieces[x])
            pieces = rebuilt
            changed = True
            break
    return pieces


def strand_from_pieces(surface, kind, pieces):
    reduced = cancel_pieces(kind, pieces)
    if not reduced:
        return None
    return Strand(kind, reduced)


def vector_of_strands(surface, strands):
    out = NormalCoords.zero(surface)
    for strand in strands:
        out = out + strand.vector(surface)
    return out
