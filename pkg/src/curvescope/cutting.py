"""Cutting a surface open along a normal system, in place.

Inside one triangle every piece of a taut system is a chord cutting off a
corner, and chords cutting off the same corner are nested.  Slicing along
a chosen subset of the strands therefore subdivides each triangle into
corner lenses and one central region; gluing the side segments that are
not on the slice reassembles the complementary pieces without ever
leaving normal position.  Euler characteristics come from counting cells,
boundary circles from walking the unglued cells, and the genus of each
piece follows.  Strands not sliced along ride as passengers: each lies
inside a single piece, which the region structure identifies.
"""

from itertools import combinations

from .coords import NormalCoords, piece_through
from .errors import InvalidCoordinates


class PositionedStrand:
    """A traced strand remembering the crossing position of every step.

    Each step is (t, s_in, p_in, s_out, p_out) with positions local to
    the named slot, counted from its from-corner.
    """

    __slots__ = ('kind', 'steps')

    def __init__(self, kind, steps):
        self.kind = kind
        self.steps = tuple(steps)

    def __repr__(self):
        return "PositionedStrand(%r, %d steps)" % (self.kind, len(self.steps))

    def vector(self, surface):
        w = [0] * surface.num_edges
        ends = [0] * surface.num_edges
        last = len(self.steps) - (1 if self.kind == 'arc' else 0)
        for i in range(last):
            t, _, _, s_out, _ = self.steps[i]
            w[surface.tri[t][s_out]] += 1
        if self.kind == 'arc':
            t0, s0 = self.steps[0][0], self.steps[0][1]
            tm, sm = self.steps[-1][0], self.steps[-1][3]
            ends[surface.tri[t0][s0]] += 1
            ends[surface.tri[tm][sm]] += 1
        return NormalCoords(w, ends)


def _follow_positioned(surface, coords, state, visited):
    steps = []
    start = state
    while True:
        t, s, p = state
        visited.add(state)
        _, s_out, p_out = piece_through(surface, coords, t, s, p)
        steps.append((t, s, p, s_out, p_out))
        visited.add((t, s_out, p_out))
        partner = surface.glue.get((t, s_out))
        if partner is None:
            return PositionedStrand('arc', steps)
        e = surface.tri[t][s_out]
        nxt = (partner[0], partner[1], coords.total(e) - 1 - p_out)
        if nxt == start:
            return PositionedStrand('closed', steps)
        state = nxt


def positioned_strands(surface, coords):
    """The strands of a vector with their crossing positions recorded."""
    coords.check(surface)
    visited = set()
    strands = []
    for e, _comp in sorted(surface.boundary.items()):
        (t, s), = surface.edge_slots[e]
        for p in range(coords.ends[e]):
            if (t, s, p) in visited:
                continue
            strand = _follow_positioned(surface, coords, (t, s, p), visited)
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
            strand = _follow_positioned(surface, coords, (t, s, p), visited)
            if strand.kind != 'closed':
                raise InvalidCoordinates("open strand with no boundary point")
            strands.append(strand)
    return strands


class Piece:
    """One complementary piece of a cut surface."""

    __slots__ = ('genus', 'boundary_count', 'euler', 'cycles', 'passengers')

    def __init__(self, genus, boundary_count, euler, cycles, passengers):
        self.genus = genus
        self.boundary_count = boundary_count
        self.euler = euler
        self.cycles = tuple(cycles)
        self.passengers = tuple(passengers)

    def topological_type(self):
        return (self.genus, self.boundary_count)

    def touches_component(self, comp):
        return any(comp in comps for comps, _ in self.cycles)

    def touches_strand(self, idx):
        return any(idx in sids for _, sids in self.cycles)

    def __key(self):
        return (self.genus, self.boundary_count, self.euler,
                self.cycles, self.passengers)

    def __eq__(self, other):
        return isinstance(other, Piece) and self.__key() == other.__key()

    def __hash__(self):
        return hash(self.__key())

    def __repr__(self):
        return "Piece(genus=%d, boundary=%d)" % (self.genus,
                                                 self.boundary_count)


class CutResult:
    """All pieces of one cut, plus where every strand ended up."""

    __slots__ = ('surface', 'strands', 'cut_indices', 'pieces',
                 'strand_piece', '_center_piece')

    def __init__(self, surface, strands, cut_indices, pieces, strand_piece,
                 center_piece):
        self.surface = surface
        self.strands = tuple(strands)
        self.cut_indices = tuple(cut_indices)
        self.pieces = tuple(pieces)
        self.strand_piece = dict(strand_piece)
        self._center_piece = dict(center_piece)

    def piece_of(self, strand_index):
        """Index of the piece carrying a passenger strand."""
        return self.strand_piece[strand_index]

    def triangle_piece(self, t):
        """Index of the piece holding the central region of triangle t.

        For a triangle no cut strand passes through, that region is the
        whole triangle, so this names the piece the triangle sits in."""
        return self._center_piece[t]

    def pieces_along(self, cut_index):
        """Indices of pieces whose boundary runs along a cut strand."""
        return sorted(i for i, p in enumerate(self.pieces)
                      if p.touches_strand(cut_index))

    def types(self):
        return sorted(p.topological_type() for p in self.pieces)


def cut_along(surface, coords, cut_indices=None):
    """Slice the surface along chosen strands of a system.

    cut_indices selects which strands of the traced vector form the
    slice; the default slices along all of them.  Returns a CutResult.
    """
    strands = positioned_strands(surface, coords)
    if cut_indices is None:
        cut_indices = range(len(strands))
    cut_set = set(cut_indices)
    for i in cut_set:
        if not 0 <= i < len(strands):
            raise InvalidCoordinates("no strand with index %r" % (i,))

    def first_slot(e):
        return surface.edge_slots[e][0]

    def canonical_pos(t, s, p_local):
        e = surface.tri[t][s]
        if e in surface.boundary or first_slot(e) == (t, s):
            return e, p_local
        return e, coords.total(e) - 1 - p_local

    # positions of slice points, per edge, in first-slot coordinates
    cut_pos = {e: set() for e in range(surface.num_edges)}
    for si in cut_set:
        for t, s_in, p_in, s_out, p_out in strands[si].steps:
            for s, p in ((s_in, p_in), (s_out, p_out)):
                e, p1 = canonical_pos(t, s, p)
                cut_pos[e].add(p1)
    rank = {}
    npoints = {}
    for e in range(surface.num_edges):
        ordered = sorted(cut_pos[e])
        rank[e] = {p: r for r, p in enumerate(ordered)}
        npoints[e] = len(ordered)

    # chords of the slice, bundled by the corner they cut off, ordered
    # from the corner outwards
    chords = {}  # (t, c) -> list of (pos on side c+2, strand, step)
    for si in cut_set:
        for k, step in enumerate(strands[si].steps):
            t, s_in, p_in, s_out, p_out = step
            c = (3 - s_in - s_out) % 3
            q = p_in if s_in == (c + 2) % 3 else p_out
            chords.setdefault((t, c), []).append((q, si, k))
    for key in chords:
        chords[key].sort()

    def local_rank(t, s, p_local):
        e, p1 = canonical_pos(t, s, p_local)
        r = rank[e][p1]
        if e in surface.boundary or first_slot(e) == (t, s):
            return r
        return npoints[e] - 1 - r

    regions = {}    # region id -> list of canonical cell ids
    endpoints = {}  # cell id -> (token, token)

    def seg_cell(t, s, j_local):
        e = surface.tri[t][s]
        if e in surface.boundary:
            cell = ('bseg', e, j_local)
        elif first_slot(e) == (t, s):
            cell = ('seg', e, j_local)
        else:
            cell = ('seg', e, npoints[e] - j_local)
        if cell not in endpoints:
            t1, s1 = first_slot(e)
            j = cell[2]
            if j == 0:
                lo = ('v', surface.vertex_of_corner(t1, (s1 + 1) % 3))
            else:
                lo = ('pt', e, j - 1, 'hi')
            if j == npoints[e]:
                hi = ('v', surface.vertex_of_corner(t1, (s1 + 2) % 3))
            else:
                hi = ('pt', e, j, 'lo')
            endpoints[cell] = (lo, hi)
        return cell

    def point_token(t, s, p_local, side_local):
        e, p1 = canonical_pos(t, s, p_local)
        if e in surface.boundary or first_slot(e) == (t, s):
            sd = side_local
        else:
            sd = 'lo' if side_local == 'hi' else 'hi'
        return ('pt', e, rank[e][p1], sd)

    def chord_side_cell(step_key, step, which):
        cell = ('cs', step_key[0], step_key[1], which)
        if cell not in endpoints:
            t, s_in, p_in, s_out, p_out = step
            c = (3 - s_in - s_out) % 3
            if s_in == (c + 1) % 3:
                p_c1, p_c2 = p_in, p_out
            else:
                p_c1, p_c2 = p_out, p_in
            if which == 'in':
                a = point_token(t, (c + 1) % 3, p_c1, 'hi')
                b = point_token(t, (c + 2) % 3, p_c2, 'lo')
            else:
                a = point_token(t, (c + 1) % 3, p_c1, 'lo')
                b = point_token(t, (c + 2) % 3, p_c2, 'hi')
            endpoints[cell] = (a, b)
        return cell

    step_of = {}
    for si in cut_set:
        for k, step in enumerate(strands[si].steps):
            step_of[(si, k)] = step

    for t in range(surface.num_triangles):
        bundle = {c: chords.get((t, c), []) for c in range(3)}
        ncut = {c: len(bundle[c]) for c in range(3)}
        for c in range(3):
            side1, side2 = (c + 1) % 3, (c + 2) % 3
            for k in range(ncut[c]):
                _, si, stp = bundle[c][k]
                step = step_of[(si, stp)]
                _, s_in, p_in, s_out, p_out = step
                p_c1 = p_in if s_in == side1 else p_out
                p_c2 = p_in if s_in == side2 else p_out
                cells = [
                    seg_cell(t, side1, local_rank(t, side1, p_c1) + 1),
                    seg_cell(t, side2, local_rank(t, side2, p_c2)),
                    chord_side_cell((si, stp), step, 'in'),
                ]
                if k > 0:
                    _, sj, stj = bundle[c][k - 1]
                    cells.append(chord_side_cell(
                        (sj, stj), step_of[(sj, stj)], 'out'))
                regions[('corner', t, c, k)] = cells
        cells = []
        for s in range(3):
            cells.append(seg_cell(t, s, ncut[(s + 1) % 3]))
            far = (s + 2) % 3
            if ncut[far]:
                _, sj, stj = bundle[far][-1]
                cells.append(chord_side_cell(
                    (sj, stj), step_of[(sj, stj)], 'out'))
        regions[('center', t)] = cells

    # every interior segment must be glued twice, everything else once
    uses = {}
    for cells in regions.values():
        for cell in cells:
            uses[cell] = uses.get(cell, 0) + 1
    for cell, n in uses.items():
        want = 2 if cell[0] == 'seg' else 1
        if n != want:
            raise InvalidCoordinates("cell %r used %d times" % (cell, n))

    # union regions into pieces through shared interior segments
    parent = {rid: rid for rid in regions}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    owner = {}
    for rid, cells in regions.items():
        for cell in cells:
            if cell[0] != 'seg':
                continue
            if cell in owner:
                ra, rb = find(rid), find(owner[cell])
                if ra != rb:
                    parent[ra] = rb
            else:
                owner[cell] = rid

    roots = sorted(set(find(rid) for rid in regions))
    piece_index = {root: i for i, root in enumerate(roots)}
    region_piece = {rid: piece_index[find(rid)] for rid in regions}

    cells_of = [set() for _ in roots]
    nregions = [0] * len(roots)
    for rid, cells in regions.items():
        cells_of[region_piece[rid]].update(cells)
        nregions[region_piece[rid]] += 1
    tokens_of = [set() for _ in roots]
    for i, cells in enumerate(cells_of):
        for cell in cells:
            tokens_of[i].update(endpoints[cell])

    # boundary cycles: walk the unglued cells end to end
    incidence = {}
    for i, cells in enumerate(cells_of):
        for cell in cells:
            if cell[0] == 'seg':
                continue
            for end in (0, 1):
                incidence.setdefault(endpoints[cell][end], []).append(
                    (cell, end))
    for token, inc in incidence.items():
        if len(inc) != 2:
            raise InvalidCoordinates(
                "boundary point %r lies on %d unglued cells"
                % (token, len(inc)))
    seen_cells = set()
    cycles = []
    for i, cells in enumerate(cells_of):
        for start in sorted(cells):
            if start[0] == 'seg' or start in seen_cells:
                continue
            cyc = []
            cell, end = start, 1
            while True:
                cyc.append(cell)
                seen_cells.add(cell)
                token = endpoints[cell][end]
                a, b = incidence[token]
                nxt = b if a == (cell, end) else a
                if nxt == (start, 0):
                    break
                cell, end = nxt[0], 1 - nxt[1]
            comps = frozenset(surface.boundary[c[1]] for c in cyc
                              if c[0] == 'bseg')
            sids = frozenset(c[1] for c in cyc if c[0] == 'cs')
            cycles.append((i, comps, sids))

    # passengers: locate each riding strand
    strand_piece = {}
    passengers = [[] for _ in roots]
    for si, strand in enumerate(strands):
        if si in cut_set:
            continue
        homes = set()
        for step in strand.steps:
            t, s_in, p_in, s_out, p_out = step
            c = (3 - s_in - s_out) % 3
            q = p_in if s_in == (c + 2) % 3 else p_out
            bundle = chords.get((t, c), [])
            k = sum(1 for pos, _, _ in bundle if pos < q)
            rid = (('corner', t, c, k) if k < len(bundle)
                   else ('center', t))
            homes.add(region_piece[rid])
        if len(homes) != 1:
            raise InvalidCoordinates(
                "passenger strand %d meets the slice" % si)
        home = homes.pop()
        strand_piece[si] = home
        passengers[home].append(si)

    pieces = []
    for i in range(len(roots)):
        chi = len(tokens_of[i]) - len(cells_of[i]) + nregions[i]
        my_cycles = [(comps, sids) for (pi, comps, sids) in cycles
                     if pi == i]
        my_cycles.sort(key=lambda cyc: (sorted(cyc[0]), sorted(cyc[1])))
        b = len(my_cycles)
        if (2 - chi - b) % 2:
            raise InvalidCoordinates("piece with odd genus bookkeeping")
        g = (2 - chi - b) // 2
        if g < 0:
            raise InvalidCoordinates("piece with negative genus")
        pieces.append(Piece(g, b, chi, my_cycles, passengers[i]))

    n_arc_cuts = sum(1 for si in cut_set if strands[si].kind == 'arc')
    chi_total = sum(p.euler for p in pieces)
    if chi_total != surface.euler_characteristic() + n_arc_cuts:
        raise InvalidCoordinates(
            "pieces sum to Euler number %d, expected %d"
            % (chi_total, surface.euler_characteristic() + n_arc_cuts))
    center_piece = {t: region_piece[('center', t)]
                    for t in range(len(surface.tri))}
    return CutResult(surface, strands, sorted(cut_set), pieces,
                     strand_piece, center_piece)


def split_indices(surface, strands, target):
    """Indices of a sub-multiset of strands whose vectors sum to target.

    Raises InvalidCoordinates when no such split exists, which happens
    exactly when the two subsystems cannot be made disjoint.
    """
    vectors = [s.vector(surface) for s in strands]
    zero = NormalCoords.zero(surface)
    for r in range(len(vectors) + 1):
        for pick in combinations(range(len(vectors)), r):
            tot = zero
            for i in pick:
                tot = tot + vectors[i]
            if tot == target:
                return list(pick)
    raise InvalidCoordinates("system does not split off the requested part")


def cut_system(surface, cutting, passenger=None):
    """Cut along one system while another rides along disjointly.

    The two systems must have disjoint representatives; the passenger's
    strands are then located piece by piece.
    """
    if passenger is None:
        return cut_along(surface, cutting)
    total = cutting + passenger
    strands = positioned_strands(surface, total)
    picks = split_indices(surface, strands, cutting)
    return cut_along(surface, total, cut_indices=picks)


def complement_types(surface, coords, cut_indices=None):
    """Sorted (genus, boundary) types of the pieces of a cut."""
    return cut_along(surface, coords, cut_indices).types()
