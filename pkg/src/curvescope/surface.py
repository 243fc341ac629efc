"""Triangulated compact surfaces with all vertices on the boundary.

A surface is a collection of oriented triangles glued along edge sides.
Triangle ``t`` has corners 0, 1, 2 in counterclockwise order and sides
0, 1, 2 with side ``s`` opposite corner ``s``; traversed along the
triangle's counterclockwise boundary, side ``s`` runs from corner ``s + 1``
to corner ``s + 2`` (mod 3).  A gluing identifies two sides reversing the
traversal direction, so the from-end of one side meets the to-end of the
other.  Unglued sides are boundary edges, each labelled with a boundary
component index.

For surfaces with boundary every builder in this module produces one vertex
and one loop edge per boundary component and no interior vertices.  That
choice makes admissible normal weight vectors a complete invariant of
multicurves (see coords.py).  Closed surfaces get a one-vertex
triangulation; they support cutting but not canonical equality.
"""

from dataclasses import dataclass

from .errors import InvalidSurface, NonFlippableEdge, UnsupportedSurface


def complexity(genus, boundary):
    """3g - 3 + b, the count of curves in a pants decomposition."""
    return 3 * genus - 3 + boundary


def modified_complexity(genus, boundary):
    """4g - 3 + b, the grading used for witness families."""
    return 4 * genus - 3 + boundary


@dataclass(frozen=True)
class SurfaceSpec:
    """Topological type plus the marked boundary components for arc graphs."""

    genus: int
    boundary: int
    marked: tuple = ()

    def __post_init__(self):
        if self.genus < 0 or self.boundary < 0:
            raise InvalidSurface("negative genus or boundary count")
        for j in self.marked:
            if not 0 <= j < self.boundary:
                raise InvalidSurface("marked component %r out of range" % (j,))

    @property
    def complexity(self):
        return complexity(self.genus, self.boundary)

    @property
    def modified_complexity(self):
        return modified_complexity(self.genus, self.boundary)

    def euler_characteristic(self):
        return 2 - 2 * self.genus - self.boundary


class Surface:
    """An oriented triangulated surface given by slot-level gluing data.

    tri      -- tuple of (e0, e1, e2) edge ids per triangle
    glue     -- dict {(t, s): (t2, s2)} over interior slots, symmetric
    boundary -- dict {edge: component index} over boundary edges
    """

    def __init__(self, tri, glue, boundary, check=True):
        self.tri = tuple(tuple(x) for x in tri)
        self.glue = dict(glue)
        self.boundary = dict(boundary)
        self.num_triangles = len(self.tri)
        self.num_edges = 1 + max(e for tr in self.tri for e in tr) if self.tri else 0
        self.edge_slots = {}
        for t, tr in enumerate(self.tri):
            for s, e in enumerate(tr):
                self.edge_slots.setdefault(e, []).append((t, s))
        self._vertices = None
        self._corner_vertex = None
        if check:
            self._check()

    # -- validation --------------------------------------------------------

    def _check(self):
        for (t, s), (t2, s2) in self.glue.items():
            if self.glue.get((t2, s2)) != (t, s):
                raise InvalidSurface("gluing is not symmetric at %r" % ((t, s),))
            if (t, s) == (t2, s2):
                raise InvalidSurface("slot glued to itself")
            if self.tri[t][s] != self.tri[t2][s2]:
                raise InvalidSurface("glued slots carry different edges")
        for e, slots in self.edge_slots.items():
            if len(slots) == 1:
                if e not in self.boundary:
                    raise InvalidSurface("edge %d has one side but no boundary label" % e)
                if slots[0] in self.glue:
                    raise InvalidSurface("boundary edge %d is glued" % e)
            elif len(slots) == 2:
                if e in self.boundary:
                    raise InvalidSurface("interior edge %d has a boundary label" % e)
                if self.glue.get(slots[0]) != slots[1]:
                    raise InvalidSurface("edge %d sides are not glued to each other" % e)
            else:
                raise InvalidSurface("edge %d appears on %d sides" % (e, len(slots)))
        if self.tri and not self._connected():
            raise InvalidSurface("triangulation is not connected")

    def _connected(self):
        seen = {0}
        stack = [0]
        while stack:
            t = stack.pop()
            for s in range(3):
                nxt = self.glue.get((t, s))
                if nxt is not None and nxt[0] not in seen:
                    seen.add(nxt[0])
                    stack.append(nxt[0])
        return len(seen) == self.num_triangles

    # -- identity ----------------------------------------------------------

    def __key(self):
        return (self.tri, tuple(sorted(self.glue.items())),
                tuple(sorted(self.boundary.items())))

    def __eq__(self, other):
        return isinstance(other, Surface) and self.__key() == other.__key()

    def __hash__(self):
        return hash(self.__key())

    def __repr__(self):
        g, b = self.genus(), self.num_boundary_components()
        return "Surface(genus=%d, boundary=%d, triangles=%d)" % (g, b, self.num_triangles)

    # -- corners and vertices ---------------------------------------------

    def corner_step(self, t, c, direction):
        """The next corner of the same vertex, or None past a boundary side.

        direction +1 crosses side c + 1, direction -1 crosses side c + 2.
        """
        if direction > 0:
            side = (c + 1) % 3
            partner = self.glue.get((t, side))
            if partner is None:
                return None
            t2, s2 = partner
            return (t2, (s2 + 1) % 3)
        side = (c + 2) % 3
        partner = self.glue.get((t, side))
        if partner is None:
            return None
        t2, s2 = partner
        return (t2, (s2 + 2) % 3)

    def _build_vertices(self):
        if self._vertices is not None:
            return
        corner_vertex = {}
        vertices = []
        for t in range(self.num_triangles):
            for c in range(3):
                if (t, c) in corner_vertex:
                    continue
                vid = len(vertices)
                cluster = [(t, c)]
                corner_vertex[(t, c)] = vid
                stack = [(t, c)]
                while stack:
                    cur = stack.pop()
                    for direction in (1, -1):
                        nxt = self.corner_step(cur[0], cur[1], direction)
                        if nxt is not None and nxt not in corner_vertex:
                            corner_vertex[nxt] = vid
                            cluster.append(nxt)
                            stack.append(nxt)
                vertices.append(tuple(cluster))
        self._vertices = tuple(vertices)
        self._corner_vertex = corner_vertex

    @property
    def vertices(self):
        self._build_vertices()
        return self._vertices

    def vertex_of_corner(self, t, c):
        self._build_vertices()
        return self._corner_vertex[(t, c)]

    def side_ends(self, t, s):
        """(from-corner, to-corner) of side s in triangle t."""
        return (t, (s + 1) % 3), (t, (s + 2) % 3)

    def edge_vertices(self, e):
        """Vertex ids at the two ends of edge e (equal for a loop)."""
        t, s = self.edge_slots[e][0]
        a, b = self.side_ends(t, s)
        return self.vertex_of_corner(*a), self.vertex_of_corner(*b)

    def vertex_fan(self, vid):
        """Corners around a boundary vertex, ordered between its two
        boundary side germs.  Walks in the -1 direction from the corner
        whose (c + 1)-side is unglued."""
        self._build_vertices()
        starts = [cor for cor in self._vertices[vid]
                  if ((cor[0], (cor[1] + 1) % 3)) not in self.glue]
        if not starts:
            raise InvalidSurface("vertex %d is interior" % vid)
        if len(starts) != 1:
            raise InvalidSurface("vertex %d meets several boundary sides" % vid)
        fan = [starts[0]]
        while True:
            nxt = self.corner_step(fan[-1][0], fan[-1][1], -1)
            if nxt is None:
                break
            fan.append(nxt)
        if len(fan) != len(self._vertices[vid]):
            raise InvalidSurface("inconsistent fan at vertex %d" % vid)
        return fan

    # -- global invariants -------------------------------------------------

    def euler_characteristic(self):
        return len(self.vertices) - self.num_edges + self.num_triangles

    def boundary_components(self):
        return sorted(set(self.boundary.values()))

    def num_boundary_components(self):
        return len(set(self.boundary.values()))

    def genus(self):
        chi = self.euler_characteristic()
        b = self.num_boundary_components()
        g2 = 2 - chi - b
        if g2 % 2:
            raise InvalidSurface("non-orientable Euler data")
        return g2 // 2

    def spec(self, marked=()):
        return SurfaceSpec(self.genus(), self.num_boundary_components(),
                           tuple(sorted(marked)))

    def interior_edges(self):
        return [e for e in range(self.num_edges) if e not in self.boundary]

    def boundary_edges_of(self, comp):
        return [e for e, j in self.boundary.items() if j == comp]

    def is_boundary_edge(self, e):
        return e in self.boundary

    # -- flips -------------------------------------------------------------

    def flipped(self, e):
        """Flip interior edge e; returns (surface, FlipInfo).

        The new diagonal keeps the edge id.  Raises NonFlippableEdge for a
        boundary edge or when both sides of e lie in a single triangle.
        """
        if e in self.boundary:
            raise NonFlippableEdge("edge %d is on the boundary" % e)
        (t1, s1), (t2, s2) = self.edge_slots[e]
        if t1 == t2:
            raise NonFlippableEdge("edge %d is inside one triangle" % e)

        slot_a = (t1, (s1 + 2) % 3)
        slot_b = (t2, (s2 + 1) % 3)
        slot_c = (t2, (s2 + 2) % 3)
        slot_d = (t1, (s1 + 1) % 3)
        ea = self.tri[slot_a[0]][slot_a[1]]
        eb = self.tri[slot_b[0]][slot_b[1]]
        ec = self.tri[slot_c[0]][slot_c[1]]
        ed = self.tri[slot_d[0]][slot_d[1]]

        remap = {slot_a: (t1, 2), slot_b: (t1, 0),
                 slot_c: (t2, 2), slot_d: (t2, 0)}
        tri = list(list(tr) for tr in self.tri)
        tri[t1] = [eb, e, ea]
        tri[t2] = [ed, e, ec]

        glue = {}
        for slot, partner in self.glue.items():
            if slot in ((t1, s1), (t2, s2)):
                continue
            glue[remap.get(slot, slot)] = remap.get(partner, partner)
        glue[(t1, 1)] = (t2, 1)
        glue[(t2, 1)] = (t1, 1)

        surf = Surface(tri, glue, self.boundary, check=False)
        info = FlipInfo(edge=e, sides=(ea, eb, ec, ed))
        return surf, info


@dataclass(frozen=True)
class FlipInfo:
    """Data needed to transport weight vectors through a flip."""

    edge: int
    sides: tuple  # edge ids (a, b, c, d) around the square, (a, c) opposite


# ---------------------------------------------------------------------------
# builders


def _polygon_surface(word):
    """Glue a triangulated polygon.

    word is a list of side labels: ('pair', key, invflag) for identified
    sides and ('free', component) for boundary sides.  The polygon is
    fan-triangulated from corner 0.
    """
    n = len(word)
    if n < 3:
        raise UnsupportedSurface("polygon with %d sides" % n)

    edge_ids = {}
    side_edge = []
    boundary = {}
    for label in word:
        if label[0] == 'pair':
            key = label[1]
            if key not in edge_ids:
                edge_ids[key] = len(edge_ids)
            side_edge.append(edge_ids[key])
        else:
            e = len(edge_ids)
            edge_ids[('free', len(boundary))] = e
            boundary[e] = label[1]
            side_edge.append(e)
    next_edge = len(edge_ids)
    diag = {}
    for m in range(2, n - 1):
        diag[m] = next_edge
        next_edge += 1

    def side_slot(i):
        if i == 0:
            return (0, 2)
        if i == n - 1:
            return (n - 3, 1)
        return (i - 1, 0)

    tri = []
    for k in range(n - 2):
        e_side0 = side_edge[k + 1]
        e_side1 = side_edge[n - 1] if k == n - 3 else diag[k + 2]
        e_side2 = side_edge[0] if k == 0 else diag[k + 1]
        tri.append((e_side0, e_side1, e_side2))

    glue = {}
    for m in range(2, n - 1):
        glue[(m - 2, 1)] = (m - 1, 2)
        glue[(m - 1, 2)] = (m - 2, 1)
    pair_sides = {}
    for i, label in enumerate(word):
        if label[0] == 'pair':
            pair_sides.setdefault(label[1], []).append(i)
    for key, (i, j) in pair_sides.items():
        si, sj = side_slot(i), side_slot(j)
        glue[si] = sj
        glue[sj] = si

    return Surface(tri, glue, boundary)


def build_surface(genus, boundary):
    """A standard triangulation of the orientable surface S_{genus, boundary}.

    With boundary, every vertex lies on the boundary and each component is a
    single loop edge.  Closed surfaces use a one-vertex triangulation.
    Surfaces with no triangulated model (sphere, disk) are rejected.
    """
    g, b = genus, boundary
    if b == 0:
        if g == 0:
            raise UnsupportedSurface("sphere has no one-vertex triangulation")
        word = []
        for j in range(g):
            word += [('pair', ('a', j), 0), ('pair', ('b', j), 0),
                     ('pair', ('a', j), 1), ('pair', ('b', j), 1)]
        return _polygon_surface(word)
    if (g, b) == (0, 1):
        raise UnsupportedSurface("disk carries no essential curves or arcs")
    word = []
    for j in range(g):
        word += [('pair', ('a', j), 0), ('pair', ('b', j), 0),
                 ('pair', ('a', j), 1), ('pair', ('b', j), 1)]
    word.append(('free', 0))
    for j in range(1, b):
        word += [('pair', ('c', j), 0), ('free', j), ('pair', ('c', j), 1)]
    surf = _polygon_surface(word)

    if surf.genus() != g or surf.num_boundary_components() != b:
        raise InvalidSurface("builder produced the wrong topological type")
    comp_vertices = {}
    for e, j in surf.boundary.items():
        va, vb = surf.edge_vertices(e)
        if va != vb:
            raise InvalidSurface("boundary edge %d is not a loop" % e)
        comp_vertices.setdefault(j, set()).add(va)
    if sorted(comp_vertices) != list(range(b)):
        raise InvalidSurface("boundary components mislabelled")
    if len(surf.vertices) != b:
        raise InvalidSurface("interior vertex in a bounded surface")
    return surf


def from_spec(spec):
    return build_surface(spec.genus, spec.boundary)
