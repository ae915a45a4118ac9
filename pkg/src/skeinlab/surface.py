"""Combinatorial model of a marked surface with an ideal triangulation.

A Triangulation stores vertices (punctures / boundary marked points), edges
(interior arcs / boundary segments) and triangles.  Each triangle is an ordered
edge triple giving the counterclockwise boundary walk of the triangle with
respect to the surface orientation.

Rotation conventions used throughout the package:

* neighbor(e, tri, "cw") is the edge you meet next after e when walking the
  triangle boundary clockwise, i.e. the predecessor of e in the stored
  counterclockwise triple.  "ccw" is the successor.
* spokes(p, anchor) lists the interior edges at a puncture in counterclockwise
  cyclic order around the puncture.

These two notions differ (triangle rotation vs. vertex rotation) and both are
needed; they are pinned jointly by the Table-1 poset/g-vector data.
"""

from __future__ import annotations

from dataclasses import dataclass


class SurfaceError(ValueError):
    """Triangulation validation failure; .code identifies the failure kind."""

    def __init__(self, code, message):
        super().__init__("%s: %s" % (code, message))
        self.code = code


class FlipError(ValueError):
    pass


@dataclass(frozen=True)
class CornerRef:
    """A corner of a triangle: triangle index plus position 0..2 of the vertex
    shared by the walk edges at that position."""

    triangle: int
    position: int


PUNCTURE = "puncture"
BOUNDARY_POINT = "boundary-marked-point"
INTERIOR = "interior"
BOUNDARY = "boundary"


class Triangulation:
    """vertices: {id: kind}, edges: {id: (kind, (u, v))}, triangles: list of
    edge-id triples (counterclockwise boundary walk).

    Interior edges get x/y variable slots in their order of appearance in
    `edges`; boundary edges carry no variables.
    """

    def __init__(self, vertices, edges, triangles):
        self.vertices = dict(vertices)
        self.edges = {e: (kind, tuple(ends)) for e, (kind, ends) in edges.items()}
        self.triangles = [tuple(tri) for tri in triangles]
        self.interior_edges = [e for e, (kind, _) in self.edges.items() if kind == INTERIOR]
        self.var_index = {e: i for i, e in enumerate(self.interior_edges)}
        self.n = len(self.interior_edges)
        self._edge_triangles = {}
        for ti, tri in enumerate(self.triangles):
            for e in tri:
                self._edge_triangles.setdefault(e, []).append(ti)
        self._walks = None  # directed walks, built lazily (needs valid data)
        self._rotations = None

    # -- basic queries -----------------------------------------------------

    def is_puncture(self, v):
        return self.vertices.get(v) == PUNCTURE

    def is_interior(self, e):
        return self.edges[e][0] == INTERIOR

    def endpoints(self, e):
        return self.edges[e][1]

    def triangles_of_edge(self, e):
        return list(self._edge_triangles.get(e, []))

    def edge_vars(self):
        """Interior edge ids in variable-slot order."""
        return list(self.interior_edges)

    # -- directed walks and vertex rotations -------------------------------

    def _build_walks(self):
        """For each triangle, orient its stored edge triple into a closed walk
        of directed edges; corner i is the head of edge i."""
        walks = []
        for ti, tri in enumerate(self.triangles):
            ends = [self.endpoints(e) for e in tri]
            assignment = None
            for c0, c1 in (ends[1], ends[1][::-1]):
                for c1b, c2 in (ends[2], ends[2][::-1]):
                    if c1b != c1:
                        continue
                    if sorted((c2, c0)) == sorted(ends[0]):
                        assignment = (c0, c1, c2)
                        break
                if assignment:
                    break
            if assignment is None:
                raise SurfaceError(
                    "dangling-edge",
                    "triangle %d edges %r do not close up into a walk" % (ti, tri),
                )
            c0, c1, c2 = assignment
            # directed edges: e0: c2->c0, e1: c0->c1, e2: c1->c2
            walks.append(((tri[0], c2, c0), (tri[1], c0, c1), (tri[2], c1, c2)))
        self._walks = walks

    def walk(self, ti):
        """Triangle ti as a tuple of directed edges (edge_id, tail, head)."""
        if self._walks is None:
            self._build_walks()
        return self._walks[ti]

    def _build_rotations(self):
        """next_ccw[(v, (e_out, occ))] = (e_in, occ): at corner v between the
        incoming walk edge e_in and outgoing e_out, the CCW rotation around v
        goes from e_out to e_in.  `occ` distinguishes the two ends of an edge
        with equal endpoints (0 for the tail end, 1 for the head end as the
        edge is oriented in that triangle's walk; normalized so a non-loop
        edge always has occ keyed by the vertex)."""
        if self._walks is None:
            self._build_walks()
        nxt = {}
        for ti in range(len(self.triangles)):
            w = self.walk(ti)
            for i in range(3):
                e_in = w[i]
                e_out = w[(i + 1) % 3]
                v = e_in[2]  # head of incoming = tail of outgoing = corner
                key = (v, self._end_key(e_out[0], ti, tail=True))
                val = (v, self._end_key(e_in[0], ti, tail=False))
                nxt[key] = val
        self._rotations = nxt

    def _end_key(self, e, ti, tail):
        u0, u1 = self.endpoints(e)
        if u0 != u1:
            return (e, 0)
        # Loop edge: its two geometric ends must get stable tags.  The two
        # triangles traverse the loop in opposite directions (orientation
        # consistency), so the tail end in one triangle is the head end in the
        # other; the lower-indexed triangle's walk is the reference, whose
        # tail end is occurrence 0.
        ref = min(self.triangles_of_edge(e))
        same = ti == ref
        occ = 0 if (tail == same) else 1
        return (e, occ)

    def rotation_next_ccw(self, v, end):
        """One CCW step around vertex v; `end` is an (edge, occ) key."""
        if self._rotations is None:
            self._build_rotations()
        return self._rotations[(v, end)][1]

    def incident_ends(self, v):
        """All (edge, occ) ends at v (loop edges contribute two)."""
        if self._rotations is None:
            self._build_rotations()
        return sorted(set(k[1] for k in self._rotations if k[0] == v))


def validate_triangulation(t):
    """Raise SurfaceError with a distinct code on the first violated invariant."""
    for e, (kind, (u, v)) in t.edges.items():
        if u not in t.vertices or v not in t.vertices:
            raise SurfaceError("dangling-edge", "edge %s has unknown endpoint" % e)
    for ti, tri in enumerate(t.triangles):
        if len(set(tri)) != 3:
            raise SurfaceError("self-folded", "triangle %d repeats an edge: %r" % (ti, tri))
        for e in tri:
            if e not in t.edges:
                raise SurfaceError("dangling-edge", "triangle %d uses unknown edge %s" % (ti, e))
    for e, (kind, _) in t.edges.items():
        tis = t.triangles_of_edge(e)
        want = 2 if kind == INTERIOR else 1
        if len(tis) != want:
            raise SurfaceError(
                "dangling-edge",
                "%s edge %s lies in %d triangles, expected %d" % (kind, e, len(tis), want),
            )
    # walks must close up; also checks adjacent edges share a vertex
    for ti in range(len(t.triangles)):
        t.walk(ti)
    # orientation consistency: an interior edge must be traversed in opposite
    # directions by its two triangles
    for e, (kind, _) in t.edges.items():
        if kind != INTERIOR:
            continue
        dirs = []
        for ti in t.triangles_of_edge(e):
            for (eid, tail, head) in t.walk(ti):
                if eid == e:
                    dirs.append((tail, head))
        if len(dirs) == 2 and dirs[0] == dirs[1] and dirs[0][0] != dirs[0][1]:
            raise SurfaceError(
                "orientation",
                "edge %s traversed in the same direction by both triangles" % e,
            )
    for v, kind in t.vertices.items():
        if kind == PUNCTURE:
            deg = sum(
                (2 if t.endpoints(e)[0] == t.endpoints(e)[1] == v else 1)
                for e in t.interior_edges
                if v in t.endpoints(e)
            )
            if deg < 2:
                raise SurfaceError(
                    "puncture-degree",
                    "puncture %s has %d incident interior arc ends, needs >= 2" % (v, deg),
                )


CW = "cw"
CCW = "ccw"


def neighbor(t, e, ti, direction):
    """Edge of triangle ti adjacent to e in the given rotational direction:
    "cw" = predecessor of e in the stored CCW walk, "ccw" = successor.
    Returns (edge_id, is_boundary)."""
    tri = t.triangles[ti]
    if e not in tri:
        raise ValueError("edge %s not in triangle %d" % (e, ti))
    i = tri.index(e)
    j = (i - 1) % 3 if direction == CW else (i + 1) % 3
    other = tri[j]
    return other, not t.is_interior(other)


def spokes(t, p, anchor, anchor_occ=0):
    """All interior edges incident to puncture p in CCW cyclic order starting
    after `anchor` (an (edge, occ) end; occ matters only for loop edges).
    Returns a list of (edge, occ) ends; an edge with both endpoints at p
    appears twice."""
    if not t.is_puncture(p):
        raise ValueError("%s is not a puncture" % p)
    ends = t.incident_ends(p)
    start = (anchor, anchor_occ)
    if start not in ends:
        raise ValueError("anchor %r not incident to %s" % (start, p))
    out = []
    cur = t.rotation_next_ccw(p, start)
    while cur != start:
        out.append(cur)
        cur = t.rotation_next_ccw(p, cur)
    out.append(start)
    return out


def flip(t, e):
    """Flip interior edge e, preserving its id.  Raises FlipError when the
    flip would break a triangulation invariant (self-folded triangle,
    2-spoke puncture, ...)."""
    if not t.is_interior(e):
        raise FlipError("cannot flip boundary edge %s" % e)
    t1, t2 = t.triangles_of_edge(e)
    w1 = [d for d in t.walk(t1)]
    w2 = [d for d in t.walk(t2)]
    while w1[0][0] != e:
        w1 = w1[1:] + w1[:1]
    while w2[0][0] != e:
        w2 = w2[1:] + w2[:1]
    # w1: e (u->v), b (v->w), c (w->u); w2: e (v->u), d (u->z), f (z->v)
    b, c = w1[1], w1[2]
    d, f = w2[1], w2[2]
    w, z = c[1], f[1]
    new_edges = dict(t.edges)
    new_edges[e] = (INTERIOR, (w, z))
    new_triangles = list(t.triangles)
    # new CCW walks: (c, d, e: z->w) and (f, b, e: w->z)
    new_triangles[t1] = (c[0], d[0], e)
    new_triangles[t2] = (f[0], b[0], e)
    out = Triangulation(t.vertices, new_edges, new_triangles)
    try:
        validate_triangulation(out)
    except SurfaceError as err:
        raise FlipError("flip of %s is illegal: %s" % (e, err)) from err
    return out
