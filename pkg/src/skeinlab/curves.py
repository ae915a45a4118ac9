"""Tagged arcs, closed curves and multicurves as combinatorial crossing data.

A curve is recorded by the ordered list of interior edges it crosses; no
geometric coordinates are kept.  Two curves are the same iff equal as data;
inputs are expected to be in minimal position (only immediate backtracks are
rejected).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import surface as sf

PLAIN = "plain"
NOTCHED = "notched"
ARC = "arc"
CLOSED = "closed"


class CurveError(ValueError):
    def __init__(self, code, message):
        super().__init__("%s: %s" % (code, message))
        self.code = code


@dataclass(frozen=True)
class TaggedCurve:
    kind: str  # "arc" | "closed"
    crossings: tuple
    start: str = None
    end: str = None
    tag_start: str = PLAIN
    tag_end: str = PLAIN
    basepoint: int = None  # triangle index cutting a closed curve's cycle
    edge: str = None  # the arc of T itself, when crossings is empty

    def __post_init__(self):
        object.__setattr__(self, "crossings", tuple(self.crossings))

    def is_closed(self):
        return self.kind == CLOSED

    def tags(self):
        return (self.tag_start, self.tag_end)


# Special multicurve components with fixed expansion values.


@dataclass(frozen=True)
class ContractibleLoop:
    """A closed curve contractible to a point; contributes -2."""


@dataclass(frozen=True)
class NotchedMonogon:
    """A contractible loop with a single tagged point at puncture p
    (Def. of the singly tagged contractible loop): variant "k0" contributes
    Y_p - 1 and variant "km" contributes 1 - Y_p."""

    puncture: str
    variant: str  # "k0" | "km"


@dataclass(frozen=True)
class PunctureLoop:
    """A closed curve contractible onto puncture p; contributes 1 + Y_p."""

    puncture: str


@dataclass(frozen=True)
class Multicurve:
    components: tuple
    kinks: int = 0

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))
        if self.kinks < 0:
            raise ValueError("kink count must be nonnegative")


def shared_triangles(t, e1, e2):
    return [ti for ti in t.triangles_of_edge(e1) if e2 in t.triangles[ti]]


def triangle_sequence(t, c):
    """Triangles Delta_0..Delta_d that the curve passes through (for closed
    curves Delta_0 = Delta_d = basepoint triangle).  Raises CurveError if the
    crossing list is not realizable."""
    xs = list(c.crossings)
    d = len(xs)
    if d == 0:
        return []
    inner = []
    for j in range(d - 1):
        cand = shared_triangles(t, xs[j], xs[j + 1])
        if not cand:
            raise CurveError(
                "nonadjacent-crossings",
                "crossings %s,%s do not bound a common triangle" % (xs[j], xs[j + 1]),
            )
        inner.append(cand[0])
    if c.is_closed():
        cand = shared_triangles(t, xs[-1], xs[0])
        if not cand:
            raise CurveError(
                "nonadjacent-crossings",
                "closing crossings %s,%s share no triangle" % (xs[-1], xs[0]),
            )
        bp = c.basepoint if c.basepoint is not None else cand[0]
        if bp not in cand:
            raise CurveError("bad-basepoint", "basepoint triangle %r does not join the ends" % bp)
        return [bp] + inner + [bp]
    if not inner:
        # one crossing: the two triangles at the crossed edge, start side first
        tris = t.triangles_of_edge(xs[0])
        for t0 in tris:
            if c.start not in _tri_vertices(t, t0):
                continue
            for t1 in tris:
                if t1 != t0 and c.end in _tri_vertices(t, t1):
                    return [t0, t1]
        raise CurveError(
            "endpoint-mismatch",
            "%s does not separate %s from %s" % (xs[0], c.start, c.end),
        )
    # first crossed edge must bound a triangle containing start
    delta0 = None
    for ti in t.triangles_of_edge(xs[0]):
        if (not inner or ti != inner[0]) and c.start in _tri_vertices(t, ti):
            delta0 = ti
            break
    if delta0 is None and inner:
        # single shared triangle used twice is fine for loops around; fall back
        for ti in t.triangles_of_edge(xs[0]):
            if c.start in _tri_vertices(t, ti):
                delta0 = ti
                break
    if delta0 is None:
        raise CurveError(
            "endpoint-mismatch",
            "start %s is not a vertex of a triangle bounded by %s" % (c.start, xs[0]),
        )
    # the last triangle sits on the far side of the last crossing: never the
    # triangle the curve crossed out of (inner[-1], or delta0 when d = 1)
    before_last = inner[-1] if inner else delta0
    deltad = None
    for ti in reversed(t.triangles_of_edge(xs[-1])):
        if ti != before_last and c.end in _tri_vertices(t, ti):
            deltad = ti
            break
    if deltad is None and inner:
        for ti in t.triangles_of_edge(xs[-1]):
            if c.end in _tri_vertices(t, ti):
                deltad = ti
                break
    if deltad is None:
        raise CurveError(
            "endpoint-mismatch",
            "end %s is not a vertex of a triangle bounded by %s" % (c.end, xs[-1]),
        )
    return [delta0] + inner + [deltad]


def _tri_vertices(t, ti):
    return set(v for (_, u, w) in t.walk(ti) for v in (u, w))


def validate_curve(t, c):
    if c.kind not in (ARC, CLOSED):
        raise CurveError("bad-kind", "unknown curve kind %r" % c.kind)
    for e in c.crossings:
        if e not in t.edges or not t.is_interior(e):
            raise CurveError("bad-crossing", "%s is not an interior edge" % e)
    for a, b in zip(c.crossings, c.crossings[1:]):
        if a == b:
            raise CurveError("backtrack", "curve crosses %s twice consecutively" % a)
    if c.is_closed():
        if not c.crossings:
            raise CurveError("contractible", "a closed curve must cross the triangulation")
        if len(c.crossings) > 1 and c.crossings[0] == c.crossings[-1]:
            raise CurveError("backtrack", "cyclic backtrack across %s" % c.crossings[0])
        triangle_sequence(t, c)
        return
    if c.start not in t.vertices or c.end not in t.vertices:
        raise CurveError("endpoint-mismatch", "unknown endpoint")
    for v, tag in ((c.start, c.tag_start), (c.end, c.tag_end)):
        if tag == NOTCHED and not t.is_puncture(v):
            raise CurveError("notched-boundary", "notched tag at non-puncture %s" % v)
    if not c.crossings:
        if c.edge is None or c.edge not in t.edges or not t.is_interior(c.edge):
            raise CurveError(
                "endpoint-mismatch",
                "a crossing-free arc must name its edge of T via the `edge` field",
            )
        if set((c.start, c.end)) != set(t.endpoints(c.edge)):
            raise CurveError("endpoint-mismatch", "edge %s does not join %s,%s" % (c.edge, c.start, c.end))
        return
    triangle_sequence(t, c)


def spoke_chain(t, p, crossing, delta):
    """The loop chain 1..m at puncture p for a curve whose extreme crossing is
    `crossing` with outer triangle index `delta`: starts at the spoke bounding
    the counterclockwise side of the corner of `delta` at p (the walk edge
    whose head is p), then runs CCW around p.  When the crossing is not itself
    incident to p this is the successor of the crossing in the CCW walk.
    Returns a list of (edge, occ) ends."""
    w = t.walk(delta)
    idx = [i for i in range(3) if w[i][0] == crossing][0]
    start_i = None
    for i in ((idx + 1) % 3, (idx + 2) % 3, idx):
        if w[i][2] == p:
            start_i = i
            break
    if start_i is None:
        raise CurveError(
            "endpoint-mismatch", "triangle %d has no corner at %s" % (delta, p)
        )
    first = w[start_i][0]
    occ = t._end_key(first, delta, tail=False)[1]
    start = (first, occ)
    ends = t.incident_ends(p)
    if start not in ends:
        raise CurveError("endpoint-mismatch", "chain start %r not incident to %s" % (start, p))
    chain = [start]
    cur = t.rotation_next_ccw(p, start)
    while cur != start:
        chain.append(cur)
        cur = t.rotation_next_ccw(p, cur)
    return chain


def hooked_curve(t, c):
    """Replace each notched end of an arc by the hook winding counterclockwise
    around the puncture, crossing every spoke there exactly once."""
    if c.is_closed() or NOTCHED not in c.tags():
        raise CurveError("no-notch", "curve has no notched end to hook")
    if not c.crossings:
        return _hooked_in_T(t, c)
    tris = triangle_sequence(t, c)
    xs = list(c.crossings)
    pre, post = [], []
    if c.tag_start == NOTCHED:
        chain = spoke_chain(t, c.start, xs[0], tris[0])
        pre = [e for (e, _) in reversed(chain)]
    if c.tag_end == NOTCHED:
        chain = spoke_chain(t, c.end, xs[-1], tris[-1])
        post = [e for (e, _) in chain]
    return TaggedCurve(ARC, pre + xs + post, start=c.start, end=c.end)


def _hooked_in_T(t, c):
    """Hook a notched arc whose underlying plain arc is in T: the hook crosses
    every spoke at the puncture except the arc itself (the monogon l_p)."""
    e = c.edge
    if c.tag_start == NOTCHED and c.tag_end == NOTCHED:
        raise CurveError(
            "unsupported",
            "hooked curve for a doubly notched arc of T is not used; "
            "its poset is built directly",
        )
    p = c.start if c.tag_start == NOTCHED else c.end
    other = c.end if c.tag_start == NOTCHED else c.start
    # chain of spokes at p except e, CCW, starting after e
    occ = 0
    ends = t.incident_ends(p)
    if (e, 0) not in ends:
        raise CurveError("endpoint-mismatch", "%s not incident to %s" % (e, p))
    chain = []
    cur = t.rotation_next_ccw(p, (e, occ))
    while cur[0] != e:
        chain.append(cur)
        cur = t.rotation_next_ccw(p, cur)
    xs = [x for (x, _) in chain]
    if c.tag_start == NOTCHED:
        return TaggedCurve(ARC, list(reversed(xs)), start=other, end=p)
    return TaggedCurve(ARC, xs, start=other, end=p)


def reverse(c):
    if c.is_closed():
        return TaggedCurve(CLOSED, tuple(reversed(c.crossings)), basepoint=c.basepoint)
    return TaggedCurve(
        ARC,
        tuple(reversed(c.crossings)),
        start=c.end,
        end=c.start,
        tag_start=c.tag_end,
        tag_end=c.tag_start,
        edge=c.edge,
    )
