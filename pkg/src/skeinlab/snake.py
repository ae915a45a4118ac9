"""Snake, band and loop graphs of curves, their (good) matchings and the
matching-weight expansion.

One square tile per crossing of the (hooked) curve.  Tile k is bounded by the
four non-diagonal edges of the two triangles flanking crossing k; vertices are
surface corners, recorded as (position in the triangle sequence, corner 0..2
of that triangle's walk), so consecutive tiles glue automatically by sharing
labels.  Closed curves close up into a band graph and hooked notched arcs get
loop identifications: a second copy of the cut edge whose two copies are
identified, with the flanking corners matched across the cut.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from . import curves as cv
from . import expansion as ex
from . import ring
from . import surface as sf

ROLES = ("X", "Y", "P", "Q")
# side role -> (slot of first endpoint, slot of second endpoint)
ROLE_SLOTS = {"X": (0, 1), "Y": (1, 2), "P": (2, 3), "Q": (3, 0)}


@dataclass(frozen=True)
class Tile:
    index: int
    diagonal: str  # surface edge id of the crossing
    rel_orientation: int  # +1 / -1, alternating along the graph
    sides: dict  # role -> canonical edge key
    side_labels: dict  # role -> surface edge id
    glue_next: object = None  # canonical key of the side shared with tile k+1


@dataclass(frozen=True)
class Cut:
    occ_a: int  # triangle-sequence position of the first copy
    occ_b: int  # ... and of the second copy (same surface triangle)
    triangle: int  # surface triangle index
    edge_key: object  # canonical key of the identified edge
    vertex_classes: tuple  # per endpoint: (pre-cut class on side a, on side b)


class GraphEdge:
    __slots__ = (
        "key", "label", "is_boundary", "endpoints", "tiles", "corner_labels",
        "uncut_endpoints",
    )

    def __init__(self, key, label, is_boundary):
        self.key = key
        self.label = label
        self.is_boundary = is_boundary
        self.endpoints = None
        self.tiles = []
        self.corner_labels = set()
        self.uncut_endpoints = None


@dataclass(frozen=True)
class Matching:
    edges: frozenset  # canonical edge keys

    def labels(self, g):
        return sorted(g.edges[k].label for k in self.edges)


class SnakeGraph:
    """tiles, edges (key -> GraphEdge), vertex classes, cuts; built by
    build_graph."""

    def __init__(self, t, curve, tiles, edges, vertices, cuts):
        self.t = t
        self.curve = curve
        self.tiles = tiles
        self.edges = edges
        self.vertices = vertices  # sorted list of frozensets of corner labels
        self.cuts = cuts
        self._matchings = None
        self._extremes = None
        self._pmin = None

    def dump(self):
        out = []
        for tile in self.tiles:
            out.append(
                "tile %d: diag=%s rel=%+d  %s"
                % (
                    tile.index,
                    tile.diagonal,
                    tile.rel_orientation,
                    "  ".join("%s=%s" % (r, tile.side_labels[r]) for r in ROLES),
                )
            )
            if tile.glue_next is not None:
                out.append("  glue to next via %s" % (tile.glue_next,))
        for cut in self.cuts:
            out.append(
                "cut: %s identified between positions %d and %d (triangle %d)"
                % (cut.edge_key, cut.occ_a, cut.occ_b, cut.triangle)
            )
        return "\n".join(out)


def _hook_data(t, c):
    """The crossing list/triangle sequence actually tiled, plus the cut
    descriptions (occ_a, occ_b, triangle, cut edge id)."""
    if c.is_closed():
        tris = cv.triangle_sequence(t, c)
        xs = list(c.crossings)
        bp = tris[0]
        third = [e for e in t.triangles[bp] if e not in (xs[-1], xs[0])]
        if len(third) != 1:
            raise cv.CurveError(
                "bad-basepoint",
                "basepoint triangle %d does not have a unique non-crossed edge" % bp,
            )
        return xs, tris, [(0, len(xs), bp, third[0])]
    if not c.crossings:
        raise cv.CurveError(
            "unsupported", "snake graphs need at least one crossing; arcs of T have none"
        )
    cuts = []
    for v, tag, extreme in (
        (c.start, c.tag_start, c.crossings[0]),
        (c.end, c.tag_end, c.crossings[-1]),
    ):
        if tag == cv.NOTCHED and v in t.endpoints(extreme):
            # the curve already wraps into the puncture it is notched at; the
            # hook either duplicates or cancels crossings and the loop-graph
            # tiling breaks down.  The order-ideal expansion still applies.
            raise cv.CurveError(
                "unsupported",
                "loop graph unavailable: extreme crossing %s is a spoke at the "
                "notched puncture %s (use the poset expansion instead)" % (extreme, v),
            )
    hooked = c
    if cv.NOTCHED in c.tags():
        hooked = cv.hooked_curve(t, c)
        for a, b in zip(hooked.crossings, hooked.crossings[1:]):
            if a == b:
                raise cv.CurveError(
                    "unsupported",
                    "loop graph unavailable: hook cancels against the curve "
                    "(consecutive crossings of %s); use the poset expansion" % a,
                )
    xs = list(hooked.crossings)
    tris = cv.triangle_sequence(t, hooked)
    d = len(xs)
    if c.tag_start == cv.NOTCHED:
        m = len(cv.spoke_chain(t, c.start, c.crossings[0], cv.triangle_sequence(t, c)[0]))
        # Delta_0 occurs at positions 0 and m; identified edge is 1^s = xs[m-1]
        cuts.append((0, m, tris[0], xs[m - 1]))
    if c.tag_end == cv.NOTCHED:
        h = len(cv.spoke_chain(t, c.end, c.crossings[-1], cv.triangle_sequence(t, c)[-1]))
        n = d - h
        # Delta_d occurs at positions n and d; identified edge is 1^t = xs[n]
        cuts.append((n, d, tris[d], xs[n]))
    return xs, tris, cuts


class _UnionFind(dict):
    def find(self, x):
        while self[x] != x:
            self[x] = self[self[x]]
            x = self[x]
        return x

    def union(self, a, b):
        self.setdefault(a, a)
        self.setdefault(b, b)
        self[self.find(a)] = self.find(b)


def build_graph(t, c):
    cv.validate_curve(t, c)
    xs, tris, cut_specs = _hook_data(t, c)
    d = len(xs)

    # canonical side keys: cut copies (occ_b, pos) fold onto (occ_a, pos)
    remap = {}
    for (a, b, tri, edge) in cut_specs:
        w = t.walk(tri)
        pg = [i for i in range(3) if w[i][0] == edge][0]
        remap[(b, pg)] = (a, pg)

    def canon(key):
        return remap.get(key, key)

    # Corner nodes are tile-local: (tile index, slot 0..3).  Each slot also
    # carries the surface-corner labels (triangle-sequence position, corner
    # 0..2 of that triangle's walk) used to match corners across gluings.
    edges = {}
    tile_raw = []
    slot_surface = []  # per tile: slot -> set of surface labels
    for k in range(d):
        t1, t2 = tris[k], tris[k + 1]
        w1, w2 = t.walk(t1), t.walk(t2)
        i1 = [i for i in range(3) if w1[i][0] == xs[k]][0]
        i2 = [i for i in range(3) if w2[i][0] == xs[k]][0]
        slots = (
            {(k, i1), (k + 1, (i2 + 2) % 3)},
            {(k, (i1 + 1) % 3)},
            {(k, (i1 + 2) % 3), (k + 1, i2)},
            {(k + 1, (i2 + 1) % 3)},
        )
        slot_surface.append(slots)
        side_ids = {
            "X": (k, (i1 + 1) % 3),
            "Y": (k, (i1 + 2) % 3),
            "P": (k + 1, (i2 + 1) % 3),
            "Q": (k + 1, (i2 + 2) % 3),
        }
        side_edge = {"X": w1[(i1 + 1) % 3][0], "Y": w1[(i1 + 2) % 3][0],
                     "P": w2[(i2 + 1) % 3][0], "Q": w2[(i2 + 2) % 3][0]}
        tile_sides = {}
        for role in ROLES:
            key = canon(side_ids[role])
            e = side_edge[role]
            ge = edges.get(key)
            if ge is None:
                ge = edges[key] = GraphEdge(key, e, not t.is_interior(e))
            elif ge.label != e:
                raise cv.CurveError(
                    "bad-crossing", "side %r relabeled %s vs %s" % (key, ge.label, e)
                )
            ge.tiles.append((k, role))
            s0, s1 = ROLE_SLOTS[role]
            ge.corner_labels.add((k, s0))
            ge.corner_labels.add((k, s1))
            tile_sides[role] = key
        tile_raw.append((xs[k], tile_sides, side_edge))

    def slot_with(k, surface_label):
        for s in range(4):
            if surface_label in slot_surface[k][s]:
                return s
        raise cv.CurveError(
            "bad-crossing", "tile %d has no corner labelled %r" % (k, surface_label)
        )

    # consecutive tiles share exactly the two endpoints of their glue edge
    # (the third edge of the triangle between the crossings)
    uf = _UnionFind()
    for k in range(d):
        for s in range(4):
            uf.setdefault((k, s), (k, s))
    for k in range(d - 1):
        theta = tris[k + 1]
        shared = [e for e in t.triangles[theta] if e not in (xs[k], xs[k + 1])]
        if len(shared) != 1:
            raise cv.CurveError(
                "bad-crossing",
                "triangle %d between crossings %s,%s has no unique third edge"
                % (theta, xs[k], xs[k + 1]),
            )
        w = t.walk(theta)
        pg = [i for i in range(3) if w[i][0] == shared[0]][0]
        for cpos in ((pg - 1) % 3, pg):
            uf.union((k, slot_with(k, (k + 1, cpos))), (k + 1, slot_with(k + 1, (k + 1, cpos))))

    def freeze(union):
        classes = {}
        for node in list(union):
            classes.setdefault(union.find(node), set()).add(node)
        byname = {}
        for labs in classes.values():
            fs = frozenset(labs)
            for lab in fs:
                byname[lab] = fs
        return byname

    uncut = freeze(uf)

    # planar embedding of the strip: first triangle of each tile fills the
    # south-west half, so for even tiles (rel +1) the roles sit at
    # X=S Y=W P=N Q=E, and for odd tiles S/W and N/E swap
    compass_even = {"X": "S", "Y": "W", "P": "N", "Q": "E"}
    compass_odd = {"X": "W", "Y": "S", "P": "E", "Q": "N"}
    slot_offset_even = {0: (1, 0), 1: (0, 0), 2: (0, 1), 3: (1, 1)}
    slot_offset_odd = {0: (0, 1), 1: (0, 0), 2: (1, 0), 3: (1, 1)}
    pos = [(0, 0)]
    for k in range(d - 1):
        theta = tris[k + 1]
        shared = [e for e in t.triangles[theta] if e not in (xs[k], xs[k + 1])][0]
        _, _, side_edge = tile_raw[k]
        role = "P" if side_edge["P"] == shared else "Q"
        comp = (compass_even if k % 2 == 0 else compass_odd)[role]
        px, py = pos[k]
        pos.append((px, py + 1) if comp == "N" else (px + 1, py))

    def corner_xy(k, slot):
        off = (slot_offset_even if k % 2 == 0 else slot_offset_odd)[slot]
        return (pos[k][0] + off[0], pos[k][1] + off[1])

    # cut identifications: the two copies of the cut edge are glued matching
    # planar positions (south-west endpoint to south-west endpoint)
    cuts = []
    for (a, b, tri, edge) in cut_specs:
        w = t.walk(tri)
        pg = [i for i in range(3) if w[i][0] == edge][0]
        ge = edges[canon((a, pg))]
        tile_of_occ = {}
        for (k, role) in ge.tiles:
            occ = k if role in ("X", "Y") else k + 1
            tile_of_occ[occ] = (k, role)
        if set(tile_of_occ) != {a, b}:
            raise cv.CurveError(
                "bad-crossing",
                "cut edge %s copies found at %r, expected occurrences %d,%d"
                % (edge, sorted(tile_of_occ), a, b),
            )
        (ta, ra), (tb, rb) = tile_of_occ[a], tile_of_occ[b]
        ends_a = sorted(ROLE_SLOTS[ra], key=lambda s: corner_xy(ta, s))
        ends_b = sorted(ROLE_SLOTS[rb], key=lambda s: corner_xy(tb, s))
        pairs = []
        for sa, sb in zip(ends_a, ends_b):
            na, nb = (ta, sa), (tb, sb)
            pairs.append((uncut[na], uncut[nb]))
            uf.union(na, nb)
        cuts.append((a, b, tri, canon((a, pg)), pairs))

    vclass = freeze(uf)
    vertices = sorted(set(vclass.values()), key=lambda fs: sorted(fs))
    for ge in edges.values():
        eps = sorted(set(vclass[lab] for lab in ge.corner_labels), key=sorted)
        if len(eps) != 2:
            raise cv.CurveError(
                "bad-crossing",
                "graph edge %r has %d endpoint classes" % (ge.key, len(eps)),
            )
        ge.endpoints = tuple(eps)
        ge.uncut_endpoints = set()
        for lab in ge.corner_labels:
            ge.uncut_endpoints.add(uncut[lab])

    tiles = []
    for k in range(d):
        diag, tile_sides, side_edge = tile_raw[k]
        glue = None
        if k + 1 < d:
            shared = [e for e in t.triangles[tris[k + 1]] if e not in (xs[k], xs[k + 1])]
            for role in ("P", "Q"):
                if side_edge[role] == shared[0]:
                    glue = tile_sides[role]
        tiles.append(
            Tile(
                index=k,
                diagonal=diag,
                rel_orientation=1 if k % 2 == 0 else -1,
                sides=tile_sides,
                side_labels=side_edge,
                glue_next=glue,
            )
        )

    cut_objs = []
    for (a, b, tri, ckey, pairs) in cuts:
        cut_objs.append(Cut(a, b, tri, ckey, tuple(pairs)))
    return SnakeGraph(t, c, tiles, edges, vertices, cut_objs)


# -- matchings --------------------------------------------------------------


def _perfect_matchings(g):
    """All perfect matchings of the (glued) graph, enumerated tile-by-tile:
    vertices are processed in order of the lowest tile touching them."""
    incident = {v: [] for v in g.vertices}
    for key in sorted(g.edges):
        ge = g.edges[key]
        for v in ge.endpoints:
            incident[v].append(key)

    def tile_order(v):
        return (min(lab[0] for lab in v), sorted(v))

    order = sorted(g.vertices, key=tile_order)
    out = []

    def walk(i, covered, chosen):
        while i < len(order) and order[i] in covered:
            i += 1
        if i == len(order):
            out.append(frozenset(chosen))
            return
        v = order[i]
        for key in incident[v]:
            ge = g.edges[key]
            other = ge.endpoints[0] if ge.endpoints[1] == v else ge.endpoints[1]
            if other in covered:
                continue
            covered.add(v)
            covered.add(other)
            chosen.append(key)
            walk(i + 1, covered, chosen)
            chosen.pop()
            covered.remove(v)
            covered.remove(other)

    walk(0, set(), [])
    return out


def _good(g, m):
    """A matching of a band/loop graph is good when it lifts to a perfect
    matching of the cut-open graph: at each cut, both endpoint classes must be
    covered from the same copy of the identified triangle (or by the cut edge
    itself)."""
    for cut in g.cuts:
        if cut.edge_key in m:
            continue
        sides = []
        for (cls_a, cls_b) in cut.vertex_classes:
            f = None
            for key in m:
                ge = g.edges[key]
                if cls_a in ge.uncut_endpoints or cls_b in ge.uncut_endpoints:
                    f = ge
                    break
            if f is None:
                return False
            on_a = cls_a in f.uncut_endpoints
            on_b = cls_b in f.uncut_endpoints
            if on_a and on_b:
                # only the cut edge itself touches both copies
                return False
            sides.append(on_a)
        if sides[0] != sides[1]:
            return False
    return True


def matchings(g):
    """All perfect matchings (snake graphs) / good matchings (band and loop
    graphs), each exactly once, in a deterministic order."""
    if g._matchings is None:
        found = []
        seen = set()
        for m in _perfect_matchings(g):
            if m in seen:
                continue
            seen.add(m)
            if g.cuts and not _good(g, m):
                continue
            found.append(Matching(m))
        g._matchings = found
    return list(g._matchings)


def _x_monomial(g, m):
    x = [0] * g.t.n
    for key in m.edges:
        ge = g.edges[key]
        if not ge.is_boundary:
            x[g.t.var_index[ge.label]] += 1
    return ring.Monomial(tuple(x), (0,) * g.t.n)


def extreme_matchings(g):
    """The two matchings using only graph-boundary edges (sides belonging to a
    single tile and not identified by a cut)."""
    if g._extremes is None:
        boundary = set(
            key
            for key, ge in g.edges.items()
            if len(ge.tiles) == 1 and all(cut.edge_key != key for cut in g.cuts)
        )
        ext = [m for m in matchings(g) if m.edges <= boundary]
        if len(ext) != 2:
            raise cv.CurveError(
                "bad-crossing",
                "expected exactly 2 extreme matchings, found %d" % len(ext),
            )
        g._extremes = ext
    return list(g._extremes)


def minimal_matching(g):
    """P_min: of the two extreme matchings, the one whose companion exceeds it
    by the x-part of the product of yhat over all tile diagonals."""
    if g._pmin is not None:
        return g._pmin
    e1, e2 = extreme_matchings(g)
    prod = ring.mono_one(g.t.n)
    for tile in g.tiles:
        prod = prod * ex.yhat_monomial(g.t, tile.diagonal)
    xpart = prod.x_exponents
    x1 = _x_monomial(g, e1).x_exponents
    x2 = _x_monomial(g, e2).x_exponents
    diff21 = tuple(a - b for a, b in zip(x2, x1))
    diff12 = tuple(a - b for a, b in zip(x1, x2))
    if diff21 == xpart and diff12 != xpart:
        g._pmin = e1
    elif diff12 == xpart and diff21 != xpart:
        g._pmin = e2
    else:
        # yhat ratio does not separate them; fall back to the clockwise
        # neighbor of the first crossing in its first triangle, which belongs
        # to the minimal matching
        xs, tris, _ = _hook_data(g.t, g.curve)
        pred, _ = sf.neighbor(g.t, xs[0], tris[0], sf.CW)
        key0 = g.tiles[0].sides["X"] if g.tiles[0].side_labels["X"] == pred else (
            g.tiles[0].sides["Y"] if g.tiles[0].side_labels["Y"] == pred else None
        )
        chosen = None
        if key0 is not None:
            for cand in (e1, e2):
                if key0 in cand.edges:
                    chosen = cand
                    break
        if chosen is None:
            raise cv.CurveError("bad-crossing", "cannot identify the minimal matching")
        g._pmin = chosen
    return g._pmin


def _twist_set(g, m):
    """The set of tiles enclosed by the symmetric difference with P_min: solve
    xor over tiles of the tile 4-cycles = m ^ P_min (GF(2); the system is
    always uniquely solvable for snake/band/loop graphs)."""
    pmin = minimal_matching(g)
    target = set(m.edges) ^ set(pmin.edges)
    ncols = len(g.tiles)
    rows = {}
    for k, tile in enumerate(g.tiles):
        cyc = set(tile.sides.values())
        if len(cyc) != 4:
            raise cv.CurveError("bad-crossing", "degenerate tile %d cycle" % k)
        for key in cyc:
            rows.setdefault(key, 0)
            rows[key] ^= 1 << k
    eqs = [(bits, 1 if key in target else 0) for key, bits in rows.items()]
    extra = [key for key in target if key not in rows]
    if extra:
        raise cv.CurveError("bad-crossing", "difference uses non-cycle edges %r" % extra)
    # gaussian elimination
    sol = 0
    pivots = []
    for bits, rhs in eqs:
        for pbits, prhs, pcol in pivots:
            if bits >> pcol & 1:
                bits ^= pbits
                rhs ^= prhs
        if bits:
            col = bits.bit_length() - 1
            pivots.append((bits, rhs, col))
        elif rhs:
            raise cv.CurveError("bad-crossing", "inconsistent twist system")
    if len(pivots) != ncols:
        raise cv.CurveError("bad-crossing", "twist system is underdetermined")
    # back-substitute; pivot columns are the highest bit of their row, so in
    # ascending column order every other set bit is already assigned
    assign = {}
    for bits, rhs, col in sorted(pivots, key=lambda p: p[2]):
        v = rhs
        for c in range(col):
            if (bits >> c & 1) and assign.get(c, 0):
                v ^= 1
        assign[col] = v
    return set(k for k in range(ncols) if assign.get(k, 0))


def matching_weight(g, m):
    """(x-monomial, y-monomial) of a matching: matched interior side labels,
    and the diagonals of the tiles twisted relative to P_min."""
    if not isinstance(m, Matching) or not m.edges <= set(g.edges):
        raise ValueError("matching does not belong to this graph")
    x = _x_monomial(g, m)
    y = [0] * g.t.n
    for k in _twist_set(g, m):
        y[g.t.var_index[g.tiles[k].diagonal]] += 1
    return x, ring.Monomial((0,) * g.t.n, tuple(y))


def msw_expansion(t, c):
    """Matching-sum expansion: sum over (good) matchings of x(P)y(P), divided
    by the crossing monomial."""
    if not c.is_closed() and not c.crossings:
        # arcs of T: trivial for plain tags, monogon reduction for one notch
        tags = c.tags()
        if cv.NOTCHED not in tags:
            return ring.LaurentElem.x_var(t.n, t.var_index[c.edge])
        if tags == (cv.NOTCHED, cv.NOTCHED):
            raise cv.CurveError(
                "unsupported",
                "matching expansion of a doubly notched arc of T is not defined here",
            )
        inv = ring.mono_x(t.n, t.var_index[c.edge], -1)
        return msw_expansion(t, cv.hooked_curve(t, c)).mul_monomial(inv)
    g = build_graph(t, c)
    cross = ex.cross_monomial(t, c)
    inv = ring.Monomial(tuple(-a for a in cross.x_exponents), (0,) * t.n)
    terms = {}
    for m in matchings(g):
        x, y = matching_weight(g, m)
        mono = x * y * inv
        terms[mono] = terms.get(mono, 0) + 1
    return ring.LaurentElem(t.n, terms)
