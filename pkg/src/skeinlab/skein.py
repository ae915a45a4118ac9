"""Skein relations: detection of incompatibilities and crossings between
tagged curves, construction of the smoothed resolutions, and exact symbolic
verification of the resulting identities

    x_{c1} x_{c2} = x_{C+} + Y x_{C-}

with principal coefficients.  Resolutions are built at the curve level
(spliced crossing lists, cf. the curves module); both sides are expanded and
compared exactly, so every convention below is pinned by the identities
themselves.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import curves as cv
from . import expansion as ex
from . import poset as ps
from . import ring
from . import surface as sf


class SkeinError(ValueError):
    def __init__(self, code, message):
        super().__init__("%s: %s" % (code, message))
        self.code = code


@dataclass(frozen=True)
class BoundarySegment:
    """A spliced end segment that is homotopic into the boundary (its two
    endpoints are joined by a boundary edge); its expansion value is 1."""

    edge: str = None


# ---------------------------------------------------------------------------
# splicing helpers


def _splice(*parts):
    """Concatenate crossing lists, cancelling immediate backtracks created at
    the junctions (free reduction)."""
    out = []
    for part in parts:
        for e in part:
            if out and out[-1] == e:
                out.pop()
            else:
                out.append(e)
    return out


def _edge_between(t, u, v):
    """The edge of T joining u and v; an interior edge gives an arc of T, a
    boundary edge gives a BoundarySegment.  Ambiguity is an error."""
    interior, boundary = [], []
    for e in t.edges:
        if set(t.endpoints(e)) == set((u, v)):
            (interior if t.is_interior(e) else boundary).append(e)
    if len(interior) == 1:
        return interior[0]
    if len(interior) == 0 and boundary:
        return BoundarySegment(boundary[0])
    if not interior and not boundary:
        raise SkeinError(
            "no-edge", "no edge of T joins %s and %s (spliced arc vanished)" % (u, v)
        )
    raise SkeinError(
        "ambiguous-edge", "several edges of T join %s and %s" % (u, v)
    )


def _reduce_corners(t, xs, start, end):
    """Slide off end crossings whose edge contains the endpoint: the final
    segment and a piece of that edge bound a disc inside one triangle, so the
    crossing is removable by isotopy.  Splice junctions routinely create such
    non-minimal presentations and the expansion is presentation-sensitive."""
    xs = list(xs)
    while True:
        if xs and end in t.endpoints(xs[-1]):
            xs.pop()
        elif xs and start in t.endpoints(xs[0]):
            xs.pop(0)
        else:
            return xs


def _arc(t, xs, start, end, tag_start=cv.PLAIN, tag_end=cv.PLAIN):
    xs = _reduce_corners(t, _splice(xs), start, end)
    if xs:
        return cv.TaggedCurve(
            cv.ARC, xs, start=start, end=end, tag_start=tag_start, tag_end=tag_end
        )
    e = _edge_between(t, start, end)
    if isinstance(e, BoundarySegment):
        if cv.NOTCHED in (tag_start, tag_end):
            raise SkeinError("no-edge", "notched end degenerated onto the boundary")
        return e
    return cv.TaggedCurve(
        cv.ARC, (), start=start, end=end, tag_start=tag_start, tag_end=tag_end, edge=e
    )


def _closed(t, xs):
    xs = _splice(xs)
    while len(xs) >= 2 and xs[0] == xs[-1]:
        xs = xs[1:-1]
    if not xs:
        return cv.ContractibleLoop()
    return cv.TaggedCurve(cv.CLOSED, xs)


# ---------------------------------------------------------------------------
# values and y-monomials


def component_value(t, comp):
    if isinstance(comp, BoundarySegment):
        return ring.LaurentElem.one(t.n)
    if isinstance(comp, cv.TaggedCurve):
        return ex.expand(t, comp)
    return ex._special_value(t, comp)


def multicurve_value(t, mc):
    if not isinstance(mc, cv.Multicurve):
        mc = cv.Multicurve(tuple(mc))
    acc = ring.LaurentElem.one(t.n)
    for comp in mc.components:
        acc = acc * component_value(t, comp)
    if mc.kinks % 2:
        acc = acc.scale(-1)
    return acc


def _y_of_labels(t, labels):
    y = [0] * t.n
    for e in labels:
        y[t.var_index[e]] += 1
    return ring.Monomial((0,) * t.n, tuple(y))


def _y_of_indices(t, p, idxs):
    return _y_of_labels(t, [p.label(i) for i in idxs])


def _mono_mul(*ms):
    out = None
    for m in ms:
        out = m if out is None else out * m
    return out


def yhat_xdeg(t, y_monomial):
    """x-degree vector of the hatted version of a plain y-monomial."""
    deg = [0] * t.n
    for i, k in enumerate(y_monomial.y_exponents):
        if k:
            xv = ex.yhat_monomial(t, t.interior_edges[i]).x_exponents
            for j in range(t.n):
                deg[j] += k * xv[j]
    return tuple(deg)


def g_of_components(t, comps):
    g = [0] * t.n
    for comp in comps:
        if isinstance(comp, cv.TaggedCurve):
            gv = ex.g_vector(t, comp).g
            for j in range(t.n):
                g[j] += gv[j]
        # special components all have lowest term +-x^0
    return tuple(g)


# ---------------------------------------------------------------------------
# result types


@dataclass(frozen=True)
class OverlapSpec:
    """A detected incompatibility or crossing pattern.  Intervals refer to
    chronological indices; (s, t) lives on the first curve, (s2, t2) on the
    second.  `top` names the curve whose interval lies on top."""

    kind: str
    s: int = 0
    t: int = 0
    s2: int = 0
    t2: int = 0
    top: int = 1
    crossing: bool = True
    extra: tuple = ()

    def get(self, key, default=None):
        for k, v in self.extra:
            if k == key:
                return v
        return default


@dataclass(frozen=True)
class Resolution:
    """One smoothing identity x_lhs = x_{C+} + sign * Y * x_{C-} (or, when
    `side` is "plus", x_lhs = Y * x_{C+} + sign * x_{C-}).  A `c_minus` of
    None means the relation has a single term."""

    c_plus: cv.Multicurve
    c_minus: object
    y_monomial: ring.Monomial
    side: str = "minus"
    sign: int = 1
    r_set: tuple = ()
    s_set: tuple = ()
    case: str = ""
    note: str = ""

    def rhs_value(self, t):
        plus = multicurve_value(t, self.c_plus)
        y = ring.LaurentElem.monomial(self.y_monomial)
        if self.c_minus is None:
            return plus * y if self.side == "plus" else plus
        minus = multicurve_value(t, self.c_minus)
        if self.sign != 1:
            minus = minus.scale(self.sign)
        if self.side == "plus":
            return plus * y + minus
        return plus + minus * y


@dataclass(frozen=True)
class TwoPunctureResolution:
    """Four-term identity x_{c1} x_{c2} = sum_i Y_i * x_{comp_i}; components
    may be None (a bare coefficient term)."""

    terms: tuple  # of (Monomial, component-or-None)
    case: str = ""
    note: str = ""
    r_set: tuple = ()

    def rhs_value(self, t):
        acc = ring.LaurentElem.zero(t.n)
        for m, comp in self.terms:
            v = ring.LaurentElem.monomial(m)
            if comp is not None:
                v = v * component_value(t, comp)
            acc = acc + v
        return acc


# ---------------------------------------------------------------------------
# wedge bookkeeping at a puncture


def _wedge_start(t, p, crossing, delta):
    """The (edge, occ) end opening the spoke chain of the corner of triangle
    `delta` at p (the wedge a curve ending there occupies)."""
    return cv.spoke_chain(t, p, crossing, delta)[0]


def _chain_labels(t, p, crossing, delta):
    return [e for (e, _) in cv.spoke_chain(t, p, crossing, delta)]


def _common_prefix(xs, ys):
    k = 0
    while k < len(xs) and k < len(ys) and xs[k] == ys[k]:
        k += 1
    return k


def _k_by_divergence(t, g1, g2, tt):
    """Tie-break when both rays leave p through the same wedge and share the
    crossing prefix of length tt.  Returns ("k0"|"km", extension) where the
    extension lists further crossings of the counterclockwise ray that stay
    incident to the other ray's endpoint (they prolong the overlap strip and
    contribute to the y-monomial).

    Orientation: a ray exiting the divergence triangle through the successor
    of the entry edge keeps the shared corner on its right.  gamma1 exiting
    through the successor (or gamma2 through the predecessor) puts gamma2 on
    the counterclockwise side, i.e. k = 0; the mirrored exits give k = m."""
    xs1, xs2 = list(g1.crossings), list(g2.crossings)
    entry = xs1[tt - 1]
    exit1 = xs1[tt] if tt < len(xs1) else None
    exit2 = xs2[tt] if tt < len(xs2) else None
    kind = None
    for g, exit_, if_succ, if_pred in (
        (g1, exit1, "k0", "km"),
        (g2, exit2, "km", "k0"),
    ):
        if exit_ is None:
            continue
        tri = cv.triangle_sequence(t, g)[tt]
        succ, _ = sf.neighbor(t, entry, tri, sf.CCW)
        pred, _ = sf.neighbor(t, entry, tri, sf.CW)
        kind = if_succ if exit_ == succ else (if_pred if exit_ == pred else None)
        break
    if kind is None:
        raise SkeinError("ambiguous-case", "cannot orient the divergence at the puncture")
    ext = []
    if exit1 is None or exit2 is None:
        if exit1 is None:
            term, run = g1, xs2[tt:]
            cont_ccw = kind == "k0"  # gamma2 continues; it is the ccw ray iff k=0
        else:
            term, run = g2, xs1[tt:]
            cont_ccw = kind == "km"
        # a plain terminated end leaves the strip open on the ccw side only; a
        # notched end wraps its puncture and opens the cw side instead
        if cont_ccw != (term.tag_end == cv.NOTCHED):
            z = term.end
            for e in run:
                if z in t.endpoints(e):
                    ext.append(e)
                else:
                    break
    return kind, ext


# ---------------------------------------------------------------------------
# puncture incompatibilities (one puncture)


def _orient_from(t, g, p):
    if g.start == p:
        return g
    if g.end == p:
        return cv.reverse(g)
    raise SkeinError("puncture-mismatch", "curve has no endpoint at %s" % p)


def resolve_same_underlying(t, g1, g2):
    """gamma1 and gamma2 share the same underlying plain arc and differ by a
    single notch at a puncture p: x_{g1} x_{g2} = x_{gamma3}, the loop arc
    hooking once around p."""
    punctures = []
    for p in set((g1.start, g1.end)):
        a = _orient_from(t, g1, p)
        b = _orient_from(t, g2, p)
        if a.crossings == b.crossings and a.end == b.end and a.tag_start != b.tag_start:
            punctures.append(p)
    candidates = [
        p
        for p in punctures
        if _orient_from(t, g1, p).tag_end == _orient_from(t, g2, p).tag_end
    ]
    if not candidates:
        raise SkeinError("no-applicable-case", "curves do not differ by one notch")
    p = candidates[0]
    a = _orient_from(t, g1, p)
    b = _orient_from(t, g2, p)
    if a.tag_start != cv.NOTCHED:
        a, b = b, a
    if not a.crossings:
        e = a.edge
        other = a.end
        xs = ps._spokes_except(t, p, e)
        loop = cv.TaggedCurve(
            cv.ARC, xs, start=other, end=other, tag_start=a.tag_end, tag_end=b.tag_end
        )
    else:
        tris = cv.triangle_sequence(t, a)
        sigma = _chain_labels(t, p, a.crossings[0], tris[0])
        u = list(a.crossings)
        loop = _arc(
            t,
            _splice(list(reversed(u)), sigma, u),
            a.end,
            b.end,
            a.tag_end,
            b.tag_end,
        )
    return Resolution(
        c_plus=cv.Multicurve((loop,)),
        c_minus=None,
        y_monomial=ring.mono_one(t.n),
        case="same-underlying(%s)" % p,
    )


def resolve_puncture_one(t, g1, g2, p):
    """Resolve the incompatibility of gamma1 (notched at p) and gamma2 (plain
    at p) with distinct underlying arcs.  When gamma2 is a spoke of T this is
    the spoke relation x_{g1} x_{sigma_k} = x_{gamma3} + Y x_{gamma4}."""
    g1 = _orient_from(t, g1, p)
    g2 = _orient_from(t, g2, p)
    if g1.tag_start != cv.NOTCHED:
        g1, g2 = g2, g1
    if g1.tag_start != cv.NOTCHED or g2.tag_start != cv.PLAIN:
        raise SkeinError("no-applicable-case", "need one notched and one plain end at %s" % p)
    if not g1.crossings:
        raise SkeinError(
            "unsupported", "the notched curve of the pair must leave the star of %s" % p
        )
    tris1 = cv.triangle_sequence(t, g1)
    chain = cv.spoke_chain(t, p, g1.crossings[0], tris1[0])
    sigma = [e for (e, _) in chain]
    m = len(sigma)
    u = list(g1.crossings)
    p1 = ps.poset_of_curve(t, g1)

    if not g2.crossings:
        # gamma2 = sigma_k in T
        hits = [j for j, (e, _) in enumerate(chain) if e == g2.edge]
        if not hits:
            raise SkeinError("puncture-mismatch", "%s is not a spoke at %s" % (g2.edge, p))
        k = hits[0] + 1
        other = [v for v in t.endpoints(g2.edge) if v != p]
        other = other[0] if other else p
        g3 = _arc(
            t, _splice(list(reversed(u)), sigma[: k - 1]), g1.end, other, g1.tag_end, g2.tag_end
        )
        g4 = _arc(
            t,
            _splice(list(reversed(u)), list(reversed(sigma[k:]))),
            g1.end,
            other,
            g1.tag_end,
            g2.tag_end,
        )
        if g2.tag_end == cv.NOTCHED:
            # the spoke is notched at its far puncture: the strip swept by the
            # resolution wraps one of the two punctures, and the coefficient is
            # the y-monomial of the remaining spokes there.  For k=1 the strip
            # hugs the far puncture and the two resolved curves trade places;
            # for k=m it hugs p and the roles are as in the plain case.
            if k == 1:
                z, plus, minus = other, g4, g3
            elif k == m:
                z, plus, minus = p, g3, g4
            else:
                raise SkeinError(
                    "unsupported",
                    "notched spoke in an interior chain position at %s" % p,
                )
            wrap = list(ps._spokes_except(t, z, g2.edge))
            return Resolution(
                c_plus=cv.Multicurve((plus,)),
                c_minus=cv.Multicurve((minus,)),
                y_monomial=_y_of_labels(t, wrap),
                r_set=tuple(wrap),
                case="puncture(%s, k=%d of %d, spoke-notched)" % (p, k, m),
            )
        down = p1.down_set(-(k - 1))
        y = _y_of_indices(t, p1, down)
        return Resolution(
            c_plus=cv.Multicurve((g3,)),
            c_minus=cv.Multicurve((g4,)),
            y_monomial=y,
            s_set=tuple(sorted(p1.label(i) for i in down)),
            case="puncture(%s, k=%d of %d, spoke)" % (p, k, m),
        )

    w2 = _wedge_start(t, p, g2.crossings[0], cv.triangle_sequence(t, g2)[0])
    tt = 0
    if w2 == chain[0]:
        tt = _common_prefix(g1.crossings, g2.crossings)
        if tt == 0:
            raise SkeinError(
                "ambiguous-case", "rays share the wedge at %s but no crossing prefix" % p
            )
        kind, ext = _k_by_divergence(t, g1, g2, tt)
        k = 0 if kind == "k0" else m
    else:
        ext = []
        k = chain.index(w2)
    g3 = _arc(
        t,
        _splice(list(reversed(u)), sigma[:k], list(g2.crossings)),
        g1.end,
        g2.end,
        g1.tag_end,
        g2.tag_end,
    )
    g4 = _arc(
        t,
        _splice(list(reversed(u)), list(reversed(sigma[k:])), list(g2.crossings)),
        g1.end,
        g2.end,
        g1.tag_end,
        g2.tag_end,
    )
    r_labels = u[:tt] + ext
    y_r = _y_of_labels(t, r_labels)
    y_s = _y_of_labels(t, sigma[:k])
    if k == 0:
        c_plus, c_minus, y = (g4,), (g3,), y_r
    elif k == m:
        c_plus, c_minus, y = (g3,), (g4,), y_s * y_r
    else:
        c_plus, c_minus, y = (g3,), (g4,), y_s
    return Resolution(
        c_plus=cv.Multicurve(c_plus),
        c_minus=cv.Multicurve(c_minus),
        y_monomial=y,
        r_set=tuple(r_labels),
        s_set=tuple(sigma[:k]),
        case="puncture(%s, k=%d of %d, t=%d)" % (p, k, m, tt),
    )


def resolve_monogon(t, g):
    """Resolve a monogon: an arc with both endpoints at puncture p, exactly
    one of them notched.  x_g = x_{C+} + Y x_{C-} with closed curves."""
    if g.is_closed() or g.start != g.end:
        raise SkeinError("no-applicable-case", "monogon endpoints must coincide")
    if sorted(g.tags()) != [cv.NOTCHED, cv.PLAIN]:
        raise SkeinError("no-applicable-case", "monogon needs exactly one notch")
    if g.tag_start != cv.NOTCHED:
        g = cv.reverse(g)
    p = g.start
    u = list(g.crossings)
    tris = cv.triangle_sequence(t, g)
    chain = cv.spoke_chain(t, p, u[0], tris[0])
    sigma = [e for (e, _) in chain]
    m = len(sigma)
    w_plain = _wedge_start(t, p, u[-1], tris[-1])
    tt = 0
    if w_plain == chain[0]:
        rev_u = list(reversed(u))
        tt = _common_prefix(u, rev_u)
        kind, _ = _k_by_divergence(t, g, cv.reverse(g), tt)
        k = 0 if kind == "k0" else m
    else:
        k = chain.index(w_plain)
    g3 = _closed(t, _splice(list(reversed(u)), sigma[:k]))
    g4 = _closed(t, _splice(list(reversed(u)), list(reversed(sigma[k:]))))
    if isinstance(g3, cv.ContractibleLoop):
        g3 = cv.NotchedMonogon(p, "k0")
    if isinstance(g4, cv.ContractibleLoop):
        g4 = cv.NotchedMonogon(p, "km")
    y_r = _y_of_labels(t, u[:tt])
    y_s = _y_of_labels(t, sigma[:k])
    if k == 0:
        c_plus, c_minus, y = (g4,), (g3,), y_r
    elif k == m:
        c_plus, c_minus, y = (g3,), (g4,), y_s * y_r
    else:
        c_plus, c_minus, y = (g3,), (g4,), y_s
    return Resolution(
        c_plus=cv.Multicurve(c_plus),
        c_minus=cv.Multicurve(c_minus),
        y_monomial=y,
        r_set=tuple(u[:tt]),
        s_set=tuple(sigma[:k]),
        case="monogon(%s, k=%d of %d, t=%d)" % (p, k, m, tt),
    )


def resolve_two_punctures(t, g1, g2, p, q):
    """Resolve a pair of arcs between punctures p and q whose tags disagree
    at both ends, by composing the resolution at p with monogon resolutions
    at q.  Returns the four-term identity."""
    g1 = _orient_from(t, g1, p)
    g2 = _orient_from(t, g2, p)
    if g1.tag_start != cv.NOTCHED:
        g1, g2 = g2, g1
    if g1.tag_start != cv.NOTCHED or g2.tag_start != cv.PLAIN:
        raise SkeinError("no-applicable-case", "tags at %s must disagree" % p)
    if g1.end != q or g2.end != q or g1.tag_end == g2.tag_end:
        raise SkeinError("no-applicable-case", "tags at %s must disagree" % q)
    if tuple(g1.crossings) == tuple(g2.crossings):
        return _two_punctures_same_core(t, g1, g2, p, q)
    if not g1.crossings:
        # the curve notched at p is a spoke: resolve at the other puncture,
        # where its partner does leave the star
        return resolve_two_punctures(t, g1, g2, q, p)
    r1 = resolve_puncture_one(t, g1, g2, p)
    (a_plus,) = r1.c_plus.components
    (a_minus,) = r1.c_minus.components
    rp = resolve_monogon(t, a_plus)
    rm = resolve_monogon(t, a_minus)
    one = ring.mono_one(t.n)
    terms = []
    for coeff, res in ((one, rp), (r1.y_monomial, rm)):
        (cplus,) = res.c_plus.components
        (cminus,) = res.c_minus.components
        terms.append((coeff, cplus))
        terms.append((coeff * res.y_monomial, cminus))
    return TwoPunctureResolution(
        terms=tuple(terms),
        case="two-punctures(%s,%s; %s; %s / %s)" % (p, q, r1.case, rp.case, rm.case),
        r_set=r1.r_set,
    )


def _two_punctures_same_core(t, g1, g2, p, q):
    """The degenerate two-puncture case gamma1^0 = gamma2^0: the resolution
    has one closed curve (the double hook around both punctures) and two bare
    coefficient terms."""
    u = list(g1.crossings)
    if not u:
        raise SkeinError("unsupported", "arcs of T between two punctures are not resolved here")
    tris = cv.triangle_sequence(t, g1)
    sigma = _chain_labels(t, p, u[0], tris[0])
    eta = _chain_labels(t, q, u[-1], tris[-1])
    ell = _closed(t, _splice(list(reversed(u)), sigma, u, eta))
    y_r = _y_of_labels(t, u)
    y_p = ex.puncture_y(t, p)
    y_q = ex.puncture_y(t, q)
    if g1.tag_end == cv.NOTCHED:
        # doubly notched times plain
        terms = ((ring.mono_one(t.n), ell), (y_p * y_q * y_r, None), (y_r, None))
        case = "two-punctures-same-core(doubly-notched, %s,%s)" % (p, q)
    else:
        # notched at p times notched at q
        terms = ((ring.mono_one(t.n), ell), (y_p * y_r, None), (y_q * y_r, None))
        case = "two-punctures-same-core(split-notches, %s,%s)" % (p, q)
    return TwoPunctureResolution(terms=terms, case=case, r_set=tuple(u))


# ---------------------------------------------------------------------------
# overlaps between posets


def _core_profile(p):
    """Chronological core indices, their labels and the up/down pattern of
    consecutive cover relations."""
    idx = [i for i in p.indices() if not p.element(i).in_loop]
    labels = [p.label(i) for i in idx]
    cov = set(p.covers)
    dirs = []
    for a, b in zip(idx, idx[1:]):
        if (a, b) in cov:
            dirs.append("u")
        elif (b, a) in cov:
            dirs.append("d")
        else:
            dirs.append("?")
    return idx, labels, dirs


def _block_on_top(p, core, lo, hi):
    block = set(core[lo : hi + 1])
    rest = [i for i in core if i not in block]
    return not any(p.leq(x, y) for x in block for y in rest)


def _block_on_bottom(p, core, lo, hi):
    block = set(core[lo : hi + 1])
    rest = [i for i in core if i not in block]
    return not any(p.leq(y, x) for x in block for y in rest)


def _make_overlap(p1, p2, c1, c2, i, j, i2, j2, n1, n2):
    s, tt, s2, t2 = i + 1, j + 1, i2 + 1, j2 + 1
    top1, bot1 = _block_on_top(p1, c1, i, j), _block_on_bottom(p1, c1, i, j)
    top2, bot2 = _block_on_top(p2, c2, i2, j2), _block_on_bottom(p2, c2, i2, j2)
    crossing = ((top1 and bot2) or (bot1 and top2)) and not (s == 1 and s2 == 1) and not (
        tt == n1 and t2 == n2
    )
    top = 1 if (top1 and bot2) else 2
    return OverlapSpec(
        kind="crossing-overlap" if crossing else "overlap",
        s=s,
        t=tt,
        s2=s2,
        t2=t2,
        top=top,
        crossing=crossing,
    )


def find_overlaps(p1, p2):
    """All maximal overlaps between two decorated posets (label- and
    relation-preserving interval matches of the cores), with top/bottom and
    crossing flags.  Called with the same poset twice it returns self-overlaps
    (kind self-forward / self-reverse)."""
    if p1 is p2:
        return _self_overlaps(p1)
    c1, l1, d1 = _core_profile(p1)
    c2, l2, d2 = _core_profile(p2)
    n1, n2 = len(c1), len(c2)
    out = []
    for off in range(-(n2 - 1), n1):
        i = max(0, off)
        while i < n1 and i - off < n2:
            if l1[i] == l2[i - off]:
                j = i
                while (
                    j + 1 < n1
                    and j + 1 - off < n2
                    and l1[j + 1] == l2[j + 1 - off]
                    and d1[j] == d2[j - off]
                ):
                    j += 1
                out.append(_make_overlap(p1, p2, c1, c2, i, j, i - off, j - off, n1, n2))
                i = j + 1
            else:
                i += 1
    return out


def _flip_dir(d):
    return {"u": "d", "d": "u"}.get(d, "?")


def _self_overlaps(p):
    c, l, d = _core_profile(p)
    n = len(c)
    out = []
    # forward: order-preserving matches at positive offset
    for off in range(1, n):
        i = off
        while i < n:
            if l[i] == l[i - off]:
                j = i
                while j + 1 < n and l[j + 1] == l[j + 1 - off] and d[j] == d[j - off]:
                    j += 1
                spec = _make_overlap(p, p, c, c, i - off, j - off, i, j, n, n)
                out.append(
                    OverlapSpec(
                        kind="self-forward",
                        s=spec.s,
                        t=spec.t,
                        s2=spec.s2,
                        t2=spec.t2,
                        top=spec.top,
                        crossing=spec.crossing and not (spec.s == 1 and spec.t2 == n),
                    )
                )
                i = j + 1
            else:
                i += 1
    # reverse: order-reversing matches; position i pairs with position k,
    # extension pairs i+1 with k-1 and flips the relation directions
    for tot in range(1, 2 * n - 2):  # i + k = tot, i < k
        i = max(0, tot - n + 1)
        while 2 * i < tot and tot - i < n:
            k = tot - i
            if l[i] == l[k]:
                j = i
                while 2 * (j + 1) < tot and l[j + 1] == l[tot - j - 1] and d[j] == _flip_dir(
                    d[tot - j - 2]
                ):
                    j += 1
                k2 = tot - j
                spec = _make_overlap(p, p, c, c, i, j, k2, tot - i, n, n)
                out.append(
                    OverlapSpec(
                        kind="self-reverse",
                        s=spec.s,
                        t=spec.t,
                        s2=spec.s2,
                        t2=spec.t2,
                        top=spec.top,
                        crossing=spec.crossing and not (spec.s == 1 and spec.t2 == n),
                    )
                )
                i = j + 1
            else:
                i += 1
    return out


# ---------------------------------------------------------------------------
# transverse crossings (Type 0)


def _swap_overlap(ov):
    return OverlapSpec(
        kind=ov.kind,
        s=ov.s2,
        t=ov.t2,
        s2=ov.s,
        t2=ov.t,
        top=3 - ov.top,
        crossing=ov.crossing,
        extra=ov.extra,
    )


def resolve_type0(t, g1, g2, ov):
    """Resolve a transverse crossing whose overlap lies away from the end
    triangles of both arcs: smooth the crossing into {g3, g4} (which keep the
    shared crossings) and {g5, g6} (which drop them)."""
    if not ov.crossing:
        raise SkeinError("no-applicable-case", "overlap is not a crossing overlap")
    if ov.top == 2:
        g1, g2 = g2, g1
        ov = _swap_overlap(ov)
    p1 = ps.poset_of_curve(t, g1)
    p2 = ps.poset_of_curve(t, g2)
    u, v = list(g1.crossings), list(g2.crossings)
    s, tt, s2, t2 = ov.s, ov.t, ov.s2, ov.t2
    n1, n2 = len(u), len(v)
    g3 = _arc(t, u[:tt] + v[t2:], g1.start, g2.end, g1.tag_start, g2.tag_end)
    g4 = _arc(t, v[:t2] + u[tt:], g2.start, g1.end, g2.tag_start, g1.tag_end)
    g5 = _arc(
        t,
        u[: s - 1] + list(reversed(v[: s2 - 1])),
        g1.start,
        g2.start,
        g1.tag_start,
        g2.tag_start,
    )
    g6 = _arc(
        t,
        list(reversed(u[tt:])) + v[t2:],
        g1.end,
        g2.end,
        g1.tag_end,
        g2.tag_end,
    )
    y_r = _y_of_labels(t, u[s - 1 : tt])
    s_labels = []
    if s2 == 1 and g2.tag_start == cv.NOTCHED:
        s_labels += [p1.label(i) for i in p1.indices() if i <= s - 1 and p1.leq(s - 1, i)]
    elif s == 1 and g1.tag_start == cv.PLAIN:
        s_labels += [p2.label(i) for i in p2.indices() if i <= s2 - 1 and p2.leq(i, s2 - 1)]
    if t2 == n2 and g2.tag_end == cv.NOTCHED:
        s_labels += [p1.label(i) for i in p1.indices() if i >= tt + 1 and p1.leq(tt + 1, i)]
    elif tt == n1 and g1.tag_end == cv.PLAIN:
        s_labels += [p2.label(i) for i in p2.indices() if i >= t2 + 1 and p2.leq(i, t2 + 1)]
    y = _mono_mul(y_r, _y_of_labels(t, s_labels))
    return Resolution(
        c_plus=cv.Multicurve((g3, g4)),
        c_minus=cv.Multicurve((g5, g6)),
        y_monomial=y,
        r_set=tuple(u[s - 1 : tt]),
        s_set=tuple(s_labels),
        case="type0(s=%d,t=%d,s'=%d,t'=%d)" % (s, tt, s2, t2),
    )
