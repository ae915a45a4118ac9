"""Laurent expansions of tagged arcs and closed curves with principal
coefficients.

The expansion of a curve is x^g times the weighted sum over order ideals of
its decorated poset; the g-vector decomposes as g = -a + b + r + j.  All
arithmetic is exact (integer Laurent polynomials from the ring module).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from . import curves as cv
from . import poset as ps
from . import ring
from . import surface as sf


def _vec(t, counts=None):
    v = [0] * t.n
    for e, k in (counts or {}).items():
        v[t.var_index[e]] += k
    return tuple(v)


def _vadd(*vs):
    return tuple(sum(parts) for parts in zip(*vs))


def _vneg(v):
    return tuple(-a for a in v)


def yhat_monomial(t, e):
    """The exchange monomial yhat_e = y_e * prod x_succ / prod x_pred over the
    two triangles at the interior edge e (boundary neighbors contribute
    nothing)."""
    if e not in t.edges or not t.is_interior(e):
        raise ValueError("%s is not an interior edge" % e)
    x = [0] * t.n
    for ti in t.triangles_of_edge(e):
        succ, sb = sf.neighbor(t, e, ti, sf.CCW)
        if not sb:
            x[t.var_index[succ]] += 1
        pred, pb = sf.neighbor(t, e, ti, sf.CW)
        if not pb:
            x[t.var_index[pred]] -= 1
    y = [0] * t.n
    y[t.var_index[e]] = 1
    return ring.Monomial(tuple(x), tuple(y))


def yhat(t, e):
    return ring.LaurentElem.monomial(yhat_monomial(t, e))


def cross_monomial(t, c):
    """The crossing monomial of a tagged curve: one x per crossing of the
    underlying plain curve, times the full spoke product X_p for each notched
    end (loop spokes counted twice)."""
    x = [0] * t.n
    for e in c.crossings:
        x[t.var_index[e]] += 1
    if not c.is_closed():
        for v, tag in ((c.start, c.tag_start), (c.end, c.tag_end)):
            if tag == cv.NOTCHED:
                for (e, _) in t.incident_ends(v):
                    x[t.var_index[e]] += 1
    return ring.Monomial(tuple(x), (0,) * t.n)


def puncture_y(t, p):
    """Y_p: the product of y_e over the spokes at puncture p, loop spokes
    squared."""
    if not t.is_puncture(p):
        raise ValueError("%s is not a puncture" % p)
    y = [0] * t.n
    for (e, _) in t.incident_ends(p):
        y[t.var_index[e]] += 1
    return ring.Monomial((0,) * t.n, tuple(y))


def puncture_y_elem(t, p):
    return ring.LaurentElem.monomial(puncture_y(t, p))


@dataclass(frozen=True)
class GVectors:
    """g = -a + b + r + j, all dense int tuples over the interior edges."""

    a: tuple
    b: tuple
    r: tuple
    j: tuple
    g: tuple


def _abr(t, c, p):
    """a, b, r vectors of a curve with at least one crossing, given its
    decorated poset."""
    a = Counter()
    loops = set(i for i in p.indices() if p.element(i).in_loop)
    for i in p.minimal_elements():
        if i not in loops:
            a[p.label(i)] += 1
    b = Counter()
    for i in p.indices():
        if i not in loops and len(p.covered_by(i)) >= 2:
            b[p.label(i)] += 1
    r = Counter()
    if not c.is_closed():
        xs = c.crossings
        tris = cv.triangle_sequence(t, c)
        for v, crossing, tri, tag in (
            (c.start, xs[0], tris[0], c.tag_start),
            (c.end, xs[-1], tris[-1], c.tag_end),
        ):
            if tag == cv.NOTCHED:
                succ, sb = sf.neighbor(t, crossing, tri, sf.CCW)
                if not sb:
                    r[succ] -= 1
            else:
                pred, pb = sf.neighbor(t, crossing, tri, sf.CW)
                if not pb:
                    r[pred] += 1
    return _vec(t, a), _vec(t, b), _vec(t, r)


def _g_raw(t, c):
    n = t.n
    zero = (0,) * n
    if not c.is_closed() and not c.crossings:
        e = c.edge
        ev = _vec(t, {e: 1})
        tags = c.tags()
        if cv.NOTCHED not in tags:
            return GVectors(zero, zero, zero, ev, ev)
        if tags == (cv.NOTCHED, cv.NOTCHED):
            # g of the doubly notched arc of T is -e (the a/b/r decomposition
            # degenerates; everything sits in the loop)
            return GVectors(zero, zero, zero, _vneg(ev), _vneg(ev))
        # singly notched: x_{gamma} = x_{l_p} / x_e, so g = g(l_p) - e
        monogon = cv.hooked_curve(t, c)
        gm = _g_raw(t, monogon)
        j = _vneg(ev)
        return GVectors(gm.a, gm.b, gm.r, j, _vadd(gm.g, j))
    p = ps.poset_of_curve(t, c)
    a, b, r = _abr(t, c, p)
    j = _vec(t, {e: s for e, s in p.decoration})
    g = _vadd(_vneg(a), b, r, j)
    return GVectors(a, b, r, j, g)


def g_vector(t, c):
    """g-vector data of a tagged curve.  For closed curves the result is
    checked to be independent of the basepoint by recomputing at a rotated
    starting crossing."""
    gv = _g_raw(t, c)
    if c.is_closed() and len(c.crossings) > 1:
        xs = list(c.crossings)
        tris = cv.triangle_sequence(t, c)
        rotated = cv.TaggedCurve(
            cv.CLOSED, xs[1:] + xs[:1], basepoint=tris[1]
        )
        gv2 = _g_raw(t, rotated)
        if gv2.g != gv.g:
            raise cv.CurveError(
                "basepoint-dependent",
                "g-vector changed under rotation of the closed curve: %r vs %r"
                % (gv.g, gv2.g),
            )
    return gv


_SPECIALS = (cv.ContractibleLoop, cv.NotchedMonogon, cv.PunctureLoop)


def expand(t, c):
    """Laurent expansion of a single tagged arc or closed curve:
    x^g * sum over order ideals I of prod yhat over the content of I."""
    if isinstance(c, cv.Multicurve) or isinstance(c, _SPECIALS):
        raise cv.CurveError(
            "special-curve", "use expand_multicurve for multicurves and special components"
        )
    gv = g_vector(t, c)
    p = ps.poset_of_curve(t, c)
    yh = {}
    for i in p.indices():
        e = p.label(i)
        if e not in yh:
            yh[e] = yhat_monomial(t, e)
    base = ring.Monomial(gv.g, (0,) * t.n)
    terms = {}
    for ideal in ps.order_ideals(p):
        m = base
        for e, k in ps.content(ideal, p).items():
            for _ in range(k):
                m = m * yh[e]
        terms[m] = terms.get(m, 0) + 1
    return ring.LaurentElem(t.n, terms)


def _special_value(t, comp):
    n = t.n
    if isinstance(comp, cv.ContractibleLoop):
        return ring.LaurentElem.one(n).scale(-2)
    if isinstance(comp, cv.PunctureLoop):
        return ring.LaurentElem.one(n) + puncture_y_elem(t, comp.puncture)
    if isinstance(comp, cv.NotchedMonogon):
        yp = puncture_y_elem(t, comp.puncture)
        one = ring.LaurentElem.one(n)
        if comp.variant == "k0":
            return yp - one
        if comp.variant == "km":
            return one - yp
        raise cv.CurveError("bad-kind", "unknown monogon variant %r" % comp.variant)
    raise cv.CurveError("bad-kind", "unknown component %r" % (comp,))


def expand_multicurve(t, mc):
    """Product of the component expansions, times (-1)^kinks."""
    if not isinstance(mc, cv.Multicurve):
        mc = cv.Multicurve(tuple(mc))
    acc = ring.LaurentElem.one(t.n)
    for comp in mc.components:
        if isinstance(comp, cv.TaggedCurve):
            acc = acc * expand(t, comp)
        else:
            acc = acc * _special_value(t, comp)
    if mc.kinks % 2:
        acc = acc.scale(-1)
    return acc


def bangle(t, c, k):
    """Bang_k: the k-th power of the expansion of a closed curve."""
    if k < 0:
        raise ValueError("bangle power must be nonnegative")
    return expand(t, c) ** k


def bracelet(t, c, k):
    """Brac_k: the closed curve winding k times along c (crossing sequence
    repeated k times)."""
    if not c.is_closed():
        raise cv.CurveError("bad-kind", "bracelets are defined for closed curves")
    if k < 1:
        raise ValueError("bracelet index must be positive")
    if k == 1:
        return expand(t, c)
    rep = cv.TaggedCurve(cv.CLOSED, tuple(c.crossings) * k, basepoint=c.basepoint)
    return expand(t, rep)
