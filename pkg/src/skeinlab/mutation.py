"""Exchange-matrix oracle.

The skew-symmetric exchange matrix B(T) is read off the triangle walks with the
same chirality as the yhat monomials (yhat_j = y_j * prod_i x_i^{b_ij}), so the
one-step exchange relation at a flippable edge checks the expansion module
against an independent construction.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import curves as cv
from . import expansion as ex
from . import ring
from . import surface as sf


def b_matrix(t):
    """B(T) over the interior edges: b[i][j] is the exponent of x_i in
    yhat_j."""
    n = t.n
    b = [[0] * n for _ in range(n)]
    for ti in range(len(t.triangles)):
        w = t.walk(ti)
        for i in range(3):
            u = w[i][0]
            v = w[(i + 1) % 3][0]
            if t.is_interior(u) and t.is_interior(v):
                iu, iv = t.var_index[u], t.var_index[v]
                b[iv][iu] += 1
                b[iu][iv] -= 1
    return [tuple(row) for row in b]


def mutate_matrix(b, k):
    """Standard matrix mutation of a skew-symmetric integer matrix at index k."""
    n = len(b)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == k or j == k:
                row.append(-b[i][j])
            else:
                row.append(b[i][j] + (abs(b[i][k]) * b[k][j] + b[i][k] * abs(b[k][j])) // 2)
        out.append(tuple(row))
    return out


def flipped_arc(t, e):
    """The diagonal replacing e after the flip, as a curve of the original
    triangulation (it crosses exactly e)."""
    if not t.is_interior(e):
        raise sf.FlipError("cannot flip boundary edge %s" % e)
    t1, t2 = t.triangles_of_edge(e)
    w1 = list(t.walk(t1))
    w2 = list(t.walk(t2))
    while w1[0][0] != e:
        w1 = w1[1:] + w1[:1]
    while w2[0][0] != e:
        w2 = w2[1:] + w2[:1]
    # w1: e (u->v), b (v->w), c (w->u); w2: e (v->u), d (u->z), f (z->v)
    w = w1[2][1]
    z = w2[2][1]
    return cv.TaggedCurve(cv.ARC, (e,), start=w, end=z)


@dataclass(frozen=True)
class ExchangeReport:
    edge: str
    ok: bool
    lhs: object  # x_e * x_{e'}
    rhs: object  # y_e * prod_{b_ie>0} x_i + prod_{b_ie<0} x_i

    def lines(self):
        out = ["exchange %s: %s" % (self.edge, "pass" if self.ok else "FAIL")]
        if not self.ok:
            out.append("  lhs = %s" % (self.lhs,))
            out.append("  rhs = %s" % (self.rhs,))
        return out


def exchange_check(t, e):
    """Verify x_e * x_{e'} = y_e * prod_{b_ie>0} x_i + prod_{b_ie<0} x_i with
    principal coefficients at T.  Raises FlipError if the flip is illegal."""
    sf.flip(t, e)  # legality check
    b = b_matrix(t)
    k = t.var_index[e]
    n = t.n
    xe = [0] * n
    xe[k] = 1
    lhs = ring.LaurentElem.monomial(ring.Monomial(tuple(xe), (0,) * n)) * ex.expand(
        t, flipped_arc(t, e)
    )
    pos = [max(b[i][k], 0) for i in range(n)]
    neg = [max(-b[i][k], 0) for i in range(n)]
    ye = [0] * n
    ye[k] = 1
    plus = ring.LaurentElem.monomial(ring.Monomial(tuple(pos), tuple(ye)))
    minus = ring.LaurentElem.monomial(ring.Monomial(tuple(neg), (0,) * n))
    rhs = plus + minus
    return ExchangeReport(edge=e, ok=(lhs == rhs), lhs=lhs, rhs=rhs)


def flippable_edges(t):
    out = []
    for e in t.interior_edges:
        try:
            sf.flip(t, e)
        except sf.FlipError:
            continue
        out.append(e)
    return out
