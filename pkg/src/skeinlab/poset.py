"""Fence, loop-fence and circular-fence posets of curves, plus order-ideal
enumeration.

Elements are addressed by their chronological index: 1..n for the crossings of
the curve, -a..0 for a loop chain at the start (0 is the bottom element 1^s,
-a the top m^s), n+1..n+b for a loop chain at the end (n+1 is the bottom 1^t).
The decorated posets of arcs gamma with underlying plain arc in T use index 0
for the 0^- element and h+1 for 0^+ (documented on poset_of_curve).

Convention: an order ideal is closed DOWNWARD (x in I and y ⪯ x imply y in
I), the standard lattice-theory convention; the empty ideal corresponds to
the minimal matching of the snake graph and the first nonempty ideals pick
up the minimal elements, matching the matching-lattice order.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from . import surface as sf
from . import curves as cv

FENCE = "fence"
LOOP_FENCE = "loop-fence"
CIRCULAR = "circular"


@dataclass(frozen=True)
class PosetElem:
    label: str  # interior edge id
    in_loop: bool = False


@dataclass(frozen=True)
class OrderIdeal:
    """Membership bit-set; bit k refers to the k-th element in chronological
    order (the poset's indices() list)."""

    mask: int
    size: int

    def members(self, p):
        idx = p.indices()
        return [idx[k] for k in range(self.size) if self.mask >> k & 1]

    def __contains__(self, k):
        raise TypeError("test membership via has(poset, index)")


class DecoratedPoset:
    """elements: {chronological index: PosetElem}; covers: list of (lo, hi)
    index pairs with lo strictly below hi; decoration: word of (edge, +1|-1)
    letters; shape: fence | loop-fence | circular."""

    def __init__(self, elements, covers, decoration=(), shape=FENCE):
        self.elements = dict(elements)
        self.covers = [tuple(c) for c in covers]
        self.decoration = tuple(decoration)
        self.shape = shape
        for lo, hi in self.covers:
            if lo not in self.elements or hi not in self.elements:
                raise ValueError("cover (%r,%r) uses unknown index" % (lo, hi))
        self._leq = None
        self._order = sorted(self.elements)

    # -- structure ---------------------------------------------------------

    def indices(self):
        return list(self._order)

    def element(self, i):
        return self.elements[i]

    def label(self, i):
        return self.elements[i].label

    def size(self):
        return len(self.elements)

    def core_indices(self):
        """Indices of the non-loop part (the crossings of the curve)."""
        return [i for i in self._order if not self.elements[i].in_loop]

    def _closure(self):
        if self._leq is not None:
            return self._leq
        leq = {i: {i} for i in self.elements}
        # reachability over covers (posets here are tiny)
        changed = True
        while changed:
            changed = False
            for lo, hi in self.covers:
                new = leq[hi] - leq[lo]
                if new:
                    leq[lo] |= new
                    changed = True
        self._leq = leq
        return leq

    def leq(self, i, j):
        """i is below-or-equal j in the partial order."""
        return j in self._closure()[i]

    def up_set(self, i):
        """Principal filter = all j with i ⪯ j."""
        return set(self._closure()[i])

    def down_set(self, i):
        """Principal ideal <i> = all j with j ⪯ i."""
        return set(j for j in self.elements if self.leq(j, i))

    def minimal_elements(self):
        above = set(hi for _, hi in self.covers)
        return [i for i in self._order if i not in above]

    def covered_by(self, i):
        """Indices directly covered by i."""
        return [lo for lo, hi in self.covers if hi == i]

    def dual(self):
        return DecoratedPoset(
            self.elements,
            [(hi, lo) for lo, hi in self.covers],
            decoration=self.decoration,
            shape=self.shape,
        )

    # -- debug output ------------------------------------------------------

    def cover_dump(self):
        lines = []
        for i in self._order:
            e = self.elements[i]
            lines.append("%s: %s%s" % (i, e.label, " (loop)" if e.in_loop else ""))
        for lo, hi in sorted(self.covers):
            lines.append("%s < %s" % (lo, hi))
        if self.decoration:
            lines.append(
                "decoration: " + " ".join(
                    "%s%s" % (e, "+" if s > 0 else "-") for e, s in self.decoration
                )
            )
        return "\n".join(lines)

    def render(self):
        """Text Hasse diagram: one row per height level."""
        if not self.elements:
            return "(empty poset)"
        depth = {}
        for i in self._order:
            depth[i] = 0
        changed = True
        while changed:
            changed = False
            for lo, hi in self.covers:
                if depth[hi] < depth[lo] + 1:
                    depth[hi] = depth[lo] + 1
                    changed = True
                    if depth[hi] > len(self.elements):
                        return "(cyclic cover data)"
        rows = {}
        for i in self._order:
            rows.setdefault(depth[i], []).append("%s:%s" % (i, self.elements[i].label))
        out = []
        for h in sorted(rows, reverse=True):
            out.append("  " * h + "  ".join(rows[h]))
        return "\n".join(out)

    def __repr__(self):
        return "DecoratedPoset(%d elements, %s)" % (len(self.elements), self.shape)


# -- poset of a curve ------------------------------------------------------


def fence_relation(t, entry, exit_, tri):
    """True if crossing j (entry) is above crossing j+1 (exit) -- the shared
    corner lies to the right of the curve exactly when the exit edge is the
    successor of the entry edge in the CCW triple."""
    succ, _ = sf.neighbor(t, entry, tri, sf.CCW)
    pred, _ = sf.neighbor(t, entry, tri, sf.CW)
    if exit_ == succ:
        return True  # j > j+1
    if exit_ == pred:
        return False  # j < j+1
    raise cv.CurveError(
        "nonadjacent-crossings",
        "%s and %s are not adjacent in triangle %d" % (entry, exit_, tri),
    )


def poset_of_curve(t, c):
    """The (decorated) poset of a tagged curve.

    * plain arc / closed curve: fence / circular fence on crossings 1..n;
    * notched end(s) with gamma^0 not in T: loop-fence, chains indexed -a..0
      and n+1..n+b;
    * gamma^0 = an arc of T: plain -> empty poset with decoration gamma+;
      singly notched -> the monogon chain (all spokes except gamma^0, in a
      loop) with decoration gamma-; doubly notched -> the 0-/0+ poset with
      both 0-elements labelled by gamma^0's edge (0- at index 0, s-chain at
      -1..-m, t-chain at 1..h, 0+ at h+1) and empty decoration.
    """
    cv.validate_curve(t, c)
    if not c.crossings and not c.is_closed():
        return _poset_of_arc_in_T(t, c)
    tris = cv.triangle_sequence(t, c)
    xs = list(c.crossings)
    n = len(xs)
    elements = {j + 1: PosetElem(xs[j]) for j in range(n)}
    covers = []
    for j in range(n - 1):
        if fence_relation(t, xs[j], xs[j + 1], tris[j + 1]):
            covers.append((j + 2, j + 1))
        else:
            covers.append((j + 1, j + 2))
    if c.is_closed():
        if fence_relation(t, xs[-1], xs[0], tris[0]):
            covers.append((1, n))
        else:
            covers.append((n, 1))
        return DecoratedPoset(elements, covers, shape=CIRCULAR)
    shape = FENCE
    if c.tag_start == cv.NOTCHED:
        chain = [e for (e, _) in cv.spoke_chain(t, c.start, xs[0], tris[0])]
        m = len(chain)
        # 1^s..m^s at chronological indices 0,-1,..,1-m
        for k, e in enumerate(chain):
            elements[-k] = PosetElem(e, in_loop=True)
        for k in range(m - 1):
            covers.append((-k, -(k + 1)))  # k+1^s < k+2^s
        covers.append((0, 1))  # 1^s < P(1)
        covers.append((1, -(m - 1)))  # P(1) < m^s
        shape = LOOP_FENCE
    if c.tag_end == cv.NOTCHED:
        chain = [e for (e, _) in cv.spoke_chain(t, c.end, xs[-1], tris[-1])]
        h = len(chain)
        for k, e in enumerate(chain):
            elements[n + 1 + k] = PosetElem(e, in_loop=True)
        for k in range(h - 1):
            covers.append((n + 1 + k, n + 2 + k))
        covers.append((n + 1, n))  # 1^t < P(n)
        covers.append((n, n + h))  # P(n) < h^t
        shape = LOOP_FENCE
    return DecoratedPoset(elements, covers, shape=shape)


def _poset_of_arc_in_T(t, c):
    e = c.edge
    notches = [v for v, tag in ((c.start, c.tag_start), (c.end, c.tag_end)) if tag == cv.NOTCHED]
    if not notches:
        return DecoratedPoset({}, [], decoration=((e, +1),), shape=FENCE)
    if len(notches) == 1:
        # the monogon l_p: chain of the spokes at p except gamma, all in a loop
        hooked = cv.hooked_curve(t, c)
        base = poset_of_curve(t, hooked)
        elements = {
            i: PosetElem(el.label, in_loop=True) for i, el in base.elements.items()
        }
        return DecoratedPoset(
            elements, base.covers, decoration=((e, -1),), shape=LOOP_FENCE
        )
    # doubly notched arc of T: 0- < 1^s < h^t < 0+ and 0- < 1^t < m^s < 0+,
    # with ascending spoke chains on both sides, everything in a loop
    p, q = c.start, c.end
    # chains at each end: spokes except e, CCW starting after e (as crossed by
    # the hook at that end)
    s_chain = _spokes_except(t, p, e)
    t_chain = _spokes_except(t, q, e)
    m, h = len(s_chain), len(t_chain)
    elements = {0: PosetElem(e, in_loop=True), h + 1: PosetElem(e, in_loop=True)}
    for k, x in enumerate(s_chain):  # 1^s.. m^s at -1..-m
        elements[-(k + 1)] = PosetElem(x, in_loop=True)
    for k, x in enumerate(t_chain):  # 1^t..h^t at 1..h
        elements[k + 1] = PosetElem(x, in_loop=True)
    covers = []
    for k in range(m - 1):
        covers.append((-(k + 1), -(k + 2)))
    for k in range(h - 1):
        covers.append((k + 1, k + 2))
    covers.append((0, -1))  # 0- < 1^s
    covers.append((0, 1))  # 0- < 1^t
    covers.append((h, h + 1))  # h^t < 0+
    covers.append((-m, h + 1))  # m^s < 0+
    covers.append((-1, h))  # 1^s < h^t
    covers.append((1, -m))  # 1^t < m^s
    return DecoratedPoset(elements, covers, shape=LOOP_FENCE)


def _spokes_except(t, p, e):
    out = []
    cur = t.rotation_next_ccw(p, (e, 0))
    while cur[0] != e:
        out.append(cur[0])
        cur = t.rotation_next_ccw(p, cur)
    return out


# -- order ideals ----------------------------------------------------------


def order_ideals(p):
    """All downward-closed subsets, as OrderIdeal bit-sets, in a deterministic
    order (chronological walk, excluded-first)."""
    idx = p.indices()
    pos = {i: k for k, i in enumerate(idx)}
    n = len(idx)
    # relations with both ends decided once position max(pos) is reached
    checks = [[] for _ in range(n)]
    for lo, hi in p.covers:
        a, b = pos[lo], pos[hi]
        checks[max(a, b)].append((a, b))
    out = []

    def walk(k, mask):
        if k == n:
            out.append(OrderIdeal(mask, n))
            return
        for bit in (0, 1):
            m = mask | (bit << k)
            ok = True
            for a, b in checks[k]:
                if (m >> b & 1) and not (m >> a & 1):
                    ok = False
                    break
            if ok:
                walk(k + 1, m)

    walk(0, 0)
    return out


def ideal_count(p):
    return len(order_ideals(p))


def has(p, ideal, i):
    """Is the element with chronological index i in the ideal?"""
    return bool(ideal.mask >> p.indices().index(i) & 1)


def ideal_from_members(p, members):
    idx = p.indices()
    mask = 0
    for i in members:
        mask |= 1 << idx.index(i)
    return OrderIdeal(mask, len(idx))


def is_ideal(p, ideal):
    for lo, hi in p.covers:
        if has(p, ideal, hi) and not has(p, ideal, lo):
            return False
    return True


def content(i, p):
    """Multiset of edge labels of the ideal's elements."""
    return Counter(p.label(j) for j in i.members(p))


def switching_position(p1, i1, p2, i2):
    """Smallest chronological position where the two ideals agree (element in
    I1 iff corresponding element in I2), under the chronological
    correspondence pairing the sorted index lists.  None exactly when one
    ideal is full and the other empty."""
    idx1, idx2 = p1.indices(), p2.indices()
    if len(idx1) != len(idx2):
        raise ValueError("posets are not isomorphic: sizes differ")
    for k in range(len(idx1)):
        if bool(i1.mask >> k & 1) == bool(i2.mask >> k & 1):
            return idx1[k]
    return None


def subposet(p, interval=None, below=None, above=None):
    """Induced subposet; `interval` = (a, b) keeps chronological indices in
    [a, b]; `below`/`above` keep elements ⪯ / ⪰ the given index
    (order-theoretically).  Retains the original chronological labels."""
    keep = set(p.indices())
    if interval is not None:
        a, b = interval
        if keep and (a < min(keep) or b > max(keep) or a > b):
            raise ValueError("interval [%r,%r] out of chronological range" % (a, b))
        keep = set(i for i in keep if a <= i <= b)
    if below is not None:
        if below not in p.elements:
            raise ValueError("index %r out of range" % (below,))
        keep &= p.down_set(below)
    if above is not None:
        if above not in p.elements:
            raise ValueError("index %r out of range" % (above,))
        keep &= p.up_set(above)
    elements = {i: p.elements[i] for i in keep}
    # induced order, then transitive reduction
    rel = [(i, j) for i in keep for j in keep if i != j and p.leq(i, j)]
    rel_set = set(rel)
    covers = [
        (i, j)
        for i, j in rel
        if not any((i, k) in rel_set and (k, j) in rel_set for k in keep if k not in (i, j))
    ]
    shape = p.shape if len(keep) == len(p.elements) else FENCE
    return DecoratedPoset(elements, covers, decoration=(), shape=shape)
