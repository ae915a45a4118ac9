"""Exact sparse Laurent polynomials in x_1..x_n (exponents in Z) and y_1..y_n (in Z>=0).

A Monomial is a pair of dense exponent tuples; a LaurentElem maps monomials to
nonzero integer coefficients.  n is fixed per triangulation session (one slot
per interior arc).  Everything here is immutable and pure.
"""

from __future__ import annotations

from dataclasses import dataclass


class DimensionError(ValueError):
    """Operands live over different ambient variable counts."""


@dataclass(frozen=True)
class Monomial:
    x_exponents: tuple  # int tuple, length n, may be negative
    y_exponents: tuple  # int tuple, length n, nonnegative

    def __post_init__(self):
        if len(self.x_exponents) != len(self.y_exponents):
            raise ValueError("x and y exponent vectors must have equal length")
        if any(e < 0 for e in self.y_exponents):
            raise ValueError("y exponents must be nonnegative")

    @property
    def n(self):
        return len(self.x_exponents)

    def __mul__(self, other):
        if self.n != other.n:
            raise DimensionError("monomial dimension mismatch")
        return Monomial(
            tuple(a + b for a, b in zip(self.x_exponents, other.x_exponents)),
            tuple(a + b for a, b in zip(self.y_exponents, other.y_exponents)),
        )

    def sort_key(self):
        return (self.x_exponents, self.y_exponents)


def mono_one(n):
    z = (0,) * n
    return Monomial(z, z)


def mono_x(n, i, power=1):
    """The monomial x_i^power (i is a 0-based interior-edge index)."""
    x = [0] * n
    x[i] = power
    return Monomial(tuple(x), (0,) * n)


def mono_y(n, i, power=1):
    y = [0] * n
    y[i] = power
    return Monomial((0,) * n, tuple(y))


class LaurentElem:
    """Finite map Monomial -> nonzero int.  Canonical: no zero coefficients."""

    __slots__ = ("n", "terms")

    def __init__(self, n, terms=None):
        self.n = n
        clean = {}
        if terms:
            for m, c in terms.items():
                if m.n != n:
                    raise DimensionError("term dimension mismatch")
                if c != 0:
                    clean[m] = clean.get(m, 0) + c
                    if clean[m] == 0:
                        del clean[m]
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, n):
        return cls(n)

    @classmethod
    def one(cls, n):
        return cls(n, {mono_one(n): 1})

    @classmethod
    def monomial(cls, m, coeff=1):
        return cls(m.n, {m: coeff})

    @classmethod
    def x_var(cls, n, i, power=1):
        return cls(n, {mono_x(n, i, power): 1})

    @classmethod
    def y_var(cls, n, i, power=1):
        return cls(n, {mono_y(n, i, power): 1})

    # -- queries -----------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def num_terms(self):
        return len(self.terms)

    def coeff(self, m):
        return self.terms.get(m, 0)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: kv[0].sort_key())

    def y_free_terms(self):
        zero_y = (0,) * self.n
        return [(m, c) for m, c in self.terms.items() if m.y_exponents == zero_y]

    def __eq__(self, other):
        return isinstance(other, LaurentElem) and self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        return lp_add(self, other)

    def __sub__(self, other):
        return lp_add(self, other.scale(-1))

    def __mul__(self, other):
        return lp_mul(self, other)

    def scale(self, k):
        if k == 0:
            return LaurentElem(self.n)
        return LaurentElem(self.n, {m: k * c for m, c in self.terms.items()})

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative powers of polynomials are not defined here")
        acc = LaurentElem.one(self.n)
        for _ in range(k):
            acc = lp_mul(acc, self)
        return acc

    def mul_monomial(self, m, coeff=1):
        """Multiply by a single monomial (handles negative x exponents)."""
        if m.n != self.n:
            raise DimensionError("monomial dimension mismatch")
        return LaurentElem(self.n, {t * m: c * coeff for t, c in self.terms.items()})

    def __repr__(self):
        return "LaurentElem(%s)" % render(self)


def lp_add(a, b):
    if a.n != b.n:
        raise DimensionError("cannot add: ambient dimensions differ (%d vs %d)" % (a.n, b.n))
    terms = dict(a.terms)
    for m, c in b.terms.items():
        s = terms.get(m, 0) + c
        if s == 0:
            terms.pop(m, None)
        else:
            terms[m] = s
    return LaurentElem(a.n, terms)


def lp_mul(a, b):
    if a.n != b.n:
        raise DimensionError("cannot multiply: ambient dimensions differ (%d vs %d)" % (a.n, b.n))
    terms = {}
    for m1, c1 in a.terms.items():
        for m2, c2 in b.terms.items():
            m = m1 * m2
            s = terms.get(m, 0) + c1 * c2
            if s == 0:
                terms.pop(m, None)
            else:
                terms[m] = s
    return LaurentElem(a.n, terms)


def lp_equals(a, b):
    if a.n != b.n:
        raise DimensionError("cannot compare: ambient dimensions differ (%d vs %d)" % (a.n, b.n))
    return a.terms == b.terms


# -- textual rendering / parsing ------------------------------------------
#
# Grammar per term:  c [* xi^ai]... [* yi^bi]...   with 1-based variable
# indices and exponents always written explicitly.  Terms joined by " + ".


def render_monomial(m, coeff):
    parts = [str(coeff)]
    for i, e in enumerate(m.x_exponents):
        if e != 0:
            parts.append("x%d^%d" % (i + 1, e))
    for i, e in enumerate(m.y_exponents):
        if e != 0:
            parts.append("y%d^%d" % (i + 1, e))
    return " * ".join(parts)


def render(elem):
    if elem.is_zero():
        return "0"
    return " + ".join(render_monomial(m, c) for m, c in elem.sorted_terms())


def parse(text, n):
    """Inverse of render, for golden-file tests."""
    text = text.strip()
    if text == "0":
        return LaurentElem.zero(n)
    terms = {}
    for chunk in text.split(" + "):
        factors = [f.strip() for f in chunk.split("*")]
        coeff = int(factors[0])
        xexp = [0] * n
        yexp = [0] * n
        for f in factors[1:]:
            base, _, power = f.partition("^")
            idx = int(base[1:]) - 1
            if not 0 <= idx < n:
                raise ValueError("variable index out of range in %r" % f)
            if base[0] == "x":
                xexp[idx] += int(power)
            elif base[0] == "y":
                yexp[idx] += int(power)
            else:
                raise ValueError("bad factor %r" % f)
        m = Monomial(tuple(xexp), tuple(yexp))
        terms[m] = terms.get(m, 0) + coeff
    return LaurentElem(n, terms)
