"""Shared test utilities: corpus access, exact algebraic points, strategies."""

from __future__ import annotations

from fractions import Fraction
from pathlib import Path

from hypothesis import strategies as st

from dualis import Polynomial, Ring, parse_ideal

CORPUS = Path(__file__).resolve().parent.parent / "corpus"


def load(name):
    return parse_ideal((CORPUS / f"{name}.ideal").read_text())


def load_ideal(name):
    return load(name).ideal()


def corpus_names():
    return sorted(p.stem for p in CORPUS.glob("*.ideal"))


class Residue:
    """Element of Q[a]/(g) for a monic g.

    Evaluating a polynomial identity at a point with a coordinate in this
    ring checks it at every root of g at once, so g need not be irreducible.
    """

    __slots__ = ("c", "g")

    def __init__(self, coeffs, g):
        self.g = g
        self.c = self._reduce([Fraction(x) for x in coeffs])

    def _reduce(self, c):
        g = self.g
        d = len(g) - 1
        c = list(c)
        while len(c) > d:
            top = c.pop()
            if top:
                k = len(c) - d
                for i in range(d):
                    c[k + i] -= top * g[i]
        while c and c[-1] == 0:
            c.pop()
        return tuple(c)

    @classmethod
    def generator(cls, g):
        return cls([0, 1], g)

    def _lift(self, other):
        if isinstance(other, Residue):
            return other
        return Residue([other], self.g)

    def __add__(self, other):
        o = self._lift(other)
        n = max(len(self.c), len(o.c))
        a = self.c + (0,) * (n - len(self.c))
        b = o.c + (0,) * (n - len(o.c))
        return Residue([x + y for x, y in zip(a, b)], self.g)

    __radd__ = __add__

    def __neg__(self):
        return Residue([-x for x in self.c], self.g)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other)
        if not self.c or not o.c:
            return Residue([], self.g)
        out = [Fraction(0)] * (len(self.c) + len(o.c) - 1)
        for i, x in enumerate(self.c):
            for j, y in enumerate(o.c):
                out[i + j] += x * y
        return Residue(out, self.g)

    __rmul__ = __mul__

    def __pow__(self, k):
        result = Residue([1], self.g)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        return self.c == self._lift(other).c

    def __hash__(self):
        return hash(self.c)

    def __repr__(self):
        return f"Residue({list(self.c)} mod {list(self.g)})"


def algebraic_point(f, values, slot):
    """Point of V(f) whose coordinate ``slot`` is a root of f restricted to the line.

    ``values`` fixes every other coordinate (the entry at ``slot`` is
    ignored).  Returns the point with a :class:`Residue` at ``slot``.
    """
    coeffs = {}
    for e, c in f.items():
        v = Fraction(c)
        for i, k in enumerate(e):
            if i != slot and k:
                v *= Fraction(values[i]) ** k
        coeffs[e[slot]] = coeffs.get(e[slot], 0) + v
    deg = max((k for k, v in coeffs.items() if v), default=0)
    if deg == 0:
        raise ValueError("the line meets V(f) nowhere or lies inside it")
    lead = coeffs[deg]
    g = tuple(Fraction(coeffs.get(k, 0)) / lead for k in range(deg + 1))
    point = [Fraction(v) for v in values]
    point[slot] = Residue.generator(g)
    return tuple(point)


# -- hypothesis strategies --------------------------------------------------

small_fractions = st.builds(
    Fraction,
    st.integers(min_value=-20, max_value=20),
    st.integers(min_value=1, max_value=6),
)


def polynomials(ring, max_terms=5, max_exp=3, nonzero=False):
    exps = st.tuples(*[st.integers(min_value=0, max_value=max_exp)] * ring.nvars)
    terms = st.dictionaries(exps, small_fractions, min_size=1 if nonzero else 0, max_size=max_terms)
    strat = terms.map(lambda t: Polynomial(ring, t))
    if nonzero:
        strat = strat.filter(lambda p: not p.is_zero())
    return strat


def homogeneous_polynomials(ring, degree, max_terms=4):
    @st.composite
    def build(draw):
        n = ring.nvars
        terms = {}
        for _ in range(draw(st.integers(min_value=1, max_value=max_terms))):
            e = [0] * n
            for _ in range(degree):
                e[draw(st.integers(min_value=0, max_value=n - 1))] += 1
            terms[tuple(e)] = draw(small_fractions)
        return Polynomial(ring, terms)

    return build()


RING3 = Ring(["x", "y", "z"])
