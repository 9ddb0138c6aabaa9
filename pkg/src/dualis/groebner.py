"""Ideals, Buchberger's algorithm and the predicates built on it.

The heavy lifting happens on packed monomials with integer coefficients
(see :mod:`dualis.orders` and :mod:`dualis.kernels`); everything that
leaves this module is an ordinary :class:`~dualis.poly.Polynomial`.

Pair handling follows Gebauer and Möller (product and chain criteria),
pairs are selected by the normal strategy (smallest lcm degree first, ties
broken by the monomial order), and every reduction result is made
content-free to keep coefficient growth in check.
"""

from __future__ import annotations

import contextlib
import contextvars
import heapq
from dataclasses import dataclass
from fractions import Fraction

from . import kernels
from .errors import StepLimitExceeded, StructuralError
from .orders import MonomialOrder
from .poly import DEFAULT_ORDER, Polynomial, canonicalize, integer_coefficients, rename

RABINOWITSCH_VAR = "@t"

_step_limit = contextvars.ContextVar("dualis_step_limit", default=None)


@contextlib.contextmanager
def step_budget(limit):
    """Cap the number of S-pair reductions per Gröbner computation."""
    token = _step_limit.set(limit)
    try:
        yield
    finally:
        _step_limit.reset(token)


class Ideal:
    """A ring and a finite generator list (zero generators are dropped).

    ``==`` compares the presentation, not the ideal; use :func:`ideal_equal`
    for the mathematical question.
    """

    __slots__ = ("ring", "generators", "_gb_cache")

    def __init__(self, ring, generators=()):
        gens = []
        for g in generators:
            if not isinstance(g, Polynomial):
                g = ring.const(g)
            if g.ring != ring:
                raise StructuralError(f"generator {g} is not in {ring}")
            if not g.is_zero():
                gens.append(g)
        self.ring = ring
        self.generators = tuple(gens)
        self._gb_cache = {}

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)

    def __getitem__(self, i):
        return self.generators[i]

    def is_zero(self):
        return not self.generators

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return self.ring == other.ring and self.generators == other.generators

    def __hash__(self):
        return hash((self.ring, self.generators))

    def __repr__(self):
        from .printing import print_ideal

        return f"Ideal({print_ideal(self)!r}, {self.ring})"

    def groebner(self, order=DEFAULT_ORDER):
        """Reduced Gröbner basis for ``order`` (memoised on the ideal)."""
        gb = self._gb_cache.get(order)
        if gb is None:
            gb = reduce_basis(buchberger(self, order))
            self._gb_cache[order] = gb
        return gb


@dataclass(frozen=True)
class GroebnerBasis:
    ideal: Ideal
    order: MonomialOrder
    basis: tuple
    reduced: bool

    def __iter__(self):
        return iter(self.basis)

    def __len__(self):
        return len(self.basis)

    def as_ideal(self):
        return Ideal(self.ideal.ring, self.basis)

    def leading_monomials(self):
        return [g.leading_monomial(self.order) for g in self.basis]

    def is_unit(self):
        return len(self.basis) == 1 and self.basis[0].is_constant()


# -- packed representation ----------------------------------------------------

def _pack(p, packer):
    ints, _ = integer_coefficients(p)
    items = sorted(((packer.encode(e), c) for e, c in ints.items()), reverse=True)
    return [m for m, _ in items], [c for _, c in items]


def _unpack(mons, coefs, packer, ring):
    return Polynomial._raw(ring, {packer.decode(m): Fraction(c) for m, c in zip(mons, coefs)})


class _Engine:
    """Gebauer–Möller Buchberger on packed polynomials."""

    def __init__(self, packer, weights=None, strategy="normal", step_limit=None, stop_on_unit=False):
        self.packer = packer
        self.guard = packer.guard
        n = packer.n
        self.weights = list(weights) if weights else [1] * n
        if len(self.weights) != n or min(self.weights) < 1:
            raise ValueError("weights must be positive, one per variable")
        if strategy not in ("normal", "sugar"):
            raise ValueError(f"unknown selection strategy {strategy!r}")
        self.strategy = strategy
        self.step_limit = step_limit
        self.stop_on_unit = stop_on_unit
        self.k = kernels.active()
        self.polys = []
        self.lms = []
        self.lm_exps = []
        self.sugar = []
        self.active = []
        self.pairs = []
        self.steps = 0
        self.unit = False

    def wdeg(self, mon):
        return sum(w * e for w, e in zip(self.weights, self.packer.decode(mon)))

    def _reducers(self):
        return [self.lms[i] for i in self.active], [self.polys[i] for i in self.active]

    def _add(self, mons, coefs, sugar):
        if self.packer.overflowed(mons[0]):
            raise OverflowError("monomial degree exceeds the packed field width")
        h = len(self.polys)
        self.polys.append((mons, coefs))
        self.lms.append(mons[0])
        self.lm_exps.append(self.packer.decode(mons[0]))
        self.sugar.append(sugar)
        self._update(h)
        if len(mons) == 1 and not any(self.lm_exps[h]):
            self.unit = True

    def _update(self, h):
        lms = self.lms
        exps = self.lm_exps
        encode = self.packer.encode
        G = self.guard
        hm = lms[h]
        he = exps[h]
        lcm_h = {}

        def lcm_with_h(g):
            v = lcm_h.get(g)
            if v is None:
                v = lcm_h[g] = encode([a if a > b else b for a, b in zip(exps[g], he)])
            return v

        cands = [(g, lcm_with_h(g)) for g in self.active]
        kept = []
        for idx, (g1, l1) in enumerate(cands):
            if l1 == lms[g1] + hm:
                kept.append((g1, l1))
                continue
            l1g = l1 | G
            if any((l1g - l2) & G == G for _, l2 in cands[idx + 1:]):
                continue
            if any((l1g - l2) & G == G for _, l2 in kept):
                continue
            kept.append((g1, l1))
        survivors = []
        for pair in self.pairs:
            l12 = pair[1]
            if ((l12 | G) - hm) & G == G and lcm_with_h(pair[2]) != l12 and lcm_with_h(pair[3]) != l12:
                continue
            survivors.append(pair)
        for g, l in kept:
            if l != lms[g] + hm:
                survivors.append((self._pair_key(g, h, l), l, g, h))
        heapq.heapify(survivors)
        self.pairs = survivors
        hg = hm
        self.active = [g for g in self.active if ((lms[g] | G) - hg) & G != G]
        self.active.append(h)

    def _pair_key(self, i, j, l):
        if self.strategy == "sugar":
            wl = self.wdeg(l)
            s = max(self.sugar[i] + wl - self.wdeg(self.lms[i]), self.sugar[j] + wl - self.wdeg(self.lms[j]))
            return (s, l, i, j)
        return (self.wdeg(l), l, i, j)

    def add_input(self, p):
        mons, coefs = p
        if not mons:
            return
        lms, polys = self._reducers()
        mons, coefs, _, _ = self.k.reduce_poly(mons, coefs, lms, polys, self.guard, True)
        if mons:
            self._add(mons, coefs, max(self.wdeg(m) for m in mons))

    def run(self):
        K = self.k
        guard = self.guard
        lms, polys = self._reducers()
        dirty = False
        while self.pairs and not (self.unit and self.stop_on_unit):
            key, l, i, j = heapq.heappop(self.pairs)
            self.steps += 1
            if self.step_limit is not None and self.steps > self.step_limit:
                raise StepLimitExceeded(f"Buchberger step budget of {self.step_limit} pair reductions exceeded")
            fm, fc = self.polys[i]
            gm, gc = self.polys[j]
            sm, sc = K.spoly(fm, fc, gm, gc, l)
            if not sm:
                continue
            if dirty:
                lms, polys = self._reducers()
                dirty = False
            rm, rc, _, _ = K.reduce_poly(sm, sc, lms, polys, guard, True)
            if rm:
                self._add(rm, rc, key[0])
                dirty = True
        return [self.polys[i] for i in self.active]


def _interreduce(packed, packer):
    """Reduced basis from a Gröbner basis in packed form, ascending by LM."""
    K = kernels.active()
    guard = packer.guard
    divides = packer.divides
    minimal = []
    for idx, p in enumerate(packed):
        lm = p[0][0]
        redundant = False
        for jdx, q in enumerate(packed):
            if jdx == idx:
                continue
            lq = q[0][0]
            if divides(lq, lm) and (lq != lm or jdx < idx):
                redundant = True
                break
        if not redundant:
            minimal.append(p)
    out = []
    for idx, (m, c) in enumerate(minimal):
        others = [q for jdx, q in enumerate(minimal) if jdx != idx]
        rm, rc, _, _ = K.reduce_poly(m, c, [q[0][0] for q in others], others, guard, True)
        out.append((rm, rc))
    out.sort(key=lambda p: p[0][0])
    return out


def _resolve(order, ring):
    from .orders import resolve_order

    return resolve_order(order, ring.nvars)


def _limit(step_limit):
    return _step_limit.get() if step_limit is None else step_limit


def buchberger(I, order=DEFAULT_ORDER, *, strategy="normal", weights=None, step_limit=None):
    """Gröbner basis of ``I`` (minimal, content-free elements, not tail-reduced)."""
    order = _resolve(order, I.ring)
    packer = order.packer(I.ring.nvars)
    eng = _Engine(packer, weights, strategy, _limit(step_limit))
    inputs = sorted((_pack(g, packer) for g in I.generators), key=lambda p: p[0][0])
    for p in inputs:
        eng.add_input(p)
    basis = eng.run()
    basis.sort(key=lambda p: p[0][0])
    polys = tuple(canonicalize(_unpack(m, c, packer, I.ring), order) for m, c in basis)
    return GroebnerBasis(I, order, polys, False)


def reduce_basis(G):
    """The unique reduced Gröbner basis of ``G.ideal`` for ``G.order``."""
    if G.reduced:
        return G
    packer = G.order.packer(G.ideal.ring.nvars)
    packed = [_pack(g, packer) for g in G.basis]
    out = _interreduce(packed, packer)
    polys = tuple(canonicalize(_unpack(m, c, packer, G.ideal.ring), G.order) for m, c in out)
    return GroebnerBasis(G.ideal, G.order, polys, True)


def groebner(I, order=DEFAULT_ORDER, **kw):
    """Reduced Gröbner basis; keyword arguments go to :func:`buchberger`."""
    order = _resolve(order, I.ring)
    if not kw:
        return I.groebner(order)
    return reduce_basis(buchberger(I, order, **kw))


def s_polynomial(f, g, order=DEFAULT_ORDER):
    if f.is_zero() or g.is_zero():
        raise ValueError("S-polynomial of a zero polynomial")
    if f.ring != g.ring:
        raise StructuralError("ring mismatch")
    ef, eg = f.leading_monomial(order), g.leading_monomial(order)
    l = tuple(max(a, b) for a, b in zip(ef, eg))
    mf = f.ring.monomial([a - b for a, b in zip(l, ef)], 1 / f.leading_coefficient(order))
    mg = f.ring.monomial([a - b for a, b in zip(l, eg)], 1 / g.leading_coefficient(order))
    return mf * f - mg * g


def normal_form(p, G, order=DEFAULT_ORDER):
    """Remainder of ``p`` on division by the list ``G`` (exact, rational).

    The largest reducible monomial is always reduced first, by the first
    element of ``G`` whose leading monomial divides it.
    """
    if isinstance(G, GroebnerBasis):
        order = G.order
        G = G.basis
    G = list(G)
    if any(g.is_zero() for g in G):
        raise ValueError("division by the zero polynomial")
    if p.is_zero():
        return p
    for g in G:
        if g.ring != p.ring:
            raise StructuralError("ring mismatch")
    packer = order.packer(p.ring.nvars)
    polys = [_pack(g, packer) for g in G]
    ints, mult = integer_coefficients(p)
    items = sorted(((packer.encode(e), c) for e, c in ints.items()), reverse=True)
    mons = [m for m, _ in items]
    coefs = [c for _, c in items]
    rm, rc, num, den = kernels.active().reduce_poly(mons, coefs, [q[0][0] for q in polys], polys, packer.guard, True)
    # den * r_int == num * mult * p  (mod G)
    factor = Fraction(den) / (num * mult)
    return _unpack(rm, rc, packer, p.ring).scale(factor) if rm else p.ring.zero()


def is_groebner_basis(polys, order=DEFAULT_ORDER):
    """Buchberger's criterion: every S-polynomial reduces to zero.

    Pairs with coprime leading monomials are skipped; their S-polynomials
    always reduce to zero.
    """
    polys = [g for g in polys if not g.is_zero()]
    if not polys:
        return True
    k = kernels.active()
    packer = order.packer(polys[0].ring.nvars)
    packed = [_pack(g, packer) for g in polys]
    lms = [p[0][0] for p in packed]
    exps = [packer.decode(m) for m in lms]
    for a in range(len(packed)):
        for b in range(a + 1, len(packed)):
            if not any(x and y for x, y in zip(exps[a], exps[b])):
                continue
            lcm = packer.encode([max(x, y) for x, y in zip(exps[a], exps[b])])
            sm, sc = k.spoly(*packed[a], *packed[b], lcm)
            if sm and k.reduce_poly(sm, sc, lms, packed, packer.guard, False)[0]:
                return False
    return True


def elimination_basis(I, k, inner="degrevlex", **kw):
    """Reduced Gröbner basis of ``I`` for the order eliminating the first k variables."""
    n = I.ring.nvars
    if not 0 <= k < n:
        raise ValueError(f"can eliminate 0..{n - 1} variables of {I.ring}, not {k}")
    order = MonomialOrder.elimination(k, n, inner)
    if kw:
        return reduce_basis(buchberger(I, order, **kw))
    return I.groebner(order)


def elimination_ideal(I, k, inner="degrevlex", **kw):
    """``I`` intersected with Q[trailing n-k variables], in that subring."""
    return restrict_to_trailing(elimination_basis(I, k, inner, **kw), k)


def restrict_to_trailing(gb, k):
    """Elements of an elimination basis free of the first k variables, moved to the subring."""
    ring = gb.ideal.ring
    sub = ring.subring(k)
    mapping = [None] * k + list(range(sub.nvars))
    kept = [g for g in gb.basis if not any(v < k for v in g.variables_used())]
    inner_order = MonomialOrder.lex() if gb.order.kind == "lex" else DEFAULT_ORDER
    return Ideal(sub, [canonicalize(rename(g, sub, mapping), inner_order) for g in kept])


def ideal_membership(p, I):
    if p.ring != I.ring:
        raise StructuralError("ring mismatch")
    if p.is_zero():
        return True
    gb = I.groebner(DEFAULT_ORDER)
    if not gb.basis:
        return False
    return normal_form(p, gb).is_zero()


def ideal_contains(I, J):
    """``J ⊆ I``."""
    if I.ring != J.ring:
        raise StructuralError("ring mismatch")
    return all(ideal_membership(g, I) for g in J.generators)


def ideal_equal(I, J):
    if I.ring != J.ring:
        raise StructuralError("ring mismatch")
    return I.groebner(DEFAULT_ORDER).basis == J.groebner(DEFAULT_ORDER).basis


def radical_membership(p, I, **kw):
    """``p ∈ √I`` via 1 ∈ I + (1 - t·p) with a fresh variable t."""
    if p.ring != I.ring:
        raise StructuralError("ring mismatch")
    if ideal_membership(p, I):
        return True
    ring = I.ring.extend([RABINOWITSCH_VAR])
    idx = list(range(I.ring.nvars))
    t = ring.var(RABINOWITSCH_VAR)
    gens = [rename(g, ring, idx) for g in I.generators]
    gens.append(ring.one() - t * rename(p, ring, idx))
    J = Ideal(ring, gens)
    packer = DEFAULT_ORDER.packer(ring.nvars)
    eng = _Engine(packer, step_limit=_limit(kw.get("step_limit")), stop_on_unit=True)
    for q in sorted((_pack(g, packer) for g in J.generators), key=lambda q: q[0][0]):
        eng.add_input(q)
    eng.run()
    return eng.unit


def radical_contains(I, J):
    """``J ⊆ √I``, generator by generator."""
    if I.ring != J.ring:
        raise StructuralError("ring mismatch")
    return all(radical_membership(g, I) for g in J.generators)
