"""Sparse multivariate polynomials with exact rational coefficients."""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd, lcm

from .errors import StructuralError
from .orders import MonomialOrder

DEFAULT_ORDER = MonomialOrder.degrevlex()

_NAME_RE = re.compile(r"[A-Za-z@][A-Za-z0-9_]*\Z")


@dataclass(frozen=True)
class Ring:
    """Polynomial ring Q[variables]; the list order fixes variable indices."""

    variables: tuple

    def __init__(self, variables):
        if isinstance(variables, str):
            variables = variables.split()
        variables = tuple(variables)
        if not variables:
            raise StructuralError("a ring needs at least one variable")
        for name in variables:
            if not isinstance(name, str) or not _NAME_RE.match(name):
                raise StructuralError(f"bad variable name {name!r}")
        if len(set(variables)) != len(variables):
            raise StructuralError(f"duplicate variable names in {variables}")
        object.__setattr__(self, "variables", variables)

    @property
    def nvars(self):
        return len(self.variables)

    def __len__(self):
        return len(self.variables)

    def __str__(self):
        return "Q[" + ",".join(self.variables) + "]"

    def index(self, name):
        try:
            return self.variables.index(name)
        except ValueError:
            raise StructuralError(f"{name!r} is not a variable of {self}") from None

    def var(self, name):
        i = self.index(name) if isinstance(name, str) else name
        e = [0] * self.nvars
        e[i] = 1
        return Polynomial(self, {tuple(e): Fraction(1)})

    def gens(self):
        return tuple(self.var(i) for i in range(self.nvars))

    def zero(self):
        return Polynomial(self, {})

    def one(self):
        return self.const(1)

    def const(self, c):
        c = Fraction(c)
        return Polynomial(self, {(0,) * self.nvars: c} if c else {})

    def monomial(self, exps, coeff=1):
        return Polynomial(self, {tuple(exps): Fraction(coeff)})

    def extend(self, names, position=None):
        """Ring with ``names`` inserted at ``position`` (default: appended)."""
        names = tuple(names)
        if position is None:
            position = self.nvars
        vs = self.variables
        return Ring(vs[:position] + names + vs[position:])

    def drop(self, index):
        vs = self.variables
        return Ring(vs[:index] + vs[index + 1:])

    def subring(self, start):
        return Ring(self.variables[start:])


class Polynomial:
    """Immutable polynomial: a mapping from exponent tuples to nonzero Fractions.

    The monomial order is not part of the value; methods that need one take
    it as an argument and default to degree reverse lex.
    """

    __slots__ = ("ring", "_terms", "_hash")

    def __init__(self, ring, terms=None):
        self.ring = ring
        clean = {}
        if terms:
            n = ring.nvars
            for e, c in terms.items():
                if len(e) != n:
                    raise StructuralError(f"exponent {e} does not fit {ring}")
                if c:
                    clean[tuple(e)] = Fraction(c)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, ring, terms):
        # trusted constructor: terms already clean
        p = cls.__new__(cls)
        p.ring = ring
        p._terms = terms
        p._hash = None
        return p

    # -- inspection -------------------------------------------------------
    @property
    def terms_dict(self):
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self):
        return len(self._terms)

    def is_zero(self):
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def is_constant(self):
        return all(not any(e) for e in self._terms)

    def constant_coefficient(self):
        return self._terms.get((0,) * self.ring.nvars, Fraction(0))

    def terms(self, order=DEFAULT_ORDER):
        """(coefficient, exponents) pairs, strictly decreasing in ``order``."""
        key = order.key
        return [(c, e) for e, c in sorted(self._terms.items(), key=lambda t: key(t[0]), reverse=True)]

    def leading_monomial(self, order=DEFAULT_ORDER):
        if not self._terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self._terms, key=order.key)

    def leading_coefficient(self, order=DEFAULT_ORDER):
        return self._terms[self.leading_monomial(order)]

    def total_degree(self):
        """Maximum total degree; ``None`` for the zero polynomial."""
        if not self._terms:
            return None
        return max(sum(e) for e in self._terms)

    def degree_in(self, i):
        if not self._terms:
            return None
        return max(e[i] for e in self._terms)

    def variables_used(self):
        used = set()
        for e in self._terms:
            used.update(i for i, x in enumerate(e) if x)
        return used

    # -- arithmetic -------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise StructuralError(f"ring mismatch: {self.ring} vs {other.ring}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return Polynomial._raw(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.ring, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = out.get(e, 0) + c1 * c2
                if v:
                    out[e] = v
                else:
                    del out[e]
        return Polynomial._raw(self.ring, out)

    __rmul__ = __mul__

    def scale(self, c):
        c = Fraction(c)
        if not c:
            return self.ring.zero()
        return Polynomial._raw(self.ring, {e: v * c for e, v in self._terms.items()})

    def __truediv__(self, c):
        if isinstance(c, (int, Fraction)):
            return self.scale(1 / Fraction(c))
        return NotImplemented

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("only non-negative integer powers")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == self.ring.const(other)._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self):
        from .printing import print_polynomial

        return f"Polynomial({print_polynomial(self)!r}, {self.ring})"

    def __str__(self):
        from .printing import print_polynomial

        return print_polynomial(self)

    # -- evaluation and calculus -----------------------------------------
    def __call__(self, *point):
        return self.evaluate(point)

    def evaluate(self, point):
        """Value at ``point``; entries may be any ring elements supporting + and *."""
        if len(point) != self.ring.nvars:
            raise StructuralError(f"point of length {len(point)} for {self.ring}")
        total = 0
        for e, c in self._terms.items():
            v = c
            for x, k in zip(point, e):
                if k:
                    v = v * x**k
            total = total + v
        return total

    def partial_derivative(self, i):
        if isinstance(i, str):
            i = self.ring.index(i)
        if not 0 <= i < self.ring.nvars:
            raise IndexError(f"variable index {i} out of range for {self.ring}")
        out = {}
        for e, c in self._terms.items():
            k = e[i]
            if k:
                d = list(e)
                d[i] = k - 1
                out[tuple(d)] = c * k
        return Polynomial._raw(self.ring, out)

    def gradient(self):
        return tuple(self.partial_derivative(i) for i in range(self.ring.nvars))


def partial_derivative(p, i):
    return p.partial_derivative(i)


def is_homogeneous(p):
    """``(True, d)`` if every term has total degree d, else ``(False, None)``.

    The zero polynomial is homogeneous of undefined degree: ``(True, None)``.
    """
    degrees = {sum(e) for e in p._terms}
    if not degrees:
        return True, None
    if len(degrees) == 1:
        return True, degrees.pop()
    return False, None


def homogenize(p, new_var, position=0):
    """Homogenize with a fresh variable inserted at ``position``."""
    if new_var in p.ring.variables:
        raise StructuralError(f"variable {new_var!r} already in {p.ring}")
    ring = p.ring.extend([new_var], position)
    d = p.total_degree()
    out = {}
    for e, c in p._terms.items():
        out[e[:position] + (d - sum(e),) + e[position:]] = c
    return Polynomial._raw(ring, out)


def dehomogenize(p, var):
    """Set variable ``var`` (index or name) to 1 and drop it from the ring."""
    i = p.ring.index(var) if isinstance(var, str) else var
    ring = p.ring.drop(i)
    out = {}
    for e, c in p._terms.items():
        k = e[:i] + e[i + 1:]
        v = out.get(k, 0) + c
        if v:
            out[k] = v
        else:
            out.pop(k, None)
    return Polynomial._raw(ring, out)


def substitute(p, assignments, target=None):
    """Simultaneous substitution ``x_i -> assignments[i]``.

    Variables without an assignment are carried over by name into the
    target ring (which defaults to the ring of the replacements, or
    ``p.ring`` when there are none).
    """
    norm = {}
    for k, v in assignments.items():
        norm[p.ring.index(k) if isinstance(k, str) else k] = v
    if target is None:
        rings = {v.ring for v in norm.values() if isinstance(v, Polynomial)}
        if len(rings) > 1:
            raise StructuralError("replacement polynomials live in different rings")
        target = rings.pop() if rings else p.ring
    images = []
    for i, name in enumerate(p.ring.variables):
        if i in norm:
            v = norm[i]
            images.append(v if isinstance(v, Polynomial) else target.const(v))
        else:
            images.append(target.var(name))
    powers = [dict() for _ in images]

    def power(i, k):
        cache = powers[i]
        if k not in cache:
            cache[k] = images[i] ** k
        return cache[k]

    total = target.zero()
    for e, c in p._terms.items():
        term = target.const(c)
        for i, k in enumerate(e):
            if k:
                term = term * power(i, k)
        total = total + term
    return total


def rename(p, target, mapping=None):
    """Move ``p`` into ``target`` by variable name (or an index map)."""
    if mapping is None:
        mapping = [target.index(name) for name in p.ring.variables]
    n = target.nvars
    out = {}
    for e, c in p._terms.items():
        d = [0] * n
        for i, k in enumerate(e):
            if k:
                j = mapping[i]
                if j is None:
                    raise StructuralError(f"variable {p.ring.variables[i]!r} has no image in {target}")
                d[j] += k
        d = tuple(d)
        v = out.get(d, 0) + c
        if v:
            out[d] = v
        else:
            out.pop(d, None)
    return Polynomial._raw(target, out)


def integer_coefficients(p):
    """(integer coefficient dict, multiplier) with ints = multiplier * p, content 1."""
    if not p._terms:
        return {}, Fraction(1)
    den = reduce(lcm, (c.denominator for c in p._terms.values()), 1)
    ints = {e: int(c * den) for e, c in p._terms.items()}
    g = reduce(gcd, ints.values(), 0)
    return {e: v // g for e, v in ints.items()}, Fraction(den, g)


def canonicalize(p, order=DEFAULT_ORDER):
    """Unique representative of the scalar class of ``p``.

    Integer coefficients with content 1 and a positive leading coefficient.
    """
    if not p._terms:
        return p
    ints, _ = integer_coefficients(p)
    lead = max(ints, key=order.key)
    if ints[lead] < 0:
        ints = {e: -v for e, v in ints.items()}
    return Polynomial._raw(p.ring, {e: Fraction(v) for e, v in ints.items()})


def divide_exact(p, q, order=DEFAULT_ORDER):
    """Quotient ``p / q`` if q divides p exactly, else ``None``."""
    if q.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    lq = q.leading_monomial(order)
    cq = q._terms[lq]
    rem = p
    quot = {}
    key = order.key
    while rem._terms:
        lr = max(rem._terms, key=key)
        shift = tuple(a - b for a, b in zip(lr, lq))
        if min(shift) < 0:
            return None
        c = rem._terms[lr] / cq
        quot[shift] = c
        rem = rem - p.ring.monomial(shift, c) * q
    return Polynomial(p.ring, quot)
