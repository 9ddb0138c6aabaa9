"""Pedal curves and circle inversion for implicit affine plane curves.

The pedal (with respect to the origin) of ``f(x, y) = 0`` is found by
elimination: a point p = (x, y) on the curve, a point P = (X, Y) on the
tangent at p, and P orthogonal to that tangent.  Composing the pedal with
inversion in a circle of squared radius r2 gives an affine version of the
dual curve.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction

from .errors import ConstantCurveError, StructuralError, TrivialLocusError
from .groebner import Ideal, elimination_ideal, groebner
from .poly import Polynomial, Ring, canonicalize, divide_exact, rename

DEFAULT_R2 = Fraction(-1)


class ThroughOriginWarning(UserWarning):
    """The curve passes through the inversion centre."""


@dataclass(frozen=True)
class PlaneCurve:
    ring: Ring
    f: Polynomial

    def __post_init__(self):
        if self.ring.nvars != 2:
            raise StructuralError(f"a plane curve needs exactly two variables, got {self.ring}")
        if self.f.ring != self.ring:
            raise StructuralError("polynomial is not in the curve's ring")
        if self.f.is_zero():
            raise ConstantCurveError("the zero polynomial does not define a curve")

    @classmethod
    def of(cls, f):
        return cls(f.ring, f)

    def __str__(self):
        return f"{self.f} = 0"


def _check_r2(r2):
    r2 = Fraction(r2)
    if r2 == 0:
        raise ValueError("squared inversion radius must be nonzero")
    return r2


def pedal_ideal(c, *, saturate=True):
    """Elimination ideal of the pedal conditions, in the curve's ring.

    With ``saturate`` (the default) points with a vanishing gradient are
    excluded through an extra variable s and ``1 - s*(f_x^2 + f_y^2)``;
    without it a singular curve yields the zero ideal.
    """
    f = c.f
    if f.is_constant():
        raise ConstantCurveError(f"constant polynomial {f} does not define a curve")
    names = list(c.ring.variables)
    aux = ["@s"] if saturate else []
    ext = Ring(aux + names + ["@X", "@Y"])
    off = len(aux)
    embed = [off, off + 1]
    x, y = ext.var(off), ext.var(off + 1)
    X, Y = ext.var(off + 2), ext.var(off + 3)
    F = rename(f, ext, embed)
    fx = rename(f.partial_derivative(0), ext, embed)
    fy = rename(f.partial_derivative(1), ext, embed)
    eqs = [F, (X - x) * fx + (Y - y) * fy, X * fy - Y * fx]
    if saturate:
        eqs.append(ext.one() - ext.var(0) * (fx * fx + fy * fy))
    E = elimination_ideal(Ideal(ext, eqs), off + 2)
    return Ideal(c.ring, [rename(g, c.ring, [0, 1]) for g in E.generators])


def pedal_implicit(c, *, saturate=True):
    """Pedal curve of ``c`` with respect to the origin.

    Returns a :class:`PlaneCurve` when the pedal locus is a curve.  A point
    locus (the pedal of a line, say) has no single equation; its full
    elimination ideal is returned instead.
    """
    E = pedal_ideal(c, saturate=saturate)
    if E.is_zero():
        raise TrivialLocusError("the pedal conditions eliminate to the zero ideal")
    gb = groebner(E)
    if len(gb.basis) == 1:
        return PlaneCurve(c.ring, canonicalize(gb.basis[0]))
    return Ideal(c.ring, gb.basis)


def invert_implicit(c, r2=DEFAULT_R2):
    """Image of ``c`` under inversion ``v -> r2 * v / |v|^2``.

    Denominators are cleared with ``(x^2 + y^2)^deg f`` and any factor
    ``x^2 + y^2`` common to the result is divided out.
    """
    r2 = _check_r2(r2)
    f = c.f
    if f.is_constant():
        raise ConstantCurveError(f"constant polynomial {f} does not define a curve")
    if f.constant_coefficient() == 0:
        warnings.warn(f"curve {c} passes through the inversion centre", ThroughOriginWarning, stacklevel=2)
    ring = c.ring
    x, y = ring.gens()
    s = x * x + y * y
    d = f.total_degree()
    s_pow = [ring.one()]
    for _ in range(d):
        s_pow.append(s_pow[-1] * s)
    total = ring.zero()
    for e, coef in f.items():
        k = e[0] + e[1]
        total = total + ring.monomial(e, coef * r2**k) * s_pow[d - k]
    while True:
        q = divide_exact(total, s)
        if q is None or q.is_constant():
            break
        total = q
    return PlaneCurve(ring, canonicalize(total))


def dual_via_pedal(c, r2=DEFAULT_R2, *, saturate=True):
    """Inversion of the pedal curve: an affine model of the dual curve."""
    p = pedal_implicit(c, saturate=saturate)
    if not isinstance(p, PlaneCurve):
        raise TrivialLocusError("the pedal locus is not a curve")
    return invert_implicit(p, r2)
