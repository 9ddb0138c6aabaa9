"""Projective duals of homogeneous ideals by elimination.

For ``I = (p_1, ..., p_m)`` in Q[x_0..x_n] the system

    p_j(x) = 0                                   (j = 1..m)
    u_i - sum_j lambda_j * dp_j/dx_i (x) = 0     (i = 0..n)

lives in Q[x, lambda, u].  Eliminating x and lambda leaves the ideal of
tangent hyperplanes in the u coordinates; renaming u_i back to x_i gives
the dual ideal in the original ring, so duals can be dualized again.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import (
    BadRadicalError,
    EmptyIdealError,
    NonHomogeneousError,
    NotOnVarietyError,
    PreconditionError,
)
from .groebner import (
    Ideal,
    elimination_basis,
    groebner,
    ideal_contains,
    ideal_equal,
    radical_contains,
    restrict_to_trailing,
)
from .poly import DEFAULT_ORDER, Ring, is_homogeneous, rename


class DegenerateDualWarning(UserWarning):
    """The elimination ideal came out as the zero ideal."""


@dataclass(frozen=True)
class DualizationSystem:
    base_ring: Ring
    extended_ring: Ring
    system: Ideal
    # jacobian[j][i] = d p_j / d x_i, polynomials in base_ring
    jacobian: tuple

    @property
    def m(self):
        return len(self.jacobian)

    @property
    def n_eliminated(self):
        return self.base_ring.nvars + self.m

    def lambda_vars(self):
        n = self.base_ring.nvars
        return self.extended_ring.variables[n:n + self.m]

    def u_vars(self):
        return self.extended_ring.variables[self.base_ring.nvars + self.m:]

    def gauss_map(self, point, lambdas):
        """``u = J(x)^t lambda`` at a point of the base ring."""
        rows = [[d.evaluate(point) for d in row] for row in self.jacobian]
        n1 = self.base_ring.nvars
        return tuple(sum((lambdas[j] * rows[j][i] for j in range(self.m)), 0) for i in range(n1))


def _aux_names(ring, m):
    lam = [f"lambda{j + 1}" for j in range(m)]
    us = [f"u{i}" for i in range(ring.nvars)]
    if set(lam + us) & set(ring.variables):
        lam = ["@" + v for v in lam]
        us = ["@" + v for v in us]
    return lam, us


def _check_input(I):
    if I.is_zero():
        raise EmptyIdealError()
    if I.ring.nvars < 2:
        raise PreconditionError("dualization needs at least two variables")
    for g in I.generators:
        if not is_homogeneous(g)[0]:
            raise NonHomogeneousError()


def build_system(I):
    _check_input(I)
    base = I.ring
    n1 = base.nvars
    gens = I.generators
    m = len(gens)
    lam, us = _aux_names(base, m)
    ext = base.extend(lam + us)
    embed = list(range(n1))
    jac = tuple(tuple(g.partial_derivative(i) for i in range(n1)) for g in gens)
    lam_p = [ext.var(n1 + j) for j in range(m)]
    system = [rename(g, ext, embed) for g in gens]
    for i in range(n1):
        s = ext.var(n1 + m + i)
        for j in range(m):
            d = jac[j][i]
            if not d.is_zero():
                s = s - lam_p[j] * rename(d, ext, embed)
        system.append(s)
    return DualizationSystem(base, ext, Ideal(ext, system), jac)


@dataclass(frozen=True)
class DualResult:
    """Everything :func:`dual` computes on the way."""

    system: DualizationSystem
    elimination_basis: object  # GroebnerBasis in the extended ring
    elimination_ideal: Ideal  # in Q[u_0..u_n]
    dual: Ideal  # in the base ring
    degenerate: bool


def dual_details(I, *, inner="degrevlex", **gb_options):
    ds = build_system(I)
    k = ds.n_eliminated
    gb = elimination_basis(ds.system, k, inner, **gb_options)
    E = restrict_to_trailing(gb, k)
    base = ds.base_ring
    D = Ideal(base, [rename(g, base, list(range(base.nvars))) for g in E.generators])
    D = Ideal(base, groebner(D, DEFAULT_ORDER).basis) if not D.is_zero() else D
    return DualResult(ds, gb, E, D, D.is_zero())


def dual(I, *, inner="degrevlex", **gb_options):
    """Dual ideal of the homogeneous ideal ``I``, as a reduced Gröbner basis.

    ``inner="lex"`` eliminates with pure lex instead of the block order.
    Warns with :class:`DegenerateDualWarning` when the result is the zero
    ideal.
    """
    res = dual_details(I, inner=inner, **gb_options)
    if res.degenerate:
        warnings.warn(f"dual of {I} is the zero ideal", DegenerateDualWarning, stacklevel=2)
    return res.dual


@dataclass(frozen=True)
class BidualReport:
    dual: Ideal
    bidual: Ideal
    equal: bool


def double_dual_check(I, **gb_options):
    D = dual(I, **gb_options)
    if D.is_zero():
        return BidualReport(D, D, False)
    DD = dual(D, **gb_options)
    return BidualReport(D, DD, ideal_equal(I, DD))


@dataclass(frozen=True)
class DiagramReport:
    """Inclusions of the ideal / radical / dual diagram, as booleans.

    ``bent_arrow`` is measured, not implied by any theorem.  ``None`` marks
    checks that need a radical candidate which was not supplied.
    """

    dual: Ideal
    dual_of_radical: Ideal | None
    dual_in_its_radical: bool
    radical_dual_in_its_radical: bool | None
    bent_arrow: bool | None
    varieties: dict = field(default_factory=dict)
    notes: tuple = ()

    def all_true(self):
        checks = [self.dual_in_its_radical, self.radical_dual_in_its_radical, self.bent_arrow]
        checks += list(self.varieties.values())
        return all(c for c in checks if c is not None)

    def lines(self):
        def fmt(v):
            return "n/a" if v is None else ("true" if v else "false")

        from .printing import print_ideal

        out = [f"D(I): {print_ideal(self.dual)}"]
        if self.dual_of_radical is not None:
            out.append(f"D(sqrt I): {print_ideal(self.dual_of_radical)}")
        out.append(f"D(I) in sqrt(D(I)): {fmt(self.dual_in_its_radical)}")
        out.append(f"D(sqrt I) in sqrt(D(sqrt I)): {fmt(self.radical_dual_in_its_radical)}")
        out.append(f"sqrt(D(sqrt I)) in sqrt(D(I)) [empirical]: {fmt(self.bent_arrow)}")
        for name, v in self.varieties.items():
            out.append(f"{name}: {fmt(v)}")
        return out


def check_diagram(I, radical_candidate=None, **gb_options):
    """Evaluate the inclusions between I, its radical and their duals.

    ``radical_candidate`` stands in for √I; it must satisfy
    ``I ⊆ R ⊆ √I`` or :class:`BadRadicalError` is raised.
    """
    R = radical_candidate
    if R is not None:
        if R.ring != I.ring:
            raise BadRadicalError("radical candidate lives in a different ring")
        if not ideal_contains(R, I):
            raise BadRadicalError("radical candidate does not contain the ideal")
        if not radical_contains(I, R):
            raise BadRadicalError("radical candidate is not inside the radical")
    DI = dual(I, **gb_options)
    a = radical_contains(DI, DI)
    DR = b = c = None
    if R is not None:
        DR = dual(R, **gb_options)
        b = radical_contains(DR, DR)
        # sqrt(D(R)) ⊆ sqrt(D(I))  iff  D(R) ⊆ sqrt(D(I))
        c = radical_contains(DI, DR)
    varieties = {
        "V(sqrt(D(I))) in V(D(I))": a,
        "V(sqrt(D(sqrt I))) in V(D(sqrt I))": b,
        "V(sqrt(D(I))) in V(sqrt(D(sqrt I))) [empirical]": c,
    }
    notes = ("bent arrow is an empirical check",) if c is not None else ()
    return DiagramReport(DI, DR, a, b, c, varieties, notes)


def default_lambdas(m):
    """Fixed multiplier vectors: unit vectors, all ones, (1..m), (2..m+1), all -1."""
    vecs = []
    for j in range(m):
        vecs.append(tuple(1 if i == j else 0 for i in range(m)))
    vecs.append((1,) * m)
    vecs.append(tuple(range(1, m + 1)))
    vecs.append(tuple(range(2, m + 2)))
    vecs.append((-1,) * m)
    out = []
    for v in vecs:
        if v not in out:
            out.append(v)
    return [tuple(Fraction(c) for c in v) for v in out]


def tangent_sample_oracle(I, D, samples, lambdas=None):
    """Check ``D`` against tangent hyperplanes sampled through the Gauss map.

    Every sample must lie on V(I).  For each sample x and multiplier
    vector lambda the hyperplane ``u = J(x)^t lambda`` is computed; the
    result is True iff every generator of D vanishes at every nonzero u.
    Coordinates may come from any exact field implementing ``+ - * ==``.
    """
    gens = I.generators
    if lambdas is None:
        lambdas = default_lambdas(max(len(gens), 1))
    jac = [[g.partial_derivative(i) for i in range(I.ring.nvars)] for g in gens]
    for x in samples:
        for g in gens:
            if g.evaluate(x) != 0:
                raise NotOnVarietyError(f"sample {x} is not on V(I)")
        rows = [[d.evaluate(x) for d in row] for row in jac]
        for lam in lambdas:
            u = [sum((lam[j] * rows[j][i] for j in range(len(gens))), 0) for i in range(I.ring.nvars)]
            if all(c == 0 for c in u):
                continue
            for h in D.generators:
                if h.evaluate(u) != 0:
                    return False
    return True
