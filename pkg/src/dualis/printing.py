"""Canonical text form of polynomials and ideals.

Output is re-readable by :func:`dualis.parsing.parse_ideal`: explicit ``*``,
``^`` powers, terms in descending degree-reverse-lex order.
"""

from .poly import DEFAULT_ORDER


def _format_monomial(names, exps):
    parts = []
    for name, k in zip(names, exps):
        if k == 1:
            parts.append(name)
        elif k:
            parts.append(f"{name}^{k}")
    return "*".join(parts)


def _format_coeff(c):
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def print_polynomial(p, order=DEFAULT_ORDER):
    if p.is_zero():
        return "0"
    names = p.ring.variables
    out = []
    for i, (c, e) in enumerate(p.terms(order)):
        mono = _format_monomial(names, e)
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if not mono:
            body = _format_coeff(a)
        elif a == 1:
            body = mono
        else:
            body = f"{_format_coeff(a)}*{mono}"
        if i == 0:
            out.append(body if sign == "+" else "-" + body)
        else:
            out.append(sign + body)
    return "".join(out)


def print_ideal(ideal, order=DEFAULT_ORDER):
    """``ideal = g1; g2; ...;`` (``ideal = 0;`` for the zero ideal)."""
    gens = ideal.generators
    if not gens:
        return "ideal = 0;"
    return "ideal = " + " ".join(print_polynomial(g, order) + ";" for g in gens)


def print_ring(ring):
    return "ring " + " ".join(ring.variables) + ";"


def print_document(ideal, order=DEFAULT_ORDER):
    """Complete ideal file: ring declaration plus ideal line."""
    return print_ring(ideal.ring) + "\n" + print_ideal(ideal, order) + "\n"
