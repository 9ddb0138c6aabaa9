"""Command line driver.

Exit status: 0 success, 1 a yes/no question answered "no", 2 unreadable or
malformed input, 3 a precondition failed, 4 the step budget ran out.
"""

from __future__ import annotations

import argparse
import io
import os
import sys
import warnings
from fractions import Fraction

from .dualize import check_diagram, double_dual_check, dual_details
from .errors import DualisError, ParseError, StepLimitExceeded, StructuralError
from .groebner import (
    Ideal,
    elimination_ideal,
    groebner,
    ideal_contains,
    ideal_equal,
    ideal_membership,
    normal_form,
    radical_membership,
    step_budget,
)
from .orders import resolve_order
from .parsing import parse_ideal, parse_polynomial
from .plane_curves import PlaneCurve, dual_via_pedal, invert_implicit, pedal_implicit
from .plot import PlotSpec, plot_implicit
from .poly import dehomogenize, homogenize
from .printing import print_document, print_ideal, print_polynomial, print_ring

EXIT_OK, EXIT_NO, EXIT_PARSE, EXIT_PRECONDITION, EXIT_LIMIT = range(5)
STEP_LIMIT_ENV = "DUALIS_STEP_LIMIT"


def _show_warning(message, category, filename, lineno, file=None, line=None):
    print(f"warning: {message}", file=sys.stderr)


class InputError(Exception):
    """A file could not be read."""


def _read(path):
    try:
        if path == "-":
            return sys.stdin.read()
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc


def _load(path):
    try:
        return parse_ideal(_read(path))
    except ParseError as exc:
        exc.source = "<stdin>" if path == "-" else path
        raise


def _load_ideal(path):
    return _load(path).ideal()


def _load_pair(args):
    I = _load_ideal(args.input)
    J = _load_ideal(args.other)
    if I.ring != J.ring:
        raise StructuralError(f"ideals live in different rings: {I.ring} and {J.ring}")
    return I, J


def _curve(I):
    if I.ring.nvars != 2 or len(I.generators) != 1:
        raise StructuralError("a plane curve file needs two variables and exactly one polynomial")
    return PlaneCurve(I.ring, I.generators[0])


def _rational(text):
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def _answer(flag, out):
    out.write("true\n" if flag else "false\n")
    return EXIT_OK if flag else EXIT_NO


def _emit(I, args, out):
    out.write(print_document(I) if args.full else print_ideal(I) + "\n")


def _labelled(label, I):
    return label + print_ideal(I)[len("ideal"):] + "\n"


# -- subcommands ---------------------------------------------------------------


def cmd_dual(args, out):
    res = dual_details(_load_ideal(args.input), inner=args.inner)
    if args.show_system:
        out.write(print_ring(res.system.extended_ring) + "\n")
        out.write(_labelled("system", res.system.system))
    if args.show_gb:
        out.write(_labelled("gb", res.elimination_basis.as_ideal()))
    _emit(res.dual, args, out)
    return EXIT_OK


def cmd_bidual(args, out):
    rep = double_dual_check(_load_ideal(args.input))
    out.write(f"dual: {print_ideal(rep.dual)}\n")
    out.write(f"bidual: {print_ideal(rep.bidual)}\n")
    out.write(f"bidual equals input: {'true' if rep.equal else 'false'}\n")
    return EXIT_OK


def cmd_gb(args, out):
    I = _load_ideal(args.input)
    order = resolve_order(args.order, I.ring.nvars)
    _emit(groebner(I, order).as_ideal(), args, out)
    return EXIT_OK


def cmd_nf(args, out):
    I = _load_ideal(args.input)
    p = parse_polynomial(args.poly, I.ring)
    out.write(print_polynomial(normal_form(p, groebner(I))) + "\n")
    return EXIT_OK


def cmd_eliminate(args, out):
    I = _load_ideal(args.input)
    out.write(print_document(elimination_ideal(I, args.k, args.inner)))
    return EXIT_OK


def cmd_member(args, out):
    I = _load_ideal(args.input)
    return _answer(ideal_membership(parse_polynomial(args.poly, I.ring), I), out)


def cmd_radmember(args, out):
    I = _load_ideal(args.input)
    return _answer(radical_membership(parse_polynomial(args.poly, I.ring), I), out)


def cmd_equal(args, out):
    return _answer(ideal_equal(*_load_pair(args)), out)


def cmd_contains(args, out):
    return _answer(ideal_contains(*_load_pair(args)), out)


def cmd_diagram(args, out):
    I = _load_ideal(args.input)
    R = None
    if args.radical:
        R = _load_ideal(args.radical)
        if R.ring != I.ring:
            raise StructuralError("radical candidate lives in a different ring")
    rep = check_diagram(I, R)
    out.write("\n".join(rep.lines()) + "\n")
    return EXIT_OK


def cmd_homogenize(args, out):
    I = _load_ideal(args.input)
    if not 0 <= args.position <= I.ring.nvars:
        raise StructuralError(f"position must be in 0..{I.ring.nvars}")
    gens = [homogenize(g, args.var, args.position) for g in I.generators]
    if not gens:
        raise StructuralError("nothing to homogenize")
    out.write(print_document(Ideal(gens[0].ring, gens)))
    return EXIT_OK


def cmd_dehomogenize(args, out):
    I = _load_ideal(args.input)
    if args.var not in I.ring.variables:
        raise StructuralError(f"unknown variable {args.var!r}")
    gens = [dehomogenize(g, args.var) for g in I.generators]
    ring = I.ring.drop(I.ring.index(args.var))
    out.write(print_document(Ideal(ring, gens)))
    return EXIT_OK


def cmd_pedal(args, out):
    c = _curve(_load_ideal(args.input))
    res = pedal_implicit(c)
    ideal = Ideal(c.ring, [res.f]) if isinstance(res, PlaneCurve) else res
    out.write(print_document(ideal))
    return EXIT_OK


def cmd_invert(args, out):
    c = _curve(_load_ideal(args.input))
    out.write(print_document(Ideal(c.ring, [invert_implicit(c, args.r2).f])))
    return EXIT_OK


def cmd_dualpedal(args, out):
    c = _curve(_load_ideal(args.input))
    out.write(print_document(Ideal(c.ring, [dual_via_pedal(c, args.r2).f])))
    return EXIT_OK


def cmd_plot(args, out):
    spec = PlotSpec.from_string(args.window, args.res)
    curves = []
    ring = None
    for path in args.input:
        I = _load_ideal(path)
        if I.ring.nvars != 2:
            raise StructuralError(f"{path}: plotting needs a ring with two variables")
        if ring is not None and I.ring != ring:
            raise StructuralError(f"{path}: all curves must use the variables {' '.join(ring.variables)}")
        ring = ring or I.ring
        curves.extend(PlaneCurve(I.ring, g) for g in I.generators)
    if not curves:
        raise StructuralError("no curves to plot")
    out.write(plot_implicit(curves, spec))
    return EXIT_OK


# -- argument parsing ------------------------------------------------------------


def build_parser():
    parser = argparse.ArgumentParser(prog="dualis", description="Projective duals of algebraic varieties.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name, func, help, *, multi_input=False):
        p = sub.add_parser(name, help=help, description=help)
        if multi_input:
            p.add_argument("-i", "--input", action="append", required=True, metavar="FILE",
                           help="ideal file; repeat for several curves")
        else:
            p.add_argument("-i", "--input", required=True, metavar="FILE", help="ideal file, or - for stdin")
        p.add_argument("-o", "--output", metavar="FILE", help="write here instead of stdout")
        p.set_defaults(func=func)
        return p

    p = add("dual", cmd_dual, "dual ideal of a homogeneous ideal")
    p.add_argument("--show-system", action="store_true", help="also print the tangent-hyperplane system")
    p.add_argument("--show-gb", action="store_true", help="also print the elimination Gröbner basis")
    p.add_argument("--inner", choices=("degrevlex", "lex"), default="degrevlex",
                   help="order inside the elimination blocks")
    p.add_argument("--full", action="store_true", help="print a complete document, ring line included")

    add("bidual", cmd_bidual, "dualize twice and compare with the input")

    p = add("gb", cmd_gb, "reduced Gröbner basis")
    p.add_argument("--order", default="degrevlex", help="lex, degrevlex or block:K")
    p.add_argument("--full", action="store_true", help="print a complete document, ring line included")

    p = add("nf", cmd_nf, "normal form of a polynomial modulo the ideal")
    p.add_argument("-p", "--poly", required=True)

    p = add("eliminate", cmd_eliminate, "eliminate the first K variables")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--inner", choices=("degrevlex", "lex"), default="degrevlex")

    for name, func, help in (("member", cmd_member, "ideal membership"),
                             ("radmember", cmd_radmember, "radical membership")):
        p = add(name, func, help)
        p.add_argument("-p", "--poly", required=True)

    p = add("equal", cmd_equal, "do two ideals coincide")
    p.add_argument("-j", "--other", required=True, metavar="FILE2")
    p = add("contains", cmd_contains, "does the first ideal contain the second")
    p.add_argument("-j", "--other", required=True, metavar="FILE2")

    p = add("diagram", cmd_diagram, "inclusions between an ideal, its radical and their duals")
    p.add_argument("--radical", metavar="FILE", help="ideal R with I ⊆ R ⊆ √I")

    p = add("homogenize", cmd_homogenize, "homogenize every generator with a new variable")
    p.add_argument("--var", required=True)
    p.add_argument("--position", type=int, default=0, help="index of the new variable (default 0)")
    p = add("dehomogenize", cmd_dehomogenize, "set a variable to 1")
    p.add_argument("--var", required=True)

    add("pedal", cmd_pedal, "pedal curve with respect to the origin")
    for name, func, help in (("invert", cmd_invert, "inversion in a circle"),
                             ("dualpedal", cmd_dualpedal, "inverted pedal curve")):
        p = add(name, func, help)
        p.add_argument("--r2", type=_rational, default=Fraction(-1), help="squared radius (default -1)")

    p = add("plot", cmd_plot, "SVG plot of plane curves", multi_input=True)
    p.add_argument("--window", default="-2,2,-2,2", help="XMIN,XMAX,YMIN,YMAX")
    p.add_argument("--res", type=int, default=64, help="grid cells per axis")
    return parser


def _step_limit_from_env():
    raw = os.environ.get(STEP_LIMIT_ENV)
    if raw is None or raw == "":
        return None
    try:
        value = int(raw)
    except ValueError:
        value = 0
    if value <= 0:
        raise InputError(f"{STEP_LIMIT_ENV} must be a positive integer, got {raw!r}")
    return value


def _join_negative_values(argv):
    # "--window -2,2,-2,2" would otherwise read -2,2,... as an option
    out = []
    it = iter(argv)
    for a in it:
        if a in ("--window", "--r2"):
            nxt = next(it, None)
            out.append(a if nxt is None else f"{a}={nxt}")
        else:
            out.append(a)
    return out


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(_join_negative_values(sys.argv[1:] if argv is None else argv))
    try:
        limit = _step_limit_from_env()
        with step_budget(limit), warnings.catch_warnings():
            warnings.simplefilter("always")
            warnings.showwarning = _show_warning
            if args.output:
                buf = io.StringIO()
                code = args.func(args, buf)
                with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
                    fh.write(buf.getvalue())
            else:
                code = args.func(args, sys.stdout)
        return code
    except ParseError as exc:
        where = getattr(exc, "source", None)
        print(f"error: {where + ':' if where else ''}{exc}", file=sys.stderr)
        return EXIT_PARSE
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except StepLimitExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except (DualisError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
