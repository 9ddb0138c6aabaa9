"""Projective duals of algebraic sets by Gröbner-basis elimination."""

from .dualize import (
    DegenerateDualWarning,
    check_diagram,
    default_lambdas,
    double_dual_check,
    dual,
    dual_details,
    tangent_sample_oracle,
)
from .errors import (
    DualisError,
    NonHomogeneousError,
    ParseError,
    PreconditionError,
    StepLimitExceeded,
    StructuralError,
)
from .groebner import (
    GroebnerBasis,
    Ideal,
    buchberger,
    elimination_ideal,
    groebner,
    ideal_contains,
    ideal_equal,
    ideal_membership,
    is_groebner_basis,
    normal_form,
    radical_contains,
    radical_membership,
    s_polynomial,
    step_budget,
)
from .orders import MonomialOrder
from .parsing import IdealDocument, parse_ideal, parse_polynomial
from .plane_curves import PlaneCurve, dual_via_pedal, invert_implicit, pedal_implicit
from .plot import PlotSpec, plot_implicit
from .poly import (
    Polynomial,
    Ring,
    canonicalize,
    dehomogenize,
    homogenize,
    is_homogeneous,
)
from .printing import print_document, print_ideal, print_polynomial

__version__ = "0.1.0"

__all__ = [
    "DegenerateDualWarning", "DualisError", "GroebnerBasis", "Ideal", "IdealDocument",
    "MonomialOrder", "NonHomogeneousError", "ParseError", "PlaneCurve", "PlotSpec",
    "Polynomial", "PreconditionError", "Ring", "StepLimitExceeded", "StructuralError",
    "buchberger", "canonicalize", "check_diagram", "default_lambdas", "dehomogenize",
    "double_dual_check", "dual", "dual_details", "dual_via_pedal", "elimination_ideal",
    "groebner", "homogenize", "ideal_contains", "ideal_equal", "ideal_membership",
    "invert_implicit", "is_groebner_basis", "is_homogeneous", "normal_form", "parse_ideal",
    "parse_polynomial", "pedal_implicit", "plot_implicit", "print_document", "print_ideal",
    "print_polynomial", "radical_contains", "radical_membership", "s_polynomial",
    "step_budget", "tangent_sample_oracle",
]
