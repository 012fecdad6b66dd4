"""Real tropical bases, signed tropical hypersurfaces and their singular points.

Exact arithmetic throughout: coefficients are finite real Puiseux sums with
rational exponents, tropical data are signed rationals.
"""

from .core import (
    KPoly,
    RealTropPoly,
    SignedTrop,
    format_point,
    minus,
    parse_point,
    plus,
    residue_poly,
    trop,
    trop_point,
    tropicalize,
)
from .discriminant import (
    AffineFunctional,
    classify_plane_weight_classes,
    euler_derivative,
    euler_intersection_check,
    find_separating_L,
    flag,
    is_singular,
    positivize,
    separates,
    weight_class_eq,
)
from .linear import LinearSystem, circuits, linear_member, sample_solutions
from .patchwork import certified_member, dual_subdivision, is_patchwork_certified, plane_curve_cells
from .puiseux import Puiseux, PuiseuxParseError, t
from .univariate import (
    certify_nonroot,
    polya_exponent,
    real_multiplicity,
    real_roots,
    signed_roots,
    unsigned_roots,
    viro_lift,
)
from .zerodim import PointSetK, build_basis, verify_basis

__all__ = [
    "AffineFunctional",
    "build_basis",
    "certified_member",
    "certify_nonroot",
    "circuits",
    "classify_plane_weight_classes",
    "dual_subdivision",
    "euler_derivative",
    "euler_intersection_check",
    "find_separating_L",
    "flag",
    "format_point",
    "is_patchwork_certified",
    "is_singular",
    "KPoly",
    "linear_member",
    "LinearSystem",
    "minus",
    "parse_point",
    "plane_curve_cells",
    "plus",
    "PointSetK",
    "polya_exponent",
    "positivize",
    "Puiseux",
    "PuiseuxParseError",
    "real_multiplicity",
    "real_roots",
    "RealTropPoly",
    "residue_poly",
    "sample_solutions",
    "separates",
    "signed_roots",
    "SignedTrop",
    "t",
    "trop",
    "trop_point",
    "tropicalize",
    "unsigned_roots",
    "verify_basis",
    "viro_lift",
    "weight_class_eq",
]

__version__ = "0.1.0"
