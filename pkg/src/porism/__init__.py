"""Exact projective geometry engine for conic closure porisms.

The package verifies, in exact arithmetic over Q and its quadratic
extensions, a family of closure statements about polygons inscribed in a
line configuration and circumscribed about the canonical conic x0*x2 = x1^2:
products of center involutions, harmonic criteria, hexagon collinearity, the
inscribed/circumscribed polygon theorems, the closure porism itself, and the
degenerate two-line polynomial criterion.
"""

from .algebra import Mat2, Mat3, Polynomial, det3, mat2_power, pn_polynomial
from .closure import (
    LineConfiguration,
    PolygonChain,
    TangentClosure,
    TwoLineSystem,
    ValidityReport,
    concurrent_tangent_chain,
    dual_chain,
    generate_closing,
    poles_of,
    porism_holds,
    primal_chain,
    random_configuration,
    two_line_closure,
    validate,
    well_inscribed,
)
from .conic import (
    TangencyRecord,
    chord,
    line_conic_params,
    on_conic,
    other_tangent_param,
    parameter_of,
    polar,
    pole,
    second_intersection,
    tangent_at,
    tangents_from,
    veronese,
)
from .errors import GeometryError
from .fields import FLOAT_TOL, QuadExt, quadext, sqrt_scalar
from .involution import (
    DualMoebiusReport,
    FregierInvolution,
    InvolutionChain,
    MoebiusReport,
    aligned_centers_involutive,
    center_of,
    closing_center_locus,
    dual_moebius_check,
    fregier,
    harmonic_product_test,
    involution_from_fixed,
    moebius_check,
    pascal_line,
)
from .plane import (
    INFINITY,
    ConicParam,
    MobiusMap,
    ParamRoots,
    ProjLine,
    ProjPoint,
    collinear,
    concurrent,
    cross_ratio,
    fixed_points,
    incident,
    is_involution,
    join,
    meet,
    mobius_apply,
    mobius_compose,
    point_on_line,
)
from .scene import SceneDocument, load_scene, parse, save_scene, serialize
from .suites import (
    SUITES,
    ResampleTally,
    Suite,
    TrialFailure,
    TrialReport,
    run_suite,
    run_trial,
    trial_seed,
)
from .svg import render_scene

__version__ = "0.1.0"

__all__ = [
    "FLOAT_TOL",
    "INFINITY",
    "ConicParam",
    "DualMoebiusReport",
    "FregierInvolution",
    "GeometryError",
    "InvolutionChain",
    "LineConfiguration",
    "Mat2",
    "Mat3",
    "MobiusMap",
    "MoebiusReport",
    "ParamRoots",
    "PolygonChain",
    "Polynomial",
    "ProjLine",
    "ProjPoint",
    "QuadExt",
    "ResampleTally",
    "SceneDocument",
    "SUITES",
    "Suite",
    "TangencyRecord",
    "TangentClosure",
    "TrialFailure",
    "TrialReport",
    "TwoLineSystem",
    "ValidityReport",
    "aligned_centers_involutive",
    "center_of",
    "chord",
    "closing_center_locus",
    "collinear",
    "concurrent",
    "concurrent_tangent_chain",
    "cross_ratio",
    "det3",
    "dual_chain",
    "dual_moebius_check",
    "fixed_points",
    "fregier",
    "generate_closing",
    "harmonic_product_test",
    "incident",
    "involution_from_fixed",
    "is_involution",
    "join",
    "line_conic_params",
    "load_scene",
    "mat2_power",
    "meet",
    "mobius_apply",
    "mobius_compose",
    "moebius_check",
    "on_conic",
    "other_tangent_param",
    "parameter_of",
    "parse",
    "pascal_line",
    "pn_polynomial",
    "point_on_line",
    "polar",
    "pole",
    "poles_of",
    "porism_holds",
    "primal_chain",
    "quadext",
    "random_configuration",
    "render_scene",
    "run_suite",
    "run_trial",
    "save_scene",
    "second_intersection",
    "serialize",
    "sqrt_scalar",
    "tangent_at",
    "tangents_from",
    "trial_seed",
    "two_line_closure",
    "validate",
    "veronese",
    "well_inscribed",
    "__version__",
]
