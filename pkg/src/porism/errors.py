"""Structured error types shared by the geometry modules.

Every degenerate input or impossible construction raises one of these, so
harnesses can distinguish "the theorem failed" (an assertion) from "the
instance was degenerate" (resample).
"""


class GeometryError(Exception):
    """Base class for all structured geometry failures."""


class MixedBackend(GeometryError, TypeError):
    """Exact and float scalars (or incompatible extension fields) mixed in one expression."""


class FieldInsufficient(GeometryError):
    """The current scalar field cannot express a required square root."""


class CoincidentPoints(GeometryError):
    """join() of a point with itself."""


class CoincidentLines(GeometryError):
    """meet() of a line with itself."""


class DegenerateTuple(GeometryError):
    """Cross-ratio of a tuple with a repeated entry."""


class IdentityMap(GeometryError):
    """Operation undefined for the identity class of PGL(2)."""


class NotOnConic(GeometryError):
    """parameter_of() of a point that is not on the conic."""


class PointOnConic(GeometryError):
    """tangents_from() of a point lying on the conic (the two tangents collapse)."""


class CenterOnConic(GeometryError):
    """Frégier center on the conic: the matrix degenerates (det = 0)."""


class NotIncident(GeometryError):
    """second_intersection() at a parameter that is not on the line."""


class EqualParameters(GeometryError):
    """chord() or involution_from_fixed() with two equal parameters."""


class NotInvolution(GeometryError):
    """center_of() of a map that is not an involution."""


class SharedFixedPoint(GeometryError):
    """harmonic_product_test() on involutions with intersecting fixed-point sets."""


class DegenerateHexagon(GeometryError):
    """pascal_line() input whose chords or meets collapse."""


class DegenerateConstruction(GeometryError):
    """moebius_check() input with coincident parameters."""


class DegeneratePolygon(GeometryError):
    """dual_moebius_check() input that does not form a polygon."""


class InvalidConfiguration(GeometryError):
    """Line configuration failed validation (tangent member, repeated parameter, ...)."""


class DegenerateStart(GeometryError):
    """Chain start hits a configuration point, the conic, or a fixed point mid-chain."""


class NotClosed(GeometryError):
    """well_inscribed() of a chain that did not close."""


class GenerationExhausted(GeometryError):
    """generate_closing() gave up after its retry budget."""


class ParseError(GeometryError, ValueError):
    """Malformed scene document."""


class UnknownSuite(GeometryError, ValueError):
    """cmd_verify() with a suite name that does not exist."""
