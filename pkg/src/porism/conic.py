"""The canonical smooth conic x0*x2 = x1^2 and its parameter calculus.

Everything here is specialized to the one hard-coded conic: its rational
parametrization t -> (1 : t : t^2) with infinity at (0 : 0 : 1), chords,
tangents, the pole/polar correspondence of the symmetric form
Q = [[0,0,-1],[0,2,0],[-1,0,0]], and line-conic intersection in parameter
space. Arbitrary smooth conics are reached by transporting configurations
through a projectivity, never by generalizing these formulas.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import (
    EqualParameters,
    FieldInsufficient,
    NotIncident,
    NotOnConic,
    PointOnConic,
)
from .fields import FLOAT_TOL, sqrt_scalar
from .plane import INFINITY, ConicParam, ParamRoots, ProjLine, ProjPoint, incident


def conic_form(p: ProjPoint):
    """The defining form x0*x2 - x1^2 evaluated on canonical coordinates."""
    x0, x1, x2 = p.coords
    return x0 * x2 - x1 * x1


def on_conic(p: ProjPoint, tol: float = FLOAT_TOL) -> bool:
    """Whether p satisfies x0*x2 = x1^2 (exact, or within tol for floats)."""
    value = conic_form(p)
    if p.kind == "exact":
        return value == 0
    return abs(value) <= tol * 3


def veronese(t: ConicParam) -> ProjPoint:
    """The parametrization point (1 : t : t^2); infinity maps to (0 : 0 : 1)."""
    u, v = t.pair()
    return ProjPoint(v * v, u * v, u * u)


def parameter_of(p: ProjPoint) -> ConicParam:
    """Inverse of veronese on the conic."""
    if not on_conic(p):
        raise NotOnConic(f"{p!r} is not on the conic")
    x0, x1, _ = p.coords
    if p.kind == "exact":
        if x0 == 0:
            return INFINITY
        return ConicParam(x1 / x0)
    if abs(x0) <= FLOAT_TOL:
        return INFINITY
    return ConicParam(x1 / x0)


def chord(s: ConicParam, t: ConicParam) -> ProjLine:
    """The line through veronese(s) and veronese(t): (st : -(s+t) : 1)."""
    if s == t:
        raise EqualParameters(f"chord needs distinct parameters, got {s!r} twice")
    u1, v1 = s.pair()
    u2, v2 = t.pair()
    return ProjLine(u1 * u2, -(u1 * v2 + u2 * v1), v1 * v2)


def tangent_at(t: ConicParam) -> ProjLine:
    """The tangent line at veronese(t): (t^2 : -2t : 1)."""
    u, v = t.pair()
    return ProjLine(u * u, -2 * u * v, v * v)


def polar(p: ProjPoint) -> ProjLine:
    """The polar line Q.p = (-x2 : 2 x1 : -x0)."""
    x0, x1, x2 = p.coords
    return ProjLine(-x2, 2 * x1, -x0)


def pole(l: ProjLine) -> ProjPoint:
    """The pole of a line; inverse of polar."""
    l0, l1, l2 = l.coords
    return ProjPoint(2 * l2, -l1, 2 * l0)


def _quadratic_params(a, b, c) -> ParamRoots:
    """ConicParam roots of the binary quadratic a u^2 + b uv + c v^2.

    Affine chart: a t^2 + b t + c = 0 with the root at infinity when a = 0.
    Non-square rational discriminants are answered in Q(sqrt(disc)), the
    +sqrt root first; an inexpressible discriminant yields no params.
    """
    disc = b * b - 4 * a * c
    if a == 0:
        if b == 0:
            return ParamRoots((INFINITY,), disc, True)
        return ParamRoots((INFINITY, ConicParam(-c / b)), disc, False)
    if disc == 0:
        return ParamRoots((ConicParam(-b / (2 * a)),), disc, True)
    try:
        root = sqrt_scalar(disc)
    except FieldInsufficient:
        return ParamRoots((), disc, False)
    return ParamRoots(
        (ConicParam((-b + root) / (2 * a)), ConicParam((-b - root) / (2 * a))),
        disc,
        False,
    )


def line_conic_params(l: ProjLine) -> ParamRoots:
    """Parameters where l meets the conic: roots of l2 t^2 + l1 t + l0 = 0.

    A double root signals tangency; two roots in Q(sqrt(disc)) appear when the
    discriminant is a rational non-square; no roots are reported when the
    scalar field cannot express them (float backend with negative disc).
    """
    l0, l1, l2 = l.coords
    return _quadratic_params(l2, l1, l0)


def second_intersection(l: ProjLine, s: ConicParam) -> ConicParam:
    """The other parameter of l on the conic, via Vieta; equals s iff tangent.

    Stays inside the field generated by l and s, so chains that start in one
    quadratic extension never need a second one.
    """
    if not incident(l, veronese(s)):
        raise NotIncident(f"{s!r} is not an intersection parameter of {l!r}")
    l0, l1, l2 = l.coords
    if s.is_infinite:
        # incidence at infinity forces l2 = 0
        if l1 == 0:
            return INFINITY
        return ConicParam(-l0 / l1)
    if l2 == 0:
        return INFINITY
    return ConicParam(-l1 / l2 - s.value)


def tangents_from(p: ProjPoint) -> ParamRoots:
    """Tangency parameters of the tangent lines through p, off the conic.

    Roots of p0 t^2 - 2 p1 t + p2 = 0; agrees with line_conic_params(polar(p)).
    """
    if on_conic(p):
        raise PointOnConic(f"{p!r} lies on the conic; tangency is not a pair")
    x0, x1, x2 = p.coords
    return _quadratic_params(x0, -2 * x1, x2)


@dataclass(frozen=True)
class TangencyRecord:
    """One tangency event along a chain: the parameter, its tangent line, and
    the vertex the tangent was drawn from (absent for seed tangents)."""

    parameter: ConicParam
    line: ProjLine
    vertex: Optional[ProjPoint] = None


def other_tangent_param(p: ProjPoint, t_in: ConicParam) -> ConicParam:
    """Given that tangent_at(t_in) passes through p, the other tangency
    parameter from p, via Vieta on p0 t^2 - 2 p1 t + p2 = 0.

    This is the workhorse of primal chains: it never leaves the field of the
    inputs, unlike tangents_from which may need a square root.
    """
    if not incident(tangent_at(t_in), p):
        raise NotIncident(f"tangent at {t_in!r} does not pass through {p!r}")
    x0, x1, x2 = p.coords
    if t_in.is_infinite:
        # infinity is a root, so the leading coefficient x0 vanishes
        if x1 == 0:
            return INFINITY
        return ConicParam(x2 / (2 * x1))
    if x0 == 0:
        return INFINITY
    return ConicParam(2 * x1 / x0 - t_in.value)
