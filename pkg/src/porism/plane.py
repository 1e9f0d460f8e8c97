"""Incidence geometry of P^2 and the PGL(2) action on conic parameters.

Points and lines carry canonical-normalized coordinate triples, so equality
and hashing are exact for the rational and quadratic-extension backends. The
float backend compares by proportionality within FLOAT_TOL.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .algebra import Mat2, det3
from .errors import (
    CoincidentLines,
    CoincidentPoints,
    DegenerateTuple,
    IdentityMap,
    MixedBackend,
)
from .fields import (
    FLOAT_TOL,
    FieldInsufficient,
    QuadExt,
    Scalar,
    scalar_kind,
    sqrt_scalar,
)


def _coerce_scalar(x) -> Scalar:
    if isinstance(x, bool):
        raise TypeError("bool is not a scalar")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, (Fraction, QuadExt, float)):
        return x
    raise TypeError(f"not a scalar coordinate: {x!r}")


def _normalize(coords: tuple) -> tuple[tuple, str]:
    """Canonical representative of a projective coordinate tuple.

    Exact tuples: divide by the first nonzero entry, then clear denominators
    and common numerator content, so the leading entry is a positive rational.
    Float tuples: divide by the largest magnitude and make the first
    significant entry positive. Plain ints are neutral and adopt the backend
    of the other entries (exact when alone).
    """
    kinds = set()
    for c in coords:
        if isinstance(c, bool):
            raise TypeError("bool is not a scalar")
        if isinstance(c, int):
            continue
        if isinstance(c, float):
            kinds.add("float")
        elif isinstance(c, (Fraction, QuadExt)):
            kinds.add("exact")
        else:
            raise TypeError(f"not a scalar coordinate: {c!r}")
    if len(kinds) > 1:
        raise MixedBackend("mixed coordinate backends in one tuple")
    kind = kinds.pop() if kinds else "exact"
    if kind == "float":
        coords = tuple(float(c) if isinstance(c, int) else c for c in coords)
    else:
        coords = tuple(Fraction(c) if isinstance(c, int) else c for c in coords)

    if kind == "float":
        if any(math.isnan(c) or math.isinf(c) for c in coords):
            raise ValueError(f"bad float coordinate triple: {coords!r}")
        top = max(abs(c) for c in coords)
        if top == 0.0:
            raise ValueError("zero is not a projective coordinate tuple")
        scaled = tuple(c / top for c in coords)
        lead = next(c for c in scaled if abs(c) > 1e-12)
        if lead < 0:
            scaled = tuple(-c for c in scaled)
        return scaled, kind

    if not any(coords):
        # Fraction(0) is falsy; QuadExt is always truthy
        raise ValueError("zero is not a projective coordinate tuple")
    lead = next(c for c in coords if c != 0)
    scaled = [c / lead for c in coords]
    nums: list[int] = []
    dens: list[int] = []
    for c in scaled:
        parts = (c.a, c.b) if isinstance(c, QuadExt) else (c,)
        for f in parts:
            if f != 0:
                nums.append(abs(f.numerator))
                dens.append(f.denominator)
    factor = Fraction(math.lcm(*dens), math.gcd(*nums))
    return tuple(c * factor for c in scaled), kind


class _ProjTriple:
    """Shared machinery of ProjPoint and ProjLine."""

    __slots__ = ("coords", "kind")

    def __init__(self, x0, x1, x2):
        self.coords, self.kind = _normalize((x0, x1, x2))

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        if self.kind != other.kind:
            return False
        if self.kind == "exact":
            return self.coords == other.coords
        return _float_proportional(self.coords, other.coords)

    def __hash__(self):
        if self.kind == "float":
            raise TypeError("float-backed projective values are unhashable")
        return hash((type(self).__name__, self.coords))

    def __repr__(self):
        body = ":".join(str(c) for c in self.coords)
        return f"{type(self).__name__}({body})"


def _float_proportional(u: tuple, v: tuple, tol: float = FLOAT_TOL) -> bool:
    # all 2x2 minors small; canonical coords have max-norm 1
    m01 = u[0] * v[1] - u[1] * v[0]
    m02 = u[0] * v[2] - u[2] * v[0]
    m12 = u[1] * v[2] - u[2] * v[1]
    return max(abs(m01), abs(m02), abs(m12)) <= tol


class ProjPoint(_ProjTriple):
    """Point (x0 : x1 : x2) of P^2."""

    __slots__ = ()


class ProjLine(_ProjTriple):
    """Line (l0 : l1 : l2) of P^2; incidence is l . p = 0."""

    __slots__ = ()


def _cross(u: tuple, v: tuple) -> tuple:
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def _dot(u: tuple, v: tuple):
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


def join(p: ProjPoint, q: ProjPoint) -> ProjLine:
    """The line through two distinct points."""
    if p.kind != q.kind:
        raise MixedBackend("join of points from different backends")
    if p == q:
        raise CoincidentPoints(f"join of {p!r} with itself")
    return ProjLine(*_cross(p.coords, q.coords))


def meet(l: ProjLine, m: ProjLine) -> ProjPoint:
    """The intersection point of two distinct lines."""
    if l.kind != m.kind:
        raise MixedBackend("meet of lines from different backends")
    if l == m:
        raise CoincidentLines(f"meet of {l!r} with itself")
    return ProjPoint(*_cross(l.coords, m.coords))


def incident(l: ProjLine, p: ProjPoint, tol: float = FLOAT_TOL) -> bool:
    """Whether the point lies on the line (exact, or within tol for floats)."""
    if l.kind != p.kind:
        raise MixedBackend("incidence across backends")
    d = _dot(l.coords, p.coords)
    if l.kind == "exact":
        return d == 0
    return abs(d) <= tol * 3


def collinear(points) -> bool:
    """Whether all points lie on one line (>= 3 points)."""
    points = list(points)
    if len(points) < 3:
        raise ValueError("collinear needs at least three points")
    if len({p.kind for p in points}) != 1:
        raise MixedBackend("collinearity across backends")
    base = points[0]
    for pivot in points[1:]:
        if pivot != base:
            line = join(base, pivot)
            return all(incident(line, p) for p in points if p != base and p != pivot)
    return True  # all coincide


def concurrent(lines) -> bool:
    """Whether all lines pass through one point (>= 3 lines); dual of collinear."""
    lines = list(lines)
    if len(lines) < 3:
        raise ValueError("concurrent needs at least three lines")
    if len({l.kind for l in lines}) != 1:
        raise MixedBackend("concurrency across backends")
    base = lines[0]
    for pivot in lines[1:]:
        if pivot != base:
            pt = meet(base, pivot)
            return all(incident(l, pt) for l in lines if l != base and l != pivot)
    return True


def line_basis(l: ProjLine) -> tuple[ProjPoint, ProjPoint]:
    """Two independent points spanning the line, chosen deterministically."""
    candidates = []
    a, b, c = l.coords
    for v in ((0, -c, b), (c, 0, -a), (-b, a, 0)):
        if any(x != 0 for x in v):
            candidates.append(v)
    first = candidates[0]
    for other in candidates[1:]:
        if any(x != 0 for x in _cross(first, other)):
            return ProjPoint(*first), ProjPoint(*other)
    raise ValueError(f"no basis for {l!r}")  # unreachable for a valid line


def point_on_line(l: ProjLine, t: "ConicParam") -> ProjPoint:
    """The point p1 + t.p2 on l, where (p1, p2) = line_basis(l); t = infinity
    selects p2. Sweeping t sweeps the whole line exactly once."""
    p1, p2 = line_basis(l)
    u, v = t.pair()
    coords = tuple(v * x + u * y for x, y in zip(p1.coords, p2.coords))
    return ProjPoint(*coords)


class ConicParam:
    """A point of P^1: a scalar value t, or the distinguished value infinity."""

    __slots__ = ("value",)

    def __init__(self, value):
        self.value = _coerce_scalar(value)

    @classmethod
    def infinity(cls) -> "ConicParam":
        obj = object.__new__(cls)
        obj.value = None
        return obj

    @property
    def is_infinite(self) -> bool:
        return self.value is None

    def pair(self) -> tuple:
        """Homogeneous chart pair (u, v) with t = u/v; infinity is (1, 0)."""
        if self.value is None:
            return (1, 0)
        return (self.value, 1)

    def __eq__(self, other):
        if not isinstance(other, ConicParam):
            return NotImplemented
        if self.value is None or other.value is None:
            return self.value is None and other.value is None
        a, b = self.value, other.value
        if isinstance(a, float) != isinstance(b, float):
            return False
        if isinstance(a, float):
            return abs(a - b) <= FLOAT_TOL * max(1.0, abs(a), abs(b))
        return a == b

    def __hash__(self):
        if self.value is None:
            return hash(("ConicParam", "inf"))
        return hash(("ConicParam", self.value))

    def __repr__(self):
        return "ConicParam(inf)" if self.value is None else f"ConicParam({self.value})"


INFINITY = ConicParam.infinity()


class MobiusMap:
    """Element of PGL(2) over an exact field, acting on ConicParams.

    Two maps are equal iff their matrices are proportional; the determinant is
    nonzero by construction. Entries are exact scalars (the float backend
    never composes maps).
    """

    __slots__ = ("mat", "_canon")

    def __init__(self, a, b, c, d):
        entries = tuple(_coerce_scalar(x) for x in (a, b, c, d))
        if any(scalar_kind(x) != "exact" for x in entries):
            raise MixedBackend("MobiusMap entries must be exact scalars")
        mat = Mat2(*entries)
        if mat.det() == 0:
            raise ValueError(f"singular matrix {entries!r}")
        self.mat = mat
        self._canon = _canonical_quad(entries)

    @classmethod
    def from_mat2(cls, m: Mat2) -> "MobiusMap":
        return cls(m.a, m.b, m.c, m.d)

    @classmethod
    def identity(cls) -> "MobiusMap":
        return cls(1, 0, 0, 1)

    def is_identity_class(self) -> bool:
        m = self.mat
        return m.b == 0 and m.c == 0 and m.a == m.d

    def __eq__(self, other):
        if not isinstance(other, MobiusMap):
            return NotImplemented
        return self._canon == other._canon

    def __hash__(self):
        return hash(self._canon)

    def __repr__(self):
        m = self.mat
        return f"MobiusMap([[{m.a}, {m.b}], [{m.c}, {m.d}]])"


def _canonical_quad(entries: tuple) -> tuple:
    lead = next(c for c in entries if c != 0)
    scaled = [c / lead for c in entries]
    nums: list[int] = []
    dens: list[int] = []
    for c in scaled:
        parts = (c.a, c.b) if isinstance(c, QuadExt) else (c,)
        for f in parts:
            if f != 0:
                nums.append(abs(f.numerator))
                dens.append(f.denominator)
    factor = Fraction(math.lcm(*dens), math.gcd(*nums))
    return tuple(c * factor for c in scaled)


def mobius_apply(g: MobiusMap, t: ConicParam) -> ConicParam:
    """(a t + b)/(c t + d) with the infinity conventions."""
    if not t.is_infinite and scalar_kind(t.value) != "exact":
        raise MixedBackend("MobiusMap acts on exact parameters only")
    u, v = t.pair()
    m = g.mat
    num = m.a * u + m.b * v
    den = m.c * u + m.d * v
    if den == 0:
        return INFINITY
    return ConicParam(num / den)


def mobius_compose(g: MobiusMap, h: MobiusMap) -> MobiusMap:
    """The map applying h first, then g (matrix product g.h)."""
    return MobiusMap.from_mat2(g.mat * h.mat)


def is_involution(g: MobiusMap) -> bool:
    """g^2 = I in PGL(2) and g is not the identity class: trace zero."""
    return not g.is_identity_class() and g.mat.trace() == 0


@dataclass(frozen=True)
class ParamRoots:
    """Roots of a parameter quadratic, with the discriminant that produced them.

    `params` has 0, 1 (double = True), or 2 entries; the empty case means the
    scalar field cannot express the roots.
    """

    params: tuple[ConicParam, ...]
    discriminant: Scalar
    double: bool


def fixed_points(g: MobiusMap) -> ParamRoots:
    """Fixed parameters of g: roots of c t^2 + (d - a) t - b = 0.

    Non-square rational discriminants are answered in Q(sqrt(disc)), the
    +sqrt root first; with c = 0 infinity is fixed and listed first.
    """
    if g.is_identity_class():
        raise IdentityMap("every parameter is fixed")
    m = g.mat
    a, b, c, d = m.a, m.b, m.c, m.d
    if c == 0:
        if a == d:  # translation: infinity is the only fixed point
            return ParamRoots((INFINITY,), Fraction(0), True)
        return ParamRoots((INFINITY, ConicParam(b / (d - a))), (a - d) ** 2, False)
    disc = (a - d) ** 2 + 4 * b * c
    if disc == 0:
        return ParamRoots((ConicParam((a - d) / (2 * c)),), disc, True)
    try:
        root = sqrt_scalar(disc)
    except FieldInsufficient:
        return ParamRoots((), disc, False)
    return ParamRoots(
        (ConicParam((a - d + root) / (2 * c)), ConicParam((a - d - root) / (2 * c))),
        disc,
        False,
    )


def cross_ratio(a: ConicParam, b: ConicParam, c: ConicParam, d: ConicParam) -> Scalar:
    """((a-c)(b-d)) / ((a-d)(b-c)), computed homogeneously so infinity needs no case."""
    params = (a, b, c, d)
    kinds = {scalar_kind(t.value) for t in params if not t.is_infinite}
    if len(kinds) > 1:
        raise MixedBackend("cross ratio of parameters from different backends")
    for i in range(4):
        for j in range(i + 1, 4):
            if params[i] == params[j]:
                raise DegenerateTuple(f"repeated parameter {params[i]!r}")
    pa, pb, pc, pd = (t.pair() for t in params)

    def two_det(p, q):
        return p[0] * q[1] - q[0] * p[1]

    return (two_det(pa, pc) * two_det(pb, pd)) / (two_det(pa, pd) * two_det(pb, pc))
