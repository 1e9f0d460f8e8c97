"""Line configurations and the closure porism.

A configuration of n >= 2 lines, none tangent to the conic and meeting it in
2n distinct points, either admits no inscribed-circumscribed 2n-gon or
admits one through every admissible starting point. The decision reduces to
a trace: compose the involutions centered at the poles of the lines; closure
for all starts is exactly "that product is again an involution".

Chains walk the configuration cyclically, twice around: the dual chain pushes
a conic parameter through u_1, ..., u_n, u_1, ..., u_n; the primal chain
traces the polar polygon with vertices on L_1, L_2, ..., L_n, L_1, ..., L_n
and edges tangent to the conic.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .algebra import Mat2, is_scalar_multiple_of_identity
from .conic import (
    chord,
    line_conic_params,
    on_conic,
    other_tangent_param,
    polar,
    pole,
    tangent_at,
    tangents_from,
    veronese,
)
from .errors import (
    CenterOnConic,
    CoincidentLines,
    CoincidentPoints,
    DegenerateStart,
    EqualParameters,
    FieldInsufficient,
    GenerationExhausted,
    IdentityMap,
    InvalidConfiguration,
    MixedBackend,
    NotClosed,
)
from .fields import FLOAT_TOL, Scalar
from .involution import InvolutionChain, closing_center_locus, fregier
from .plane import (
    ConicParam,
    ProjLine,
    ProjPoint,
    incident,
    is_involution,
    join,
    meet,
    point_on_line,
)


@dataclass(frozen=True)
class ValidityReport:
    """Per-line and global admissibility of a configuration."""

    valid: bool
    tangent_members: tuple[int, ...]
    repeated_params: tuple[ConicParam, ...]
    params: tuple[tuple[ConicParam, ...], ...]

    @property
    def all_params(self) -> tuple[ConicParam, ...]:
        return tuple(p for group in self.params for p in group)


class LineConfiguration:
    """An ordered tuple of n >= 2 pairwise distinct lines with cached poles
    and validity. Valid means: no member tangent to the conic, and the 2n
    intersection parameters pairwise distinct (in extension where needed)."""

    __slots__ = ("lines", "_report", "_poles")

    def __init__(self, lines: Sequence[ProjLine]):
        lines = tuple(lines)
        if len(lines) < 2:
            raise InvalidConfiguration("need at least two lines")
        if len({l.kind for l in lines}) != 1:
            raise MixedBackend("configuration lines from different backends")
        for i in range(len(lines)):
            for j in range(i + 1, len(lines)):
                if lines[i] == lines[j]:
                    raise InvalidConfiguration(f"repeated line {lines[i]!r}")
        self.lines = lines
        self._report: Optional[ValidityReport] = None
        self._poles: Optional[tuple[ProjPoint, ...]] = None

    @property
    def n(self) -> int:
        return len(self.lines)

    @property
    def kind(self) -> str:
        return self.lines[0].kind

    @property
    def report(self) -> ValidityReport:
        if self._report is None:
            self._report = validate(self)
        return self._report

    def as_float(self) -> "LineConfiguration":
        return LineConfiguration(
            [ProjLine(*(float(c) for c in l.coords)) for l in self.lines]
        )

    def __repr__(self):
        return f"LineConfiguration({list(self.lines)!r})"


def validate(config: LineConfiguration) -> ValidityReport:
    """Tangency and parameter-distinctness report; never raises."""
    tangent_members = []
    groups = []
    for i, line in enumerate(config.lines):
        roots = line_conic_params(line)
        groups.append(tuple(roots.params))
        if roots.double:
            tangent_members.append(i)
    flat = [p for group in groups for p in group]
    repeated = []
    for i in range(len(flat)):
        for j in range(i + 1, len(flat)):
            if flat[i] == flat[j] and flat[i] not in repeated:
                repeated.append(flat[i])
    valid = not tangent_members and not repeated
    return ValidityReport(valid, tuple(tangent_members), tuple(repeated), tuple(groups))


def _require_valid(config: LineConfiguration):
    report = config.report
    if not report.valid:
        raise InvalidConfiguration(
            f"tangent members {report.tangent_members}, "
            f"repeated parameters {report.repeated_params}"
        )


def poles_of(config: LineConfiguration) -> tuple[ProjPoint, ...]:
    """Poles of the member lines, in order; all off the conic when valid."""
    _require_valid(config)
    if config._poles is None:
        config._poles = tuple(pole(l) for l in config.lines)
    return config._poles


def pole_involutions(config: LineConfiguration) -> InvolutionChain:
    """The chain u_1, ..., u_n of involutions centered at the poles."""
    return InvolutionChain([fregier(p) for p in poles_of(config)])


def porism_holds(config: LineConfiguration) -> bool:
    """Whether the closure porism holds: the pole-involution product
    u_n ... u_1 is itself an involution (trace zero and not the identity)."""
    return is_involution(pole_involutions(config).product)


@dataclass(frozen=True)
class PolygonChain:
    """A walked polygon.

    Dual mode: params are the 2n+1 conic parameters p_0, ..., p_{2n} (last is
    the return value), vertices their conic points except the return; closed
    means p_{2n} = p_0.

    Primal mode: vertices are A_1, ..., A_{2n+1} (last is the return vertex),
    params the 2n tangency parameters of the edges; closed means
    A_{2n+1} = A_1.
    """

    mode: str
    params: tuple[ConicParam, ...]
    vertices: tuple[ProjPoint, ...]
    closed: bool
    steps: int


def dual_chain(config: LineConfiguration, start: ConicParam) -> PolygonChain:
    """Push a conic parameter through the pole involutions, twice around."""
    _require_valid(config)
    chain = pole_involutions(config)
    forbidden = set(config.report.all_params)
    if start in forbidden:
        raise DegenerateStart(f"{start!r} lies on a configuration line")
    params = [start]
    seen = {start}
    current = start
    total = 2 * config.n
    for step in range(total):
        nxt = chain.members[step % config.n](current)
        if nxt == current:
            raise DegenerateStart(f"{current!r} is fixed by an involution")
        if nxt in forbidden:
            raise DegenerateStart(f"chain hit configuration parameter {nxt!r}")
        # a revisit before the final step retraces the walk: the start sat on
        # a fixed point of a partial word, and the 2n-gon degenerates
        if step < total - 1 and nxt in seen:
            raise DegenerateStart(f"walk revisits {nxt!r} before closing")
        seen.add(nxt)
        params.append(nxt)
        current = nxt
    closed = params[-1] == params[0]
    vertices = tuple(veronese(p) for p in params[:-1])
    return PolygonChain("dual", tuple(params), vertices, closed, 2 * config.n)


def _primal_targets(n: int) -> list[int]:
    # line indices for A_2 .. A_{2n+1}: cyclic, twice around, back to L_1
    one_pass = list(range(1, n)) + [0]
    return (one_pass * 2)[:2 * n]


def primal_chain(
    config: LineConfiguration, start: ProjPoint, branch: str = "first"
) -> PolygonChain:
    """Trace the tangent-edge polygon from a start vertex on the first line.

    The first edge takes the deterministically ordered first tangent from the
    start ("second" selects the other); every later edge is the tangent other
    than the incoming one. Works on the exact backend (staying inside one
    quadratic extension) and on the float backend.
    """
    _require_valid(config)
    if branch not in ("first", "second"):
        raise ValueError(f"branch must be 'first' or 'second', got {branch!r}")
    lines = config.lines
    if start.kind != config.kind:
        if start.kind == "float":
            lines = config.as_float().lines
        else:
            raise MixedBackend("exact start against a float configuration")
    if not incident(lines[0], start):
        raise DegenerateStart(f"{start!r} is not on the first line")
    if on_conic(start):
        raise DegenerateStart(f"{start!r} lies on the conic")
    for l in lines[1:]:
        if incident(l, start):
            raise DegenerateStart(f"{start!r} lies on a second configuration line")
    roots = tangents_from(start)
    if not roots.params:
        raise FieldInsufficient(
            f"tangent parameters from {start!r} need a square root "
            "outside the float backend's reach"
        )
    is_float = start.kind == "float"
    t = roots.params[0 if branch == "first" else 1]
    if is_float and t.is_infinite:
        raise DegenerateStart("float walk hit the parameter at infinity")
    vertices = [start]
    edge_params = [t]
    n = config.n
    try:
        for target in _primal_targets(n):
            vertex = meet(tangent_at(t), lines[target])
            if vertex == vertices[-1]:
                raise DegenerateStart(f"stalled at {vertex!r}")
            if on_conic(vertex):
                raise DegenerateStart(f"vertex {vertex!r} fell on the conic")
            vertices.append(vertex)
            if len(vertices) == 2 * n + 1:
                break
            t = other_tangent_param(vertex, t)
            if is_float and t.is_infinite:
                raise DegenerateStart("float walk hit the parameter at infinity")
            edge_params.append(t)
    except (CoincidentLines, CoincidentPoints, EqualParameters) as exc:
        raise DegenerateStart(str(exc)) from exc
    closed = vertices[-1] == vertices[0]
    return PolygonChain(
        "primal", tuple(edge_params), tuple(vertices), closed, 2 * n
    )


def _tangent_line_check(l: ProjLine, tol: float = FLOAT_TOL) -> bool:
    l0, l1, l2 = l.coords
    disc = l1 * l1 - 4 * l0 * l2
    if l.kind == "exact":
        return disc == 0
    return abs(disc) <= tol * 10


def well_inscribed(chain: PolygonChain, config: LineConfiguration) -> bool:
    """Whether a closed chain is a genuine inscribed-circumscribed polygon:
    distinct vertices, every edge tangent to the conic, and each configuration
    line carrying exactly two polygon vertices."""
    if not chain.closed:
        raise NotClosed("well-inscribedness is a property of closed chains")
    if chain.mode == "dual":
        ps = chain.params
        try:
            polygon = [pole(chord(ps[i], ps[i + 1])) for i in range(len(ps) - 1)]
        except EqualParameters:
            return False
        edges = [tangent_at(p) for p in ps[1:]]
    elif chain.mode == "primal":
        polygon = list(chain.vertices[:-1])
        edges = [tangent_at(t) for t in chain.params]
    else:
        raise ValueError(f"unknown chain mode {chain.mode!r}")
    if len(polygon) != 2 * config.n:
        return False
    for i in range(len(polygon)):
        for j in range(i + 1, len(polygon)):
            if polygon[i] == polygon[j]:
                return False
    if not all(_tangent_line_check(e) for e in edges):
        return False
    lines = config.lines if config.kind == polygon[0].kind else config.as_float().lines
    for line in lines:
        if sum(1 for v in polygon if incident(line, v)) != 2:
            return False
    return True


@dataclass(frozen=True)
class TangentClosure:
    """Walk of an odd pencil: the vertices, the tangency parameters of the
    walked edges, and the closing line with its tangency verdict."""

    vertices: tuple[ProjPoint, ...]
    edge_params: tuple[ConicParam, ...]
    closing_line: ProjLine
    closing_tangent: bool
    discriminant: Scalar


def concurrent_tangent_chain(
    lines: Sequence[ProjLine], start: ProjPoint, branch: str = "first"
) -> TangentClosure:
    """Walk 2m tangent edges through m lines (m odd), visiting them
    cyclically. When the lines are concurrent, the line joining the last
    vertex back to the first is tangent to the conic; the walk still runs
    on a non-concurrent pencil, where the tangency verdict generically
    comes back false."""
    lines = tuple(lines)
    m = len(lines)
    if m < 3 or m % 2 == 0:
        raise InvalidConfiguration("need an odd number of lines, at least 3")
    for l in lines:
        if line_conic_params(l).double:
            raise InvalidConfiguration(f"{l!r} is tangent to the conic")
    if start.kind != lines[0].kind:
        raise MixedBackend("start and lines from different backends")
    if not incident(lines[0], start):
        raise DegenerateStart(f"{start!r} is not on the first line")
    if on_conic(start):
        raise DegenerateStart(f"{start!r} lies on the conic")
    for l in lines[1:]:
        if incident(l, start):
            raise DegenerateStart(f"{start!r} lies on a second pencil line")
    roots = tangents_from(start)
    if not roots.params:
        raise FieldInsufficient(f"no expressible tangents from {start!r}")
    is_float = start.kind == "float"
    t = roots.params[0 if branch == "first" else 1]
    if is_float and t.is_infinite:
        raise DegenerateStart("float walk hit the parameter at infinity")
    vertices = [start]
    edge_params = [t]
    targets = [i % m for i in range(1, 2 * m)]  # P_2 .. P_{2m}, cyclic pencil
    try:
        for step, target in enumerate(targets):
            vertex = meet(tangent_at(t), lines[target])
            if vertex == vertices[-1]:
                raise DegenerateStart(f"stalled at {vertex!r}")
            if on_conic(vertex):
                raise DegenerateStart(f"vertex {vertex!r} fell on the conic")
            vertices.append(vertex)
            if step < len(targets) - 1:
                t = other_tangent_param(vertex, t)
                if is_float and t.is_infinite:
                    raise DegenerateStart("float walk hit the parameter at infinity")
                edge_params.append(t)
        if vertices[-1] == vertices[0]:
            raise DegenerateStart("walk returned to the start vertex early")
        closing = join(vertices[-1], vertices[0])
    except (CoincidentLines, CoincidentPoints, EqualParameters) as exc:
        raise DegenerateStart(str(exc)) from exc
    l0, l1, l2 = closing.coords
    disc = l1 * l1 - 4 * l0 * l2
    tangent = disc == 0 if closing.kind == "exact" else abs(disc) <= FLOAT_TOL * 10
    return TangentClosure(
        tuple(vertices), tuple(edge_params), closing, tangent, disc
    )


def _random_fraction(rng: random.Random, span: int = 9) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, span))


def _random_point(rng: random.Random) -> ProjPoint:
    while True:
        coords = tuple(_random_fraction(rng) for _ in range(3))
        if any(coords):
            return ProjPoint(*coords)


def generate_closing(n: int, seed: int, max_tries: int = 400) -> LineConfiguration:
    """A valid n-line configuration for which the porism holds, built by
    sampling n - 1 poles and completing with a point of the closing locus."""
    if n < 2:
        raise ValueError("need n >= 2")
    rng = random.Random(seed)
    for _ in range(max_tries):
        try:
            involutions = [fregier(_random_point(rng)) for _ in range(n - 1)]
            chain = InvolutionChain(involutions)
            locus = closing_center_locus(chain)
            last_center = point_on_line(locus, ConicParam(_random_fraction(rng)))
            full = chain.extended(fregier(last_center))
            if full.product.is_identity_class():
                continue
            config = LineConfiguration([polar(f.center) for f in full.members])
            if not config.report.valid:
                continue
            if not porism_holds(config):
                continue
            return config
        except (CenterOnConic, IdentityMap, InvalidConfiguration, ValueError):
            continue
    raise GenerationExhausted(f"no closing configuration after {max_tries} tries")


def random_configuration(n: int, seed: int, max_tries: int = 400) -> LineConfiguration:
    """A valid n-line configuration with unconstrained poles; the porism
    generically fails on these."""
    if n < 2:
        raise ValueError("need n >= 2")
    rng = random.Random(seed)
    for _ in range(max_tries):
        try:
            poles = [_random_point(rng) for _ in range(n)]
            config = LineConfiguration([polar(p) for p in poles])
            if not config.report.valid:
                continue
            pole_involutions(config)  # poles must be off the conic
            return config
        except (CenterOnConic, InvalidConfiguration):
            continue
    raise GenerationExhausted(f"no valid configuration after {max_tries} tries")


@dataclass(frozen=True)
class TwoLineSystem:
    """The degenerate two-line porism normal form: the involution u fixing
    {1, -1} and the involution v fixing {0, 2/x}, as parameter matrices
    [[0, 1], [1, 0]] and [[1, 0], [x, -1]]."""

    x: Scalar
    mat_u: Mat2
    mat_v: Mat2

    @classmethod
    def at(cls, x) -> "TwoLineSystem":
        if isinstance(x, int):
            x = Fraction(x)
        return cls(x, Mat2(0, 1, 1, 0), Mat2(1, 0, x, -1))

    @property
    def step(self) -> Mat2:
        """One period u.v of the alternating walk."""
        return self.mat_u * self.mat_v


def two_line_closure(x, n: int) -> bool:
    """Whether the alternating two-line walk closes after exactly n periods:
    (uv)^n is scalar and no smaller positive power is."""
    if n < 2:
        raise ValueError("need n >= 2")
    system = TwoLineSystem.at(x)
    power = Mat2.identity()
    for _ in range(n - 1):
        power = system.step * power
        if is_scalar_multiple_of_identity(power):
            return False
    power = system.step * power
    return is_scalar_multiple_of_identity(power)
