"""Seeded property suites over random exact instances.

Each suite splits into a generator (rng -> instance, resampling internally
until the instance is degeneracy-free) and a pure check (instance -> bool).
A trial failure records the per-trial seed, and replaying that seed alone
rebuilds the identical instance and verdict, so failures travel well.

The per-trial seed derivation is fixed: trial k of master seed s uses
(s + (k + 1) * 0x9E3779B97F4A7C15) mod 2^64.
"""
from __future__ import annotations

import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Any, Callable, Optional, Union

from .algebra import det3
from .closure import LineConfiguration, concurrent_tangent_chain
from .conic import on_conic
from .errors import (
    CenterOnConic,
    DegenerateConstruction,
    DegeneratePolygon,
    DegenerateStart,
    GenerationExhausted,
    UnknownSuite,
)
from .involution import (
    InvolutionChain,
    aligned_centers_involutive,
    center_of,
    closing_center_locus,
    dual_moebius_check,
    fregier,
    harmonic_product_test,
    involution_from_fixed,
    moebius_check,
    pascal_line,
    share_fixed_point,
)
from .plane import (
    ConicParam,
    ProjLine,
    ProjPoint,
    cross_ratio,
    fixed_points,
    incident,
    join,
    point_on_line,
)

GOLDEN = 0x9E3779B97F4A7C15
MAX_RESAMPLES = 200


def trial_seed(seed: int, index: int) -> int:
    return (seed + (index + 1) * GOLDEN) % (1 << 64)


@dataclass
class ResampleTally:
    """Mutable count of degenerate candidates a generator threw away."""

    resamples: int = 0


def _bump(tally: Optional[ResampleTally], discarded: int) -> None:
    if tally is not None and discarded:
        tally.resamples += discarded


def _rand_fraction(rng: random.Random, span: int = 12) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, span))


def _distinct_params(rng: random.Random, count: int, span: int = 12):
    seen = set()
    out = []
    guard = 0
    while len(out) < count:
        guard += 1
        if guard > 50 * count:
            raise GenerationExhausted("cannot sample distinct parameters")
        t = ConicParam(_rand_fraction(rng, span))
        if t not in seen:
            seen.add(t)
            out.append(t)
    return out


def _random_secant_line(rng: random.Random) -> ProjLine:
    while True:
        p = ProjPoint(*(_rand_fraction(rng) for _ in range(3)))
        q = ProjPoint(*(_rand_fraction(rng) for _ in range(3)))
        if p != q:
            return join(p, q)


# ---------------------------------------------------------------- suite: two


@dataclass(frozen=True)
class TwoInvolutionInstance:
    """Direction (a): pair_a and pair_b are harmonic fixed-point pairs.
    Direction (b): a center sampled on the closing locus of the pair_a
    involution, addressed by its parameter on that line."""

    pair_a: tuple[ConicParam, ConicParam]
    pair_b: tuple[ConicParam, ConicParam]
    locus_param: ConicParam


def _harmonic_fourth(a: Fraction, b: Fraction, c: Fraction) -> Optional[Fraction]:
    """d with cross-ratio (a, b; c, d) = -1, or None when degenerate."""
    den = a + b - 2 * c
    if den == 0:
        return None
    return (b * (a - c) + a * (b - c)) / den


def make_two_instance(
    rng: random.Random, tally: Optional[ResampleTally] = None
) -> TwoInvolutionInstance:
    for attempt in range(MAX_RESAMPLES):
        t1, t2, t3 = (t.value for t in _distinct_params(rng, 3))
        t4 = _harmonic_fourth(t1, t2, t3)
        if t4 is None or t4 in (t1, t2, t3):
            continue
        pair_a = (ConicParam(t1), ConicParam(t2))
        pair_b = (ConicParam(t3), ConicParam(t4))
        u = involution_from_fixed(*pair_a)
        locus = closing_center_locus(InvolutionChain([u]))
        s = ConicParam(_rand_fraction(rng))
        center = point_on_line(locus, s)
        if on_conic(center):
            continue
        v = fregier(center)
        if share_fixed_point(u, v):
            continue
        _bump(tally, attempt)
        return TwoInvolutionInstance(pair_a, pair_b, s)
    raise GenerationExhausted("two-involution sampling kept degenerating")


def check_two(instance: TwoInvolutionInstance) -> bool:
    u = involution_from_fixed(*instance.pair_a)
    v = involution_from_fixed(*instance.pair_b)
    # (a) harmonic pairs must compose to an involution, exactly
    if cross_ratio(*instance.pair_a, *instance.pair_b) != Fraction(-1):
        return False
    if not harmonic_product_test(u, v):
        return False
    # (b) a locus-sampled partner must have harmonic fixed points, exactly
    locus = closing_center_locus(InvolutionChain([u]))
    center = point_on_line(locus, instance.locus_param)
    w = fregier(center)
    roots = fixed_points(w.map)
    if len(roots.params) != 2:
        return False
    cr = cross_ratio(*instance.pair_a, roots.params[0], roots.params[1])
    return cr == Fraction(-1)


# ------------------------------------------------------------- suite: pascal


@dataclass(frozen=True)
class PascalInstance:
    params: tuple[ConicParam, ...]


def make_pascal_instance(
    rng: random.Random, tally: Optional[ResampleTally] = None
) -> PascalInstance:
    return PascalInstance(tuple(_distinct_params(rng, 6)))


def check_pascal(instance: PascalInstance) -> bool:
    points, verdict = pascal_line(*instance.params)
    if not verdict:
        return False
    # independent oracle: the exact 3x3 determinant of the meets
    a, b, c = points
    return det3(a.coords, b.coords, c.coords) == 0


# ------------------------------------------------------------ suite: aligned


@dataclass(frozen=True)
class AlignedInstance:
    line: ProjLine
    center_params: tuple[ConicParam, ...]


def make_aligned_instance(
    rng: random.Random,
    length: Optional[int] = None,
    tally: Optional[ResampleTally] = None,
) -> AlignedInstance:
    for attempt in range(MAX_RESAMPLES):
        k = length if length is not None else rng.choice((3, 5, 7))
        line = _random_secant_line(rng)
        params = _distinct_params(rng, k)
        centers = [point_on_line(line, s) for s in params]
        if any(on_conic(c) for c in centers):
            continue
        _bump(tally, attempt)
        return AlignedInstance(line, tuple(params))
    raise GenerationExhausted("aligned-center sampling kept degenerating")


def _aligned_chain(instance: AlignedInstance) -> InvolutionChain:
    centers = [point_on_line(instance.line, s) for s in instance.center_params]
    return InvolutionChain([fregier(c) for c in centers])


def check_aligned(instance: AlignedInstance) -> bool:
    chain = _aligned_chain(instance)
    if not aligned_centers_involutive(chain):
        return False
    # the composite is again centered on the same line
    return incident(instance.line, center_of(chain.product))


# ------------------------------------------------------------ suite: moebius


@dataclass(frozen=True)
class MoebiusInstance:
    """Two seed parameters pushed through n - 1 involutions with collinear
    centers; the cross-chord points a_1 .. a_{n-1} then land on the line."""

    n: int
    line: ProjLine
    center_params: tuple[ConicParam, ...]
    seeds: tuple[ConicParam, ConicParam]


def _moebius_polygons(instance: MoebiusInstance):
    centers = [point_on_line(instance.line, s) for s in instance.center_params]
    involutions = [fregier(c) for c in centers]
    xs = [instance.seeds[0]]
    ys = [instance.seeds[1]]
    for inv in involutions:
        xs.append(inv(xs[-1]))
        ys.append(inv(ys[-1]))
    return xs, ys, centers


def make_moebius_instance(
    rng: random.Random,
    n: Optional[int] = None,
    tally: Optional[ResampleTally] = None,
) -> MoebiusInstance:
    for attempt in range(MAX_RESAMPLES):
        size = n if n is not None else rng.choice((3, 4, 5, 6))
        line = _random_secant_line(rng)
        params = _distinct_params(rng, size - 1)
        centers = [point_on_line(line, s) for s in params]
        if any(on_conic(c) for c in centers):
            continue
        seeds = _distinct_params(rng, 2)
        instance = MoebiusInstance(size, line, tuple(params), tuple(seeds))
        try:
            xs, ys, _ = _moebius_polygons(instance)
        except CenterOnConic:
            continue
        if len(set(xs + ys)) != 2 * size:
            continue
        try:
            moebius_check(xs, ys)
            dual_moebius_check(tuple(xs) + tuple(ys))
        except (DegenerateConstruction, DegeneratePolygon):
            continue
        _bump(tally, attempt)
        return instance
    raise GenerationExhausted("inscribed-polygon sampling kept degenerating")


def check_moebius(instance: MoebiusInstance) -> bool:
    xs, ys, centers = _moebius_polygons(instance)
    report = moebius_check(xs, ys)
    if not (report.hypothesis_met and report.conclusion):
        return False
    # generator invariant: the first n - 1 points are the centers themselves
    if any(report.points[j] != centers[j] for j in range(instance.n - 1)):
        return False
    return incident(instance.line, report.points[-1])


# ------------------------------------------------------- suite: dual-moebius


def check_dual_moebius(instance: MoebiusInstance) -> bool:
    xs, ys, _ = _moebius_polygons(instance)
    report = dual_moebius_check(tuple(xs) + tuple(ys))
    return bool(
        report.hypothesis_met and report.conclusion and report.agrees_with_primal
    )


# ----------------------------------------------------------- suite: dalignes


@dataclass(frozen=True)
class DalignesInstance:
    lines: tuple[ProjLine, ...]
    start: ProjPoint


def make_dalignes_instance(
    rng: random.Random,
    count: Optional[int] = None,
    tally: Optional[ResampleTally] = None,
) -> DalignesInstance:
    from .conic import line_conic_params

    for attempt in range(MAX_RESAMPLES):
        m = count if count is not None else rng.choice((3, 5))
        apex = ProjPoint(*(_rand_fraction(rng) for _ in range(3)))
        lines = []
        seen = set()
        guard = 0
        while len(lines) < m and guard < 50 * m:
            guard += 1
            other = ProjPoint(*(_rand_fraction(rng) for _ in range(3)))
            if other == apex:
                continue
            l = join(apex, other)
            if l in seen or line_conic_params(l).double:
                continue
            seen.add(l)
            lines.append(l)
        if len(lines) < m:
            continue
        start = point_on_line(lines[0], ConicParam(_rand_fraction(rng)))
        if on_conic(start) or any(incident(l, start) for l in lines[1:]):
            continue
        instance = DalignesInstance(tuple(lines), start)
        try:
            concurrent_tangent_chain(instance.lines, instance.start)
        except DegenerateStart:
            continue
        _bump(tally, attempt)
        return instance
    raise GenerationExhausted("concurrent-pencil sampling kept degenerating")


def check_dalignes(instance: DalignesInstance) -> bool:
    closure = concurrent_tangent_chain(instance.lines, instance.start)
    return closure.closing_tangent and closure.discriminant == 0


# ------------------------------------------------------------------- runner


@dataclass(frozen=True)
class Suite:
    name: str
    description: str
    generate: Callable[..., Any]
    check: Callable[[Any], bool]

    def broken(self, check: Callable[[Any], bool]) -> "Suite":
        """A copy with a different oracle, for mutation testing."""
        return replace(self, check=check)


SUITES: dict[str, Suite] = {
    "two": Suite(
        "two",
        "products of two involutions: harmonic pairs <-> involutive product",
        make_two_instance,
        check_two,
    ),
    "pascal": Suite(
        "pascal",
        "hexagon cross-chord points are exactly collinear",
        make_pascal_instance,
        check_pascal,
    ),
    "aligned": Suite(
        "aligned",
        "odd products over collinear centers are involutions on the same line",
        make_aligned_instance,
        check_aligned,
    ),
    "moebius": Suite(
        "moebius",
        "inscribed polygon pairs: n-th cross point joins the collinear n-1",
        make_moebius_instance,
        check_moebius,
    ),
    "dual-moebius": Suite(
        "dual-moebius",
        "circumscribed polygon diagonals concur, agreeing with the polar check",
        make_moebius_instance,
        check_dual_moebius,
    ),
    "dalignes": Suite(
        "dalignes",
        "odd concurrent pencils close with a tangent line",
        make_dalignes_instance,
        check_dalignes,
    ),
}


@dataclass(frozen=True)
class TrialFailure:
    index: int
    seed: int
    instance: str


@dataclass(frozen=True)
class TrialReport:
    suite: str
    trials: int
    failures: tuple[TrialFailure, ...]
    resamples: int
    elapsed: float

    @property
    def passed(self) -> bool:
        return not self.failures


def resolve_suite(suite: Union[str, Suite]) -> Suite:
    if isinstance(suite, Suite):
        return suite
    try:
        return SUITES[suite]
    except KeyError:
        raise UnknownSuite(
            f"unknown suite {suite!r}; available: {', '.join(sorted(SUITES))}"
        ) from None


def run_trial(
    suite: Union[str, Suite], seed: int, tally: Optional[ResampleTally] = None
) -> tuple[Any, bool]:
    """Rebuild one trial from its recorded per-trial seed."""
    resolved = resolve_suite(suite)
    rng = random.Random(seed)
    instance = resolved.generate(rng, tally=tally)
    return instance, resolved.check(instance)


def run_suite(suite: Union[str, Suite], trials: int, seed: int) -> TrialReport:
    """Fan the seeded trials out over a small thread pool.

    Each trial depends only on its own derived seed, so completion order
    cannot change the report: failures are keyed and sorted by trial index.
    """
    resolved = resolve_suite(suite)
    if trials < 1:
        raise ValueError("need at least one trial")
    started = time.perf_counter()

    def one(index: int) -> tuple[Optional[TrialFailure], int]:
        tseed = trial_seed(seed, index)
        tally = ResampleTally()
        instance, ok = run_trial(resolved, tseed, tally)
        failure = None if ok else TrialFailure(index, tseed, repr(instance))
        return failure, tally.resamples

    failures = []
    resamples = 0
    with ThreadPoolExecutor(max_workers=min(8, trials)) as pool:
        for failure, discarded in pool.map(one, range(trials)):
            resamples += discarded
            if failure is not None:
                failures.append(failure)
    failures.sort(key=lambda f: f.index)
    elapsed = time.perf_counter() - started
    return TrialReport(resolved.name, trials, tuple(failures), resamples, elapsed)
