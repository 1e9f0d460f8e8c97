"""Projective plane primitives: triples, incidence, parameters, Moebius maps."""
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from porism.errors import (
    CoincidentLines,
    CoincidentPoints,
    DegenerateTuple,
    IdentityMap,
    MixedBackend,
)
from porism.fields import QuadExt
from porism.plane import (
    INFINITY,
    ConicParam,
    MobiusMap,
    ProjLine,
    ProjPoint,
    collinear,
    concurrent,
    cross_ratio,
    fixed_points,
    incident,
    is_involution,
    join,
    line_basis,
    meet,
    mobius_apply,
    mobius_compose,
    point_on_line,
)

fractions = st.fractions(min_value=-40, max_value=40, max_denominator=10)
params = st.builds(ConicParam, fractions)


def test_normalization_scales_away():
    assert ProjPoint(2, 4, 6) == ProjPoint(1, 2, 3)
    assert ProjPoint(Fraction(1, 2), Fraction(1, 3), 0) == ProjPoint(3, 2, 0)
    assert ProjPoint(-1, -2, -3) == ProjPoint(1, 2, 3)
    assert ProjPoint(2.0, 4.0, 6.0) == ProjPoint(1.0, 2.0, 3.0)


def test_backend_kinds():
    assert ProjPoint(1, 2, 3).kind == "exact"
    assert ProjPoint(1.0, 2.0, 3.0).kind == "float"
    # plain ints are neutral and adopt the surrounding backend
    assert ProjPoint(1, 2.0, 3.0).kind == "float"
    with pytest.raises(MixedBackend):
        ProjPoint(Fraction(1), 2.0, 3)
    with pytest.raises(ValueError):
        ProjPoint(0, 0, 0)
    with pytest.raises(ValueError):
        ProjPoint(float("nan"), 1.0, 0.0)


def test_join_meet_frozen():
    p, q = ProjPoint(1, 0, 0), ProjPoint(0, 1, 0)
    l = join(p, q)
    assert l == ProjLine(0, 0, 1)
    assert incident(l, p) and incident(l, q)
    m = meet(ProjLine(1, 0, 0), ProjLine(0, 1, 0))
    assert m == ProjPoint(0, 0, 1)


def test_join_meet_degenerate():
    with pytest.raises(CoincidentPoints):
        join(ProjPoint(1, 2, 3), ProjPoint(2, 4, 6))
    with pytest.raises(CoincidentLines):
        meet(ProjLine(1, 2, 3), ProjLine(1, 2, 3))


points = st.builds(
    lambda a, b, c: (a, b, c), fractions, fractions, fractions
).filter(lambda t: any(t)).map(lambda t: ProjPoint(*t))


@given(points, points)
def test_join_is_incident_to_both(p, q):
    if p == q:
        return
    l = join(p, q)
    assert incident(l, p) and incident(l, q)


@given(points, points, points)
def test_collinear_iff_on_join(p, q, r):
    if p == q:
        return
    assert collinear([p, q, r]) == incident(join(p, q), r)


def test_collinear_concurrent_small_cases():
    assert collinear([ProjPoint(1, 0, 0), ProjPoint(0, 1, 0), ProjPoint(1, 1, 0)])
    assert not collinear([ProjPoint(1, 0, 0), ProjPoint(0, 1, 0), ProjPoint(0, 0, 1)])
    assert concurrent([ProjLine(1, 0, 0), ProjLine(0, 1, 0), ProjLine(1, 1, 0)])
    with pytest.raises(ValueError):
        collinear([ProjPoint(1, 0, 0), ProjPoint(0, 1, 0)])


@given(points)
def test_line_basis_spans(p):
    l = join(p, ProjPoint(1, 1, 1)) if p != ProjPoint(1, 1, 1) else ProjLine(1, -1, 0)
    b1, b2 = line_basis(l)
    assert incident(l, b1) and incident(l, b2)
    assert b1 != b2


@given(fractions)
def test_point_on_line_stays_on_line(t):
    l = ProjLine(2, -3, 5)
    assert incident(l, point_on_line(l, ConicParam(t)))
    assert incident(l, point_on_line(l, INFINITY))


def test_conic_param_basics():
    assert ConicParam(Fraction(1, 2)) == ConicParam(Fraction(2, 4))
    assert INFINITY.is_infinite
    assert INFINITY == ConicParam.infinity()
    assert ConicParam(Fraction(3)).pair() == (Fraction(3), 1)
    assert INFINITY.pair() == (1, 0)
    assert ConicParam(Fraction(3)) != INFINITY


def test_mobius_map_classes():
    g = MobiusMap(1, 2, 3, 4)
    assert g == MobiusMap(2, 4, 6, 8)  # projective equivalence
    assert hash(g) == hash(MobiusMap(-1, -2, -3, -4))
    assert MobiusMap.identity().is_identity_class()
    assert MobiusMap(5, 0, 0, 5).is_identity_class()
    assert not g.is_identity_class()
    with pytest.raises(ValueError):
        MobiusMap(1, 2, 2, 4)  # determinant zero
    with pytest.raises(MixedBackend):
        MobiusMap(1.0, 0, 0, 1)


def test_mobius_apply_frozen():
    g = MobiusMap(2, 1, 0, 1)  # t -> 2t + 1
    assert mobius_apply(g, ConicParam(Fraction(3))) == ConicParam(Fraction(7))
    assert mobius_apply(g, INFINITY) == INFINITY
    h = MobiusMap(0, 1, 1, 0)  # t -> 1/t
    assert mobius_apply(h, ConicParam(Fraction(0))) == INFINITY
    assert mobius_apply(h, INFINITY) == ConicParam(Fraction(0))


mobius_entries = st.tuples(fractions, fractions, fractions, fractions).filter(
    lambda e: e[0] * e[3] - e[1] * e[2] != 0
)


@given(mobius_entries, mobius_entries, params)
def test_mobius_compose_applies_right_first(eg, eh, t):
    g, h = MobiusMap(*eg), MobiusMap(*eh)
    assert mobius_apply(mobius_compose(g, h), t) == mobius_apply(g, mobius_apply(h, t))


def test_is_involution():
    assert is_involution(MobiusMap(0, 1, 1, 0))
    assert is_involution(MobiusMap(1, 3, 3, -1))
    assert not is_involution(MobiusMap.identity())
    assert not is_involution(MobiusMap(2, 1, 0, 1))


def test_fixed_points_cases():
    # c = 0, a != d: infinity plus one affine point
    roots = fixed_points(MobiusMap(2, 1, 0, 1))
    assert roots.params == (INFINITY, ConicParam(Fraction(-1)))
    # translation: infinity doubly fixed
    roots = fixed_points(MobiusMap(1, 1, 0, 1))
    assert roots.params == (INFINITY,)
    assert roots.double
    # involution t -> 1/t fixes +-1
    roots = fixed_points(MobiusMap(0, 1, 1, 0))
    assert roots.params == (ConicParam(Fraction(1)), ConicParam(Fraction(-1)))
    # irrational pair lands in a quadratic extension
    roots = fixed_points(MobiusMap(0, 2, 1, 0))
    values = [t.value for t in roots.params]
    assert values[0] == QuadExt(0, 1, 2) and values[1] == QuadExt(0, -1, 2)
    with pytest.raises(IdentityMap):
        fixed_points(MobiusMap.identity())


def test_cross_ratio_frozen():
    a, b, c, d = (ConicParam(Fraction(v)) for v in (0, 1, 2, 3))
    assert cross_ratio(a, b, c, d) == Fraction(4, 3)
    assert cross_ratio(a, b, c, INFINITY) == Fraction(2)
    with pytest.raises(DegenerateTuple):
        cross_ratio(a, a, c, d)


def test_cross_ratio_harmonic_example():
    a = ConicParam(Fraction(1))
    b = ConicParam(Fraction(-1))
    c = ConicParam(Fraction(0))
    assert cross_ratio(a, b, c, INFINITY) == Fraction(-1)


@given(mobius_entries, params, params, params, params)
def test_cross_ratio_mobius_invariant(entries, a, b, c, d):
    if len({a, b, c, d}) < 4:
        return
    g = MobiusMap(*entries)
    images = [mobius_apply(g, t) for t in (a, b, c, d)]
    if len(set(images)) < 4:
        return
    assert cross_ratio(*images) == cross_ratio(a, b, c, d)
