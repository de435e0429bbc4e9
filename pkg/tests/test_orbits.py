"""Torus orbits: dimensions, closures, low-dimension strata, cross-sections, curves."""

import random
from fractions import Fraction

from gradedcones.cones import homogeneous_ideal, singular_locus
from gradedcones.errors import (
    DependentColumnsError,
    NonPositiveGradingError,
    Rejection,
)
from gradedcones.grading import GradingMap
from gradedcones.ideals import IdealPresentation, krull_dimension
from gradedcones.orbits import (
    FREE_VALUE_CANDIDATES,
    cross_section,
    find_one_dim_orbit,
    low_orbit_stratum,
    max_orbit_dimension,
    nonvanishing_coordinates,
    orbit_closure_ideal,
    orbit_contained,
    orbit_dimension,
    point,
    rational_curve_through,
)
from gradedcones.rings import PolyRing

from helpers import random_rational, torus_scaled

Y = PolyRing(("y1", "y2", "y3", "y4"))
G = GradingMap(Y, [(1, 2), (1, 0), (0, 1), (2, 3)])
F = Y.parse("y1^2 y2 y3 + y1 y4 + y2 y3^2 y4")
SURFACE = homogeneous_ideal([F], G)

# same variables, rank-one degree repeated on the last three coordinates
FLAT = GradingMap(Y, [(1, 0), (0, 1), (0, 1), (0, 1)])


def test_point_basics():
    p = point(Y, (1, 0, "1/2", -2))
    assert p.coords == (1, 0, Fraction(1, 2), -2)
    assert p.support() == (0, 2, 3)
    assert not p.is_origin()
    assert point(Y, (0, 0, 0, 0)).is_origin()
    assert repr(p) == "(1, 0, 1/2, -2)"
    try:
        point(Y, (1, 2))
    except ValueError:
        pass
    else:
        raise AssertionError("wrong coordinate count must be rejected")


def test_orbit_dimension():
    assert orbit_dimension(point(Y, (1, 1, 1, 1)), G).dimension == 2
    info = orbit_dimension(point(Y, (0, 1, 0, 0)), G)
    assert info.dimension == 1 and info.support == (1,) and info.columns == ((1, 0),)
    assert orbit_dimension(point(Y, (0, 0, 0, 0)), G).dimension == 0
    # parallel columns keep the rank down
    assert orbit_dimension(point(Y, (0, 1, 1, 1)), FLAT).dimension == 1


def test_orbit_closure_golden():
    cl = orbit_closure_ideal(point(Y, (1, 1, 1, 1)), G)
    assert [repr(g) for g in cl.base.generators] == ["y1 - y2*y3^2", "y2^2*y3^3 - y4"]
    assert cl.degrees == ((1, 2), (2, 3))
    expected = IdealPresentation(Y, [Y.parse("y1 - y2 y3^2"), Y.parse("y4 - y2^2 y3^3")])
    assert cl.base.same_ideal(expected)
    assert krull_dimension(cl.base) == 2


def test_orbit_closure_with_general_coefficients():
    cl = orbit_closure_ideal(point(Y, (2, 3, "1/2", 5)), G)
    assert [repr(g) for g in cl.base.generators] == [
        "3*y1 - 8*y2*y3^2",
        "40*y2^2*y3^3 - 9*y4",
    ]


def test_orbit_closure_of_degenerate_points():
    axis = orbit_closure_ideal(point(Y, (1, 0, 0, 0)), G)
    assert [repr(g) for g in axis.base.generators] == ["y2", "y3", "y4"]
    other = orbit_closure_ideal(point(Y, (0, 1, 0, 0)), G)
    assert [repr(g) for g in other.base.generators] == ["y1", "y3", "y4"]
    origin = orbit_closure_ideal(point(Y, (0, 0, 0, 0)), G)
    assert [repr(g) for g in origin.base.generators] == ["y1", "y2", "y3", "y4"]
    assert krull_dimension(origin.base) == 0


def test_orbit_closure_contains_every_torus_translate():
    rng = random.Random(6601)
    p = point(Y, (1, 1, 1, 1))
    cl = orbit_closure_ideal(p, G)
    for _ in range(10):
        t = tuple(random_rational(rng, nonzero=True) for _ in range(2))
        moved = torus_scaled(p.coords, t, G)
        for g in cl.base.generators:
            assert g.evaluate(list(moved)) == 0


def test_orbit_contained():
    assert orbit_contained(point(Y, (0, 1, 0, 0)), SURFACE)
    assert orbit_contained(point(Y, (0, 0, 1, 0)), SURFACE)
    assert orbit_contained(point(Y, (0, 0, 0, 0)), SURFACE)
    assert not orbit_contained(point(Y, (1, 1, 1, 1)), SURFACE)
    # a general surface point: off-torus directions matter, orbit still inside
    y4 = Fraction(-1, 2)
    assert F.evaluate([Fraction(1), Fraction(1), Fraction(1), y4]) == 0
    assert orbit_contained(point(Y, (1, 1, 1, y4)), SURFACE)


def test_low_orbit_stratum_goldens():
    assert low_orbit_stratum(G, 0).components == ((),)
    assert low_orbit_stratum(G, 1).components == ((0,), (1,), (2,), (3,))
    assert low_orbit_stratum(G, 2).components == ((0, 1, 2, 3),)
    # parallel columns merge into one big component plus the transverse line
    assert low_orbit_stratum(FLAT, 1).components == ((1, 2, 3), (0,))
    try:
        low_orbit_stratum(G, -1)
    except ValueError:
        pass
    else:
        raise AssertionError("negative bound must be rejected")


def test_low_orbit_stratum_is_monotone():
    rng = random.Random(6602)
    ring = PolyRing(("a", "b", "c", "d", "e"))
    for _ in range(10):
        g = GradingMap(ring, [tuple(rng.randint(-2, 2) for _ in range(2)) for _ in range(5)])
        for mu0 in range(2):
            small = low_orbit_stratum(g, mu0).components
            big = low_orbit_stratum(g, mu0 + 1).components
            for s in small:
                assert any(set(s) <= set(t) for t in big)


def test_nonvanishing_and_max_dimension():
    assert nonvanishing_coordinates(SURFACE) == (0, 1, 2, 3)
    assert max_orbit_dimension(SURFACE) == 2
    line = homogeneous_ideal([Y.parse("y2"), Y.parse("y3"), Y.parse("y4")], G)
    assert nonvanishing_coordinates(line) == (0,)
    assert max_orbit_dimension(line) == 1


def test_find_one_dim_orbit_on_the_surface():
    p = find_one_dim_orbit(SURFACE)
    assert p.coords == (1, 0, 0, 0)
    assert orbit_dimension(p, G).dimension == 1
    assert orbit_contained(p, SURFACE)


def test_find_one_dim_orbit_needs_positive_dimension():
    origin_only = homogeneous_ideal(
        [Y.parse("y1"), Y.parse("y2"), Y.parse("y3"), Y.parse("y4")], G
    )
    try:
        find_one_dim_orbit(origin_only)
    except Rejection:
        pass
    else:
        raise AssertionError("zero-dimensional cone has no such orbit")


def test_find_one_dim_orbit_solves_torus_conditions():
    # no coordinate point works here, the search must solve on the torus
    ring = PolyRing(("u", "v"))
    g = GradingMap(ring, [(1,), (1,)])
    cone = homogeneous_ideal([ring.parse("u - 2 v")], g)
    p = find_one_dim_orbit(cone)
    assert p.coords[0] == 2 * p.coords[1] != 0
    assert orbit_dimension(p, g).dimension == 1


def test_free_value_candidates_are_sane():
    assert FREE_VALUE_CANDIDATES[0] == 1
    assert all(v != 0 for v in FREE_VALUE_CANDIDATES)
    assert len(set(FREE_VALUE_CANDIDATES)) == len(FREE_VALUE_CANDIDATES)


def test_cross_section_goldens():
    a = cross_section(SURFACE, (1, 2))
    assert a.index_r == 1 and a.unique
    assert a.slice_ideal.contains(Y.parse("y2 - 1"))
    b = cross_section(SURFACE, (0, 3))
    assert b.index_r == 1 and b.unique
    c = cross_section(SURFACE, (0, 1))
    assert c.index_r == 2 and not c.unique
    d = cross_section(SURFACE, (2, 3))
    assert d.index_r == 2 and not d.unique


def test_cross_section_rejections():
    try:
        cross_section(SURFACE, (1,))
    except Rejection:
        pass
    else:
        raise AssertionError("wrong count must be rejected")
    line = homogeneous_ideal([Y.parse("y2"), Y.parse("y3"), Y.parse("y4")], G)
    try:
        cross_section(line, (1,))
    except Rejection:
        pass
    else:
        raise AssertionError("identically vanishing coordinate must be rejected")
    flat_cone = homogeneous_ideal([], FLAT)
    try:
        cross_section(flat_cone, (1, 2))
    except DependentColumnsError:
        pass
    else:
        raise AssertionError("parallel columns must be rejected")


def test_rational_curve_golden():
    p = point(Y, (1, 1, 1, Fraction(-1, 2)))
    curve = rational_curve_through(p, G)
    assert curve.exponents == (3, 1, 1, 5)
    assert curve.at(0).is_origin()
    assert curve.at(1) == p
    assert curve.at(2).coords == (8, 2, 2, -16)
    assert curve.stays_on(SURFACE)
    off = rational_curve_through(point(Y, (1, 1, 1, 1)), G)
    assert not off.stays_on(SURFACE)


def test_curve_exponents_are_primitive_and_positive():
    rng = random.Random(6603)
    ring = PolyRing(("a", "b", "c"))
    for _ in range(10):
        cols = [tuple(rng.randint(0, 3) for _ in range(2)) for _ in range(3)]
        g = GradingMap(ring, cols)
        if g.witness() is None:
            continue
        curve = rational_curve_through(point(ring, (1, 2, 3)), g)
        assert all(e > 0 for e in curve.exponents)
        from math import gcd

        assert gcd(*curve.exponents) == 1


def test_curve_needs_positive_grading():
    ring = PolyRing(("u", "v"))
    g = GradingMap(ring, [(1,), (-1,)])
    try:
        rational_curve_through(point(ring, (1, 1)), g)
    except NonPositiveGradingError as err:
        assert err.certificate == (1, 1)
    else:
        raise AssertionError("mixed-sign weights admit no curve to the origin")


def test_curve_composition_profile():
    curve = rational_curve_through(point(Y, (1, 1, 1, 1)), G)
    profile = curve.compose(F)
    # all three monomials land in t-degree 8 and the coefficients add up
    assert profile == {8: Fraction(3)}


def test_singular_locus_is_a_union_of_orbits():
    sing = singular_locus(SURFACE)
    locus = homogeneous_ideal(
        [g.scaled_primitive() for g in sing.presentation.generators], G
    )
    for coords in [(0, 1, 0, 0), (0, 0, 1, 0)]:
        assert orbit_contained(point(Y, coords), locus)
