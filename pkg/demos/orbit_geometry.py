"""Torus orbits on a graded surface: closures, strata, slices, curves.

The grading acts on points coordinatewise, t . p = (t^deg(y_i) p_i), and a
cone is a union of orbits together with their limits.  Everything below is
computed exactly over Q.
"""

from fractions import Fraction

from gradedcones import (
    GradingMap,
    PolyRing,
    cross_section,
    find_one_dim_orbit,
    homogeneous_ideal,
    low_orbit_stratum,
    max_orbit_dimension,
    orbit_closure_ideal,
    orbit_contained,
    orbit_dimension,
    point,
    rational_curve_through,
    singular_locus,
)

ring = PolyRing(("y1", "y2", "y3", "y4"))
grading = GradingMap(ring, [(1, 2), (1, 0), (0, 1), (2, 3)])
F = ring.parse("y1^2 y2 y3 + y1 y4 + y2 y3^2 y4")
surface = homogeneous_ideal([F], grading)

p = point(ring, (1, 1, 1, 1))
info = orbit_dimension(p, grading)
print(f"orbit of {p}: dimension {info.dimension}")
closure = orbit_closure_ideal(p, grading)
print("closure ideal:", ", ".join(str(g) for g in closure.base.generators))

print("\norbit dimension drops on coordinate subspaces:")
for mu0 in (0, 1, 2):
    comps = low_orbit_stratum(grading, mu0).components
    names = [
        "{" + ", ".join(ring.names[i] for i in c) + "}" if c else "{origin}"
        for c in comps
    ]
    print(f"  m(P) <= {mu0}: supports {', '.join(names)}")

print(f"\nmax orbit dimension on V(F): {max_orbit_dimension(surface)}")
small = find_one_dim_orbit(surface)
print(f"a one-dimensional orbit on the surface: through {small}")

chart = cross_section(surface, (1, 2))
print(f"\nslice y2 = y3 = 1 meets a dense orbit {chart.index_r} time(s); "
      f"unique: {chart.unique}")
chart2 = cross_section(surface, (0, 1))
print(f"slice y1 = y2 = 1 has index {chart2.index_r}: two points per orbit")

y4 = Fraction(-1, 2)
q = point(ring, (1, 1, 1, y4))
print(f"\n{q} lies on the surface; its whole orbit does too:",
      orbit_contained(q, surface))
curve = rational_curve_through(q, grading)
print(f"the curve t -> (a_i t^c_i) with c = {list(curve.exponents)} joins it "
      "to the origin")
print(f"  t = 0: {curve.at(0)}   t = 1: {curve.at(1)}   t = 2: {curve.at(2)}")
print(f"  stays on the surface for all t: {curve.stays_on(surface)}")

sing = singular_locus(surface)
print("\nsingular locus generators:")
for g in sing.presentation.generators:
    print(f"  {g}")
print("the locus is itself a union of orbits (torus stable), e.g. it contains")
print("the whole orbits of (0,1,0,0) and (0,0,1,0).")
