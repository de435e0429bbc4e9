"""Torus orbits attached to a multigrading.

The grading's torus acts on affine space by scaling coordinate i through
the character given by degree column i.  The orbit of a rational point is
parametrized by substituting y_i -> a_i t^{column_i}; its dimension is the
lattice rank of the support columns, and its closure is cut out by binomials
coming from the integer kernel of the support columns (saturated by the
support coordinates) plus the vanishing coordinates.

Also here: the union of coordinate subspaces where the orbit dimension
drops below a bound, the largest orbit dimension on a cone, a rational
search for one-dimensional orbits, cross-section charts, and the rational
curves that witness every point's connection to the origin.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd

from . import intlinalg
from .cones import HomogeneousIdeal, homogeneous_ideal
from .errors import (
    DependentColumnsError,
    NonPositiveGradingError,
    NoRationalPointError,
    Rejection,
)
from .grading import GradingMap
from .ideals import (
    IdealPresentation,
    eliminate,
    ideal_sum,
    krull_dimension,
    saturate,
    saturate_by_variables,
)
from .orders import TermOrder
from .rings import PolyRing, Polynomial


@dataclass(frozen=True)
class RationalPoint:
    ring: PolyRing
    coords: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(Fraction(c) for c in self.coords))
        if len(self.coords) != self.ring.nvars:
            raise ValueError("coordinate count does not match the ring")

    def support(self) -> tuple[int, ...]:
        return tuple(i for i, c in enumerate(self.coords) if c != 0)

    def is_origin(self) -> bool:
        return not self.support()

    def __repr__(self) -> str:
        from .session import format_rational

        return "(" + ", ".join(format_rational(c) for c in self.coords) + ")"


def point(ring: PolyRing, coords) -> RationalPoint:
    return RationalPoint(ring, tuple(Fraction(c) for c in coords))


@dataclass(frozen=True)
class OrbitInfo:
    point: RationalPoint
    support: tuple[int, ...]
    dimension: int
    columns: tuple[tuple[int, ...], ...]  # degree columns over the support


def orbit_dimension(p: RationalPoint, grading: GradingMap) -> OrbitInfo:
    """Dimension of the orbit through p: rank of the support's degree columns."""
    if p.ring != grading.ring:
        raise ValueError("point and grading live on different rings")
    support = p.support()
    cols = tuple(grading.columns[i] for i in support)
    return OrbitInfo(
        point=p,
        support=support,
        dimension=intlinalg.rank([list(c) for c in cols]),
        columns=cols,
    )


def _parametrization_profile(g: Polynomial, p: RationalPoint, grading: GradingMap) -> dict:
    """Coefficients of g(a_i t^{column_i}) as a map degree-of-t -> value.

    Terms hitting a vanishing coordinate drop out; the rest group by their
    degree vector, which is the exponent of t they carry.  Negative entries
    are fine here (clearing denominators by a global t power would not
    change which values are zero).
    """
    support = set(p.support())
    out: dict[tuple[int, ...], Fraction] = {}
    for e, c in g.terms.items():
        if any(k and i not in support for i, k in enumerate(e)):
            continue
        value = c
        for i in support:
            if e[i]:
                value *= p.coords[i] ** e[i]
        d = grading.degree(e)
        s = out.get(d, Fraction(0)) + value
        if s:
            out[d] = s
        else:
            out.pop(d, None)
    return out


def orbit_contained(p: RationalPoint, cone: HomogeneousIdeal) -> bool:
    """Whether the whole orbit of p lies on the cone.

    Substitutes the parametrization into every generator and tests the
    Laurent result for zero; because the generators are homogeneous this
    must agree with plain evaluation at p, and the agreement is asserted.
    """
    grading = cone.grading
    ok = True
    for g in cone.base.generators:
        by_substitution = not _parametrization_profile(g, p, grading)
        by_evaluation = g.evaluate(p.coords) == 0
        if by_substitution != by_evaluation:
            raise ArithmeticError("parametrization and evaluation disagree on a generator")
        ok = ok and by_substitution
    return ok


def orbit_closure_ideal(p: RationalPoint, grading: GradingMap) -> HomogeneousIdeal:
    """The ideal of the closure of the orbit through p.

    Binomials from an integer kernel basis of the support columns,
    saturated by each support coordinate, plus the vanishing coordinates.
    Generators are normalized to content-free integer coefficients with a
    positive leading sign.  The result is verified: homogeneous generators,
    each vanishing along the parametrization, and Krull dimension equal to
    the orbit dimension.
    """
    if p.ring != grading.ring:
        raise ValueError("point and grading live on different rings")
    ring = grading.ring
    info = orbit_dimension(p, grading)
    support = info.support
    gens: list[Polynomial] = []
    if support:
        rows = [[grading.columns[i][t] for i in support] for t in range(grading.m)]
        kernel = intlinalg.integer_kernel(rows)
        for u in kernel:
            plus = [0] * ring.nvars
            minus = [0] * ring.nvars
            aplus = Fraction(1)
            aminus = Fraction(1)
            for pos, i in enumerate(support):
                k = u[pos]
                if k > 0:
                    plus[i] = k
                    aplus *= p.coords[i] ** k
                elif k < 0:
                    minus[i] = -k
                    aminus *= p.coords[i] ** (-k)
            gens.append(
                ring.monomial(tuple(plus), aminus) - ring.monomial(tuple(minus), aplus)
            )
    pres = IdealPresentation(ring, gens)
    if gens:
        pres = saturate_by_variables(pres, support)
    off = [ring.variable(j) for j in range(ring.nvars) if j not in support]
    pres = ideal_sum(pres, IdealPresentation(ring, off))

    lex = TermOrder.lex()
    reduced = pres.groebner(lex)
    normalized = [lex.positive_leading(g.scaled_primitive()) for g in reduced.elements]
    closure = homogeneous_ideal(normalized, grading)

    for g in closure.base.generators:
        if _parametrization_profile(g, p, grading):
            raise ArithmeticError("closure generator does not vanish on the orbit")
    if krull_dimension(closure.base) != info.dimension:
        raise ArithmeticError("closure dimension disagrees with the orbit dimension")
    return closure


@dataclass(frozen=True)
class CoordinateSubspaceUnion:
    """Maximal coordinate supports whose degree columns have rank <= bound."""

    bound: int
    components: tuple[tuple[int, ...], ...]


def low_orbit_stratum(grading: GradingMap, mu0: int) -> CoordinateSubspaceUnion:
    """All points whose orbit dimension is at most mu0, as a union of
    coordinate subspaces given by their maximal supports.

    Orbit dimension only depends on the support and grows with it, so the
    union is described by the maximal supports of column rank <= mu0; the
    empty support (the origin alone) appears when nothing bigger qualifies.
    """
    if mu0 < 0:
        raise ValueError("the orbit-dimension bound must be nonnegative")
    n = grading.ring.nvars
    if n > 20:
        raise ValueError("subset enumeration is limited to 20 variables")
    kept: list[tuple[int, ...]] = []
    for size in range(n, -1, -1):
        for combo in combinations(range(n), size):
            cs = set(combo)
            if any(cs <= set(big) for big in kept):
                continue
            cols = [list(grading.columns[i]) for i in combo]
            if intlinalg.rank(cols) <= mu0:
                kept.append(combo)
    kept.sort(key=lambda s: (-len(s), s))
    return CoordinateSubspaceUnion(bound=mu0, components=tuple(kept))


def nonvanishing_coordinates(cone: HomogeneousIdeal) -> tuple[int, ...]:
    """Variables that do not vanish identically on the cone."""
    out = []
    for i in range(cone.ring.nvars):
        if saturate(cone.base, cone.ring.variable(i)).is_proper():
            out.append(i)
    return tuple(out)


def max_orbit_dimension(cone: HomogeneousIdeal) -> int:
    """Largest orbit dimension over the points of the cone.

    Equals the rank of the degree columns of the coordinates that are not
    identically zero on the cone.
    """
    h = nonvanishing_coordinates(cone)
    return intlinalg.rank([list(cone.grading.columns[i]) for i in h])


# -- rational search for a one-dimensional orbit -----------------------------------


def find_one_dim_orbit(cone: HomogeneousIdeal) -> RationalPoint:
    """A rational point of the cone whose orbit is one-dimensional.

    Candidate supports of column rank one are tried in lexicographic order,
    maximal ones first, recursing into subsets; on each support the
    coordinates are solved one at a time through univariate eliminations
    and rational root extraction.  If qualifying supports exist but none
    yields a rational point, the failure reports them instead of inventing
    an irrational one.
    """
    if krull_dimension(cone.base) < 1:
        raise Rejection("the cone is just the origin; no positive-dimensional orbit")
    grading = cone.grading
    ring = cone.ring
    stratum = low_orbit_stratum(grading, 1)
    queue = sorted(s for s in stratum.components if s)
    seen = set(queue)
    unsolved: list[tuple[int, ...]] = []
    systems: list[IdealPresentation] = []
    while queue:
        support = queue.pop(0)
        candidate = _support_point(ring, support)
        if all(g.evaluate(candidate.coords) == 0 for g in cone.base.generators):
            return candidate
        off = [ring.variable(j) for j in range(ring.nvars) if j not in support]
        restricted = ideal_sum(cone.base, IdealPresentation(ring, off))
        saturated = saturate_by_variables(restricted, support)
        if saturated.is_proper():
            found = _solve_on_torus(cone, saturated, support)
            if found is not None:
                return found
            unsolved.append(support)
            systems.append(saturated)
        for sub in combinations(support, len(support) - 1):
            if sub and sub not in seen:
                seen.add(sub)
                queue.append(sub)
        queue.sort()
    if unsolved:
        raise NoRationalPointError(
            "one-dimensional orbits exist but none has a rational representative "
            f"on supports {[tuple(ring.names[i] for i in s) for s in unsolved]}",
            supports=unsolved,
            systems=systems,
        )
    raise ArithmeticError("positive-dimensional cone without a qualifying support")


def _support_point(ring: PolyRing, support, values: dict | None = None) -> RationalPoint:
    coords = [Fraction(0)] * ring.nvars
    for i in support:
        coords[i] = Fraction(1) if values is None else values[i]
    return RationalPoint(ring, tuple(coords))


FREE_VALUE_CANDIDATES = tuple(
    Fraction(v) for v in (1, -1, 2, -2, 3, -3, Fraction(1, 2), Fraction(-1, 2))
)


def _solve_on_torus(cone, pres: IdealPresentation, support) -> RationalPoint | None:
    return _assign(cone, pres, support, list(support), {})


def _assign(cone, pres, support, todo, values) -> RationalPoint | None:
    ring = cone.ring
    if not todo:
        candidate = _support_point(ring, support, values)
        if all(g.evaluate(candidate.coords) == 0 for g in cone.base.generators):
            return candidate
        return None
    i = todo[0]
    others = frozenset(k for k in range(ring.nvars) if k != i)
    uni = eliminate(pres, others)
    if uni.generators:
        roots = _nonzero_rational_roots(uni.generators[0], i)
    else:
        roots = list(FREE_VALUE_CANDIDATES)
    for c in roots:
        tighter = ideal_sum(pres, IdealPresentation(ring, [ring.variable(i) - ring.constant(c)]))
        if not tighter.is_proper():
            continue
        found = _assign(cone, tighter, support, todo[1:], {**values, i: c})
        if found is not None:
            return found
    return None


def _nonzero_rational_roots(p: Polynomial, var: int) -> list[Fraction]:
    """Nonzero rational roots of a univariate polynomial, smallest first."""
    coeffs: dict[int, Fraction] = {}
    for e, c in p.terms.items():
        coeffs[e[var]] = c
    shift = min(k for k, c in coeffs.items() if c != 0)
    coeffs = {k - shift: c for k, c in coeffs.items()}
    den = 1
    for c in coeffs.values():
        den = den * c.denominator // gcd(den, c.denominator)
    ints = {k: int(c * den) for k, c in coeffs.items()}
    if len(ints) == 1:
        return []
    deg = max(ints)
    lead, const = ints[deg], ints[0]
    roots = set()
    for num in _divisors(abs(const)):
        for d in _divisors(abs(lead)):
            for cand in (Fraction(num, d), Fraction(-num, d)):
                if cand in roots:
                    continue
                if sum(c * cand**k for k, c in ints.items()) == 0:
                    roots.add(cand)
    return sorted(roots, key=lambda r: (abs(r), r < 0))


def _divisors(n: int) -> list[int]:
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)


# -- cross-sections and curves -------------------------------------------------------


@dataclass(frozen=True)
class CrossSectionChart:
    """Slice y_i = 1 over a chosen independent set of coordinates.

    index_r counts, over the closure, how many points of a dense orbit the
    slice meets: the lattice index of the chosen columns inside the columns
    of all non-vanishing coordinates.  r = 1 means the chart meets each
    such orbit exactly once.
    """

    chosen: tuple[int, ...]
    index_r: int
    slice_ideal: IdealPresentation
    unique: bool


def cross_section(cone: HomogeneousIdeal, chosen) -> CrossSectionChart:
    ring = cone.ring
    chosen = tuple(sorted(set(chosen)))
    if any(not 0 <= i < ring.nvars for i in chosen):
        raise ValueError("chosen variable index out of range")
    h = nonvanishing_coordinates(cone)
    mu = intlinalg.rank([list(cone.grading.columns[i]) for i in h])
    if len(chosen) != mu:
        raise Rejection(
            f"a cross-section needs exactly {mu} chosen coordinates, got {len(chosen)}"
        )
    if any(i not in h for i in chosen):
        raise Rejection("chosen coordinates must not vanish identically on the cone")
    chosen_cols = [list(cone.grading.columns[i]) for i in chosen]
    if intlinalg.rank(chosen_cols) != len(chosen):
        raise DependentColumnsError("chosen degree columns are linearly dependent")
    r = intlinalg.lattice_index([list(cone.grading.columns[i]) for i in h], chosen_cols)
    assert r is not None and r >= 1
    slice_gens = [ring.variable(i) - ring.one() for i in chosen]
    chart = ideal_sum(cone.base, IdealPresentation(ring, slice_gens))
    return CrossSectionChart(chosen=chosen, index_r=r, slice_ideal=chart, unique=r == 1)


@dataclass(frozen=True)
class RationalCurve:
    """t -> (a_i t^{c_i}) with every exponent positive.

    Passes through the origin at t = 0 and through the base point at t = 1.
    """

    point: RationalPoint
    exponents: tuple[int, ...]

    def at(self, t) -> RationalPoint:
        t = Fraction(t)
        return RationalPoint(
            self.point.ring,
            tuple(a * t**c for a, c in zip(self.point.coords, self.exponents)),
        )

    def compose(self, g: Polynomial) -> dict[int, Fraction]:
        """g restricted to the curve, as exponent-of-t -> coefficient."""
        out: dict[int, Fraction] = {}
        for e, c in g.terms.items():
            value = c
            for a, k in zip(self.point.coords, e):
                if k:
                    value *= a**k
            if value == 0:
                continue
            d = sum(ci * k for ci, k in zip(self.exponents, e))
            s = out.get(d, Fraction(0)) + value
            if s:
                out[d] = s
            else:
                out.pop(d, None)
        return out

    def stays_on(self, cone: HomogeneousIdeal) -> bool:
        return all(not self.compose(g) for g in cone.base.generators)


def rational_curve_through(p: RationalPoint, grading: GradingMap) -> RationalCurve:
    """The witness curve from the origin to p given by a positivity witness.

    Exponents are the witness dots divided by their gcd.
    """
    if p.ring != grading.ring:
        raise ValueError("point and grading live on different rings")
    w = grading.witness()
    if w is None:
        raise NonPositiveGradingError(
            "curves to the origin need a positive grading", grading.positivity().alpha
        )
    g = gcd(*w.dots) if w.dots else 1
    exponents = tuple(d // g for d in w.dots)
    return RationalCurve(point=p, exponents=exponents)
