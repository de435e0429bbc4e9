"""Groebner strata: tail schemes, stratum equations, reduced embeddings."""

from fractions import Fraction

from gradedcones.errors import Rejection
from gradedcones.grading import PositivityWitness
from gradedcones.groebner import buchberger
from gradedcones.ideals import IdealPresentation, krull_dimension
from gradedcones.orders import TermOrder
from gradedcones.rings import PolyRing, Polynomial
from gradedcones.strata import (
    MonomialIdealSpec,
    reduced_stratum,
    stratum_ideal,
    tail_scheme,
)

R = PolyRing(("x", "y"))
LEX = TermOrder.lex()
DRL = TermOrder.degrevlex()


def test_monomial_ideal_validation():
    try:
        MonomialIdealSpec(R, ((1, -1),), LEX)
    except ValueError:
        pass
    else:
        raise AssertionError("negative exponents must be rejected")
    try:
        MonomialIdealSpec(R, ((1, 0), (2, 0)), LEX)
    except ValueError:
        pass
    else:
        raise AssertionError("x divides x^2, not minimal")
    try:
        MonomialIdealSpec(R, ((1, 0),), TermOrder.weighted((-1, -1), LEX))
    except ValueError:
        pass
    else:
        raise AssertionError("non-well-orders must be rejected")
    j = MonomialIdealSpec(R, ((0, 2), (2, 0)), LEX)
    assert j.contains((2, 5)) and not j.contains((1, 1))


def test_tail_scheme_one_head():
    j = MonomialIdealSpec(PolyRing(("x0", "x1")), ((1, 0),), TermOrder.lex())
    s = tail_scheme(j)
    assert s.heads == ((1, 0),)
    assert s.tails == (((0, 1),),)
    assert s.legend() == (("C1", "x0", "x1"),)
    assert s.coefficient_ring.names == ("C1",)
    assert s.coefficient_grading.columns == ((1, -1),)
    r = stratum_ideal(s)
    assert r.stratum_ideal.is_zero_ideal()
    assert isinstance(r.positivity, PositivityWitness)


def test_tail_scheme_square_of_the_maximal_ideal():
    j = MonomialIdealSpec(R, ((2, 0), (1, 1), (0, 2)), LEX)
    s = tail_scheme(j)
    # every same-degree monomial below a head is already in J
    assert s.tails == ((), (), ())
    assert s.coefficient_ring.names == ()
    r = stratum_ideal(s)
    assert r.stratum_ideal.is_zero_ideal()


def test_stratum_golden_two_heads():
    j = MonomialIdealSpec(R, ((2, 0), (1, 1)), LEX)
    s = tail_scheme(j)
    assert s.legend() == (("C1", "x^2", "y^2"), ("C2", "x*y", "y^2"))
    assert s.coefficient_grading.columns == ((2, -2), (1, -1))
    r = stratum_ideal(s)
    assert [repr(g) for g in r.stratum_ideal.generators] == ["C1 + C2^2"]
    assert isinstance(r.positivity, PositivityWitness)
    rr = reduced_stratum(j)
    assert rr.reduced is not None
    assert rr.reduced.eliminated == (0,) and rr.reduced.kept == (1,)
    assert rr.reduced.embedded.base.is_zero_ideal()
    assert rr.reduced.embedded.ring.names == ("C2",)
    assert repr(rr.reduced.substitution[0]) == "-C2^2"


def test_stratum_fibers_have_the_right_initial_ideal():
    # specialize C1 = -c^2, C2 = c and check the marked basis stays one for J
    j = MonomialIdealSpec(R, ((2, 0), (1, 1)), LEX)
    s = tail_scheme(j)
    for c in (0, 1, -1, 2, -2):
        c = Fraction(c)
        values = {0: -(c**2), 1: c}
        gens = []
        for h, head in enumerate(s.heads):
            terms = {head: Fraction(1)}
            for k, (hk, beta) in enumerate(s.pairs):
                if hk == h and values[k]:
                    terms[beta] = values[k]
            gens.append(Polynomial(R, terms))
        gb = buchberger(gens, LEX)
        leading = {LEX.leading_exponent(g) for g in gb.elements}
        assert leading == {(2, 0), (1, 1)}


def test_off_stratum_fiber_changes_the_initial_ideal():
    # C1 = 1, C2 = 0 violates C1 + C2^2 = 0 and y^3 enters the initial ideal
    gens = [R.parse("x^2 + y^2"), R.parse("x y")]
    gb = buchberger(gens, LEX)
    leading = {LEX.leading_exponent(g) for g in gb.elements}
    assert leading != {(2, 0), (1, 1)}
    assert (0, 3) in leading


def test_full_mode_finite():
    j = MonomialIdealSpec(R, ((1, 0),), DRL)
    s = tail_scheme(j, mode="full")
    assert s.tails == (((0, 1), (0, 0)),)
    assert s.legend() == (("C1", "x", "y"), ("C2", "x", "1"))
    r = stratum_ideal(s)
    assert r.stratum_ideal.is_zero_ideal()
    # the constant tail has degree equal to the head itself
    assert s.coefficient_grading.columns == ((1, -1), (1, 0))


def test_full_mode_infinite_rejected():
    j = MonomialIdealSpec(R, ((1, 0),), LEX)
    try:
        tail_scheme(j, mode="full")
    except Rejection:
        pass
    else:
        raise AssertionError("x > y^k for all k under lex, infinitely many tails")


def test_full_mode_pure_powers_keep_it_finite():
    j = MonomialIdealSpec(R, ((2, 0), (0, 2)), LEX)
    s = tail_scheme(j, mode="full")
    for alpha, ts in zip(s.heads, s.tails):
        for beta in ts:
            assert not j.contains(beta)
            assert LEX.greater(alpha, beta)


def test_unknown_mode():
    try:
        tail_scheme(MonomialIdealSpec(R, ((1, 0),), LEX), mode="partial")
    except ValueError:
        pass
    else:
        raise AssertionError("unknown mode must be rejected")


def test_three_variable_borel_ideal():
    ring = PolyRing(("x", "y", "z"))
    j = MonomialIdealSpec(ring, ((2, 0, 0), (1, 1, 0), (0, 2, 0)), TermOrder.degrevlex())
    r = reduced_stratum(j)
    for g in r.stratum_ideal.generators:
        assert r.grading.is_homogeneous(g)
    if r.reduced is not None:
        d1 = krull_dimension(
            IdealPresentation(
                r.stratum_ideal.ring, r.stratum_ideal.generators
            )
        )
        d2 = krull_dimension(r.reduced.embedded.base)
        assert d1 == d2


def test_mixed_sign_columns_still_admit_a_witness():
    # head minus tail can have negative entries, but tails sit strictly
    # below their heads in the order, and an order restricted to finitely
    # many comparisons is always realizable by one weight vector, so the
    # coefficient grading of a finite tail scheme is positive
    ring = PolyRing(("x", "y"))
    order = TermOrder.weighted((1, 3), TermOrder.lex())
    j = MonomialIdealSpec(ring, ((0, 1), (3, 0)), order)
    result = reduced_stratum(j, mode="full")
    assert any(any(v < 0 for v in col) for col in result.grading.columns)
    assert isinstance(result.positivity, PositivityWitness)
    assert result.reduced is not None
