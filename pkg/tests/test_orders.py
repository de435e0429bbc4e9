"""Term order comparisons and helpers."""

import random

import pytest

from gradedcones import PolyRing, TermOrder, parse_polynomial


R3 = PolyRing(("x", "y", "z"))


def test_lex_basics():
    lex = TermOrder.lex()
    assert lex.greater((1, 0, 0), (0, 5, 5))
    assert lex.greater((1, 1, 0), (1, 0, 9))
    assert not lex.greater((0, 0, 0), (0, 0, 1))


def test_lex_priority_permutation():
    zfirst = TermOrder.lex(priority=(2, 1, 0))
    assert zfirst.greater((0, 0, 1), (5, 5, 0))


def test_degrevlex_classic_cases():
    o = TermOrder.degrevlex()
    # same total degree: the smaller exponent on the last variable wins
    assert o.greater((1, 1, 1), (2, 1, 0)) is False
    assert o.greater((1, 1, 0), (2, 0, 0)) is False
    assert o.greater((2, 0, 0), (1, 1, 0))
    assert o.greater((1, 0, 1), (0, 2, 1)) is False  # degree 2 < degree 3
    # x y^2 beats x^2 z: degree ties at 3, z exponent 0 < 1
    assert o.greater((1, 2, 0), (2, 0, 1))


def test_weighted_order_and_tiebreak():
    w = TermOrder.weighted((3, 1, 1), TermOrder.lex())
    assert w.greater((1, 0, 0), (0, 2, 0))  # weight 3 beats 2
    assert w.greater((0, 3, 0), (1, 0, 0)) is False  # tie at 3, lex picks x
    assert w.greater((1, 0, 0), (0, 3, 0))
    assert w.compare((0, 1, 0), (0, 0, 1)) == 1  # equal weight, lex on y vs z


def test_elimination_order_blocks():
    elim = TermOrder.elimination({0}, TermOrder.degrevlex())
    # anything with x beats anything without, regardless of degree
    assert elim.greater((1, 0, 0), (0, 9, 9))
    assert elim.greater((0, 1, 0), (0, 0, 1))


def test_well_order_detection():
    assert TermOrder.lex().is_well_order()
    assert TermOrder.degrevlex().is_well_order()
    assert TermOrder.weighted((1, 1, 1), TermOrder.lex()).is_well_order()
    assert not TermOrder.weighted((1, -1, 1), TermOrder.lex()).is_well_order()


def test_order_multiplicative_and_total():
    rng = random.Random(7)
    orders = [
        TermOrder.lex(),
        TermOrder.degrevlex(),
        TermOrder.weighted((2, 1, 3), TermOrder.lex()),
        TermOrder.elimination({1}, TermOrder.degrevlex()),
    ]
    for o in orders:
        for _ in range(60):
            a = tuple(rng.randint(0, 4) for _ in range(3))
            b = tuple(rng.randint(0, 4) for _ in range(3))
            c = tuple(rng.randint(0, 4) for _ in range(3))
            # totality
            assert (o.compare(a, b) == 0) == (o.key(a) == o.key(b))
            # multiplication by c preserves the comparison
            ac = tuple(x + y for x, y in zip(a, c))
            bc = tuple(x + y for x, y in zip(b, c))
            assert o.compare(a, b) == o.compare(ac, bc)


def test_sorted_terms_and_leading():
    p = parse_polynomial(R3, "x y^2 + x^2 + z^5")
    lex = TermOrder.lex()
    exps = [e for e, _ in lex.sorted_terms(p)]
    assert exps == [(2, 0, 0), (1, 2, 0), (0, 0, 5)]
    assert lex.leading_exponent(p) == (2, 0, 0)
    assert lex.leading_coefficient(p) == 1


def test_monic_and_positive_leading():
    lex = TermOrder.lex()
    p = parse_polynomial(R3, "-2 x + y")
    assert lex.monic(p) == parse_polynomial(R3, "x - 1/2 y")
    assert lex.positive_leading(p) == parse_polynomial(R3, "2 x - y")
    assert lex.positive_leading(-p) == parse_polynomial(R3, "2 x - y")


def test_zero_polynomial_has_no_leading_term():
    with pytest.raises(ValueError):
        TermOrder.lex().leading_exponent(R3.zero())


def test_order_equality_and_tag():
    assert TermOrder.lex() == TermOrder.lex()
    assert TermOrder.lex() != TermOrder.degrevlex()
    assert TermOrder.weighted((1, 2, 3), TermOrder.lex()) == TermOrder.weighted(
        (1, 2, 3), TermOrder.lex()
    )
